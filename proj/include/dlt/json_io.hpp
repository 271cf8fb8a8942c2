#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dlt/characters.hpp"
#include "dlt/zeros.hpp"

namespace dlt {

using Json = nlohmann::json;

inline Json character_json(const DirichletCharacter& chi) {
    return Json{{"q", chi.modulus()},
                {"index", chi.index()},
                {"exponents", chi.exponents()},
                {"parity", chi.parity()},
                {"conductor", chi.conductor()},
                {"real", chi.is_real()}};
}

inline Json zero_record_json(const ZeroRecord& z) {
    return Json{{"q", z.q},
                {"index", z.index},
                {"t", z.t},
                {"residual", z.residual},
                {"width", z.width}};
}

inline ZeroRecord zero_record_from_json(const Json& j) {
    ZeroRecord z;
    z.q = j.at("q").get<std::uint64_t>();
    z.index = j.at("index").get<std::uint64_t>();
    z.t = j.at("t").get<double>();
    z.residual = j.at("residual").get<double>();
    z.width = j.at("width").get<double>();
    if (!std::isfinite(z.t)) throw std::invalid_argument("non-finite ordinate");
    return z;
}

namespace cache {

inline constexpr const char* kZeroFile = "zeros.jsonl";

// Append-only JSON-lines store, one ZeroRecord per line.
inline void store(const std::filesystem::path& dir, std::span<const ZeroRecord> records) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(dir / kZeroFile, std::ios::app);
    if (!out) throw std::runtime_error("cache directory is not writable: " + dir.string());
    for (const auto& z : records) out << zero_record_json(z).dump() << '\n';
    out.flush();
    if (!out) throw std::runtime_error("cache write failed: " + dir.string());
}

struct LoadResult {
    std::vector<ZeroRecord> records;
    int warnings = 0;  // corrupted lines skipped
};

// Loads and deduplicates by (q, index, t at 1e-9 resolution); the first
// stored record for a key wins. Corrupted lines are skipped and counted.
inline LoadResult load(const std::filesystem::path& dir) {
    LoadResult res;
    std::ifstream in(dir / kZeroFile);
    if (!in) return res;  // no cache yet
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            const ZeroRecord z = zero_record_from_json(Json::parse(line));
            bool dup = false;
            for (const auto& k : res.records)
                if (k.q == z.q && k.index == z.index && std::abs(k.t - z.t) <= 1e-9) {
                    dup = true;
                    break;
                }
            if (!dup) res.records.push_back(z);
        } catch (const std::exception&) {
            ++res.warnings;
        }
    }
    return res;
}

}  // namespace cache

}  // namespace dlt

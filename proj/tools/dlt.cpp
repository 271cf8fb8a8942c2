// dlt: command-line surface of the Dirichlet L-function toolkit.
// Subcommands: chars, gauss, lvalue, zeros (scan/refine/sigma-scan), series,
// geom, pappus, audit. All numeric text output uses 12 significant digits;
// JSON carries full round-trip doubles.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dlt/audit.hpp"
#include "dlt/json_io.hpp"
#include "dlt/revolution.hpp"
#include "dlt/series.hpp"
#include "dlt/triangle_examples.hpp"
#include "dlt/version.hpp"
#include "dlt/zeros.hpp"

namespace {

using dlt::Complex;
using dlt::Json;

std::string fd(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string fc(Complex z) {
    return fd(z.real()) + (z.imag() < 0.0 ? "-" : "+") + fd(std::abs(z.imag())) + "i";
}

dlt::SPoint parse_spoint(const std::string& text) {
    const auto comma = text.find(',');
    dlt::SPoint s;
    try {
        if (comma == std::string::npos) {
            s.sigma = std::stod(text);
            s.t = 0.0;
        } else {
            s.sigma = std::stod(text.substr(0, comma));
            s.t = std::stod(text.substr(comma + 1));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--s", "expected \"re,im\"");
    }
    s.validate();
    return s;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

struct GlobalOptions {
    std::string format = "text";
    std::string out;
    std::string cache_dir;
    int threads = 1;
    dlt::EvalSettings eval;
};

std::filesystem::path resolve_cache_dir(const GlobalOptions& g) {
    if (!g.cache_dir.empty()) return g.cache_dir;
    if (const char* env = std::getenv("DLT_CACHE_DIR")) return env;
    return {};
}

void add_eval_options(CLI::App* cmd, GlobalOptions& g) {
    cmd->add_option("--em-shift", g.eval.euler_maclaurin_shift,
                    "Euler-Maclaurin shift (default 30)");
    cmd->add_option("--bernoulli-terms", g.eval.bernoulli_terms,
                    "Bernoulli correction terms, even (default 20)");
    cmd->add_option("--tolerance", g.eval.target_tolerance, "target tolerance (default 1e-12)");
}

std::string zero_table_text(const std::vector<dlt::ZeroRecord>& zeros) {
    std::ostringstream os;
    os << "q index t residual width\n";
    for (const auto& z : zeros)
        os << z.q << " " << z.index << " " << fd(z.t) << " " << fd(z.residual) << " "
           << fd(z.width) << "\n";
    os << "found " << zeros.size() << " zero(s)\n";
    return os.str();
}

std::string zero_table(const std::vector<dlt::ZeroRecord>& zeros, const std::string& format) {
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& z : zeros) arr.push_back(dlt::zero_record_json(z));
        return arr.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "q,index,t,residual,width\n";
        for (const auto& z : zeros)
            os << z.q << "," << z.index << "," << fd(z.t) << "," << fd(z.residual) << ","
               << fd(z.width) << "\n";
        return os.str();
    }
    return zero_table_text(zeros);
}

void store_zeros(const GlobalOptions& g, const std::vector<dlt::ZeroRecord>& zeros) {
    const auto dir = resolve_cache_dir(g);
    if (!dir.empty() && !zeros.empty()) dlt::cache::store(dir, zeros);
}

int run_chars(const GlobalOptions& g, std::uint64_t q, std::int64_t index) {
    const auto chars = dlt::enumerate_characters(q);
    std::ostringstream os;
    if (index >= 0) {
        if (static_cast<std::uint64_t>(index) >= chars.size())
            throw std::invalid_argument("character index out of range");
        const auto& chi = chars[static_cast<std::size_t>(index)];
        if (g.format == "json") {
            emit(dlt::character_json(chi).dump(2) + "\n", g.out);
            return 0;
        }
        os << "q=" << q << " index=" << chi.index() << " parity=" << (chi.parity() > 0 ? "+1" : "-1")
           << " conductor=" << chi.conductor() << " real=" << (chi.is_real() ? "yes" : "no")
           << " primitive=" << (chi.is_primitive() ? "yes" : "no") << "\n";
        os << "n chi(n)\n";
        for (std::uint64_t n = 0; n < q; ++n)
            os << n << " " << fc(chi.value_c(static_cast<std::int64_t>(n))) << "\n";
        emit(os.str(), g.out);
        return 0;
    }
    if (g.format == "json") {
        Json arr = Json::array();
        for (const auto& chi : chars) arr.push_back(dlt::character_json(chi));
        emit(arr.dump(2) + "\n", g.out);
        return 0;
    }
    os << "q=" << q << " phi=" << chars.size() << "\n";
    os << "index exponents parity conductor real primitive\n";
    for (const auto& chi : chars) {
        os << chi.index() << " [";
        for (std::size_t i = 0; i < chi.exponents().size(); ++i)
            os << (i ? "," : "") << chi.exponents()[i];
        os << "] " << (chi.parity() > 0 ? "+1" : "-1") << " " << chi.conductor() << " "
           << (chi.is_real() ? "yes" : "no") << " " << (chi.is_primitive() ? "yes" : "no") << "\n";
    }
    emit(os.str(), g.out);
    return 0;
}

int run_gauss(const GlobalOptions& g, std::uint64_t q, std::uint64_t index) {
    const auto chi = dlt::character(q, index);
    const Complex tau = dlt::gauss_sum(chi);
    const Complex tau_bar = dlt::gauss_sum(chi.conjugate());
    const double identity_residual =
        std::abs(tau * tau_bar - static_cast<double>(chi.parity()) * static_cast<double>(q));
    if (g.format == "json") {
        Json j{{"q", q},
               {"index", index},
               {"tau", {{"re", tau.real()}, {"im", tau.imag()}}},
               {"abs_tau_sq", std::norm(tau)},
               {"identity_residual", identity_residual},
               {"primitive", chi.is_primitive()}};
        emit(j.dump(2) + "\n", g.out);
        return 0;
    }
    std::ostringstream os;
    os << "q=" << q << " index=" << index << " primitive=" << (chi.is_primitive() ? "yes" : "no")
       << "\n";
    os << "tau = " << fc(tau) << "\n";
    os << "abs_tau_sq = " << fd(std::norm(tau)) << "\n";
    os << "identity_residual = " << fd(identity_residual) << "\n";
    emit(os.str(), g.out);
    return 0;
}

int run_lvalue(const GlobalOptions& g, std::uint64_t q, std::uint64_t index,
               const std::string& s_text, std::uint64_t partial_n) {
    const auto chi = dlt::character(q, index);
    const dlt::SPoint s = parse_spoint(s_text);
    const Complex value = dlt::l_eval(chi, s, g.eval);
    std::optional<Complex> partial;
    if (partial_n > 0) partial = dlt::l_partial_sum(chi, s, partial_n);
    if (g.format == "json") {
        Json j{{"q", q},
               {"index", index},
               {"s", {{"re", s.sigma}, {"im", s.t}}},
               {"l", {{"re", value.real()}, {"im", value.imag()}}},
               {"abs_l", std::abs(value)}};
        if (partial)
            j["partial_sum"] = {{"N", partial_n}, {"re", partial->real()}, {"im", partial->imag()}};
        emit(j.dump(2) + "\n", g.out);
        return 0;
    }
    std::ostringstream os;
    os << "L(" << fc(s.value()) << ", chi[q=" << q << ",index=" << index << "]) = " << fc(value)
       << "\n";
    os << "abs = " << fd(std::abs(value)) << "\n";
    if (partial) os << "partial_sum N=" << partial_n << " = " << fc(*partial) << "\n";
    emit(os.str(), g.out);
    return 0;
}

Json pairing_json(const dlt::PairingReport& p) {
    return Json{{"dot", {{"re", p.dot.real()}, {"im", p.dot.imag()}}},
                {"cos_theta", {{"re", p.cos_theta.real()}, {"im", p.cos_theta.imag()}}},
                {"sin_theta", {{"re", p.sin_theta.real()}, {"im", p.sin_theta.imag()}}},
                {"area", {{"re", p.area.real()}, {"im", p.area.imag()}}}};
}

int run_geom_example(const GlobalOptions& g, int example_id) {
    const auto& examples = dlt::triangle_examples();
    const auto it = std::find_if(examples.begin(), examples.end(),
                                 [&](const auto& e) { return e.id == example_id; });
    if (it == examples.end()) throw std::invalid_argument("example id must be 1, 2 or 3");
    const dlt::TriangleReport rep = dlt::cosine_theorem_check(it->a, it->b, it->c);
    if (g.format == "json") {
        Json j{{"example", example_id},
               {"ab_sq", {{"re", rep.ab_sq.real()}, {"im", rep.ab_sq.imag()}}},
               {"ac_sq", {{"re", rep.ac_sq.real()}, {"im", rep.ac_sq.imag()}}},
               {"bc_sq", {{"re", rep.bc_sq.real()}, {"im", rep.bc_sq.imag()}}},
               {"pairing_ab_ac", pairing_json(rep.p1)},
               {"pairing_ac_bc", pairing_json(rep.p2)}};
        emit(j.dump(2) + "\n", g.out);
        return 0;
    }
    std::ostringstream os;
    os << "example " << example_id << "\n";
    os << "AB_sq = " << fc(rep.ab_sq) << "\n";
    os << "AC_sq = " << fc(rep.ac_sq) << "\n";
    os << "BC_sq = " << fc(rep.bc_sq) << "\n";
    os << "dot(AB,AC) = " << fc(rep.p1.dot) << "\n";
    os << "cosine_law(AB,AC) = " << fc((rep.ab_sq + rep.ac_sq - rep.bc_sq) / 2.0) << "\n";
    os << "dot(AC,BC) = " << fc(rep.p2.dot) << "\n";
    os << "cosine_law(AC,BC) = " << fc((rep.ac_sq + rep.bc_sq - rep.ab_sq) / 2.0) << "\n";
    os << "cos(AB,AC) = " << fc(rep.p1.cos_theta) << "\n";
    os << "sin(AB,AC) = " << fc(rep.p1.sin_theta) << "\n";
    os << "area(AB,AC) = " << fc(rep.p1.area) << "\n";
    os << "cos(AC,BC) = " << fc(rep.p2.cos_theta) << "\n";
    os << "sin(AC,BC) = " << fc(rep.p2.sin_theta) << "\n";
    os << "area(AC,BC) = " << fc(rep.p2.area) << "\n";
    emit(os.str(), g.out);
    return 0;
}

int run_geom_vector(const GlobalOptions& g, std::uint64_t q, std::uint64_t index,
                    const std::string& s_text, std::uint64_t terms, const std::string& slot) {
    if (slot != "phase" && slot != "amplitude")
        throw std::invalid_argument("--chi-slot must be amplitude or phase");
    const auto chi = dlt::character(q, index);
    const dlt::SPoint s = parse_spoint(s_text);
    const dlt::CharacterSlot cs = slot == "phase" ? dlt::CharacterSlot::phase
                                                  : dlt::CharacterSlot::amplitude;
    const auto res = dlt::l_vector_form(chi, s, terms, cs);
    const Complex partial = dlt::l_partial_sum(chi, s, terms);
    if (g.format == "json") {
        Json j{{"q", q},
               {"index", index},
               {"s", {{"re", s.sigma}, {"im", s.t}}},
               {"terms", terms},
               {"chi_slot", slot},
               {"dot", {{"re", res.dot.real()}, {"im", res.dot.imag()}}},
               {"norm_u_sq", {{"re", res.norm_u_sq.real()}, {"im", res.norm_u_sq.imag()}}},
               {"norm_v_sq", {{"re", res.norm_v_sq.real()}, {"im", res.norm_v_sq.imag()}}},
               {"partial_sum", {{"re", partial.real()}, {"im", partial.imag()}}},
               {"dot_minus_partial_sum", std::abs(res.dot - partial)}};
        if (res.cos_theta)
            j["cos_theta"] = {{"re", res.cos_theta->real()}, {"im", res.cos_theta->imag()}};
        else
            j["cos_theta"] = "undefined";
        emit(j.dump(2) + "\n", g.out);
        return 0;
    }
    std::ostringstream os;
    os << "dot = " << fc(res.dot) << "\n";
    os << "norm_u_sq = " << fc(res.norm_u_sq) << "\n";
    os << "norm_v_sq = " << fc(res.norm_v_sq) << "\n";
    os << "cos_theta = " << (res.cos_theta ? fc(*res.cos_theta) : "undefined") << "\n";
    os << "partial_sum = " << fc(partial) << "\n";
    os << "dot_minus_partial_sum = " << fd(std::abs(res.dot - partial)) << "\n";
    emit(os.str(), g.out);
    return 0;
}

int run_series(const GlobalOptions& g, double t, std::uint64_t max_n,
               const std::string& checkpoints_text, double rectangle_width,
               double cutoff_ratio) {
    std::vector<std::uint64_t> cps;
    if (!checkpoints_text.empty()) {
        std::stringstream ss(checkpoints_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) cps.push_back(std::stoull(tok));
    } else {
        cps = dlt::geometric_checkpoints(10, max_n);
    }
    dlt::SeriesProbe probe = dlt::trig_log_partial_sums(t, cps, g.threads);
    if (rectangle_width > 0.0) probe.rectangle_width = rectangle_width;
    if (cutoff_ratio > 0.0) probe.cutoff_ratio = cutoff_ratio;
    if (g.format == "json") {
        Json rows = Json::array();
        for (std::size_t i = 0; i < probe.checkpoints.size(); ++i)
            rows.push_back(Json{{"N", probe.checkpoints[i]},
                                {"S_cos", probe.cos_sum[i]},
                                {"S_sin", probe.sin_sum[i]},
                                {"max_abs_cos", probe.max_abs_cos[i]},
                                {"max_abs_sin", probe.max_abs_sin[i]}});
        Json j{{"t", t}, {"rows", rows}};
        if (probe.growth_cos)
            j["growth_cos"] = {{"slope", probe.growth_cos->slope},
                               {"fit_residual", probe.growth_cos->residual}};
        if (probe.growth_sin)
            j["growth_sin"] = {{"slope", probe.growth_sin->slope},
                               {"fit_residual", probe.growth_sin->residual}};
        if (const auto bound = probe.implied_bound()) {
            j["rectangle_width"] = *probe.rectangle_width;
            j["cutoff_ratio"] = *probe.cutoff_ratio;
            j["implied_bound"] = *bound;
            j["bound_holds"] = probe.max_abs_cos.back() <= *bound &&
                               probe.max_abs_sin.back() <= *bound;
        }
        emit(j.dump(2) + "\n", g.out);
        return 0;
    }
    std::ostringstream os;
    os << "N,S_cos,S_sin,max_abs_cos,max_abs_sin\n";
    for (std::size_t i = 0; i < probe.checkpoints.size(); ++i)
        os << probe.checkpoints[i] << "," << fd(probe.cos_sum[i]) << "," << fd(probe.sin_sum[i])
           << "," << fd(probe.max_abs_cos[i]) << "," << fd(probe.max_abs_sin[i]) << "\n";
    if (g.format != "csv") {
        if (probe.growth_cos)
            os << "growth_cos slope=" << fd(probe.growth_cos->slope)
               << " fit_residual=" << fd(probe.growth_cos->residual) << "\n";
        if (probe.growth_sin)
            os << "growth_sin slope=" << fd(probe.growth_sin->slope)
               << " fit_residual=" << fd(probe.growth_sin->residual) << "\n";
        if (const auto bound = probe.implied_bound()) {
            os << "implied_bound d/(4c) = " << fd(*bound) << "\n";
            const bool holds = probe.max_abs_cos.back() <= *bound &&
                               probe.max_abs_sin.back() <= *bound;
            os << "bound_holds = " << (holds ? "yes" : "no") << "\n";
        }
    }
    emit(os.str(), g.out);
    return 0;
}

int run_zeros_scan(const GlobalOptions& g, std::uint64_t q, std::uint64_t index, double t_lo,
                   double t_hi, double step) {
    const auto chi = dlt::character(q, index);
    dlt::ScanSettings scan;
    scan.threads = g.threads;
    scan.eval = g.eval;
    const auto zeros = dlt::scan_critical_line(chi, t_lo, t_hi, step, scan);
    store_zeros(g, zeros);
    emit(zero_table(zeros, g.format), g.out);
    return 0;
}

int run_zeros_refine(const GlobalOptions& g, std::uint64_t q, std::uint64_t index, double center,
                     double window) {
    if (!(window > 0.0)) throw std::invalid_argument("--window must be positive");
    const auto chi = dlt::character(q, index);
    dlt::ScanSettings scan;
    scan.threads = g.threads;
    scan.eval = g.eval;
    const auto zeros =
        dlt::scan_critical_line(chi, center - window, center + window, window / 20.0, scan);
    store_zeros(g, zeros);
    emit(zero_table(zeros, g.format), g.out);
    return 0;
}

int run_zeros_sigma(const GlobalOptions& g, std::uint64_t q, std::uint64_t index, double t0,
                    double grid_lo, double grid_hi, int grid_points) {
    const auto chi = dlt::character(q, index);
    std::vector<double> grid(static_cast<std::size_t>(grid_points));
    for (int k = 0; k < grid_points; ++k)
        grid[static_cast<std::size_t>(k)] =
            grid_lo + (grid_hi - grid_lo) * static_cast<double>(k) /
                          static_cast<double>(grid_points - 1);
    const auto prof = dlt::sigma_scan(chi, t0, grid, g.eval);
    if (g.format == "json") {
        Json rows = Json::array();
        for (std::size_t i = 0; i < prof.sigma.size(); ++i)
            rows.push_back(Json{{"sigma", prof.sigma[i]}, {"abs_l", prof.abs_l[i]}});
        Json j{{"q", q}, {"index", index}, {"t0", t0}, {"argmin_sigma", prof.argmin_sigma},
               {"profile", rows}};
        emit(j.dump(2) + "\n", g.out);
        return 0;
    }
    std::ostringstream os;
    if (g.format == "csv") {
        os << "sigma,abs_l\n";
        for (std::size_t i = 0; i < prof.sigma.size(); ++i)
            os << fd(prof.sigma[i]) << "," << fd(prof.abs_l[i]) << "\n";
    } else {
        os << "t0 = " << fd(t0) << "\n";
        os << "argmin_sigma = " << fd(prof.argmin_sigma) << "\n";
        os << "min_abs_l = " << fd(prof.abs_l[prof.argmin_index]) << "\n";
    }
    emit(os.str(), g.out);
    return 0;
}

int run_pappus(const GlobalOptions& g, const std::string& profile, double value, double slope,
               double exponent, const std::string& s_text, double a, double b, int panels) {
    dlt::Lamina lam;
    lam.a = a;
    lam.b = b;
    lam.panels = panels;
    lam.lower = [](double) { return Complex{0.0, 0.0}; };
    std::string desc;
    if (profile == "constant") {
        lam.upper = [value](double) { return Complex{value, 0.0}; };
        desc = "f(z) = " + fd(value);
    } else if (profile == "linear") {
        lam.upper = [slope](double z) { return Complex{slope * z, 0.0}; };
        desc = "f(z) = " + fd(slope) + " z";
    } else if (profile == "power") {
        lam.upper = [exponent](double z) { return Complex{std::pow(z, exponent), 0.0}; };
        desc = "f(z) = z^" + fd(exponent);
    } else if (profile == "inv-power") {
        const dlt::SPoint s = parse_spoint(s_text);
        const Complex sc = s.value();
        lam.upper = [sc](double z) { return std::exp(-sc * std::log(z)); };
        desc = "f(z) = z^-(" + fc(sc) + ")";
    } else {
        throw std::invalid_argument("--profile must be constant|linear|power|inv-power");
    }
    const auto bary = dlt::lamina_barycenter(lam);
    const auto pap = dlt::pappus_check(lam);
    if (g.format == "json") {
        Json j{{"profile", profile},
               {"description", desc},
               {"a", a},
               {"b", b},
               {"panels", panels},
               {"xi", {{"re", bary.xi.real()}, {"im", bary.xi.imag()}}},
               {"eta", {{"re", bary.eta.real()}, {"im", bary.eta.imag()}}},
               {"volume", {{"re", pap.volume.real()}, {"im", pap.volume.imag()}}},
               {"area", {{"re", pap.area.real()}, {"im", pap.area.imag()}}},
               {"residual", pap.residual}};
        emit(j.dump(2) + "\n", g.out);
        return 0;
    }
    std::ostringstream os;
    os << "profile " << profile << ": " << desc << " on [" << fd(a) << "," << fd(b)
       << "], panels " << panels << "\n";
    os << "xi = " << fc(bary.xi) << "\n";
    os << "eta = " << fc(bary.eta) << "\n";
    os << "volume = " << fc(pap.volume) << "\n";
    os << "area = " << fc(pap.area) << "\n";
    os << "residual = " << fd(pap.residual) << "\n";
    emit(os.str(), g.out);
    return 0;
}

int run_audit_cmd(const GlobalOptions& g, bool all, const std::string& claims_text,
                  std::uint64_t seed, bool fixed_clock) {
    std::set<std::string> selection;
    if (all) {
        for (const auto& c : dlt::claim_registry()) selection.insert(c.id);
    } else {
        std::stringstream ss(claims_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) selection.insert(tok);
        }
    }
    dlt::AuditSettings settings;
    settings.eval = g.eval;
    settings.threads = g.threads;
    settings.seed = seed;
    settings.fixed_clock = fixed_clock;
    const dlt::AuditReport report = dlt::run_audit(selection, settings);
    const std::string fmt = g.format == "text" ? "md" : g.format;
    emit(dlt::export_report(report, dlt::parse_report_format(fmt)), g.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirichlet character / L-function toolkit with a numerical claim audit"};
    app.set_version_flag("--version", dlt::kVersion);
    app.set_config("--config", "", "key = value config file; flags override");
    app.require_subcommand(1);

    GlobalOptions g;

    // chars
    auto* chars = app.add_subcommand("chars", "enumerate or inspect characters mod q");
    std::uint64_t chars_q = 1;
    std::int64_t chars_index = -1;
    chars->add_option("--q", chars_q, "modulus")->required();
    chars->add_option("--char-index", chars_index, "show one character in detail");
    chars->add_option("--format", g.format, "text|json");
    chars->add_option("--out", g.out, "output file");

    // gauss
    auto* gauss = app.add_subcommand("gauss", "Gauss sum of one character");
    std::uint64_t gauss_q = 1, gauss_index = 0;
    gauss->add_option("--q", gauss_q, "modulus")->required();
    gauss->add_option("--char-index", gauss_index, "character index");
    gauss->add_option("--format", g.format, "text|json");
    gauss->add_option("--out", g.out, "output file");

    // lvalue
    auto* lvalue = app.add_subcommand("lvalue", "evaluate L(s, chi)");
    std::uint64_t lv_q = 1, lv_index = 0, lv_partial = 0;
    std::string lv_s = "2,0";
    lvalue->add_option("--q", lv_q, "modulus")->required();
    lvalue->add_option("--char-index", lv_index, "character index");
    lvalue->add_option("--s", lv_s, "point as \"re,im\"")->required();
    lvalue->add_option("--partial", lv_partial, "also print the length-N direct partial sum");
    lvalue->add_option("--format", g.format, "text|json");
    lvalue->add_option("--out", g.out, "output file");
    add_eval_options(lvalue, g);

    // zeros
    auto* zeros = app.add_subcommand("zeros", "critical-line zero machinery");
    zeros->require_subcommand(1);
    auto* zscan = zeros->add_subcommand("scan", "grid scan + refinement on [t_lo, t_hi]");
    std::uint64_t z_q = 1, z_index = 0;
    double z_lo = 0.0, z_hi = 30.0, z_step = 0.01, z_center = 14.0, z_window = 0.5;
    double sg_t0 = 14.134725, sg_lo = 0.01, sg_hi = 0.99;
    int sg_points = 99;
    zscan->add_option("--q", z_q, "modulus")->required();
    zscan->add_option("--char-index", z_index, "character index");
    zscan->add_option("--t-lo", z_lo, "lower ordinate")->required();
    zscan->add_option("--t-hi", z_hi, "upper ordinate")->required();
    zscan->add_option("--step", z_step, "grid step");
    zscan->add_option("--threads", g.threads, "worker threads");
    zscan->add_option("--cache-dir", g.cache_dir, "append found zeros to <dir>/zeros.jsonl");
    zscan->add_option("--format", g.format, "text|json|csv");
    zscan->add_option("--out", g.out, "output file");
    add_eval_options(zscan, g);
    auto* zrefine = zeros->add_subcommand("refine", "re-refine around a known ordinate");
    zrefine->add_option("--q", z_q, "modulus")->required();
    zrefine->add_option("--char-index", z_index, "character index");
    zrefine->add_option("--t-center", z_center, "center ordinate")->required();
    zrefine->add_option("--window", z_window, "half-width of the refinement bracket");
    zrefine->add_option("--cache-dir", g.cache_dir, "append found zeros to <dir>/zeros.jsonl");
    zrefine->add_option("--format", g.format, "text|json|csv");
    zrefine->add_option("--out", g.out, "output file");
    add_eval_options(zrefine, g);
    auto* zsigma = zeros->add_subcommand("sigma-scan", "|L(sigma + i t0)| profile across (0,1)");
    zsigma->add_option("--q", z_q, "modulus")->required();
    zsigma->add_option("--char-index", z_index, "character index");
    zsigma->add_option("--t0", sg_t0, "fixed ordinate")->required();
    zsigma->add_option("--grid-lo", sg_lo, "first sigma");
    zsigma->add_option("--grid-hi", sg_hi, "last sigma");
    zsigma->add_option("--grid-points", sg_points, "number of grid points");
    zsigma->add_option("--format", g.format, "text|json|csv");
    zsigma->add_option("--out", g.out, "output file");
    add_eval_options(zsigma, g);

    // series
    auto* series = app.add_subcommand("series", "partial sums of cos/sin(4 t ln n)");
    double se_t = 1.0;
    std::uint64_t se_max = 100'000;
    std::string se_checkpoints;
    series->add_option("--t", se_t, "parameter t (frequency 4t built in)")->required();
    series->add_option("--max", se_max, "last checkpoint for the default geometric list");
    series->add_option("--checkpoints", se_checkpoints, "comma-separated checkpoint list");
    double se_rect = 0.0, se_ratio = 0.0;
    series->add_option("--rectangle-width", se_rect,
                       "metadata constant c for testing a d/(4c) envelope");
    series->add_option("--cutoff-ratio", se_ratio,
                       "metadata constant d for testing a d/(4c) envelope");
    series->add_option("--threads", g.threads, "worker threads");
    series->add_option("--format", g.format, "text|csv|json");
    series->add_option("--out", g.out, "output file");

    // geom
    auto* geom = app.add_subcommand("geom", "bilinear triangle examples and vector forms");
    int geom_example = 0;
    std::uint64_t ge_q = 4, ge_index = 1, ge_terms = 1000;
    std::string ge_s = "0.5,6", ge_slot = "amplitude";
    geom->add_option("--example", geom_example, "reference triangle 1, 2 or 3");
    geom->add_option("--q", ge_q, "modulus for the vector form");
    geom->add_option("--char-index", ge_index, "character index");
    geom->add_option("--s", ge_s, "point as \"re,im\"");
    geom->add_option("--terms", ge_terms, "truncation length N");
    geom->add_option("--chi-slot", ge_slot, "amplitude|phase: which factor carries chi");
    geom->add_option("--format", g.format, "text|json");
    geom->add_option("--out", g.out, "output file");

    // pappus
    auto* pappus = app.add_subcommand("pappus", "barycenter and volume-area identity");
    std::string pp_profile = "cone";
    double pp_value = 2.0, pp_slope = 1.0, pp_exponent = 2.0, pp_a = 0.0, pp_b = 1.0;
    std::string pp_s = "0.5,2";
    int pp_panels = 4096;
    pappus->add_option("--profile", pp_profile, "constant|linear|power|inv-power")->required();
    pappus->add_option("--value", pp_value, "constant profile value");
    pappus->add_option("--slope", pp_slope, "linear profile slope");
    pappus->add_option("--exponent", pp_exponent, "power profile exponent");
    pappus->add_option("--s", pp_s, "inv-power exponent as \"re,im\"");
    pappus->add_option("--a", pp_a, "interval start");
    pappus->add_option("--b", pp_b, "interval end");
    pappus->add_option("--panels", pp_panels, "Simpson panels (even)");
    pappus->add_option("--format", g.format, "text|json");
    pappus->add_option("--out", g.out, "output file");

    // audit
    auto* audit = app.add_subcommand("audit", "run the claim audit");
    bool au_all = false, au_fixed_clock = false;
    std::string au_claims;
    std::uint64_t au_seed = dlt::AuditSettings{}.seed;
    audit->add_flag("--all", au_all, "run every registered claim");
    audit->add_option("--claims", au_claims, "comma-separated claim ids, e.g. C1,C5");
    audit->add_option("--threads", g.threads, "worker threads");
    audit->add_option("--seed", au_seed, "seed for randomized experiments");
    audit->add_flag("--fixed-clock", au_fixed_clock,
                    "zero all runtime fields for byte-stable output");
    audit->add_option("--format", g.format, "json|md|csv");
    audit->add_option("--out", g.out, "output file");
    add_eval_options(audit, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        g.eval.validate();
        if (chars->parsed()) return run_chars(g, chars_q, chars_index);
        if (gauss->parsed()) return run_gauss(g, gauss_q, gauss_index);
        if (lvalue->parsed()) return run_lvalue(g, lv_q, lv_index, lv_s, lv_partial);
        if (zeros->parsed()) {
            if (zscan->parsed()) return run_zeros_scan(g, z_q, z_index, z_lo, z_hi, z_step);
            if (zrefine->parsed()) return run_zeros_refine(g, z_q, z_index, z_center, z_window);
            if (zsigma->parsed())
                return run_zeros_sigma(g, z_q, z_index, sg_t0, sg_lo, sg_hi, sg_points);
        }
        if (series->parsed())
            return run_series(g, se_t, se_max, se_checkpoints, se_rect, se_ratio);
        if (geom->parsed()) {
            if (geom_example > 0) return run_geom_example(g, geom_example);
            return run_geom_vector(g, ge_q, ge_index, ge_s, ge_terms, ge_slot);
        }
        if (pappus->parsed())
            return run_pappus(g, pp_profile, pp_value, pp_slope, pp_exponent, pp_s, pp_a, pp_b,
                              pp_panels);
        if (audit->parsed()) return run_audit_cmd(g, au_all, au_claims, au_seed, au_fixed_clock);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

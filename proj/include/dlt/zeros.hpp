#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dlt/analytic.hpp"
#include "dlt/threading.hpp"

namespace dlt {

struct ZeroRecord {
    std::uint64_t q = 0;
    std::uint64_t index = 0;  // character index within mod q
    double t = 0.0;           // ordinate of the zero on the critical line
    double residual = 0.0;    // |L(1/2 + i t, chi)| at the refined point
    double width = 0.0;       // bracket width after refinement
};

struct ScanSettings {
    double candidate_threshold = 0.1;  // grid minima below this get refined
    double accept_residual = 1e-6;
    double refine_width = 1e-9;        // target bracket width
    int threads = 1;
    EvalSettings eval;
};

namespace detail {

// golden-section minimization of f on [lo, hi] down to the given width
template <typename F>
inline std::pair<double, double> golden_section_min(F&& f, double lo, double hi, double width) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > width) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    return {0.5 * (lo + hi), hi - lo};
}

}  // namespace detail

// Grid scan of |L(1/2 + it, chi)| on [t_lo, t_hi]; every interior local
// minimum below the candidate threshold is refined by golden-section
// minimization of |L|^2 and accepted iff the refined residual passes.
// Grid evaluations are independent per point, so the result is identical
// for every thread count; the merged list is sorted by t and deduplicated
// within one refinement width.
inline std::vector<ZeroRecord> scan_critical_line(const DirichletCharacter& chi, double t_lo,
                                                  double t_hi, double step,
                                                  const ScanSettings& settings = {}) {
    if (!std::isfinite(t_lo) || !std::isfinite(t_hi) || !std::isfinite(step))
        throw std::invalid_argument("scan bounds must be finite");
    if (!(t_lo < t_hi)) throw std::invalid_argument("requires t_lo < t_hi");
    if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
    if (step > t_hi - t_lo) throw std::invalid_argument("step exceeds scan range: empty grid");
    settings.eval.validate();

    const std::size_t npts = static_cast<std::size_t>(std::floor((t_hi - t_lo) / step)) + 1;
    std::vector<double> grid(npts), absl(npts);
    for (std::size_t k = 0; k < npts; ++k) grid[k] = t_lo + step * static_cast<double>(k);
    parallel_chunks(npts, settings.threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k)
            absl[k] = std::abs(l_eval(chi, {0.5, grid[k]}, settings.eval));
    });

    std::vector<std::size_t> candidates;
    for (std::size_t k = 1; k + 1 < npts; ++k)
        if (absl[k] <= absl[k - 1] && absl[k] <= absl[k + 1] &&
            absl[k] < settings.candidate_threshold)
            candidates.push_back(k);

    std::vector<ZeroRecord> zeros(candidates.size());
    std::vector<char> accepted(candidates.size(), 0);
    parallel_chunks(candidates.size(), settings.threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const std::size_t k = candidates[i];
            auto f = [&](double t) {
                const Complex v = l_eval(chi, {0.5, t}, settings.eval);
                return std::norm(v);
            };
            const auto [t_min, width] =
                detail::golden_section_min(f, grid[k - 1], grid[k + 1], settings.refine_width);
            const double residual = std::abs(l_eval(chi, {0.5, t_min}, settings.eval));
            if (residual < settings.accept_residual) {
                zeros[i] = {chi.modulus(), chi.index(), t_min, residual, width};
                accepted[i] = 1;
            }
        }
    });

    std::vector<ZeroRecord> out;
    for (std::size_t i = 0; i < zeros.size(); ++i)
        if (accepted[i]) out.push_back(zeros[i]);
    std::sort(out.begin(), out.end(),
              [](const ZeroRecord& a, const ZeroRecord& b) { return a.t < b.t; });
    std::vector<ZeroRecord> dedup;
    for (const auto& z : out)
        if (dedup.empty() || z.t - dedup.back().t > std::max(z.width, dedup.back().width))
            dedup.push_back(z);
    return dedup;
}

// |L(sigma + i t0, chi)| profile across a sigma grid inside the open
// critical strip, with the argmin reported.
struct SigmaProfile {
    double t0 = 0.0;
    std::vector<double> sigma;
    std::vector<double> abs_l;
    std::size_t argmin_index = 0;
    double argmin_sigma = 0.0;
};

inline std::vector<double> default_sigma_grid() {
    std::vector<double> g(99);
    for (int k = 0; k < 99; ++k) g[static_cast<std::size_t>(k)] = 0.01 * (k + 1);
    return g;
}

inline SigmaProfile sigma_scan(const DirichletCharacter& chi, double t0, std::vector<double> grid,
                               const EvalSettings& settings = {}) {
    if (!std::isfinite(t0)) throw std::invalid_argument("t0 must be finite");
    if (grid.size() < 9) throw std::invalid_argument("sigma grid needs at least 9 points");
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (!(grid[k] > 0.0 && grid[k] < 1.0))
            throw std::invalid_argument("sigma grid must lie in (0, 1)");
        if (k > 0 && !(grid[k] > grid[k - 1]))
            throw std::invalid_argument("sigma grid must be strictly increasing");
    }
    SigmaProfile prof;
    prof.t0 = t0;
    prof.sigma = std::move(grid);
    prof.abs_l.resize(prof.sigma.size());
    for (std::size_t k = 0; k < prof.sigma.size(); ++k)
        prof.abs_l[k] = std::abs(l_eval(chi, {prof.sigma[k], t0}, settings));
    prof.argmin_index = static_cast<std::size_t>(
        std::min_element(prof.abs_l.begin(), prof.abs_l.end()) - prof.abs_l.begin());
    prof.argmin_sigma = prof.sigma[prof.argmin_index];
    return prof;
}

// One row of the spacing table: for a consecutive zero pair and an integer n,
// the distance of (delta_t ln n)/(2 pi) from the nearest integer. The claimed
// spacing law delta_t = 2 k pi / ln n would make every entry 0.
struct SpacingEntry {
    std::size_t pair_index = 0;
    double delta_t = 0.0;
    std::uint64_t n = 0;
    double frac = 0.0;  // in [0, 0.5]
};

inline std::vector<SpacingEntry> ordinate_spacing_probe(const std::vector<ZeroRecord>& zeros,
                                                        std::uint64_t n_max) {
    if (zeros.size() < 2)
        throw std::invalid_argument("ordinate spacing probe needs at least 2 zeros");
    if (n_max < 2) throw std::invalid_argument("n_max must be >= 2");
    std::vector<ZeroRecord> sorted = zeros;
    std::sort(sorted.begin(), sorted.end(),
              [](const ZeroRecord& a, const ZeroRecord& b) { return a.t < b.t; });
    std::vector<SpacingEntry> table;
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        const double dt = sorted[i + 1].t - sorted[i].t;
        for (std::uint64_t n = 2; n <= n_max; ++n) {
            const double x =
                dt * std::log(static_cast<double>(n)) / (2.0 * std::numbers::pi);
            table.push_back({i, dt, n, std::abs(x - std::round(x))});
        }
    }
    return table;
}

// Classical theta(t) = arg Gamma(1/4 + it/2) - (t/2) ln pi for the principal
// character mod 1; hardy_z(t) = Re(e^{i theta} zeta(1/2 + it)) is real and
// changes sign at the critical-line zeros. Used as the second, independent
// confirmation of scanned principal-character zeros.
inline double riemann_siegel_theta(double t) {
    return std::arg(gamma({0.25, 0.5 * t})) - 0.5 * t * std::log(std::numbers::pi);
}

inline double hardy_z(double t, const EvalSettings& settings = {}) {
    const DirichletCharacter principal = character(1, 0);
    const Complex zeta = l_eval(principal, {0.5, t}, settings);
    return (std::polar(1.0, riemann_siegel_theta(t)) * zeta).real();
}

}  // namespace dlt

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dlt/threading.hpp"

namespace dlt {

struct KahanAccumulator {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

struct GrowthFit {
    double slope = 0.0;
    double residual = 0.0;  // RMS residual of the log-log fit
};

// Partial-sum probe of the oscillatory series sum_n cos(4 t ln n) and
// sum_n sin(4 t ln n). The 4t frequency is built in; checkpoints are the
// N values at which partial sums and running maxima are recorded.
//
// rectangle_width (c) and cutoff_ratio (d) are carried as metadata only:
// a claimed envelope of the form |sum| <= d/(4c) can be tested against the
// recorded extrema (see implied_bound), but no computation here depends on
// either constant.
struct SeriesProbe {
    double t = 0.0;
    std::vector<std::uint64_t> checkpoints;
    std::vector<double> cos_sum, sin_sum;          // per checkpoint
    std::vector<double> max_abs_cos, max_abs_sin;  // running max over all n <= checkpoint
    std::optional<GrowthFit> growth_cos, growth_sin;
    std::optional<double> rectangle_width;  // c
    std::optional<double> cutoff_ratio;     // d

    // d/(4c) when both constants are set
    std::optional<double> implied_bound() const {
        if (!rectangle_width || !cutoff_ratio) return std::nullopt;
        if (*rectangle_width == 0.0) return std::nullopt;
        return *cutoff_ratio / (4.0 * *rectangle_width);
    }
};

inline std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t lo = 10,
                                                        std::uint64_t hi = 100'000,
                                                        double ratio = 10.0) {
    if (lo < 1 || hi < lo || !(ratio > 1.0))
        throw std::invalid_argument("bad checkpoint specification");
    std::vector<std::uint64_t> cps;
    double x = static_cast<double>(lo);
    while (true) {
        const std::uint64_t n = static_cast<std::uint64_t>(std::llround(x));
        if (cps.empty() || n > cps.back()) cps.push_back(std::min(n, hi));
        if (cps.back() >= hi) break;
        x *= ratio;
    }
    return cps;
}

// Least-squares slope of log(running max) against log N over the checkpoints
// with positive running max. Throws when fewer than two positive points
// remain (in particular for all-zero partial sums).
inline GrowthFit fit_growth(const std::vector<std::uint64_t>& checkpoints,
                            const std::vector<double>& running_max) {
    if (checkpoints.size() != running_max.size())
        throw std::invalid_argument("checkpoint/max length mismatch");
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (running_max[i] > 0.0) {
            xs.push_back(std::log(static_cast<double>(checkpoints[i])));
            ys.push_back(std::log(running_max[i]));
        }
    }
    if (xs.size() < 2) throw std::domain_error("growth fit undefined: too few nonzero maxima");
    const std::size_t m = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(m);
    my /= static_cast<double>(m);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    GrowthFit fit;
    fit.slope = sxy / sxx;
    double rss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double r = ys[i] - (my + fit.slope * (xs[i] - mx));
        rss += r * r;
    }
    fit.residual = std::sqrt(rss / static_cast<double>(m));
    return fit;
}

// Compensated direct summation of both trigonometric families, recording
// partial sums and running maxima at each checkpoint plus the growth fits.
// The sum is always segmented at checkpoint boundaries and segment results
// are merged in checkpoint order, so the output is bitwise identical for
// every thread count.
inline SeriesProbe trig_log_partial_sums(double t, std::vector<std::uint64_t> checkpoints,
                                         int threads = 1) {
    if (!std::isfinite(t)) throw std::invalid_argument("t must be finite");
    if (checkpoints.empty()) throw std::invalid_argument("checkpoints must be nonempty");
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 1 || (i > 0 && checkpoints[i] <= checkpoints[i - 1]))
            throw std::invalid_argument("checkpoints must be strictly increasing and >= 1");
    }

    const std::size_t segs = checkpoints.size();
    std::vector<double> seg_cos(segs), seg_sin(segs);
    const double freq = 4.0 * t;

    // phase 1: independent segment sums
    parallel_chunks(segs, threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
            const std::uint64_t first = (k == 0) ? 1 : checkpoints[k - 1] + 1;
            KahanAccumulator c, s;
            for (std::uint64_t n = first; n <= checkpoints[k]; ++n) {
                const double arg = freq * std::log(static_cast<double>(n));
                c.add(std::cos(arg));
                s.add(std::sin(arg));
            }
            seg_cos[k] = c.sum;
            seg_sin[k] = s.sum;
        }
    });

    // phase 2: compensated merge into checkpoint partial sums
    SeriesProbe probe;
    probe.t = t;
    probe.checkpoints = std::move(checkpoints);
    probe.cos_sum.resize(segs);
    probe.sin_sum.resize(segs);
    {
        KahanAccumulator c, s;
        for (std::size_t k = 0; k < segs; ++k) {
            c.add(seg_cos[k]);
            s.add(seg_sin[k]);
            probe.cos_sum[k] = c.sum;
            probe.sin_sum[k] = s.sum;
        }
    }

    // phase 3: per-segment running maxima against the segment offsets
    std::vector<double> seg_max_cos(segs), seg_max_sin(segs);
    parallel_chunks(segs, threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
            const std::uint64_t first = (k == 0) ? 1 : probe.checkpoints[k - 1] + 1;
            const double off_c = (k == 0) ? 0.0 : probe.cos_sum[k - 1];
            const double off_s = (k == 0) ? 0.0 : probe.sin_sum[k - 1];
            KahanAccumulator c, s;
            double mc = 0.0, ms = 0.0;
            for (std::uint64_t n = first; n <= probe.checkpoints[k]; ++n) {
                const double arg = freq * std::log(static_cast<double>(n));
                c.add(std::cos(arg));
                s.add(std::sin(arg));
                mc = std::max(mc, std::abs(off_c + c.sum));
                ms = std::max(ms, std::abs(off_s + s.sum));
            }
            seg_max_cos[k] = mc;
            seg_max_sin[k] = ms;
        }
    });
    probe.max_abs_cos.resize(segs);
    probe.max_abs_sin.resize(segs);
    double mc = 0.0, ms = 0.0;
    for (std::size_t k = 0; k < segs; ++k) {
        mc = std::max(mc, seg_max_cos[k]);
        ms = std::max(ms, seg_max_sin[k]);
        probe.max_abs_cos[k] = mc;
        probe.max_abs_sin[k] = ms;
    }

    try {
        probe.growth_cos = fit_growth(probe.checkpoints, probe.max_abs_cos);
    } catch (const std::domain_error&) {
        probe.growth_cos = std::nullopt;
    }
    try {
        probe.growth_sin = fit_growth(probe.checkpoints, probe.max_abs_sin);
    } catch (const std::domain_error&) {
        probe.growth_sin = std::nullopt;
    }
    return probe;
}

enum class TrigFamily { cos, sin };

inline GrowthFit growth_exponent(const SeriesProbe& probe, TrigFamily family = TrigFamily::cos) {
    return fit_growth(probe.checkpoints,
                      family == TrigFamily::cos ? probe.max_abs_cos : probe.max_abs_sin);
}

// Closed-form antiderivative of cos(4 t ln x) evaluated from 1 to w:
//   (1/(1+16t^2)) [ x (cos(4t ln x) + 4t sin(4t ln x)) ]_1^w
inline double cos_log_antiderivative(double t, double w) {
    if (!std::isfinite(t) || !std::isfinite(w)) throw std::invalid_argument("arguments must be finite");
    if (w < 1.0) throw std::invalid_argument("w must be >= 1");
    const double lw = std::log(w);
    const double bracket = w * (std::cos(4.0 * t * lw) + 4.0 * t * std::sin(4.0 * t * lw));
    return (bracket - 1.0) / (1.0 + 16.0 * t * t);
}

}  // namespace dlt

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "dlt/analytic.hpp"

namespace dlt {

using ProfileFn = std::function<Complex(double)>;

// Plane lamina bounded by an upper and a lower profile over [a, b].
// Profiles may be complex-valued; quadrature integrates real and imaginary
// parts with the same composite Simpson rule.
struct Lamina {
    ProfileFn upper;
    ProfileFn lower;
    double a = 0.0;
    double b = 1.0;
    int panels = 4096;  // even, >= 8

    void validate() const {
        if (!upper || !lower) throw std::invalid_argument("lamina profiles must be set");
        if (!(a < b)) throw std::invalid_argument("lamina requires a < b");
        if (panels < 8 || panels % 2 != 0)
            throw std::invalid_argument("panel count must be even and >= 8");
    }
};

// Composite Simpson rule with `panels` subintervals (even, >= 2).
inline Complex simpson(const ProfileFn& f, double a, double b, int panels) {
    if (panels < 2 || panels % 2 != 0)
        throw std::invalid_argument("simpson: panel count must be even and >= 2");
    const double h = (b - a) / static_cast<double>(panels);
    Complex acc = f(a) + f(b);
    for (int k = 1; k < panels; ++k)
        acc += f(a + h * static_cast<double>(k)) * (k % 2 == 1 ? 4.0 : 2.0);
    return acc * (h / 3.0);
}

struct Barycenter {
    Complex xi;   // integral of z (f - g) over integral of (f - g)
    Complex eta;  // half integral of (f^2 - g^2) over integral of (f - g)
};

inline Barycenter lamina_barycenter(const Lamina& lam) {
    lam.validate();
    const Complex denom = simpson([&](double z) { return lam.upper(z) - lam.lower(z); },
                                  lam.a, lam.b, lam.panels);
    if (std::abs(denom) <= 1e-12)
        throw std::domain_error("lamina_barycenter: vanishing cross-section area");
    const Complex num_xi = simpson([&](double z) { return z * (lam.upper(z) - lam.lower(z)); },
                                   lam.a, lam.b, lam.panels);
    const Complex num_eta = simpson(
        [&](double z) {
            const Complex f = lam.upper(z), g = lam.lower(z);
            return f * f - g * g;
        },
        lam.a, lam.b, lam.panels);
    return {num_xi / denom, 0.5 * num_eta / denom};
}

struct PappusResult {
    Complex volume;   // pi * integral of (f^2 - g^2): rotation solid
    Complex area;     // integral of (f - g): axis-cross section
    Complex eta;      // barycenter height
    double residual;  // |volume - 2 pi eta area|, same quadrature throughout
};

inline PappusResult pappus_check(const Lamina& lam) {
    lam.validate();
    const Complex area = simpson([&](double z) { return lam.upper(z) - lam.lower(z); },
                                 lam.a, lam.b, lam.panels);
    if (std::abs(area) <= 1e-12)
        throw std::domain_error("pappus_check: vanishing cross-section area");
    const Complex sq = simpson(
        [&](double z) {
            const Complex f = lam.upper(z), g = lam.lower(z);
            return f * f - g * g;
        },
        lam.a, lam.b, lam.panels);
    PappusResult res;
    res.volume = std::numbers::pi * sq;
    res.area = area;
    res.eta = 0.5 * sq / area;
    res.residual = std::abs(res.volume - 2.0 * std::numbers::pi * res.eta * res.area);
    return res;
}

// pi * sum_{n<=N} chi^2(n)/n^{2s}: stacked cylinder volumes. chi^2(n) is
// squared exactly in root-of-unity arithmetic before conversion.
inline Complex cylinder_volume_sum(const DirichletCharacter& chi, SPoint s, std::uint64_t N) {
    s.validate();
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    const SPoint s2{2.0 * s.sigma, 2.0 * s.t};
    Complex acc = 0.0;
    for (std::uint64_t n = 1; n <= N; ++n) {
        const RootOfUnity v = chi.value(static_cast<std::int64_t>(n));
        if (v.is_zero()) continue;
        acc += v.pow(2).to_complex() * n_power_minus_s(n, s2);
    }
    return std::numbers::pi * acc;
}

// eta_N = sum chi^2(n)/n^{2s} / (2 sum chi(n)/n^s), the barycenter height
// the volume-area relation would imply at truncation N. Undefined (nullopt)
// when the truncated L-sum in the denominator has modulus below 1e-12.
inline std::optional<Complex> eta_implied(const DirichletCharacter& chi, SPoint s,
                                          std::uint64_t N) {
    s.validate();
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    const Complex num = cylinder_volume_sum(chi, s, N) / std::numbers::pi;
    const Complex den = 2.0 * l_partial_sum(chi, s, N);
    if (std::abs(den) < 1e-12) return std::nullopt;
    return num / den;
}

}  // namespace dlt

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dlt/characters.hpp"

namespace dlt {

// Point s = sigma + i t in the complex plane of the L-function argument.
// NaN/infinity are rejected at every API boundary that takes one.
struct SPoint {
    double sigma = 0.0;
    double t = 0.0;

    Complex value() const { return {sigma, t}; }
    static SPoint from(Complex z) { return {z.real(), z.imag()}; }

    void validate() const {
        if (!std::isfinite(sigma) || !std::isfinite(t))
            throw std::invalid_argument("s must be finite");
    }
};

// Precision knobs for series/continuation evaluation.
struct EvalSettings {
    int euler_maclaurin_shift = 30;           // M >= 10
    int bernoulli_terms = 20;                 // even, in [2, 30]
    std::uint64_t series_truncation = 1'000'000;  // N_max for direct sums
    double target_tolerance = 1e-12;

    void validate() const {
        if (euler_maclaurin_shift < 10)
            throw std::invalid_argument("euler_maclaurin_shift must be >= 10");
        if (bernoulli_terms < 2 || bernoulli_terms > 30 || bernoulli_terms % 2 != 0)
            throw std::invalid_argument("bernoulli_terms must be even and in [2, 30]");
        if (!(target_tolerance > 0.0))
            throw std::invalid_argument("target_tolerance must be positive");
        if (series_truncation < 1)
            throw std::invalid_argument("series_truncation must be >= 1");
    }
};

namespace detail {

// B_{2j}/(2j)! for j = 1..15
inline constexpr double kBernoulliOverFactorial[15] = {
    8.3333333333333333e-02,  -1.3888888888888889e-03, 3.3068783068783069e-05,
    -8.2671957671957672e-07, 2.0876756987868099e-08,  -5.2841901386874932e-10,
    1.3382536530684679e-11,  -3.3896802963225829e-13, 8.5860620562778446e-15,
    -2.1748686985580619e-16, 5.5090028283602295e-18,  -1.3954464685812523e-19,
    3.5347070396294675e-21,  -8.9535174270375469e-23, 2.2679524523376831e-24,
};

// Lanczos g = 7, 9-coefficient set
inline constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,      -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7,
};

}  // namespace detail

// n^{-s} expanded as e^{-sigma ln n} (cos(t ln n) - i sin(t ln n))
inline Complex n_power_minus_s(std::uint64_t n, SPoint s) {
    const double ln = std::log(static_cast<double>(n));
    const double r = std::exp(-s.sigma * ln);
    return {r * std::cos(s.t * ln), -r * std::sin(s.t * ln)};
}

inline Complex gamma(SPoint s) {
    s.validate();
    if (s.t == 0.0 && s.sigma <= 0.0 && s.sigma == std::floor(s.sigma))
        throw std::domain_error("gamma pole at nonpositive integer");
    const double pi = std::numbers::pi;
    if (s.sigma < 0.5) {
        // reflection formula
        const Complex z = s.value();
        return pi / (std::sin(pi * z) * gamma({1.0 - s.sigma, -s.t}));
    }
    Complex z = s.value() - 1.0;
    Complex x = detail::kLanczos[0];
    for (int k = 1; k < 9; ++k) x += detail::kLanczos[k] / (z + static_cast<double>(k));
    const Complex tt = z + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(tt, z + 0.5) * std::exp(-tt) * x;
}

// Hurwitz zeta(s, a) = sum_{n>=0} (n+a)^{-s} by Euler-Maclaurin:
// truncated sum + tail integral + 1/2 term + Bernoulli corrections.
// Accepts any a > 0; the shift adapts to |s| so the asymptotic corrections
// converge for |s| <= 50 at the default settings.
inline Complex hurwitz_zeta(SPoint s, double a, const EvalSettings& settings = {}) {
    s.validate();
    settings.validate();
    if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("a must satisfy a > 0");
    const Complex sc = s.value();
    if (s.sigma == 1.0 && s.t == 0.0) throw std::domain_error("hurwitz_zeta pole at s = 1");

    const int shift = std::max(settings.euler_maclaurin_shift,
                               static_cast<int>(std::ceil(std::abs(sc))) + 10);
    Complex acc = 0.0;
    for (int n = 0; n < shift; ++n)
        acc += std::exp(-sc * std::log(static_cast<double>(n) + a));

    const double w = static_cast<double>(shift) + a;
    const double lw = std::log(w);
    acc += std::exp((1.0 - sc) * lw) / (sc - 1.0);
    const Complex w_ms = std::exp(-sc * lw);  // w^{-s}
    acc += 0.5 * w_ms;

    Complex poch = sc;          // s(s+1)...(s+2j-2)
    Complex wpow = w_ms / w;    // w^{-s-2j+1}
    const double w2 = w * w;
    for (int j = 1; j <= settings.bernoulli_terms / 2; ++j) {
        const Complex term = detail::kBernoulliOverFactorial[j - 1] * poch * wpow;
        acc += term;
        if (std::abs(term) < settings.target_tolerance * std::abs(acc)) break;
        poch *= (sc + static_cast<double>(2 * j - 1)) * (sc + static_cast<double>(2 * j));
        wpow /= w2;
    }
    return acc;
}

inline double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma requires x > 0");
    double acc = 0.0;
    while (x < 20.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // asymptotic series with B_{2j}/(2j) coefficients
    const double inv = 1.0 / x, inv2 = inv * inv;
    double series = inv2 * (1.0 / 12.0 -
                    inv2 * (1.0 / 120.0 -
                    inv2 * (1.0 / 252.0 -
                    inv2 * (1.0 / 240.0 -
                    inv2 * (1.0 / 132.0 -
                    inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
    return acc + std::log(x) - 0.5 * inv - series;
}

// sum_{n=1}^{N} chi(n) n^{-s} by direct summation
inline Complex l_partial_sum(const DirichletCharacter& chi, SPoint s, std::uint64_t N) {
    s.validate();
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    const std::uint64_t q = chi.modulus();
    std::vector<Complex> chi_table(q);
    for (std::uint64_t r = 0; r < q; ++r) chi_table[r] = chi.value_c(static_cast<std::int64_t>(r));
    Complex sum = 0.0;
    for (std::uint64_t n = 1; n <= N; ++n) {
        const Complex c = chi_table[n % q];
        if (c == 0.0) continue;
        sum += c * n_power_minus_s(n, s);
    }
    return sum;
}

// L(s, chi) through the Hurwitz decomposition
// L(s, chi) = q^{-s} sum_{a=1}^{q} chi(a) zeta(s, a/q).
// The principal character is refused at its pole s = 1; nonprincipal
// characters at s = 1 are evaluated through the digamma formula
// L(1, chi) = -(1/q) sum_a chi(a) psi(a/q) (the per-term poles cancel).
inline Complex l_eval(const DirichletCharacter& chi, SPoint s, const EvalSettings& settings = {}) {
    s.validate();
    settings.validate();
    const std::uint64_t q = chi.modulus();
    if (s.sigma == 1.0 && s.t == 0.0) {
        if (chi.is_principal()) throw std::domain_error("L(s, principal) pole at s = 1");
        Complex acc = 0.0;
        for (std::uint64_t a = 1; a <= q; ++a) {
            const RootOfUnity v = chi.value(static_cast<std::int64_t>(a));
            if (v.is_zero()) continue;
            acc += v.to_complex() * digamma(static_cast<double>(a) / static_cast<double>(q));
        }
        return -acc / static_cast<double>(q);
    }
    if (q == 1) return hurwitz_zeta(s, 1.0, settings);
    Complex acc = 0.0;
    for (std::uint64_t a = 1; a <= q; ++a) {
        const RootOfUnity v = chi.value(static_cast<std::int64_t>(a));
        if (v.is_zero()) continue;
        acc += v.to_complex() *
               hurwitz_zeta(s, static_cast<double>(a) / static_cast<double>(q), settings);
    }
    return acc * n_power_minus_s(q, s);
}

enum class FeVariant { general, even, odd };

// Right-hand side of the reflection identity for primitive chi:
//   L(1-s, chi) = (2 pi)^{-s} q^{s-1} tau(chi) Gamma(s)
//                 { e^{-i pi s/2} + chi(-1) e^{i pi s/2} } L(s, conj chi)
// with the specialized even form 2 cos(pi s/2) and odd form -2i sin(pi s/2).
// Imprimitive characters are rejected unless allow_imprimitive is set (the
// audit probes them deliberately and records the failure magnitudes).
inline Complex functional_equation_rhs(const DirichletCharacter& chi, SPoint s, FeVariant variant,
                                       bool allow_imprimitive = false,
                                       const EvalSettings& settings = {}) {
    s.validate();
    if (!chi.is_primitive() && !allow_imprimitive)
        throw std::invalid_argument("functional equation requires a primitive character");
    if (variant == FeVariant::even && chi.parity() != +1)
        throw std::invalid_argument("even variant requires chi(-1) = +1");
    if (variant == FeVariant::odd && chi.parity() != -1)
        throw std::invalid_argument("odd variant requires chi(-1) = -1");

    const double pi = std::numbers::pi;
    const Complex sc = s.value();
    const Complex tau = gauss_sum(chi);
    const Complex l_bar = l_eval(chi.conjugate(), s, settings);
    const Complex prefactor = std::exp(-sc * std::log(2.0 * pi)) *
                              std::exp((sc - 1.0) * std::log(static_cast<double>(chi.modulus()))) *
                              tau * gamma(s);
    const Complex i_unit{0.0, 1.0};
    Complex phase;
    switch (variant) {
        case FeVariant::general:
            phase = std::exp(-i_unit * pi * sc / 2.0) +
                    static_cast<double>(chi.parity()) * std::exp(i_unit * pi * sc / 2.0);
            break;
        case FeVariant::even:
            phase = 2.0 * std::cos(pi * sc / 2.0);
            break;
        case FeVariant::odd:
            phase = -2.0 * i_unit * std::sin(pi * sc / 2.0);
            break;
    }
    return prefactor * phase * l_bar;
}

}  // namespace dlt

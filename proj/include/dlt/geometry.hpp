#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dlt/analytic.hpp"
#include "dlt/series.hpp"

namespace dlt {

using FormalVector = std::vector<Complex>;

// Bilinear inner product sum_k u_k v_k -- no conjugation. Admits isotropic
// vectors (nonzero v with <v,v> = 0), so this is a formal geometry, not a
// Hermitian one.
inline Complex formal_dot(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size()) throw std::invalid_argument("formal_dot: dimension mismatch");
    if (u.empty()) throw std::invalid_argument("formal_dot: dimension must be >= 1");
    Complex acc = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) acc += u[k] * v[k];
    return acc;
}

// Principal square root of the bilinear self-product; the result's argument
// lies in (-pi/2, pi/2].
inline Complex formal_norm(std::span<const Complex> v) {
    return std::sqrt(formal_dot(v, v));
}

enum class TrianglePairing { ab_ac, ac_bc };

namespace detail {

inline FormalVector vec_sub(const FormalVector& x, const FormalVector& y) {
    FormalVector d(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) d[k] = x[k] - y[k];
    return d;
}

}  // namespace detail

struct PairingReport {
    Complex dot;        // bilinear product of the two edges
    Complex cos_theta;  // dot / (norm * norm)
    Complex sin_theta;  // principal sqrt(1 - cos^2)
    Complex area;       // (1/2) sqrt(<u,u><v,v> - dot^2), principal branch
};

struct TriangleReport {
    FormalVector a, b, c;      // vertices
    Complex ab_sq, ac_sq, bc_sq;  // edge self-products <AB,AB>, <AC,AC>, <BC,BC>
    PairingReport p1;          // edges (AB, AC)
    PairingReport p2;          // edges (AC, BC)
};

// (1/2) * principal sqrt(<u,u><v,v> - <u,v>^2). Working under a single
// radical is what makes the two pairings of a triangle agree exactly: the
// radicand is the Gram determinant, invariant under the unimodular change
// of edge basis. Splitting into separate radicals can flip the sign.
inline Complex triangle_area(const FormalVector& a, const FormalVector& b, const FormalVector& c,
                             TrianglePairing pairing) {
    if (a.size() != b.size() || a.size() != c.size())
        throw std::invalid_argument("triangle_area: dimension mismatch");
    const FormalVector e1 = pairing == TrianglePairing::ab_ac ? detail::vec_sub(b, a)
                                                              : detail::vec_sub(c, a);
    const FormalVector e2 = pairing == TrianglePairing::ab_ac ? detail::vec_sub(c, a)
                                                              : detail::vec_sub(c, b);
    const Complex luu = formal_dot(e1, e1);
    const Complex lvv = formal_dot(e2, e2);
    if (luu == 0.0 || lvv == 0.0)
        throw std::domain_error("triangle_area: degenerate metric (isotropic edge)");
    const Complex dot = formal_dot(e1, e2);
    return 0.5 * std::sqrt(luu * lvv - dot * dot);
}

// Both sides of the formal cosine law for both edge pairings, with angles
// and areas under the principal-branch rules.
inline TriangleReport cosine_theorem_check(const FormalVector& a, const FormalVector& b,
                                           const FormalVector& c) {
    if (a.size() != b.size() || a.size() != c.size())
        throw std::invalid_argument("cosine_theorem_check: dimension mismatch");
    if (a == b || a == c || b == c)
        throw std::invalid_argument("cosine_theorem_check: vertices must be pairwise distinct");
    TriangleReport rep;
    rep.a = a;
    rep.b = b;
    rep.c = c;
    const FormalVector ab = detail::vec_sub(b, a);
    const FormalVector ac = detail::vec_sub(c, a);
    const FormalVector bc = detail::vec_sub(c, b);
    rep.ab_sq = formal_dot(ab, ab);
    rep.ac_sq = formal_dot(ac, ac);
    rep.bc_sq = formal_dot(bc, bc);
    if (rep.ab_sq == 0.0 || rep.ac_sq == 0.0 || rep.bc_sq == 0.0)
        throw std::domain_error("cosine_theorem_check: degenerate metric (isotropic edge)");

    auto fill = [](const FormalVector& u, const FormalVector& v, Complex luu,
                   Complex lvv) -> PairingReport {
        PairingReport p;
        p.dot = formal_dot(u, v);
        p.cos_theta = p.dot / (std::sqrt(luu) * std::sqrt(lvv));
        p.sin_theta = std::sqrt(1.0 - p.cos_theta * p.cos_theta);
        p.area = 0.5 * std::sqrt(luu * lvv - p.dot * p.dot);
        return p;
    };
    rep.p1 = fill(ab, ac, rep.ab_sq, rep.ac_sq);
    rep.p2 = fill(ac, bc, rep.ac_sq, rep.bc_sq);
    return rep;
}

// Where the character factor sits in the two-vector resolution of the
// truncated L-sum: either in the amplitude vector (chi(n)/n^sigma . n^{-it})
// or in the phase vector (n^{-sigma} . chi(n) n^{-it}).
enum class CharacterSlot { amplitude, phase };

struct VectorFormResult {
    FormalVector u, v;
    Complex dot;        // = truncated L-sum, termwise
    Complex norm_u_sq;  // <u,u>
    Complex norm_v_sq;  // <v,v>
    std::optional<Complex> cos_theta;  // absent when either norm is (numerically) zero
};

inline VectorFormResult l_vector_form(const DirichletCharacter& chi, SPoint s, std::uint64_t N,
                                      CharacterSlot slot) {
    s.validate();
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    VectorFormResult res;
    res.u.resize(N);
    res.v.resize(N);
    for (std::uint64_t n = 1; n <= N; ++n) {
        const Complex chi_n = chi.value_c(static_cast<std::int64_t>(n));
        const Complex amp = n_power_minus_s(n, {s.sigma, 0.0});
        const Complex phase = n_power_minus_s(n, {0.0, s.t});
        if (slot == CharacterSlot::amplitude) {
            res.u[n - 1] = chi_n * amp;
            res.v[n - 1] = phase;
        } else {
            res.u[n - 1] = amp;
            res.v[n - 1] = chi_n * phase;
        }
    }
    res.dot = formal_dot(res.u, res.v);
    res.norm_u_sq = formal_dot(res.u, res.u);
    res.norm_v_sq = formal_dot(res.v, res.v);
    const double tiny = 1e-12;
    if (std::abs(res.norm_u_sq) >= tiny && std::abs(res.norm_v_sq) >= tiny)
        res.cos_theta = res.dot / (std::sqrt(res.norm_u_sq) * std::sqrt(res.norm_v_sq));
    return res;
}

// With chi(n) = alpha + i beta on the unit circle,
//   chi(n)^4 = (1 - 8 alpha^2 beta^2) + 4 i alpha beta (alpha^2 - beta^2).
// Throws for gcd(n, q) > 1 where chi(n) = 0 and the decomposition's
// premise alpha^2 + beta^2 = 1 fails.
inline std::pair<double, double> chi4_components(const DirichletCharacter& chi, std::int64_t n) {
    const RootOfUnity v = chi.value(n);
    if (v.is_zero())
        throw std::domain_error("chi4_components: chi(n) = 0 (n shares a factor with q)");
    const Complex z = v.to_complex();
    const double alpha = z.real(), beta = z.imag();
    const double a2 = alpha * alpha, b2 = beta * beta;
    return {1.0 - 8.0 * a2 * b2, 4.0 * alpha * beta * (a2 - b2)};
}

// Truncations of the quartic radicands:
//   A_N = sum_{n<=N} chi^4(n)/n^{4 sigma}, split into the two real component
//         series of the chi^4 decomposition, and
//   B_N = sum_{n<=N} n^{-4it} = S_N^cos - i S_N^sin at the same t.
struct QuarticForm {
    double component_real = 0.0;  // sum (1 - 8 a^2 b^2)/n^{4 sigma}
    double component_imag = 0.0;  // sum 4 a b (a^2 - b^2)/n^{4 sigma}
    Complex a;                    // component_real + i component_imag
    Complex b;                    // S^cos - i S^sin
};

inline QuarticForm quartic_form(const DirichletCharacter& chi, SPoint s, std::uint64_t N) {
    s.validate();
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    QuarticForm qf;
    KahanAccumulator re, im;
    for (std::uint64_t n = 1; n <= N; ++n) {
        const RootOfUnity v = chi.value(static_cast<std::int64_t>(n));
        if (v.is_zero()) continue;
        const Complex z = v.to_complex();
        const double a2 = z.real() * z.real(), b2 = z.imag() * z.imag();
        const double w = std::exp(-4.0 * s.sigma * std::log(static_cast<double>(n)));
        re.add((1.0 - 8.0 * a2 * b2) * w);
        im.add(4.0 * z.real() * z.imag() * (a2 - b2) * w);
    }
    qf.component_real = re.sum;
    qf.component_imag = im.sum;
    qf.a = {qf.component_real, qf.component_imag};
    const SeriesProbe probe = trig_log_partial_sums(s.t, {N});
    qf.b = {probe.cos_sum.back(), -probe.sin_sum.back()};
    return qf;
}

}  // namespace dlt

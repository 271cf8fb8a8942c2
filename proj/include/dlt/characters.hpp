#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "dlt/root_of_unity.hpp"

namespace dlt {

namespace detail {

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

// ascending (prime, exponent) pairs
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> factors;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            std::uint64_t e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = 1;
    for (auto [p, e] : factorize(n)) {
        phi *= (p - 1);
        for (std::uint64_t i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

inline bool has_order(std::uint64_t g, std::uint64_t order, std::uint64_t mod) {
    if (pow_mod(g, order, mod) != 1) return false;
    for (auto [p, e] : factorize(order)) {
        (void)e;
        if (pow_mod(g, order / p, mod) == 1) return false;
    }
    return true;
}

// least primitive root mod an odd prime power
inline std::uint64_t least_primitive_root(std::uint64_t prime_power) {
    const std::uint64_t phi = euler_phi(prime_power);
    for (std::uint64_t g = 2; g < prime_power; ++g) {
        if (std::gcd(g, prime_power) != 1) continue;
        if (has_order(g, phi, prime_power)) return g;
    }
    throw std::logic_error("no primitive root found");  // unreachable for odd prime powers
}

// x = a (mod m), x = 1 (mod n) with gcd(m, n) = 1; result mod m*n
inline std::uint64_t crt_lift(std::uint64_t a, std::uint64_t m, std::uint64_t n) {
    if (n == 1) return a % m;
    // inverse of n mod m by extended Euclid
    std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(n % m);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t qq = r0 / r1;
        r0 -= qq * r1;
        std::swap(r0, r1);
        s0 -= qq * s1;
        std::swap(s0, s1);
    }
    std::int64_t inv = s0 % static_cast<std::int64_t>(m);
    if (inv < 0) inv += static_cast<std::int64_t>(m);
    const std::uint64_t am = a % m;
    const std::uint64_t k = (am + m - 1 % m) % m * static_cast<std::uint64_t>(inv) % m;
    return (1 + k * n) % (m * n);
}

}  // namespace detail

struct CyclicComponent {
    std::uint64_t generator;    // residue mod q; = chosen generator mod prime_power, = 1 mod q/prime_power
    std::uint64_t order;
    std::uint64_t prime_power;  // the factor of q this component lives in
};

// Cyclic decomposition of (Z/qZ)^* with exponent tables for every unit.
// Components are ordered by ascending prime; the 2-part (when 2^e, e >= 3,
// divides q) contributes the order-2 component generated by -1 first, then
// the component generated by 5.
class UnitGroup {
public:
    explicit UnitGroup(std::uint64_t q) : q_(q) {
        if (q == 0) throw std::invalid_argument("modulus must be a positive integer");
        for (auto [p, e] : detail::factorize(q)) {
            std::uint64_t m = 1;
            for (std::uint64_t i = 0; i < e; ++i) m *= p;
            if (p == 2) {
                if (e == 2) {
                    components_.push_back({detail::crt_lift(3, m, q / m), 2, m});
                } else if (e >= 3) {
                    components_.push_back({detail::crt_lift(m - 1, m, q / m), 2, m});
                    components_.push_back({detail::crt_lift(5, m, q / m), m / 4, m});
                }
                // e == 1: (Z/2Z)^* is trivial
            } else {
                const std::uint64_t g = detail::least_primitive_root(m);
                components_.push_back({detail::crt_lift(g, m, q / m), detail::euler_phi(m), m});
            }
        }
        phi_ = 1;
        for (const auto& c : components_) phi_ *= c.order;
        build_exponent_table();
    }

    std::uint64_t modulus() const { return q_; }
    std::uint64_t phi() const { return phi_; }
    const std::vector<CyclicComponent>& components() const { return components_; }

    bool is_unit(std::uint64_t residue) const { return std::gcd(residue, q_) == 1; }

    // exponent tuple of a unit residue with respect to the component generators
    std::span<const std::uint32_t> exponents_of(std::uint64_t residue) const {
        const std::int64_t row = row_of_[residue];
        if (row < 0) throw std::invalid_argument("residue is not a unit");
        return {exps_.data() + static_cast<std::size_t>(row) * components_.size(),
                components_.size()};
    }

private:
    void build_exponent_table() {
        const std::size_t r = components_.size();
        row_of_.assign(q_, -1);
        exps_.assign(phi_ * r, 0);
        std::vector<std::uint32_t> tuple(r, 0);
        for (std::uint64_t idx = 0; idx < phi_; ++idx) {
            std::uint64_t rem = idx;
            std::uint64_t u = 1 % q_;
            for (std::size_t i = r; i-- > 0;) {
                tuple[i] = static_cast<std::uint32_t>(rem % components_[i].order);
                rem /= components_[i].order;
                u = u * detail::pow_mod(components_[i].generator, tuple[i], q_) % q_;
            }
            if (row_of_[u] >= 0) throw std::logic_error("unit group decomposition is not direct");
            row_of_[u] = static_cast<std::int64_t>(idx);
            std::copy(tuple.begin(), tuple.end(), exps_.begin() + idx * r);
        }
    }

    std::uint64_t q_;
    std::uint64_t phi_;
    std::vector<CyclicComponent> components_;
    std::vector<std::int64_t> row_of_;  // residue -> row in exps_, -1 for non-units
    std::vector<std::uint32_t> exps_;
};

// Dirichlet character mod q as an exponent vector over the cyclic components
// of the unit group. Values are exact roots of unity (RootOfUnity); all
// classification data is computed once at construction. Immutable.
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::uint32_t> exponents)
        : group_(std::move(group)), exponents_(std::move(exponents)) {
        const auto& comps = group_->components();
        if (exponents_.size() != comps.size())
            throw std::invalid_argument("exponent vector length mismatch");
        for (std::size_t i = 0; i < comps.size(); ++i)
            exponents_[i] = static_cast<std::uint32_t>(exponents_[i] % comps[i].order);
        classify();
    }

    std::uint64_t modulus() const { return group_->modulus(); }
    const UnitGroup& group() const { return *group_; }
    std::shared_ptr<const UnitGroup> group_ptr() const { return group_; }
    const std::vector<std::uint32_t>& exponents() const { return exponents_; }

    // lexicographic position among all characters mod q (0 = principal)
    std::uint64_t index() const { return index_; }

    int parity() const { return parity_; }  // chi(-1)
    bool is_real() const { return real_; }
    bool is_principal() const { return principal_; }
    std::uint64_t conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == modulus(); }

    RootOfUnity value(std::int64_t n) const {
        const std::uint64_t q = modulus();
        std::int64_t r = n % static_cast<std::int64_t>(q);
        if (r < 0) r += static_cast<std::int64_t>(q);
        const std::uint64_t res = static_cast<std::uint64_t>(r);
        if (!group_->is_unit(res)) return RootOfUnity::zero();
        const auto e = group_->exponents_of(res);
        RootOfUnity v = RootOfUnity::one();
        const auto& comps = group_->components();
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (exponents_[i] == 0 || e[i] == 0) continue;
            v *= RootOfUnity::from_fraction(
                static_cast<std::int64_t>(exponents_[i]) * static_cast<std::int64_t>(e[i]),
                static_cast<std::int64_t>(comps[i].order));
        }
        return v;
    }

    Complex value_c(std::int64_t n) const { return value(n).to_complex(); }

    DirichletCharacter conjugate() const {
        std::vector<std::uint32_t> e(exponents_.size());
        const auto& comps = group_->components();
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = static_cast<std::uint32_t>((comps[i].order - exponents_[i]) % comps[i].order);
        return {group_, std::move(e)};
    }

    // chi^k as a character mod the same q (exponent vector scaled)
    DirichletCharacter power(std::uint64_t k) const {
        std::vector<std::uint32_t> e(exponents_.size());
        const auto& comps = group_->components();
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(exponents_[i]) * k % comps[i].order);
        return {group_, std::move(e)};
    }

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
    }

private:
    void classify() {
        const auto& comps = group_->components();
        index_ = 0;
        principal_ = true;
        real_ = true;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            index_ = index_ * comps[i].order + exponents_[i];
            if (exponents_[i] != 0) principal_ = false;
            if ((2ull * exponents_[i]) % comps[i].order != 0) real_ = false;
        }
        const std::uint64_t q = modulus();
        parity_ = value(static_cast<std::int64_t>(q) - 1).is_one() ? +1 : -1;
        conductor_ = q;
        for (std::uint64_t f = 1; f <= q; ++f) {
            if (q % f != 0) continue;
            bool induced = true;
            for (std::uint64_t a = 1; a <= q && induced; a += f)
                if (group_->is_unit(a % q) && !value(static_cast<std::int64_t>(a)).is_one())
                    induced = false;
            if (induced) {
                conductor_ = f;
                break;
            }
        }
    }

    std::shared_ptr<const UnitGroup> group_;
    std::vector<std::uint32_t> exponents_;
    std::uint64_t index_ = 0;
    std::uint64_t conductor_ = 1;
    int parity_ = +1;
    bool real_ = true;
    bool principal_ = true;
};

// All phi(q) characters mod q, ordered lexicographically by exponent vector.
// Index 0 is the principal character.
inline std::vector<DirichletCharacter> enumerate_characters(std::uint64_t q) {
    auto group = std::make_shared<const UnitGroup>(q);
    const auto& comps = group->components();
    std::vector<DirichletCharacter> chars;
    chars.reserve(group->phi());
    for (std::uint64_t idx = 0; idx < group->phi(); ++idx) {
        std::vector<std::uint32_t> e(comps.size(), 0);
        std::uint64_t rem = idx;
        for (std::size_t i = comps.size(); i-- > 0;) {
            e[i] = static_cast<std::uint32_t>(rem % comps[i].order);
            rem /= comps[i].order;
        }
        chars.emplace_back(group, std::move(e));
    }
    return chars;
}

inline DirichletCharacter character(std::uint64_t q, std::uint64_t index) {
    auto group = std::make_shared<const UnitGroup>(q);
    if (index >= group->phi()) throw std::invalid_argument("character index out of range");
    const auto& comps = group->components();
    std::vector<std::uint32_t> e(comps.size(), 0);
    std::uint64_t rem = index;
    for (std::size_t i = comps.size(); i-- > 0;) {
        e[i] = static_cast<std::uint32_t>(rem % comps[i].order);
        rem /= comps[i].order;
    }
    return {std::move(group), std::move(e)};
}

// tau(chi) = sum_{a mod q} chi(a) e^{2 pi i a / q}, direct q-term summation
inline Complex gauss_sum(const DirichletCharacter& chi) {
    const std::uint64_t q = chi.modulus();
    Complex tau = 0.0;
    for (std::uint64_t a = 1; a <= q; ++a) {
        const RootOfUnity v = chi.value(static_cast<std::int64_t>(a));
        if (v.is_zero()) continue;
        tau += v.to_complex() *
               std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(q));
    }
    return tau;
}

}  // namespace dlt

#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "dlt/analytic.hpp"
#include "dlt/series.hpp"
#include "test_support.hpp"

using dlt::Complex;
using dlt::EvalSettings;
using dlt::SPoint;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent zeta oracle: real Euler-Maclaurin at fixed M = 100 with its own
// rational Bernoulli coefficients and a fixed 5-term correction. Shares no
// code path with hurwitz_zeta.
double zeta_oracle_real(double s) {
    const int M = 100;
    const double b_over_fact[5] = {(1.0 / 6.0) / 2.0, (-1.0 / 30.0) / 24.0,
                                   (1.0 / 42.0) / 720.0, (-1.0 / 30.0) / 40320.0,
                                   (5.0 / 66.0) / 3628800.0};
    double acc = 0.0;
    for (int n = 1; n < M; ++n) acc += std::pow(n, -s);
    acc += std::pow(M, 1.0 - s) / (s - 1.0);
    acc += 0.5 * std::pow(M, -s);
    double poch = s;
    double mpow = std::pow(M, -s - 1.0);
    for (int j = 1; j <= 5; ++j) {
        acc += b_over_fact[j - 1] * poch * mpow;
        poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        mpow /= static_cast<double>(M) * M;
    }
    return acc;
}

// Alternating-series oracle for L(1, chi mod 4): averaged consecutive
// partial sums of 1 - 1/3 + 1/5 - ...
double leibniz_oracle(long terms) {
    double s = 0.0, sign = 1.0;
    for (long k = 0; k < terms; ++k) {
        s += sign / static_cast<double>(2 * k + 1);
        sign = -sign;
    }
    const double s_next = s + sign / static_cast<double>(2 * terms + 1);
    return 0.5 * (s + s_next);
}

}  // namespace

TEST_CASE("gamma function") {
    SECTION("gamma(1/2) = sqrt(pi) within 1e-12") {
        REQUIRE(std::abs(dlt::gamma({0.5, 0.0}) - std::sqrt(kPi)) < 1e-12);
    }
    SECTION("gamma(1) = 1") { REQUIRE(std::abs(dlt::gamma({1.0, 0.0}) - 1.0) < 1e-13); }
    SECTION("gamma(5) = 24 by the recurrence oracle") {
        double expect = 1.0;  // gamma(1)
        for (int k = 1; k < 5; ++k) expect *= k;
        REQUIRE(std::abs(dlt::gamma({5.0, 0.0}) - expect) < expect * 1e-10);
    }
    SECTION("poles at nonpositive integers") {
        REQUIRE_THROWS_AS(dlt::gamma({0.0, 0.0}), std::domain_error);
        REQUIRE_THROWS_AS(dlt::gamma({-3.0, 0.0}), std::domain_error);
    }
    SECTION("non-finite input rejected") {
        REQUIRE_THROWS_AS(dlt::gamma({std::nan(""), 0.0}), std::invalid_argument);
    }
    SECTION("reflection: gamma(s) gamma(1-s) = pi / sin(pi s)") {
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> re(-5.0, 5.0), im(0.1, 5.0);
        std::uniform_int_distribution<int> sign(0, 1);
        for (int i = 0; i < 100; ++i) {
            const double sigma = re(rng);
            const double t = (sign(rng) ? 1.0 : -1.0) * im(rng);
            const Complex z{sigma, t};
            const Complex lhs = dlt::gamma({sigma, t}) * dlt::gamma({1.0 - sigma, -t});
            const Complex rhs = kPi / std::sin(kPi * z);
            REQUIRE(std::abs(lhs - rhs) < 1e-8);
        }
    }
}

TEST_CASE("hurwitz zeta") {
    SECTION("zeta(2, 1) = pi^2/6 within 1e-12") {
        REQUIRE(std::abs(dlt::hurwitz_zeta({2.0, 0.0}, 1.0) - kPi * kPi / 6.0) < 1e-12);
    }
    SECTION("zeta(3, 1) agrees with compensated direct summation") {
        dlt::KahanAccumulator direct;
        for (long n = 2'000'000; n >= 1; --n)
            direct.add(1.0 / (static_cast<double>(n) * n * n));
        REQUIRE(std::abs(dlt::hurwitz_zeta({3.0, 0.0}, 1.0).real() - direct.sum) < 1e-10);
    }
    SECTION("zeta(2, 1/2) = pi^2/2 within 1e-10") {
        REQUIRE(std::abs(dlt::hurwitz_zeta({2.0, 0.0}, 0.5) - kPi * kPi / 2.0) < 1e-10);
    }
    SECTION("pole at s = 1") {
        REQUIRE_THROWS_AS(dlt::hurwitz_zeta({1.0, 0.0}, 0.5), std::domain_error);
    }
    SECTION("nonpositive a rejected") {
        REQUIRE_THROWS_AS(dlt::hurwitz_zeta({2.0, 0.0}, 0.0), std::invalid_argument);
        REQUIRE_THROWS_AS(dlt::hurwitz_zeta({2.0, 0.0}, -1.0), std::invalid_argument);
    }
    SECTION("recurrence zeta(s, a) - zeta(s, a+1) = a^{-s}") {
        std::mt19937_64 rng(13);
        std::uniform_real_distribution<double> sig(-1.0, 3.0), tt(-20.0, 20.0), aa(0.05, 1.0);
        for (int i = 0; i < 60; ++i) {
            SPoint s{sig(rng), tt(rng)};
            if (std::abs(s.sigma - 1.0) < 0.05 && std::abs(s.t) < 0.05) continue;
            const double a = aa(rng);
            const Complex lhs = dlt::hurwitz_zeta(s, a) - dlt::hurwitz_zeta(s, a + 1.0);
            const Complex rhs = std::exp(-s.value() * std::log(a));
            REQUIRE(std::abs(lhs - rhs) < 1e-10);
        }
    }
}

TEST_CASE("l_eval") {
    SECTION("L(2, principal mod 1) = pi^2/6 within 1e-10") {
        REQUIRE(std::abs(dlt::l_eval(dlt::character(1, 0), {2.0, 0.0}) - kPi * kPi / 6.0) <
                1e-10);
    }
    SECTION("L(1, nonprincipal mod 4) = pi/4 against the alternating oracle") {
        const double oracle = leibniz_oracle(500'000);
        REQUIRE(std::abs(oracle - kPi / 4.0) < 1e-10);  // oracle sanity
        const Complex value = dlt::l_eval(dlt::character(4, 1), {1.0, 0.0});
        REQUIRE(std::abs(value - oracle) < 1e-8);
        REQUIRE(std::abs(value.imag()) < 1e-12);
    }
    SECTION("L(1/2, principal mod 1) matches the independent fixed-shift oracle") {
        const double oracle = zeta_oracle_real(0.5);
        REQUIRE(std::abs(dlt::l_eval(dlt::character(1, 0), {0.5, 0.0}) - oracle) < 1e-5);
    }
    SECTION("principal characters refuse s = 1") {
        REQUIRE_THROWS_AS(dlt::l_eval(dlt::character(1, 0), {1.0, 0.0}), std::domain_error);
        REQUIRE_THROWS_AS(dlt::l_eval(dlt::character(4, 0), {1.0, 0.0}), std::domain_error);
    }
    SECTION("conjugation symmetry L(conj s, conj chi) = conj L(s, chi)") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> sig(0.2, 2.5), tt(-10.0, 10.0);
        for (std::uint64_t q = 1; q <= 10; ++q) {
            for (const auto& chi : dlt::enumerate_characters(q)) {
                for (int i = 0; i < 3; ++i) {
                    SPoint s{sig(rng), tt(rng)};
                    const Complex lhs = dlt::l_eval(chi.conjugate(), {s.sigma, -s.t});
                    const Complex rhs = std::conj(dlt::l_eval(chi, s));
                    REQUIRE(std::abs(lhs - rhs) < 1e-10);
                }
            }
        }
    }
    SECTION("continuation agrees with direct summation at Re(s) = 2") {
        const SPoint s{2.0, 0.7};
        for (std::uint64_t q = 1; q <= 20; ++q) {
            for (const auto& chi : dlt::enumerate_characters(q)) {
                const Complex a = dlt::l_eval(chi, s);
                const Complex b = dlt::l_partial_sum(chi, s, 1'000'000);
                REQUIRE(std::abs(a - b) < 1e-5);
            }
        }
    }
}

TEST_CASE("l_partial_sum") {
    SECTION("N = 1 gives chi(1) = 1") {
        for (std::uint64_t q : {1ull, 4ull, 7ull}) {
            for (const auto& chi : dlt::enumerate_characters(q)) {
                REQUIRE(std::abs(dlt::l_partial_sum(chi, {0.3, -2.0}, 1) - Complex{1.0, 0.0}) <
                        1e-15);
            }
        }
    }
    SECTION("chi mod 4 at s = 1: averaged million-term sums reach pi/4") {
        const auto chi = dlt::character(4, 1);
        const Complex s_n = dlt::l_partial_sum(chi, {1.0, 0.0}, 1'000'000);
        const Complex s_n1 = dlt::l_partial_sum(chi, {1.0, 0.0}, 1'000'001);
        const Complex avg = 0.5 * (s_n + s_n1);
        REQUIRE(std::abs(avg - kPi / 4.0) < 1e-5);
    }
    SECTION("principal mod 1 at s = 2: tail matches the integral bound") {
        const double s_n = dlt::l_partial_sum(dlt::character(1, 0), {2.0, 0.0}, 10'000).real();
        REQUIRE(std::abs(s_n - (kPi * kPi / 6.0 - 1.0 / 10'000.0)) < 2e-4);
    }
    SECTION("N = 0 rejected") {
        REQUIRE_THROWS_AS(dlt::l_partial_sum(dlt::character(1, 0), {2.0, 0.0}, 0),
                          std::invalid_argument);
    }
}

TEST_CASE("functional equation") {
    SECTION("residual at s = 0.7 + 1.3i for the nonprincipal chi mod 4") {
        const auto chi = dlt::character(4, 1);
        const SPoint s{0.7, 1.3};
        const Complex lhs = dlt::l_eval(chi, {1.0 - s.sigma, -s.t});
        const Complex rhs = dlt::functional_equation_rhs(chi, s, dlt::FeVariant::general);
        REQUIRE(std::abs(lhs - rhs) < 1e-8);
    }
    SECTION("even variant equals the general form for even primitive characters") {
        std::mt19937_64 rng(31);
        std::uniform_real_distribution<double> sig(0.1, 0.9), tt(-3.0, 3.0);
        for (const auto& chi : {dlt::character(1, 0), dlt::character(5, 2)}) {
            REQUIRE(chi.parity() == +1);
            for (int i = 0; i < 20; ++i) {
                const SPoint s{sig(rng), tt(rng)};
                const Complex a = dlt::functional_equation_rhs(chi, s, dlt::FeVariant::general);
                const Complex b = dlt::functional_equation_rhs(chi, s, dlt::FeVariant::even);
                REQUIRE(std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a)));
            }
        }
    }
    SECTION("odd variant equals the general form for the odd chi mod 4") {
        std::mt19937_64 rng(32);
        std::uniform_real_distribution<double> sig(0.1, 0.9), tt(-3.0, 3.0);
        const auto chi = dlt::character(4, 1);
        for (int i = 0; i < 20; ++i) {
            const SPoint s{sig(rng), tt(rng)};
            const Complex a = dlt::functional_equation_rhs(chi, s, dlt::FeVariant::general);
            const Complex b = dlt::functional_equation_rhs(chi, s, dlt::FeVariant::odd);
            REQUIRE(std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a)));
        }
    }
    SECTION("variant/parity mismatch rejected") {
        REQUIRE_THROWS_AS(
            dlt::functional_equation_rhs(dlt::character(4, 1), {0.5, 0.0}, dlt::FeVariant::even),
            std::invalid_argument);
        REQUIRE_THROWS_AS(
            dlt::functional_equation_rhs(dlt::character(5, 2), {0.5, 0.0}, dlt::FeVariant::odd),
            std::invalid_argument);
    }
    SECTION("imprimitive characters rejected unless bypassed") {
        const auto principal8 = dlt::character(8, 0);
        REQUIRE_THROWS_AS(
            dlt::functional_equation_rhs(principal8, {0.5, 1.0}, dlt::FeVariant::general),
            std::invalid_argument);
        const Complex bypass = dlt::functional_equation_rhs(
            principal8, {0.5, 1.0}, dlt::FeVariant::general, /*allow_imprimitive=*/true);
        REQUIRE(std::isfinite(bypass.real()));
        REQUIRE(std::isfinite(bypass.imag()));
    }
}

TEST_CASE("settings validation") {
    EvalSettings s;
    s.euler_maclaurin_shift = 5;
    REQUIRE_THROWS_AS(s.validate(), std::invalid_argument);
    s = {};
    s.bernoulli_terms = 7;
    REQUIRE_THROWS_AS(s.validate(), std::invalid_argument);
    s = {};
    s.target_tolerance = 0.0;
    REQUIRE_THROWS_AS(s.validate(), std::invalid_argument);
    s = {};
    REQUIRE_NOTHROW(s.validate());
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dlt/zeros.hpp"
#include "test_support.hpp"

using dlt::ZeroRecord;

namespace {

// Independent ordinate refinement: bisection on the sign change of the
// completed real function Z(t) = Re(e^{i theta(t)} zeta(1/2 + it)).
double bisect_hardy_z(double lo, double hi) {
    double flo = dlt::hardy_z(lo);
    for (int i = 0; i < 60 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = dlt::hardy_z(mid);
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("scan finds the first zeta zero") {
    const auto chi = dlt::character(1, 0);
    const auto zeros = dlt::scan_critical_line(chi, 14.0, 15.0, 0.01);
    REQUIRE(zeros.size() == 1);
    const ZeroRecord z = zeros[0];
    REQUIRE(z.q == 1);
    REQUIRE(z.index == 0);
    REQUIRE(z.residual < 1e-8);
    REQUIRE(z.width < 1e-8);
    // independent confirmation: sign change of the completed function and
    // bisection refinement of that sign change
    REQUIRE(dlt::hardy_z(z.t - 0.05) * dlt::hardy_z(z.t + 0.05) < 0.0);
    const double t_bisect = bisect_hardy_z(z.t - 0.05, z.t + 0.05);
    REQUIRE(std::abs(z.t - t_bisect) < 1e-6);
    REQUIRE(std::abs(z.t - 14.134725) < 1e-5);
}

TEST_CASE("scan of a zero-free stretch returns nothing") {
    const auto chi = dlt::character(1, 0);
    const auto zeros = dlt::scan_critical_line(chi, 1.0, 2.0, 0.01);
    REQUIRE(zeros.empty());
    // the grid itself stays well above the candidate threshold
    double grid_min = 1e300;
    for (double t = 1.0; t <= 2.0; t += 0.01)
        grid_min = std::min(grid_min, std::abs(dlt::l_eval(chi, {0.5, t})));
    REQUIRE(grid_min > 0.5);
}

TEST_CASE("scan finds the first zero of the mod-4 character") {
    const auto chi = dlt::character(4, 1);
    const auto zeros = dlt::scan_critical_line(chi, 5.0, 7.0, 0.01);
    REQUIRE(zeros.size() == 1);
    REQUIRE(zeros[0].residual < 1e-6);
    REQUIRE(zeros[0].width < 1e-8);
    SECTION("conjugate pair: -t is a zero of the same real character") {
        const double t = zeros[0].t;
        const auto mirrored = dlt::scan_critical_line(chi, -t - 0.1, -t + 0.1, 0.01);
        REQUIRE(mirrored.size() == 1);
        REQUIRE(std::abs(mirrored[0].t + t) <
                std::max(zeros[0].width, mirrored[0].width) + 1e-9);
    }
}

TEST_CASE("scan determinism") {
    const auto chi = dlt::character(1, 0);
    const auto a = dlt::scan_critical_line(chi, 14.0, 15.0, 0.01);
    const auto b = dlt::scan_critical_line(chi, 14.0, 15.0, 0.01);
    dlt::ScanSettings par;
    par.threads = 4;
    const auto c = dlt::scan_critical_line(chi, 14.0, 15.0, 0.01, par);
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() == c.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].t == b[i].t);
        REQUIRE(a[i].residual == b[i].residual);
        REQUIRE(a[i].t == c[i].t);
        REQUIRE(a[i].residual == c[i].residual);
    }
    SECTION("re-evaluation reproduces the stored residual") {
        for (const auto& z : a)
            REQUIRE(std::abs(std::abs(dlt::l_eval(chi, {0.5, z.t})) - z.residual) < 1e-9);
    }
}

TEST_CASE("scan argument validation") {
    const auto chi = dlt::character(1, 0);
    REQUIRE_THROWS_AS(dlt::scan_critical_line(chi, 2.0, 1.0, 0.01), std::invalid_argument);
    REQUIRE_THROWS_AS(dlt::scan_critical_line(chi, 1.0, 2.0, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(dlt::scan_critical_line(chi, 1.0, 2.0, 1.5), std::invalid_argument);
}

TEST_CASE("sigma profiles") {
    const auto chi = dlt::character(1, 0);
    SECTION("argmin at the first zeta ordinate is 0.5 within one grid step") {
        const auto prof = dlt::sigma_scan(chi, 14.134725141734694, dlt::default_sigma_grid());
        REQUIRE(std::abs(prof.argmin_sigma - 0.5) <= 0.01 + 1e-12);
    }
    SECTION("away from zeros the profile stays above 0.1") {
        const auto prof = dlt::sigma_scan(chi, 3.0, dlt::default_sigma_grid());
        REQUIRE(prof.abs_l[prof.argmin_index] > 0.1);
    }
    SECTION("profiles are strictly positive for every chi, q <= 20") {
        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> td(1.0, 30.0);
        std::vector<double> grid;
        for (int k = 1; k <= 9; ++k) grid.push_back(0.1 * k - 0.05);
        for (std::uint64_t q = 1; q <= 20; ++q) {
            for (const auto& c : dlt::enumerate_characters(q)) {
                const auto prof = dlt::sigma_scan(c, td(rng), grid);
                for (double v : prof.abs_l) REQUIRE(v > 0.0);
            }
        }
    }
    SECTION("grid validation") {
        REQUIRE_THROWS_AS(dlt::sigma_scan(chi, 1.0, {0.1, 0.2, 0.3}), std::invalid_argument);
        std::vector<double> bad(dlt::default_sigma_grid());
        bad.front() = 0.0;
        REQUIRE_THROWS_AS(dlt::sigma_scan(chi, 1.0, bad), std::invalid_argument);
        std::vector<double> unsorted{0.1, 0.2, 0.15, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
        REQUIRE_THROWS_AS(dlt::sigma_scan(chi, 1.0, unsorted), std::invalid_argument);
    }
}

TEST_CASE("ordinate spacing probe") {
    SECTION("real zeta ordinates violate the integer spacing law") {
        const auto zeros = dlt::scan_critical_line(dlt::character(1, 0), 14.0, 22.0, 0.01);
        REQUIRE(zeros.size() == 2);
        const auto table = dlt::ordinate_spacing_probe(zeros, 10);
        REQUIRE(table.size() == 9);
        bool all_small = true;
        for (const auto& e : table)
            if (e.frac >= 0.01) all_small = false;
        REQUIRE_FALSE(all_small);
    }
    SECTION("synthetic pair built to satisfy the law at n = 2") {
        const double delta = 2.0 * std::numbers::pi / std::log(2.0);
        std::vector<ZeroRecord> zeros{{1, 0, 10.0, 0.0, 0.0}, {1, 0, 10.0 + delta, 0.0, 0.0}};
        const auto table = dlt::ordinate_spacing_probe(zeros, 3);
        REQUIRE(table[0].n == 2);
        REQUIRE(table[0].frac < 1e-12);
        REQUIRE(table[1].n == 3);
        REQUIRE(table[1].frac > 0.1);  // ln 3 / ln 2 is irrational
    }
    SECTION("input validation") {
        std::vector<ZeroRecord> one{{1, 0, 14.1, 0.0, 0.0}};
        REQUIRE_THROWS_AS(dlt::ordinate_spacing_probe(one, 5), std::invalid_argument);
        std::vector<ZeroRecord> two{{1, 0, 14.1, 0.0, 0.0}, {1, 0, 21.0, 0.0, 0.0}};
        REQUIRE_THROWS_AS(dlt::ordinate_spacing_probe(two, 1), std::invalid_argument);
    }
}

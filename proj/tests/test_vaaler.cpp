#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "floorsum/sums.hpp"
#include "floorsum/vaaler.hpp"

using namespace floorsum;
namespace va = floorsum::vaaler;

TEST_CASE("coefficient structure at H=1") {
    auto v = va::build_vaaler(1);
    REQUIRE(v.gamma_pos.size() == 1);
    CHECK(v.gamma(-1) == std::conj(v.gamma(1)));
    CHECK(std::fabs(v.gamma(1).real()) <= 1e-15); // purely imaginary
    CHECK_THROWS_AS((void)v.gamma(0), UsageError);
    CHECK_THROWS_AS((void)v.gamma(2), UsageError);
}

TEST_CASE("coefficient decay |h gamma(h)| <= 1") {
    for (int H : {1, 4, 16, 64, 257}) {
        auto v = va::build_vaaler(H);
        for (int h = 1; h <= H; ++h) {
            REQUIRE(h * std::abs(v.gamma(h)) <= 1.0);
            REQUIRE(std::abs(v.gamma(h)) <= 1.0 / h);
        }
    }
}

TEST_CASE("psi* is odd, periodic, and real") {
    auto v = va::build_vaaler(16);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        double x = (rng() % 2'000'000) / 1e6 - 1.0;
        REQUIRE(std::fabs(va::psi_star_eval(v, x) + va::psi_star_eval(v, -x)) <=
                1e-12);
        REQUIRE(std::fabs(va::psi_star_eval(v, x + 1.0) -
                          va::psi_star_eval(v, x)) <= 1e-12);
    }
    CHECK(std::fabs(va::psi_star_eval(v, 0.0)) <= 1e-15);
}

TEST_CASE("bound verification on a dense grid") {
    for (int H : {4, 16, 64}) {
        auto r = va::verify_bound(H, 10'000);
        CHECK(r.max_violation <= 1e-12);
        CHECK(r.min_rhs >= 0.0);
        CHECK(r.max_h_gamma <= 1.0);
        // the bound under the (1 - |h|/H) weights fails at integers by
        // exactly 1/(2H+2); kept as a report, not an assertion of validity
        CHECK(r.max_violation_alt_weight ==
              doctest::Approx(1.0 / (2.0 * H + 2.0)).epsilon(1e-9));
    }
}

TEST_CASE("approximation error decays in H away from the jumps") {
    // exclusion sized by the coarser approximation: 1/(4*4) around integers
    auto max_err = [](int H) {
        auto v = va::build_vaaler(H);
        double worst = 0.0;
        const int grid = 10'000;
        for (int j = 0; j < grid; ++j) {
            double x = static_cast<double>(j) / grid;
            if (x < 1.0 / 16 || x > 1.0 - 1.0 / 16) continue;
            worst = std::max(worst,
                             std::fabs(va::psi_star_eval(v, x) - psi(x)));
        }
        return worst;
    };
    double e4 = max_err(4);
    double e64 = max_err(64);
    CHECK(e64 < e4);
}

TEST_CASE("usage errors") {
    CHECK_THROWS_AS((void)va::build_vaaler(0), UsageError);
    CHECK_THROWS_AS((void)va::verify_bound(0, 1000), UsageError);
    CHECK_THROWS_AS((void)va::verify_bound(4, 99), UsageError);
}

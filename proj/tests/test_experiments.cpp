#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "floorsum/experiments.hpp"
#include "floorsum/sums.hpp"

using namespace floorsum;
using arith::ArithFunc;
namespace ex = floorsum::experiments;

TEST_CASE("epsilon2 synthetic plug-in and domain") {
    CHECK(ex::epsilon2_from_logs(1.0, 2.0) == doctest::Approx(31.0).epsilon(1e-12));
    CHECK_THROWS_AS((void)ex::epsilon2(10.0), DomainError);
    CHECK_THROWS_AS((void)ex::epsilon2(1.0), DomainError);

    // decreasing on a log grid of large x
    double prev = 1e300;
    for (double lg = 10; lg <= 30; lg += 1.0) {
        double v = ex::epsilon2(std::pow(10.0, lg));
        REQUIRE(v < prev);
        prev = v;
    }
}

TEST_CASE("log-spaced grid") {
    auto xs = ex::log_spaced(100, 10'000, 9);
    CHECK(xs.front() == 100);
    CHECK(xs.back() == 10'000);
    for (size_t i = 1; i < xs.size(); ++i) REQUIRE(xs[i] > xs[i - 1]);
    CHECK_THROWS_AS((void)ex::log_spaced(5, 100, 6), UsageError);
    CHECK_THROWS_AS((void)ex::log_spaced(100, 10'000, 3), UsageError);
}

TEST_CASE("degenerate study for f = one") {
    auto rep = ex::scaling_study(ArithFunc::one(), 10, 1'000'000, 6);
    CHECK(rep.fit.degenerate);
    for (const auto& s : rep.samples) {
        REQUIRE(std::get<int64_t>(s.S) == static_cast<int64_t>(s.x));
        REQUIRE(s.E == 0.0);
    }
}

TEST_CASE("mu_2 study: samples consistent and spot-checked against naive") {
    auto rep = ex::scaling_study(ArithFunc::mu_k(2), 1000, 100'000, 8);
    REQUIRE(rep.samples.size() >= 4);
    CHECK(rep.c_f.abs_error_bound <= 1e-9);
    uint64_t prev_x = 0;
    for (const auto& s : rep.samples) {
        REQUIRE(s.x > prev_x);
        prev_x = s.x;
        REQUIRE(s.E == s.S_double() - s.Cx);
    }
    // invariant: S reproduced by eval_naive for x <= 1e7
    for (size_t i : {size_t(0), rep.samples.size() / 2, rep.samples.size() - 1}) {
        const auto& s = rep.samples[i];
        REQUIRE(std::get<int64_t>(s.S) ==
                eval_naive(ArithFunc::mu_k(2), s.x).int_value());
    }
    CHECK_FALSE(rep.fit.degenerate);

    // reference ladder for k=2
    REQUIRE(rep.references.size() == 4);
    CHECK(rep.references[0].exact == "11/29");
    CHECK(rep.references[1].exact == "2/5");
    CHECK(rep.references[2].exact == "1919/4268");
    CHECK(rep.references[3].exact == "152/401");
}

TEST_CASE("power family study") {
    auto flat = ex::power_family_study(1.0, 10, 100'000, 6);
    CHECK(flat.fit.degenerate); // f == 1 so E == 0 identically

    auto rep = ex::power_family_study(0.5, 1000, 100'000, 8);
    CHECK_FALSE(rep.fit.degenerate);
    REQUIRE(rep.references.size() == 1);
    CHECK(rep.references[0].exact == "1/2"); // (1 + 0.5)/3
    CHECK(rep.fit.slope <= 0.55);
}

TEST_CASE("g_sweep rows and slope") {
    exppair::ExponentPair p{exppair::Rational(1, 2), exppair::Rational(1, 2)};
    auto single = ex::g_sweep(ArithFunc::one(), 10.0, {1}, 0.0, p);
    REQUIRE(single.rows.size() == 1);
    CHECK(single.rows[0].absG == doctest::Approx(0.5).epsilon(1e-12));

    std::vector<uint64_t> Ds{100, 215, 464, 1000, 2154, 4641, 10'000};
    auto rep = ex::g_sweep(ArithFunc::mu_k(2), 1e8, Ds, 0.0, p);
    REQUIRE(rep.rows.size() == Ds.size());
    for (const auto& row : rep.rows) {
        REQUIRE(row.absG <= static_cast<double>(row.D));
        REQUIRE(row.bound_xkappa >= row.bound_plain);
    }
    CHECK_FALSE(rep.fit.degenerate);
    CHECK(rep.fit.slope < 1.0); // cancellation in psi
}

TEST_CASE("comparison table ladder") {
    auto t2 = ex::comparison_table(2);
    REQUIRE(t2.size() == 4);
    CHECK(t2[0].exact == "152/401");
    CHECK(t2[1].exact == "11/29");
    CHECK(t2[2].exact == "2/5");
    CHECK(t2[3].exact == "1919/4268");
    for (size_t i = 1; i < t2.size(); ++i)
        REQUIRE(t2[i].decimal > t2[i - 1].decimal);

    auto t3 = ex::comparison_table(3);
    REQUIRE(t3.size() == 2);
    CHECK(t3[0].exact == "1/3");
    CHECK(t3[1].exact == "2/5"); // theta_3
}

TEST_CASE("serialization is deterministic and schema-shaped") {
    auto rep = ex::scaling_study(ArithFunc::mu_k(2), 1000, 50'000, 6);
    std::string csv1 = ex::to_csv(rep);
    std::string csv2 = ex::to_csv(rep);
    CHECK(csv1 == csv2);
    CHECK(csv1.rfind("x,S,Cx,E,log_x,log_absE\n", 0) == 0);
    CHECK(csv1.find("\r") == std::string::npos); // LF endings

    std::string js = ex::to_json(rep);
    auto j = nlohmann::json::parse(js);
    CHECK(j["f"] == "mu_2");
    CHECK(j["c_f"].contains("value"));
    CHECK(j["c_f"].contains("bound"));
    CHECK(j["c_f"].contains("method"));
    CHECK(j["samples"].size() == rep.samples.size());
    CHECK(j["fit"].contains("slope"));
    CHECK(j["fit"]["degenerate"] == false);
    CHECK(j["references"].size() == 4);

    // degenerate fit serializes as nulls
    auto one_rep = ex::scaling_study(ArithFunc::one(), 10, 10'000, 5);
    auto j1 = nlohmann::json::parse(ex::to_json(one_rep));
    CHECK(j1["fit"]["degenerate"] == true);
    CHECK(j1["fit"]["slope"].is_null());

    // CSV of a degenerate report still has one row per sample
    std::string csv_one = ex::to_csv(one_rep);
    size_t rows = 0;
    for (char c : csv_one) rows += c == '\n';
    CHECK(rows == one_rep.samples.size() + 1);
}

TEST_CASE("mobius scaling is rejected: no C_f at 1e-9") {
    CHECK_THROWS_AS((void)ex::scaling_study(ArithFunc::mobius(), 10, 1000, 4),
                    CapabilityError);
}

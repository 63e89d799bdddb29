#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"

using namespace polyent;
using testing::random_pmf;

namespace {
const Pmf<double> kCoin{0.5, 0.5};
}

TEST_CASE("dyadic expansion: frozen desk values") {
    auto report = dyadic_expansion(kCoin, kCoin, {2.0, 1.0});
    CHECK(report.printed == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(report.direct == doctest::Approx(0.75).epsilon(1e-12));

    report = dyadic_expansion(kCoin, kCoin, {2.0, 0.5});
    // H_{2,.5}(coin) = (sqrt2 - .5)/1.5, H_{2,1} = .5, H_{.5,1} = 2(sqrt2 - 1)
    const double h = (std::sqrt(2.0) - 0.5) / 1.5;
    const double expected = 2 * h - h * 0.5 + 0.5 * h * (2 * (std::sqrt(2.0) - 1));
    CHECK(report.printed == doctest::Approx(expected).epsilon(1e-12));
    CHECK(report.printed == doctest::Approx((2.0 - 0.25) / 1.5).epsilon(1e-12));
    CHECK(report.direct == doctest::Approx((2.0 - 0.25) / 1.5).epsilon(1e-12));
}

TEST_CASE("at q = r = 1 every nonlinear term vanishes") {
    std::mt19937 rng(21);
    const auto yi = random_pmf(rng, 2, 6);
    const auto yj = random_pmf(rng, 2, 6);
    const auto report = dyadic_expansion(yi, yj, {1.0, 1.0});
    for (const auto& [name, value] : report.term_breakdown)
        if (name != "marginal_sum") CHECK(std::abs(value) <= 1e-12);
    CHECK(std::abs(report.printed - report.direct) <= 1e-12);
    CHECK(std::abs(report.derived - report.direct) <= 1e-12);
}

TEST_CASE("dyadic printed and derived forms are exact over random inputs") {
    std::mt19937 rng(22);
    std::uniform_real_distribution<double> param(0.2, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto yi = random_pmf(rng, 1, 6);
        const auto yj = random_pmf(rng, 1, 6);
        const auto report = dyadic_expansion(yi, yj, {param(rng), param(rng)});
        CHECK(report.max_abs_discrepancy_printed() <= 1e-9);
        CHECK(report.max_abs_discrepancy_derived() <= 1e-9);
    }
}

TEST_CASE("triadic expansion: frozen desk values") {
    auto report = triadic_expansion(kCoin, kCoin, kCoin, {2.0, 1.0});
    CHECK(report.direct == doctest::Approx(0.875).epsilon(1e-12));
    CHECK(report.derived == doctest::Approx(0.875).epsilon(1e-12));

    report = triadic_expansion(kCoin, kCoin, kCoin, {2.0, 0.5});
    const double expected = (2.0 * std::sqrt(2.0) - 0.125) / 1.5;
    CHECK(report.derived == doctest::Approx(expected).epsilon(1e-12));
    CHECK(report.direct == doctest::Approx(expected).epsilon(1e-12));
    // printed transcription is recorded with its gap, never corrected
    CHECK(report.max_abs_discrepancy_printed() ==
          doctest::Approx(std::abs(report.printed - report.direct)));
}

TEST_CASE("derived triadic expansion is exact over random inputs") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> param(0.2, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto yi = random_pmf(rng, 1, 6);
        const auto yj = random_pmf(rng, 1, 6);
        const auto yl = random_pmf(rng, 1, 6);
        const auto report = triadic_expansion(yi, yj, yl, {param(rng), param(rng)});
        CHECK(report.max_abs_discrepancy_derived() <= 1e-9);
    }
}

TEST_CASE("direct and derived values are exchange symmetric") {
    std::mt19937 rng(24);
    std::uniform_real_distribution<double> param(0.2, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_pmf(rng, 2, 5);
        const auto b = random_pmf(rng, 2, 5);
        const auto c = random_pmf(rng, 2, 5);
        const EntropyParams<double> params{param(rng), param(rng)};
        const auto abc = triadic_expansion(a, b, c, params);
        const auto cab = triadic_expansion(c, a, b, params);
        CHECK(std::abs(abc.direct - cab.direct) <= 1e-12);
        CHECK(std::abs(abc.derived - cab.derived) <= 1e-12);
    }
}

TEST_CASE("triadic-product group is non-negative on the q = r limit branch") {
    std::mt19937 rng(25);
    for (double q : {0.3, 0.5, 2.0, 3.0}) {
        const auto yi = random_pmf(rng, 2, 5);
        const auto yj = random_pmf(rng, 2, 5);
        const auto yl = random_pmf(rng, 2, 5);
        const auto report = triadic_expansion(yi, yj, yl, {q, q});
        for (const auto& [name, value] : report.term_breakdown)
            if (name == "printed:(1-q)^2") CHECK(value >= 0.0);
    }
}

TEST_CASE("audit_expansions covers the grid and rejects other arities") {
    const FactoredSystem<double> pair({kCoin, kCoin});
    std::vector<std::pair<double, double>> grid;
    for (double q : {0.5, 1.0, 2.0})
        for (double r : {0.5, 1.0, 2.0}) grid.emplace_back(q, r);

    const auto reports = audit_expansions(pair, grid);
    REQUIRE(reports.size() == 9);
    for (const auto& report : reports)
        CHECK(report.max_abs_discrepancy_printed() <= 1e-9);

    const FactoredSystem<double> triple({kCoin, kCoin, kCoin});
    const auto at_unity = audit_expansions(triple, {{1.0, 1.0}});
    REQUIRE(at_unity.size() == 1);
    CHECK(at_unity[0].max_abs_discrepancy_printed() <= 1e-12);
    CHECK(at_unity[0].max_abs_discrepancy_derived() <= 1e-12);

    const FactoredSystem<double> four({kCoin, kCoin, kCoin, kCoin});
    CHECK_THROWS_AS(audit_expansions(four, grid), UnsupportedArity);
}

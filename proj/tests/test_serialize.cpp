#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <variant>

#include "test_support.hpp"

using namespace polyent;
using testing::random_pmf;
using testing::random_system;

TEST_CASE("schema auto-detection by shape") {
    CHECK(std::holds_alternative<Pmf<double>>(
        parse_distribution(nlohmann::json::parse("[0.5, 0.5]"))));
    CHECK(std::holds_alternative<FactoredSystem<double>>(
        parse_distribution(nlohmann::json::parse(R"({"marginals": [[0.5,0.5],[0.3,0.7]]})"))));
    CHECK(std::holds_alternative<JointTable<double>>(parse_distribution(
        nlohmann::json::parse(R"({"shape": [2,2], "probs": [0.25,0.25,0.25,0.25]})"))));
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(parse_distribution(nlohmann::json::parse("[]")), Error);
    CHECK_THROWS_AS(parse_distribution(nlohmann::json::parse(R"({"foo": 1})")), Error);
    CHECK_THROWS_AS(parse_distribution(nlohmann::json::parse("[0.5, 0.6]")), NotNormalized);
    CHECK_THROWS_AS(
        parse_distribution(nlohmann::json::parse(R"({"shape": [3], "probs": [0.5,0.5]})")),
        Error);
    CHECK_THROWS_AS(parse_distribution(nlohmann::json::parse(R"([0.5, "x"])")), Error);
}

TEST_CASE("round trip preserves every distribution kind bit-exactly") {
    std::mt19937 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        const auto pmf = random_pmf(rng, 1, 8);
        const auto back =
            std::get<Pmf<double>>(parse_distribution(to_json(pmf)));
        CHECK((back.probs() == pmf.probs()).all());

        const auto system = random_system(rng, 3, 1, 5);
        const auto system_back =
            std::get<FactoredSystem<double>>(parse_distribution(to_json(system)));
        REQUIRE(system_back.arity() == system.arity());
        for (std::size_t m = 0; m < system.arity(); ++m)
            CHECK((system_back.marginal(m).probs() == system.marginal(m).probs()).all());

        const auto joint = materialize(system);
        const auto joint_back =
            std::get<JointTable<double>>(parse_distribution(to_json(joint)));
        CHECK(joint_back.shape() == joint.shape());
        CHECK((joint_back.probs() == joint.probs()).all());
    }
}

TEST_CASE("report serialization carries the documented fields") {
    const FactoredSystem<double> coins({{0.5, 0.5}, {0.5, 0.5}});
    const auto report = polyadic_synergy(coins, {2.0, 1.0});
    const auto doc = to_json(report);
    CHECK(doc.at("value").get<double>() == doctest::Approx(-0.25));
    CHECK(doc.at("classification") == "redundant");
    CHECK(doc.at("method") == "direct");
    CHECK(doc.at("arity") == 2);

    const auto info = to_json(mutual_information(materialize(coins), 2.0));
    CHECK(info.at("measure") == "mutual_information");
    CHECK(info.at("log_base") == 2.0);
}

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "cocofiso/core.hpp"
#include "support/fixtures.hpp"

using namespace cocofiso;

TEST_CASE("validate passes the bundled student matrices with the weight waiver") {
    // the institutional weights add to 1.01, so the waiver is required
    ValidationOptions opts;
    opts.paper_exact_weights = true;
    CHECK(validate(fixtures::l1_matrix(), opts).passed());
    CHECK(validate(fixtures::l2_matrix(), opts).passed());

    const auto strict = validate(fixtures::l1_matrix());
    REQUIRE_FALSE(strict.passed());
    CHECK(strict.violations.front().kind == ViolationKind::WeightSumDrift);
}

TEST_CASE("validate flags weight-sum drift") {
    const auto matrix = fixtures::make_matrix({"A", "B"}, {0.5, 0.4}, {1, 2, 3, 4});
    const auto report = validate(matrix);
    REQUIRE_FALSE(report.passed());
    CHECK(report.violations.size() == 1);
    CHECK(report.violations.front().kind == ViolationKind::WeightSumDrift);
    CHECK(report.summary().find("weight-sum") != std::string::npos);
}

TEST_CASE("validate requires at least two alternatives") {
    const auto matrix = fixtures::make_matrix({"A"}, {1.0}, {1});
    const auto report = validate(matrix);
    REQUIRE_FALSE(report.passed());
    CHECK(report.violations.front().kind == ViolationKind::DimensionMismatch);
    CHECK(report.violations.front().detail.find("m >= 2") != std::string::npos);
}

TEST_CASE("validate collects every violation kind") {
    std::vector<CriterionSpec> criteria = {
        {"C1", Direction::Benefit, 0.6},
        {"C1", Direction::Cost, -0.1}, // duplicate name, non-positive weight
    };
    const DecisionMatrix matrix({"A", "B", "A"}, criteria,
                                {1.0, -2.0, 3.0, std::nan(""), 5.0, 6.0});
    const auto report = validate(matrix);
    std::set<ViolationKind> kinds;
    for (const auto& v : report.violations) kinds.insert(v.kind);
    CHECK(kinds.count(ViolationKind::DuplicateName) == 1);
    CHECK(kinds.count(ViolationKind::NonPositiveWeight) == 1);
    CHECK(kinds.count(ViolationKind::NegativeValue) == 1);
    CHECK(kinds.count(ViolationKind::NonFiniteValue) == 1);
    CHECK(kinds.count(ViolationKind::WeightSumDrift) == 1);
}

TEST_CASE("decision matrix rejects a mismatched grid") {
    CHECK_THROWS_AS(fixtures::make_matrix({"A", "B"}, {1.0}, {1, 2, 3}), InvalidArgument);
}

TEST_CASE("rank_from_scores assigns competition ranks with ties") {
    const auto ranking = rank_from_scores({{"A", 0.9}, {"B", 0.5}, {"C", 0.9}}, 1e-9);
    CHECK(ranking.rank_of("A") == 1);
    CHECK(ranking.rank_of("C") == 1);
    CHECK(ranking.rank_of("B") == 3);
    CHECK(ranking.best().alternative == "A"); // ties keep input order
}

TEST_CASE("rank_from_scores on the published L2 final scores") {
    const auto ranking = rank_from_scores(fixtures::l2_published_k(), 1e-9);
    CHECK(ranking.rank_of("L208") == 1);
    CHECK(ranking.rank_of("L221") == 26);
}

TEST_CASE("rank_from_scores with one shared value ties everyone at rank 1") {
    const auto ranking = rank_from_scores({{"A", 2.0}, {"B", 2.0}, {"C", 2.0}});
    for (const auto& e : ranking.entries()) CHECK(e.rank == 1);
}

TEST_CASE("rank_from_scores rejects non-finite scores") {
    CHECK_THROWS_AS(rank_from_scores({{"A", std::nan("")}, {"B", 1.0}}), InvalidArgument);
    CHECK_THROWS_AS(rank_from_scores({{"A", 1.0}}, -1.0), InvalidArgument);
}

TEST_CASE("tie-free ranks are exactly 1..m") {
    const auto ranking = rank_from_scores({{"A", 0.2}, {"B", 0.8}, {"C", 0.5}, {"D", 0.1}});
    std::set<int> ranks;
    for (const auto& e : ranking.entries()) ranks.insert(e.rank);
    CHECK(ranks == std::set<int>{1, 2, 3, 4});
    CHECK(ranking.best().alternative == "B");
    CHECK(ranking.worst().alternative == "D");
}

TEST_CASE("permuting the scores permutes the ranking identically") {
    std::vector<std::pair<std::string, double>> scores = {
        {"A", 0.3}, {"B", 0.9}, {"C", 0.9}, {"D", 0.1}, {"E", 0.55}};
    const auto base = rank_from_scores(scores).rank_map();
    std::reverse(scores.begin(), scores.end());
    const auto reversed = rank_from_scores(scores).rank_map();
    CHECK(base == reversed);
}

TEST_CASE("ranking built from external ranks") {
    const auto ranking = Ranking::from_ranks({{"B", 2}, {"A", 1}, {"C", 2}});
    CHECK(ranking.best().alternative == "A");
    CHECK(ranking.rank_of("C") == 2);
    CHECK_THROWS_AS(ranking.rank_of("missing"), InvalidArgument);
}

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "cocofiso/sensitivity.hpp"
#include "support/fixtures.hpp"

using namespace cocofiso;
using Catch::Approx;

namespace {

EvaluateOptions paper_options() {
    EvaluateOptions opts;
    opts.paper_exact_weights = true;
    return opts;
}

} // namespace

TEST_CASE("scenario table regenerates the published rows digit-for-digit") {
    const auto scenarios = table_scenarios(fixtures::l1_matrix().criteria());
    REQUIRE(scenarios.size() == 20);
    const auto& published = fixtures::published_weight_scenarios();
    for (std::size_t i = 0; i < 20; ++i) {
        CHECK(scenarios[i].label == "W" + std::to_string(i + 1));
        for (std::size_t j = 0; j < 5; ++j) CHECK(scenarios[i].weights[j] == published[i][j]);
        CHECK(scenarios[i].weight_sum_waiver);
        // one 0.45, two 0.18, two 0.1 per row: the published totals are 1.01
        const double total =
            std::accumulate(scenarios[i].weights.begin(), scenarios[i].weights.end(), 0.0);
        CHECK(total == Approx(1.01).margin(1e-12));
    }
    CHECK(scenarios[0].prioritized == "PC");
    CHECK(scenarios[4].prioritized == "DR");
    CHECK(scenarios[19].prioritized == "OP");
}

TEST_CASE("normalized scenario mode rescales each row to sum 1") {
    const auto scenarios =
        table_scenarios(fixtures::l1_matrix().criteria(), ScenarioWeightMode::Normalized);
    for (const auto& s : scenarios) {
        const double total = std::accumulate(s.weights.begin(), s.weights.end(), 0.0);
        CHECK(total == Approx(1.0).margin(1e-12));
        CHECK_FALSE(s.weight_sum_waiver);
    }
}

TEST_CASE("scenario table demands exactly 5 criteria") {
    std::vector<CriterionSpec> four = {{"A", Direction::Benefit, 0.25},
                                       {"B", Direction::Benefit, 0.25},
                                       {"C", Direction::Benefit, 0.25},
                                       {"D", Direction::Benefit, 0.25}};
    CHECK_THROWS_WITH(table_scenarios(four),
                      Catch::Matchers::ContainsSubstring("requires 5 criteria"));
}

TEST_CASE("rotating scenarios cover n criteria with 4 runs each, rows sum to 1") {
    std::vector<CriterionSpec> criteria;
    for (int j = 0; j < 7; ++j)
        criteria.push_back({"C" + std::to_string(j), Direction::Benefit, 1.0 / 7});
    const auto scenarios = rotating_scenarios(criteria);
    REQUIRE(scenarios.size() == 28);
    for (const auto& s : scenarios) {
        const double total = std::accumulate(s.weights.begin(), s.weights.end(), 0.0);
        CHECK(total == Approx(1.0).margin(1e-12));
        const double top = *std::max_element(s.weights.begin(), s.weights.end());
        CHECK(top == 0.45);
    }
    for (int j = 0; j < 7; ++j) {
        const auto count = std::count_if(scenarios.begin(), scenarios.end(), [&](const auto& s) {
            return s.prioritized == criteria[j].name;
        });
        CHECK(count == 4);
    }
}

TEST_CASE("a single base-weight scenario reproduces the base ranking") {
    const auto& matrix = fixtures::l2_matrix();
    WeightScenario base;
    base.label = "BASE";
    base.weights = matrix.weights();
    base.prioritized = "PC";
    base.weight_sum_waiver = true;

    const std::vector<WeightScenario> scenarios = {base};
    const auto report =
        run_sensitivity(matrix, scenarios, Variant::CoCoFISo, paper_options());
    const auto direct = evaluate(matrix, Variant::CoCoFISo, paper_options());
    REQUIRE(report.rankings.size() == 1);
    CHECK(report.rankings.front().rank_map() == direct.ranking.rank_map());
    CHECK(report.stability.groups.empty()); // no complete group of 4
}

TEST_CASE("every report column equals a direct evaluation with that weight vector") {
    const auto& matrix = fixtures::l2_matrix();
    const auto scenarios = table_scenarios(matrix.criteria());
    const auto report = run_sensitivity(matrix, scenarios, Variant::CoCoFISo, paper_options());

    for (std::size_t c = 0; c < scenarios.size(); ++c) {
        const auto direct = evaluate(matrix.with_weights(scenarios[c].weights),
                                     Variant::CoCoFISo, paper_options());
        const auto expected = direct.ranking.rank_map();
        for (std::size_t i = 0; i < report.alternatives.size(); ++i)
            CHECK(report.rank_matrix[i][c] == expected.at(report.alternatives[i]));
    }
}

TEST_CASE("shuffling scenarios only permutes report columns") {
    const auto& matrix = fixtures::l2_matrix();
    auto scenarios = table_scenarios(matrix.criteria());
    const auto base = run_sensitivity(matrix, scenarios, Variant::CoCoFISo, paper_options());

    std::vector<WeightScenario> shuffled(scenarios.rbegin(), scenarios.rend());
    const auto reversed = run_sensitivity(matrix, shuffled, Variant::CoCoFISo, paper_options());

    const std::size_t count = scenarios.size();
    for (std::size_t c = 0; c < count; ++c)
        for (std::size_t i = 0; i < base.alternatives.size(); ++i)
            CHECK(base.rank_matrix[i][c] == reversed.rank_matrix[i][count - 1 - c]);
}

TEST_CASE("thread fan-out does not change the report") {
    const auto& matrix = fixtures::l1_matrix();
    const auto scenarios = table_scenarios(matrix.criteria());
    const auto serial =
        run_sensitivity(matrix, scenarios, Variant::CoCoFISo, paper_options(), 1);
    const auto parallel =
        run_sensitivity(matrix, scenarios, Variant::CoCoFISo, paper_options(), 8);
    CHECK(serial.rank_matrix == parallel.rank_matrix);
    for (std::size_t g = 0; g < serial.stability.groups.size(); ++g)
        CHECK(serial.stability.groups[g].percent == parallel.stability.groups[g].percent);
}

TEST_CASE("scenario failures carry the scenario label") {
    // classic variant fails on every scenario: PW is constant in the L1 group
    const auto& matrix = fixtures::l1_matrix();
    const auto scenarios = table_scenarios(matrix.criteria());
    try {
        run_sensitivity(matrix, scenarios, Variant::Classic, paper_options());
        FAIL("expected DegenerateCriterion");
    } catch (const DegenerateCriterion& e) {
        CHECK(std::string(e.what()).find("scenario W1") != std::string::npos);
        CHECK(e.criteria() == std::vector<std::string>{"PW"});
    }
}

TEST_CASE("stability groups follow the prioritized criterion in column order") {
    const auto& matrix = fixtures::l2_matrix();
    const auto scenarios = table_scenarios(matrix.criteria());
    const auto report = run_sensitivity(matrix, scenarios, Variant::CoCoFISo, paper_options());
    REQUIRE(report.stability.groups.size() == 5);
    CHECK(report.stability.groups[0].criterion == "PC");
    CHECK(report.stability.groups[1].criterion == "DR");
    CHECK(report.stability.groups[4].criterion == "OP");
    for (const auto& g : report.stability.groups) {
        CHECK(g.by_alternative.size() == matrix.alternative_count());
        CHECK(g.percent[0] + g.percent[1] + g.percent[2] + g.percent[3] ==
              Approx(100.0).margin(1e-9));
    }
}

#pragma once

/// Weight-replacement sensitivity protocol: 20 scenarios, each handing the
/// priority weight 0.45 to one of 5 criteria (4 scenarios per criterion) and
/// splitting the rest between 0.18 and 0.1. Scenario evaluations are
/// independent and may fan out across threads; the report assembly is a
/// deterministic reduction in scenario order.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cocofiso/core.hpp"
#include "cocofiso/engine.hpp"
#include "cocofiso/errors.hpp"
#include "cocofiso/rank_analytics.hpp"

namespace cocofiso {

struct WeightScenario {
    std::string label;           // "W1".."W20"
    std::vector<double> weights; // per criterion, matrix column order
    std::string prioritized;     // criterion holding the maximum weight
    /// The published protocol's rows add up to 1.01, not 1; this flag waives
    /// the weight-sum check for the scenario's evaluation.
    bool weight_sum_waiver = false;
};

enum class ScenarioWeightMode {
    PaperExact, // rows reproduced digit-for-digit (each sums to 1.01)
    Normalized, // each row rescaled to sum to 1
};

namespace detail {

// 20 x 5: one 0.45, two 0.18, two 0.1 per row.
inline constexpr double kScenarioWeights[20][5] = {
    {0.45, 0.10, 0.18, 0.18, 0.10}, {0.45, 0.18, 0.10, 0.18, 0.10},
    {0.45, 0.10, 0.10, 0.18, 0.18}, {0.45, 0.18, 0.18, 0.10, 0.10},
    {0.18, 0.45, 0.10, 0.10, 0.18}, {0.18, 0.45, 0.18, 0.10, 0.10},
    {0.10, 0.45, 0.18, 0.18, 0.10}, {0.10, 0.45, 0.10, 0.18, 0.18},
    {0.18, 0.10, 0.45, 0.10, 0.18}, {0.10, 0.18, 0.45, 0.10, 0.18},
    {0.10, 0.10, 0.45, 0.18, 0.18}, {0.18, 0.18, 0.45, 0.10, 0.10},
    {0.18, 0.18, 0.10, 0.45, 0.10}, {0.10, 0.18, 0.18, 0.45, 0.10},
    {0.10, 0.10, 0.18, 0.45, 0.18}, {0.18, 0.10, 0.10, 0.45, 0.18},
    {0.18, 0.10, 0.10, 0.18, 0.45}, {0.10, 0.10, 0.18, 0.18, 0.45},
    {0.18, 0.18, 0.10, 0.10, 0.45}, {0.10, 0.18, 0.10, 0.18, 0.45},
};

} // namespace detail

/// The 20-scenario protocol for exactly 5 criteria. PaperExact keeps the
/// published rows verbatim (sum 1.01, waiver set); Normalized rescales each
/// row to sum to 1.
inline std::vector<WeightScenario> table_scenarios(const std::vector<CriterionSpec>& criteria,
                                                   ScenarioWeightMode mode =
                                                       ScenarioWeightMode::PaperExact) {
    if (criteria.size() != 5)
        throw InvalidArgument("table_scenarios: strict mode requires 5 criteria, got " +
                              std::to_string(criteria.size()));
    std::vector<WeightScenario> out;
    out.reserve(20);
    for (std::size_t row = 0; row < 20; ++row) {
        WeightScenario s;
        s.label = "W" + std::to_string(row + 1);
        s.weights.assign(std::begin(detail::kScenarioWeights[row]),
                         std::end(detail::kScenarioWeights[row]));
        s.prioritized = criteria[row / 4].name;
        if (mode == ScenarioWeightMode::Normalized) {
            double total = 0.0;
            for (double w : s.weights) total += w;
            for (double& w : s.weights) w /= total;
        } else {
            s.weight_sum_waiver = true;
        }
        out.push_back(std::move(s));
    }
    return out;
}

/// Generalized protocol for n != 5 criteria (not part of the published
/// table): each criterion gets 4 scenarios with priority weight 0.45; the
/// remaining 0.55 is split between an upper and lower tier (1.8 : 1 ratio,
/// as in the 5-criterion protocol) whose assignment rotates per scenario.
/// Every row sums to 1.
inline std::vector<WeightScenario> rotating_scenarios(const std::vector<CriterionSpec>& criteria) {
    const std::size_t n = criteria.size();
    if (n < 2) throw InvalidArgument("rotating_scenarios: need at least 2 criteria");

    std::vector<WeightScenario> out;
    out.reserve(4 * n);
    std::size_t label = 1;
    for (std::size_t prio = 0; prio < n; ++prio) {
        for (std::size_t rotation = 0; rotation < 4; ++rotation) {
            const std::size_t rest = n - 1;
            const std::size_t upper_count = (rest + 1) / 2;
            // upper tier weighs 1.8x the lower tier; scale so the row sums to 1
            const double unit = 0.55 / (1.8 * static_cast<double>(upper_count) +
                                        static_cast<double>(rest - upper_count));
            WeightScenario s;
            s.label = "W" + std::to_string(label++);
            s.prioritized = criteria[prio].name;
            s.weights.assign(n, 0.0);
            s.weights[prio] = 0.45;
            std::size_t slot = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == prio) continue;
                const bool upper = (slot + rotation) % rest < upper_count;
                s.weights[j] = upper ? 1.8 * unit : unit;
                ++slot;
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

struct SensitivityReport {
    std::vector<WeightScenario> scenarios;
    std::vector<std::string> alternatives;     // matrix input order
    std::vector<std::vector<int>> rank_matrix; // [alternative][scenario]
    std::vector<Ranking> rankings;             // one per scenario
    StabilityClassification stability;
};

/// Evaluate every scenario (threads = 0 picks the hardware count), assemble
/// the rank matrix, and classify stability per prioritized-criterion group.
/// A failing scenario rethrows the engine error tagged with its label.
inline SensitivityReport run_sensitivity(const DecisionMatrix& matrix,
                                         std::span<const WeightScenario> scenarios,
                                         Variant variant, const EvaluateOptions& options = {},
                                         unsigned threads = 0) {
    if (scenarios.empty()) throw InvalidArgument("run_sensitivity: no scenarios");

    const std::size_t count = scenarios.size();
    std::vector<Ranking> rankings(count);
    std::vector<std::exception_ptr> failures(count);

    auto evaluate_one = [&](std::size_t idx) {
        const WeightScenario& scenario = scenarios[idx];
        EvaluateOptions opts = options;
        opts.paper_exact_weights = options.paper_exact_weights || scenario.weight_sum_waiver;
        const DecisionMatrix scoped = matrix.with_weights(scenario.weights);
        rankings[idx] = evaluate(scoped, variant, opts).ranking;
    };

    unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
    if (workers == 0) workers = 1;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));

    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            try {
                evaluate_one(i);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                    try {
                        evaluate_one(i);
                    } catch (...) {
                        failures[i] = std::current_exception();
                    }
                }
            });
        }
        for (auto& worker : pool) worker.join();
    }

    for (std::size_t i = 0; i < count; ++i) {
        if (!failures[i]) continue;
        const std::string tag = "scenario " + scenarios[i].label + ": ";
        try {
            std::rethrow_exception(failures[i]);
        } catch (const DegenerateCriterion& e) {
            throw DegenerateCriterion(tag + e.what(), e.criteria());
        } catch (const ZeroMinAggregate& e) {
            throw ZeroMinAggregate(tag + e.what(), e.alternatives());
        } catch (const Error& e) {
            throw Error(tag + e.what());
        } catch (const std::exception& e) {
            throw Error(tag + e.what());
        }
    }

    SensitivityReport report;
    report.scenarios.assign(scenarios.begin(), scenarios.end());
    report.alternatives = matrix.alternatives();
    report.rankings = std::move(rankings);
    report.rank_matrix.assign(matrix.alternative_count(), std::vector<int>(count, 0));
    for (std::size_t c = 0; c < count; ++c) {
        const auto ranks = report.rankings[c].rank_map();
        for (std::size_t i = 0; i < report.alternatives.size(); ++i)
            report.rank_matrix[i][c] = ranks.at(report.alternatives[i]);
    }

    // group scenario rankings by prioritized criterion, in first-seen order;
    // only complete groups of 4 runs are classified
    std::vector<CriterionRuns> groups;
    for (std::size_t c = 0; c < count; ++c) {
        const auto& name = report.scenarios[c].prioritized;
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const CriterionRuns& g) { return g.criterion == name; });
        if (it == groups.end()) {
            groups.push_back({name, {}});
            it = groups.end() - 1;
        }
        it->runs.push_back(report.rankings[c]);
    }
    std::erase_if(groups, [](const CriterionRuns& g) { return g.runs.size() != 4; });
    report.stability = stability_classify(groups, report.alternatives);
    return report;
}

} // namespace cocofiso

#pragma once

// Shared test fixtures: the two bundled student datasets and the published
// reference tables frozen for golden checks.

#include <array>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "cocofiso/cocofiso.hpp"

namespace fixtures {

inline std::filesystem::path data_dir() { return std::filesystem::path(COCOFISO_DATA_DIR); }

inline const cocofiso::DecisionMatrix& l1_matrix() {
    static const cocofiso::DecisionMatrix matrix =
        cocofiso::load_problem(cocofiso::load_config(data_dir() / "l1.cfg"));
    return matrix;
}

inline const cocofiso::DecisionMatrix& l2_matrix() {
    static const cocofiso::DecisionMatrix matrix =
        cocofiso::load_problem(cocofiso::load_config(data_dir() / "l2.cfg"));
    return matrix;
}

// Published aggregates for the L2 group under the repaired variant
// (vector normalization), in dataset row order L201..L226.
inline const std::vector<std::pair<std::string, std::pair<double, double>>>& l2_published_sp() {
    static const std::vector<std::pair<std::string, std::pair<double, double>>> table = {
        {"L201", {0.182, 3.612}}, {"L202", {0.178, 3.498}}, {"L203", {0.153, 3.404}},
        {"L204", {0.171, 3.471}}, {"L205", {0.164, 3.437}}, {"L206", {0.164, 3.437}},
        {"L207", {0.215, 3.733}}, {"L208", {0.230, 3.732}}, {"L209", {0.220, 3.709}},
        {"L210", {0.226, 3.547}}, {"L211", {0.182, 3.612}}, {"L212", {0.180, 3.588}},
        {"L213", {0.184, 3.516}}, {"L214", {0.147, 3.381}}, {"L215", {0.210, 3.688}},
        {"L216", {0.160, 3.513}}, {"L217", {0.178, 3.572}}, {"L218", {0.244, 3.605}},
        {"L219", {0.189, 3.533}}, {"L220", {0.140, 3.345}}, {"L221", {0.133, 3.290}},
        {"L222", {0.147, 3.379}}, {"L223", {0.217, 3.712}}, {"L224", {0.174, 3.583}},
        {"L225", {0.140, 3.345}}, {"L226", {0.191, 3.640}},
    };
    return table;
}

// Published appraisal triples (k_a, k_b, k_c) for the two pinned rows.
inline std::array<double, 3> published_triple_l221() { return {0.035, 0.436, 0.861}; }
inline std::array<double, 3> published_triple_l125() { return {0.041, 0.446, 0.999}; }

// Published final ranks for both groups (as printed, ties included).
inline const std::vector<std::pair<std::string, int>>& l1_published_ranks() {
    static const std::vector<std::pair<std::string, int>> ranks = {
        {"L125", 1},  {"L110", 2},  {"L106", 3},  {"L112", 4},  {"L126", 5},  {"L116", 6},
        {"L119", 7},  {"L124", 8},  {"L102", 9},  {"L122", 9},  {"L107", 11}, {"L121", 11},
        {"L123", 13}, {"L103", 14}, {"L117", 14}, {"L104", 16}, {"L118", 17}, {"L114", 18},
        {"L115", 19}, {"L101", 20}, {"L105", 20}, {"L109", 20}, {"L111", 20}, {"L108", 24},
        {"L113", 24}, {"L127", 24}, {"L120", 27},
    };
    return ranks;
}

inline const std::vector<std::pair<std::string, int>>& l2_published_ranks() {
    static const std::vector<std::pair<std::string, int>> ranks = {
        {"L208", 1},  {"L207", 2},  {"L223", 3},  {"L209", 4},  {"L215", 5},  {"L218", 6},
        {"L226", 7},  {"L201", 8},  {"L211", 8},  {"L210", 10}, {"L212", 11}, {"L224", 12},
        {"L217", 13}, {"L219", 14}, {"L213", 15}, {"L202", 16}, {"L216", 17}, {"L204", 18},
        {"L205", 19}, {"L206", 19}, {"L203", 21}, {"L214", 22}, {"L222", 23}, {"L220", 24},
        {"L225", 24}, {"L221", 26},
    };
    return ranks;
}

// Published final scores for the L2 group (3 decimals as printed).
inline const std::vector<std::pair<std::string, double>>& l2_published_k() {
    static const std::vector<std::pair<std::string, double>> k = {
        {"L208", 0.756}, {"L207", 0.754}, {"L223", 0.750}, {"L209", 0.752}, {"L215", 0.747},
        {"L218", 0.740}, {"L226", 0.738}, {"L201", 0.733}, {"L211", 0.733}, {"L210", 0.730},
        {"L212", 0.729}, {"L224", 0.728}, {"L217", 0.727}, {"L219", 0.723}, {"L213", 0.720},
        {"L202", 0.716}, {"L216", 0.716}, {"L204", 0.712}, {"L205", 0.706}, {"L206", 0.706},
        {"L203", 0.700}, {"L214", 0.695}, {"L222", 0.695}, {"L220", 0.689}, {"L225", 0.689},
        {"L221", 0.681},
    };
    return k;
}

// The 20 published weight-replacement rows, column order (PC, DR, DC, PW, OP).
// Typed from the protocol table independently of the library's copy.
inline const std::array<std::array<double, 5>, 20>& published_weight_scenarios() {
    static const std::array<std::array<double, 5>, 20> rows = {{
        {0.45, 0.1, 0.18, 0.18, 0.1}, {0.45, 0.18, 0.1, 0.18, 0.1},
        {0.45, 0.1, 0.1, 0.18, 0.18}, {0.45, 0.18, 0.18, 0.1, 0.1},
        {0.18, 0.45, 0.1, 0.1, 0.18}, {0.18, 0.45, 0.18, 0.1, 0.1},
        {0.1, 0.45, 0.18, 0.18, 0.1}, {0.1, 0.45, 0.1, 0.18, 0.18},
        {0.18, 0.1, 0.45, 0.1, 0.18}, {0.1, 0.18, 0.45, 0.1, 0.18},
        {0.1, 0.1, 0.45, 0.18, 0.18}, {0.18, 0.18, 0.45, 0.1, 0.1},
        {0.18, 0.18, 0.1, 0.45, 0.1}, {0.1, 0.18, 0.18, 0.45, 0.1},
        {0.1, 0.1, 0.18, 0.45, 0.18}, {0.18, 0.1, 0.1, 0.45, 0.18},
        {0.18, 0.1, 0.1, 0.18, 0.45}, {0.1, 0.1, 0.18, 0.18, 0.45},
        {0.18, 0.18, 0.1, 0.1, 0.45}, {0.1, 0.18, 0.1, 0.18, 0.45},
    }};
    return rows;
}

// Small matrix builder for hand-written cases: all-benefit unless flagged.
inline cocofiso::DecisionMatrix make_matrix(std::vector<std::string> ids,
                                            std::vector<double> weights,
                                            std::vector<double> values,
                                            std::vector<cocofiso::Direction> directions = {}) {
    std::vector<cocofiso::CriterionSpec> criteria;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        const auto dir = j < directions.size() ? directions[j] : cocofiso::Direction::Benefit;
        criteria.push_back({"C" + std::to_string(j + 1), dir, weights[j]});
    }
    return cocofiso::DecisionMatrix(std::move(ids), std::move(criteria), std::move(values));
}

} // namespace fixtures

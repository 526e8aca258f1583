#pragma once

/// Decision-problem data model shared by every ranking method: criteria,
/// the raw performance matrix, structural validation, and score ranking.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cocofiso/errors.hpp"

namespace cocofiso {

inline constexpr double kDefaultTieTolerance = 1e-9;
inline constexpr double kWeightSumTolerance = 1e-6;

enum class Direction { Benefit, Cost };

struct CriterionSpec {
    std::string name;
    Direction direction = Direction::Benefit;
    double weight = 0.0;
};

/// Raw m x n performance grid. Immutable after construction; the constructor
/// only enforces shape congruence, everything else is reported by validate().
class DecisionMatrix {
public:
    DecisionMatrix(std::vector<std::string> alternatives,
                   std::vector<CriterionSpec> criteria,
                   std::vector<double> values)
        : alternatives_(std::move(alternatives)),
          criteria_(std::move(criteria)),
          values_(std::move(values)) {
        if (values_.size() != alternatives_.size() * criteria_.size()) {
            throw InvalidArgument("decision matrix: value grid is " +
                                  std::to_string(values_.size()) + " cells, expected " +
                                  std::to_string(alternatives_.size()) + " x " +
                                  std::to_string(criteria_.size()));
        }
    }

    std::size_t alternative_count() const noexcept { return alternatives_.size(); }
    std::size_t criterion_count() const noexcept { return criteria_.size(); }

    const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
    const std::vector<CriterionSpec>& criteria() const noexcept { return criteria_; }

    double value(std::size_t row, std::size_t col) const {
        return values_[row * criteria_.size() + col];
    }

    const std::vector<double>& values() const noexcept { return values_; }

    std::vector<double> weights() const {
        std::vector<double> w;
        w.reserve(criteria_.size());
        for (const auto& c : criteria_) w.push_back(c.weight);
        return w;
    }

    /// Same grid with per-criterion weights replaced (used by sensitivity runs).
    DecisionMatrix with_weights(std::span<const double> weights) const {
        if (weights.size() != criteria_.size()) {
            throw InvalidArgument("with_weights: expected " + std::to_string(criteria_.size()) +
                                  " weights, got " + std::to_string(weights.size()));
        }
        std::vector<CriterionSpec> criteria = criteria_;
        for (std::size_t j = 0; j < criteria.size(); ++j) criteria[j].weight = weights[j];
        return DecisionMatrix(alternatives_, std::move(criteria), values_);
    }

    bool operator==(const DecisionMatrix& other) const {
        if (alternatives_ != other.alternatives_ || values_ != other.values_ ||
            criteria_.size() != other.criteria_.size())
            return false;
        for (std::size_t j = 0; j < criteria_.size(); ++j) {
            if (criteria_[j].name != other.criteria_[j].name ||
                criteria_[j].direction != other.criteria_[j].direction ||
                criteria_[j].weight != other.criteria_[j].weight)
                return false;
        }
        return true;
    }

private:
    std::vector<std::string> alternatives_;
    std::vector<CriterionSpec> criteria_;
    std::vector<double> values_; // row-major, one row per alternative
};

enum class ViolationKind {
    DimensionMismatch,
    NegativeValue,
    NonFiniteValue,
    WeightSumDrift,
    DuplicateName,
    NonPositiveWeight,
};

struct Violation {
    ViolationKind kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool passed() const noexcept { return violations.empty(); }

    std::string summary() const {
        std::string out;
        for (const auto& v : violations) {
            if (!out.empty()) out += "; ";
            out += v.detail;
        }
        return out;
    }
};

struct ValidationOptions {
    /// Skip the weight-sum check. Published weight protocols occasionally use
    /// totals that do not add to 1 (e.g. 1.01); the waiver keeps them usable.
    bool paper_exact_weights = false;
    double weight_sum_tolerance = kWeightSumTolerance;
};

inline ValidationReport validate(const DecisionMatrix& matrix,
                                 const ValidationOptions& options = {}) {
    ValidationReport report;
    auto add = [&](ViolationKind kind, std::string detail) {
        report.violations.push_back({kind, std::move(detail)});
    };

    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();
    if (m < 2) add(ViolationKind::DimensionMismatch, "m >= 2 required, got " + std::to_string(m));
    if (n < 1) add(ViolationKind::DimensionMismatch, "n >= 1 required, got " + std::to_string(n));

    std::unordered_set<std::string> seen;
    for (const auto& id : matrix.alternatives()) {
        if (!seen.insert(id).second)
            add(ViolationKind::DuplicateName, "duplicate alternative id '" + id + "'");
    }
    seen.clear();
    double weight_sum = 0.0;
    for (const auto& c : matrix.criteria()) {
        if (!seen.insert(c.name).second)
            add(ViolationKind::DuplicateName, "duplicate criterion name '" + c.name + "'");
        if (!(c.weight > 0.0))
            add(ViolationKind::NonPositiveWeight,
                "criterion '" + c.name + "' has non-positive weight");
        weight_sum += c.weight;
    }
    if (!options.paper_exact_weights && n >= 1 &&
        std::abs(weight_sum - 1.0) > options.weight_sum_tolerance) {
        add(ViolationKind::WeightSumDrift,
            "weight-sum: weights add to " + std::to_string(weight_sum) + ", expected 1");
    }

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double x = matrix.value(i, j);
            if (!std::isfinite(x)) {
                add(ViolationKind::NonFiniteValue,
                    "non-finite value at (" + matrix.alternatives()[i] + ", " +
                        matrix.criteria()[j].name + ")");
            } else if (x < 0.0) {
                add(ViolationKind::NegativeValue,
                    "negative value at (" + matrix.alternatives()[i] + ", " +
                        matrix.criteria()[j].name + ")");
            }
        }
    }
    return report;
}

struct RankedEntry {
    std::string alternative;
    double score = 0.0;
    int rank = 0;
};

/// Ordered ranking, best first. Competition ranks: alternatives whose scores
/// fall within the tie tolerance share a rank, and the next distinct score
/// gets rank = (number of strictly better alternatives) + 1.
class Ranking {
public:
    Ranking() = default;
    explicit Ranking(std::vector<RankedEntry> entries) : entries_(std::move(entries)) {}

    /// Build directly from externally assigned ranks (e.g. a published table).
    static Ranking from_ranks(const std::vector<std::pair<std::string, int>>& ranks) {
        std::vector<RankedEntry> entries;
        entries.reserve(ranks.size());
        for (const auto& [id, rank] : ranks)
            entries.push_back({id, -static_cast<double>(rank), rank});
        std::stable_sort(entries.begin(), entries.end(),
                         [](const RankedEntry& a, const RankedEntry& b) { return a.rank < b.rank; });
        return Ranking(std::move(entries));
    }

    const std::vector<RankedEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// Rank of one alternative; throws if the id is unknown.
    int rank_of(const std::string& alternative) const {
        for (const auto& e : entries_)
            if (e.alternative == alternative) return e.rank;
        throw InvalidArgument("ranking: unknown alternative '" + alternative + "'");
    }

    const RankedEntry& best() const {
        if (entries_.empty()) throw InvalidArgument("ranking: empty");
        return entries_.front();
    }

    const RankedEntry& worst() const {
        if (entries_.empty()) throw InvalidArgument("ranking: empty");
        return entries_.back();
    }

    std::unordered_map<std::string, int> rank_map() const {
        std::unordered_map<std::string, int> out;
        out.reserve(entries_.size());
        for (const auto& e : entries_) out.emplace(e.alternative, e.rank);
        return out;
    }

private:
    std::vector<RankedEntry> entries_;
};

/// Sort descending by score and assign competition ranks. A tie group is
/// anchored at its first (highest) score: an entry joins the group while its
/// score is within tie_tolerance of the anchor. Ties keep input order.
inline Ranking rank_from_scores(const std::vector<std::pair<std::string, double>>& scores,
                                double tie_tolerance = kDefaultTieTolerance) {
    for (const auto& [id, score] : scores) {
        if (!std::isfinite(score))
            throw InvalidArgument("rank_from_scores: non-finite score for '" + id + "'");
    }
    if (tie_tolerance < 0.0)
        throw InvalidArgument("rank_from_scores: negative tie tolerance");

    std::vector<RankedEntry> entries;
    entries.reserve(scores.size());
    for (const auto& [id, score] : scores) entries.push_back({id, score, 0});
    std::stable_sort(entries.begin(), entries.end(),
                     [](const RankedEntry& a, const RankedEntry& b) { return a.score > b.score; });

    double anchor = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i == 0 || anchor - entries[i].score > tie_tolerance) {
            entries[i].rank = static_cast<int>(i) + 1;
            anchor = entries[i].score;
        } else {
            entries[i].rank = entries[i - 1].rank;
        }
    }
    return Ranking(std::move(entries));
}

} // namespace cocofiso

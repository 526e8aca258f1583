#pragma once

/// Compromise-solution scoring engine.
///
/// Both variants aggregate a normalized matrix into a weighted sum S and a
/// power-weight sum P per alternative, then fuse three appraisal scores:
///
///   k_a  share of the combined aggregate, sums to 1 over alternatives
///   k_b  Classic:  S/min S + P/min P   -- undefined when either minimum is 0
///        CoCoFISo: (S+P) / (1 + S/(1+S) + P/(1+P)) -- denominator in [1,3),
///                  defined for every S,P >= 0
///   k_c  balanced compromise against the per-column maxima, in [0,1]
///
/// final score k = (k_a k_b k_c)^(1/3) + (k_a + k_b + k_c)/3, higher is better.
///
/// Classic = min-max normalization + classic k_b. It fails loudly on the two
/// known degeneracies (constant criterion; alternative worst on everything).
/// CoCoFISo = vector normalization + the bounded k_b, and is total on valid
/// nonnegative matrices.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cocofiso/core.hpp"
#include "cocofiso/errors.hpp"
#include "cocofiso/normalize.hpp"

namespace cocofiso {

enum class Variant { Classic, CoCoFISo };

inline const char* to_string(Variant v) {
    return v == Variant::Classic ? "cocoso" : "cocofiso";
}

struct Aggregates {
    std::vector<double> s; // weighted sum of normalized values
    std::vector<double> p; // sum of normalized values raised to their weight
};

/// S_i = sum_j w_j r_ij and P_i = sum_j r_ij^w_j, with 0^w = 0 for w > 0.
inline Aggregates aggregate(const NormalizedMatrix& normalized, std::span<const double> weights) {
    if (weights.size() != normalized.cols)
        throw InvalidArgument("aggregate: expected " + std::to_string(normalized.cols) +
                              " weights, got " + std::to_string(weights.size()));
    Aggregates out;
    out.s.assign(normalized.rows, 0.0);
    out.p.assign(normalized.rows, 0.0);
    for (std::size_t i = 0; i < normalized.rows; ++i) {
        double s = 0.0, p = 0.0;
        for (std::size_t j = 0; j < normalized.cols; ++j) {
            const double r = normalized.value(i, j);
            s += weights[j] * r;
            p += r > 0.0 ? std::pow(r, weights[j]) : 0.0;
        }
        out.s[i] = s;
        out.p[i] = p;
    }
    return out;
}

namespace detail {

inline void check_same_size(std::span<const double> s, std::span<const double> p,
                            const char* where) {
    if (s.size() != p.size() || s.empty())
        throw InvalidArgument(std::string(where) + ": S and P must be equally sized and non-empty");
}

} // namespace detail

/// Share appraisal: k_a,i = (S_i + P_i) / sum(S + P). Sums to 1.
inline std::vector<double> appraisal_a(std::span<const double> s, std::span<const double> p) {
    detail::check_same_size(s, p, "appraisal_a");
    double total = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) total += s[i] + p[i];
    if (total == 0.0)
        throw AllZeroScores("appraisal_a: S + P is zero for every alternative");
    std::vector<double> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = (s[i] + p[i]) / total;
    return out;
}

/// Classic relative appraisal: k_b,i = S_i/min S + P_i/min P. Throws
/// ZeroMinAggregate naming the alternatives at the zero minimum.
inline std::vector<double> appraisal_b_classic(std::span<const double> s,
                                               std::span<const double> p,
                                               std::span<const std::string> ids = {}) {
    detail::check_same_size(s, p, "appraisal_b_classic");
    const double min_s = *std::min_element(s.begin(), s.end());
    const double min_p = *std::min_element(p.begin(), p.end());
    if (min_s <= 0.0 || min_p <= 0.0) {
        std::vector<std::string> offenders;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if ((min_s <= 0.0 && s[i] == min_s) || (min_p <= 0.0 && p[i] == min_p)) {
                offenders.push_back(i < ids.size() ? ids[i] : "#" + std::to_string(i + 1));
            }
        }
        std::string names;
        for (const auto& o : offenders) {
            if (!names.empty()) names += ", ";
            names += o;
        }
        throw ZeroMinAggregate("zero minimum aggregate: " + names +
                                   " (minimum value on every criterion)",
                               std::move(offenders));
    }
    std::vector<double> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] / min_s + p[i] / min_p;
    return out;
}

/// Bounded relative appraisal: k_b,i = (S_i + P_i) / (1 + S_i/(1+S_i) + P_i/(1+P_i)).
/// The denominator stays in [1,3) for all S,P >= 0, so this is total.
inline std::vector<double> appraisal_b_cocofiso(std::span<const double> s,
                                                std::span<const double> p) {
    detail::check_same_size(s, p, "appraisal_b_cocofiso");
    std::vector<double> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double denom = 1.0 + s[i] / (1.0 + s[i]) + p[i] / (1.0 + p[i]);
        out[i] = (s[i] + p[i]) / denom;
    }
    return out;
}

/// Balanced appraisal: k_c,i = (l S_i + (1-l) P_i) / (l max S + (1-l) max P).
inline std::vector<double> appraisal_c(std::span<const double> s, std::span<const double> p,
                                       double lambda) {
    detail::check_same_size(s, p, "appraisal_c");
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw InvalidArgument("appraisal_c: lambda must be in [0,1]");
    const double max_s = *std::max_element(s.begin(), s.end());
    const double max_p = *std::max_element(p.begin(), p.end());
    const double denom = lambda * max_s + (1.0 - lambda) * max_p;
    if (denom == 0.0)
        throw DegenerateLambda("appraisal_c: lambda*max S + (1-lambda)*max P is zero");
    std::vector<double> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        out[i] = (lambda * s[i] + (1.0 - lambda) * p[i]) / denom;
    return out;
}

/// k_i = (k_a k_b k_c)^(1/3) + (k_a + k_b + k_c) / 3.
inline std::vector<double> fuse_appraisals(std::span<const double> ka, std::span<const double> kb,
                                           std::span<const double> kc) {
    if (ka.size() != kb.size() || kb.size() != kc.size())
        throw InvalidArgument("fuse_appraisals: mismatched sizes");
    std::vector<double> out(ka.size());
    for (std::size_t i = 0; i < ka.size(); ++i) {
        out[i] = std::cbrt(ka[i] * kb[i] * kc[i]) + (ka[i] + kb[i] + kc[i]) / 3.0;
    }
    return out;
}

struct ScoreRow {
    std::string alternative;
    double s = 0.0;
    double p = 0.0;
    double k_a = 0.0;
    double k_b = 0.0;
    double k_c = 0.0;
    double k = 0.0;
};

struct ScoreTable {
    Variant variant = Variant::CoCoFISo;
    double lambda = 0.5;
    std::vector<ScoreRow> rows; // alternatives in input order
};

struct EvaluateOptions {
    double lambda = 0.5;
    double tie_tolerance = kDefaultTieTolerance;
    /// Classic only: drop constant criteria (with a warning) instead of
    /// failing; remaining weights are rescaled to preserve their total.
    bool auto_repair = false;
    /// Waive the weight-sum=1 validation check.
    bool paper_exact_weights = false;
};

struct EvaluationResult {
    ScoreTable table;
    Ranking ranking;
    std::vector<std::string> warnings;
};

namespace detail {

inline DecisionMatrix drop_criteria(const DecisionMatrix& matrix,
                                    const std::vector<std::string>& names) {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < matrix.criterion_count(); ++j) {
        const auto& name = matrix.criteria()[j].name;
        if (std::find(names.begin(), names.end(), name) == names.end()) keep.push_back(j);
    }
    if (keep.empty())
        throw DegenerateCriterion("auto-repair would drop every criterion", names);

    double total_before = 0.0, total_after = 0.0;
    for (const auto& c : matrix.criteria()) total_before += c.weight;
    std::vector<CriterionSpec> criteria;
    for (std::size_t j : keep) {
        criteria.push_back(matrix.criteria()[j]);
        total_after += criteria.back().weight;
    }
    const double scale = total_after > 0.0 ? total_before / total_after : 1.0;
    for (auto& c : criteria) c.weight *= scale;

    std::vector<double> values;
    values.reserve(matrix.alternative_count() * keep.size());
    for (std::size_t i = 0; i < matrix.alternative_count(); ++i)
        for (std::size_t j : keep) values.push_back(matrix.value(i, j));
    return DecisionMatrix(matrix.alternatives(), std::move(criteria), std::move(values));
}

} // namespace detail

/// Run the full pipeline: validate, normalize per variant, aggregate, fuse
/// appraisals, rank by final score descending.
inline EvaluationResult evaluate(const DecisionMatrix& matrix, Variant variant,
                                 const EvaluateOptions& options = {}) {
    ValidationOptions vopts;
    vopts.paper_exact_weights = options.paper_exact_weights;
    const ValidationReport report = validate(matrix, vopts);
    if (!report.passed())
        throw ValidationError("invalid decision matrix: " + report.summary());

    EvaluationResult result;

    const DecisionMatrix* active = &matrix;
    std::optional<DecisionMatrix> repaired;
    if (variant == Variant::Classic && options.auto_repair) {
        try {
            (void)normalize_minmax(matrix);
        } catch (const DegenerateCriterion& e) {
            std::string names;
            for (const auto& c : e.criteria()) {
                if (!names.empty()) names += ", ";
                names += c;
            }
            result.warnings.push_back("auto-repair: dropped degenerate criteria " + names +
                                      "; remaining weights rescaled");
            repaired = detail::drop_criteria(matrix, e.criteria());
            active = &*repaired;
        }
    }

    NormalizedMatrix normalized = variant == Variant::Classic ? normalize_minmax(*active)
                                                              : normalize_vector(*active);
    for (auto& w : normalized.warnings) result.warnings.push_back(std::move(w));

    const std::vector<double> weights = active->weights();
    const Aggregates agg = aggregate(normalized, weights);
    const std::vector<double> ka = appraisal_a(agg.s, agg.p);
    const std::vector<double> kb =
        variant == Variant::Classic
            ? appraisal_b_classic(agg.s, agg.p, active->alternatives())
            : appraisal_b_cocofiso(agg.s, agg.p);
    const std::vector<double> kc = appraisal_c(agg.s, agg.p, options.lambda);
    const std::vector<double> k = fuse_appraisals(ka, kb, kc);

    result.table.variant = variant;
    result.table.lambda = options.lambda;
    result.table.rows.reserve(matrix.alternative_count());
    std::vector<std::pair<std::string, double>> scores;
    scores.reserve(matrix.alternative_count());
    for (std::size_t i = 0; i < matrix.alternative_count(); ++i) {
        const auto& id = matrix.alternatives()[i];
        result.table.rows.push_back({id, agg.s[i], agg.p[i], ka[i], kb[i], kc[i], k[i]});
        scores.emplace_back(id, k[i]);
    }
    result.ranking = rank_from_scores(scores, options.tie_tolerance);
    return result;
}

} // namespace cocofiso

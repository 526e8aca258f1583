#pragma once

/// Reference ranking methods used to cross-check the compromise engine:
/// weighted sum (WSM), TOPSIS, and PROMETHEE II with the usual criterion.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cocofiso/core.hpp"
#include "cocofiso/errors.hpp"
#include "cocofiso/normalize.hpp"

namespace cocofiso {

enum class BaselineMethod { WSM, Topsis, Promethee2 };

inline const char* to_string(BaselineMethod m) {
    switch (m) {
        case BaselineMethod::WSM: return "wsm";
        case BaselineMethod::Topsis: return "topsis";
        default: return "promethee2";
    }
}

enum class PreferenceFunction { Usual, Linear };

struct BaselineOptions {
    double tie_tolerance = kDefaultTieTolerance;
    bool paper_exact_weights = false;
    // PROMETHEE II only
    PreferenceFunction preference = PreferenceFunction::Usual;
    double linear_threshold = 1.0;
};

struct BaselineResult {
    BaselineMethod method = BaselineMethod::WSM;
    std::vector<std::pair<std::string, double>> scores; // input order
    Ranking ranking;
};

namespace detail {

inline void require_valid(const DecisionMatrix& matrix, const BaselineOptions& options) {
    ValidationOptions vopts;
    vopts.paper_exact_weights = options.paper_exact_weights;
    const ValidationReport report = validate(matrix, vopts);
    if (!report.passed())
        throw ValidationError("invalid decision matrix: " + report.summary());
}

} // namespace detail

/// Weighted sum over vector-normalized values (so constant columns are fine).
inline BaselineResult wsm(const DecisionMatrix& matrix, const BaselineOptions& options = {}) {
    detail::require_valid(matrix, options);
    const NormalizedMatrix r = normalize_vector(matrix);
    const std::vector<double> w = matrix.weights();

    BaselineResult out;
    out.method = BaselineMethod::WSM;
    for (std::size_t i = 0; i < r.rows; ++i) {
        double score = 0.0;
        for (std::size_t j = 0; j < r.cols; ++j) score += w[j] * r.value(i, j);
        out.scores.emplace_back(matrix.alternatives()[i], score);
    }
    out.ranking = rank_from_scores(out.scores, options.tie_tolerance);
    return out;
}

/// Closeness to the ideal point. Columns are 2-norm normalized without any
/// direction flip; direction enters when picking the ideal / anti-ideal.
inline BaselineResult topsis(const DecisionMatrix& matrix, const BaselineOptions& options = {}) {
    detail::require_valid(matrix, options);
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();
    const std::vector<double> w = matrix.weights();

    // weighted plain-normalized matrix v_ij = w_j * x_ij / ||col j||
    std::vector<double> v(m * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double sq = 0.0;
        for (std::size_t i = 0; i < m; ++i) sq += matrix.value(i, j) * matrix.value(i, j);
        const double norm = std::sqrt(sq);
        if (norm == 0.0) continue;
        for (std::size_t i = 0; i < m; ++i) v[i * n + j] = w[j] * matrix.value(i, j) / norm;
    }

    std::vector<double> ideal(n), anti(n);
    for (std::size_t j = 0; j < n; ++j) {
        double lo = v[j], hi = v[j];
        for (std::size_t i = 1; i < m; ++i) {
            lo = std::min(lo, v[i * n + j]);
            hi = std::max(hi, v[i * n + j]);
        }
        const bool benefit = matrix.criteria()[j].direction == Direction::Benefit;
        ideal[j] = benefit ? hi : lo;
        anti[j] = benefit ? lo : hi;
    }

    BaselineResult out;
    out.method = BaselineMethod::Topsis;
    bool any_separated = false;
    for (std::size_t i = 0; i < m; ++i) {
        double dp = 0.0, dm = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double dplus = v[i * n + j] - ideal[j];
            const double dminus = v[i * n + j] - anti[j];
            dp += dplus * dplus;
            dm += dminus * dminus;
        }
        dp = std::sqrt(dp);
        dm = std::sqrt(dm);
        if (dp + dm > 0.0) any_separated = true;
        out.scores.emplace_back(matrix.alternatives()[i], dp + dm > 0.0 ? dm / (dp + dm) : 0.0);
    }
    if (!any_separated)
        throw DegenerateProblem("topsis: every alternative coincides with the ideal point "
                                "(all rows identical)");
    out.ranking = rank_from_scores(out.scores, options.tie_tolerance);
    return out;
}

/// Net outranking flow. With the usual criterion, preference is 1 whenever an
/// alternative strictly beats another on a criterion (after direction), so
/// flows depend only on the orderings within each column.
inline BaselineResult promethee2(const DecisionMatrix& matrix, const BaselineOptions& options = {}) {
    detail::require_valid(matrix, options);
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();
    const std::vector<double> w = matrix.weights();
    if (options.preference == PreferenceFunction::Linear && !(options.linear_threshold > 0.0))
        throw InvalidArgument("promethee2: linear preference threshold must be > 0");

    auto preference = [&](double diff) {
        if (diff <= 0.0) return 0.0;
        if (options.preference == PreferenceFunction::Usual) return 1.0;
        return std::min(1.0, diff / options.linear_threshold);
    };

    // pi(a,b) = sum_j w_j * pref(direction-adjusted difference on j)
    std::vector<double> pi(m * m, 0.0);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b) continue;
            double total = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const bool benefit = matrix.criteria()[j].direction == Direction::Benefit;
                const double diff = benefit ? matrix.value(a, j) - matrix.value(b, j)
                                            : matrix.value(b, j) - matrix.value(a, j);
                total += w[j] * preference(diff);
            }
            pi[a * m + b] = total;
        }
    }

    BaselineResult out;
    out.method = BaselineMethod::Promethee2;
    for (std::size_t a = 0; a < m; ++a) {
        double flow = 0.0;
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b) continue;
            flow += pi[a * m + b] - pi[b * m + a];
        }
        out.scores.emplace_back(matrix.alternatives()[a], flow / static_cast<double>(m - 1));
    }
    out.ranking = rank_from_scores(out.scores, options.tie_tolerance);
    return out;
}

} // namespace cocofiso

#pragma once

/// The two normalization schemes used by the ranking engines.
///
/// MinMax rescales each column to [0,1] against its own range and fails on a
/// column whose values are all identical (the range is zero). Vector divides
/// by the column 2-norm instead, which is defined for every column that is
/// not all zero -- it is the scheme that makes the CoCoFISo variant total.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "cocofiso/core.hpp"
#include "cocofiso/errors.hpp"

namespace cocofiso {

enum class NormScheme { MinMax, Vector };

/// Normalized view of a decision matrix. `source` is non-owning and must
/// outlive this object; evaluations treat normalized matrices as transient.
struct NormalizedMatrix {
    NormScheme scheme = NormScheme::MinMax;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values; // row-major
    std::vector<std::string> warnings;
    const DecisionMatrix* source = nullptr;

    double value(std::size_t row, std::size_t col) const { return values[row * cols + col]; }
};

/// Range normalization: benefit columns map min->0 and max->1, cost columns
/// the reverse. Throws DegenerateCriterion naming every constant column.
inline NormalizedMatrix normalize_minmax(const DecisionMatrix& matrix) {
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();

    std::vector<double> lo(n), hi(n);
    std::vector<std::string> degenerate;
    for (std::size_t j = 0; j < n; ++j) {
        lo[j] = hi[j] = matrix.value(0, j);
        for (std::size_t i = 1; i < m; ++i) {
            lo[j] = std::min(lo[j], matrix.value(i, j));
            hi[j] = std::max(hi[j], matrix.value(i, j));
        }
        if (hi[j] == lo[j]) degenerate.push_back(matrix.criteria()[j].name);
    }
    if (!degenerate.empty()) {
        std::string names;
        for (const auto& d : degenerate) {
            if (!names.empty()) names += ", ";
            names += d;
        }
        throw DegenerateCriterion("degenerate criterion: " + names +
                                      " (identical value for every alternative)",
                                  std::move(degenerate));
    }

    NormalizedMatrix out;
    out.scheme = NormScheme::MinMax;
    out.rows = m;
    out.cols = n;
    out.source = &matrix;
    out.values.resize(m * n);
    for (std::size_t j = 0; j < n; ++j) {
        const double range = hi[j] - lo[j];
        const bool benefit = matrix.criteria()[j].direction == Direction::Benefit;
        for (std::size_t i = 0; i < m; ++i) {
            const double x = matrix.value(i, j);
            out.values[i * n + j] = benefit ? (x - lo[j]) / range : (hi[j] - x) / range;
        }
    }
    return out;
}

/// 2-norm normalization: r = x / ||column||. Cost columns are flipped to
/// 1 - x / ||column|| so that larger normalized values stay better. An
/// all-zero column normalizes to zeros and adds a warning instead of failing.
inline NormalizedMatrix normalize_vector(const DecisionMatrix& matrix) {
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();

    NormalizedMatrix out;
    out.scheme = NormScheme::Vector;
    out.rows = m;
    out.cols = n;
    out.source = &matrix;
    out.values.resize(m * n);
    for (std::size_t j = 0; j < n; ++j) {
        double sq = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double x = matrix.value(i, j);
            sq += x * x;
        }
        const double norm = std::sqrt(sq);
        const bool benefit = matrix.criteria()[j].direction == Direction::Benefit;
        if (norm == 0.0) {
            out.warnings.push_back("criterion '" + matrix.criteria()[j].name +
                                   "' is all zero; normalized column set to 0");
            for (std::size_t i = 0; i < m; ++i) out.values[i * n + j] = 0.0;
            continue;
        }
        for (std::size_t i = 0; i < m; ++i) {
            const double r = matrix.value(i, j) / norm;
            out.values[i * n + j] = benefit ? r : 1.0 - r;
        }
    }
    return out;
}

} // namespace cocofiso

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cocofiso {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Precondition violations: bad lambda, mismatched id sets, wrong run counts, ...
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A decision matrix failed structural validation; the message lists the violations.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Min-max normalization hit a criterion whose value is identical for every
/// alternative (max == min, so the denominator is zero).
class DegenerateCriterion : public Error {
public:
    DegenerateCriterion(const std::string& message, std::vector<std::string> criteria)
        : Error(message), criteria_(std::move(criteria)) {}

    const std::vector<std::string>& criteria() const noexcept { return criteria_; }

private:
    std::vector<std::string> criteria_;
};

/// The classic relative appraisal score needs min S > 0 and min P > 0; an
/// alternative holding the minimum on every criterion drives both to zero.
class ZeroMinAggregate : public Error {
public:
    ZeroMinAggregate(const std::string& message, std::vector<std::string> alternatives)
        : Error(message), alternatives_(std::move(alternatives)) {}

    const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }

private:
    std::vector<std::string> alternatives_;
};

/// Every alternative has S + P == 0, so the share-based appraisal is undefined.
class AllZeroScores : public Error {
public:
    using Error::Error;
};

/// lambda * max S + (1 - lambda) * max P == 0 in the balanced appraisal.
class DegenerateLambda : public Error {
public:
    using Error::Error;
};

/// Every alternative coincides with both the ideal and the anti-ideal point.
class DegenerateProblem : public Error {
public:
    using Error::Error;
};

/// Malformed input file; line and column are 1-based (column counts fields).
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(message), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_ = 0;
    std::size_t column_ = 0;
};

} // namespace cocofiso

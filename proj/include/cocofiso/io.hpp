#pragma once

/// File formats and report emission.
///
/// Matrix file (CSV, UTF-8, '.' decimal point, no thousands separators):
///
///     alternative,PC,DR,DC,PW,OP
///     L101,5,100,3,5,5
///     ...
///
/// Criterion directions and weights are not part of the matrix file; they
/// come from the problem configuration. A matrix loaded on its own defaults
/// every criterion to benefit with uniform weight 1/n.
///
/// Problem configuration (flat key = value lines, '#' comments, one
/// [criterion NAME] section per criterion):
///
///     matrix = l1_students.csv      # resolved relative to the config file
///     method = cocofiso             # cocoso|cocofiso|wsm|topsis|promethee2
///     lambda = 0.5
///     tie_tolerance = 1e-9
///     paper_exact_weights = true    # waive the weight-sum = 1 check
///     auto_repair = false           # classic: drop degenerate criteria
///
///     [criterion PC]
///     direction = benefit           # benefit|cost
///     weight = 0.45
///
/// When any criterion section is present, every matrix column must have one.
/// All report writers emit 6-decimal scores and are byte-deterministic.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cocofiso/baselines.hpp"
#include "cocofiso/core.hpp"
#include "cocofiso/engine.hpp"
#include "cocofiso/errors.hpp"
#include "cocofiso/sensitivity.hpp"

namespace cocofiso {

enum class Method { CoCoSo, CoCoFISo, WSM, Topsis, Promethee2 };

inline const char* to_string(Method m) {
    switch (m) {
        case Method::CoCoSo: return "cocoso";
        case Method::CoCoFISo: return "cocofiso";
        case Method::WSM: return "wsm";
        case Method::Topsis: return "topsis";
        default: return "promethee2";
    }
}

inline Method parse_method(std::string_view text) {
    if (text == "cocoso") return Method::CoCoSo;
    if (text == "cocofiso") return Method::CoCoFISo;
    if (text == "wsm") return Method::WSM;
    if (text == "topsis") return Method::Topsis;
    if (text == "promethee2") return Method::Promethee2;
    throw InvalidArgument("unknown method '" + std::string(text) +
                          "' (expected cocoso|cocofiso|wsm|topsis|promethee2)");
}

namespace detail {

inline std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

inline std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trim(std::string_view(line).substr(start)));
            break;
        }
        fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

inline double parse_number(const std::string& field, const std::string& source, std::size_t line,
                           std::size_t column) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                             ": expected a number, got '" + field + "'",
                         line, column);
    }
    return value;
}

inline std::string format_fixed(double value, int decimals = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

/// Shortest decimal that round-trips exactly.
inline std::string format_roundtrip(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    double back = 0.0;
    for (int precision = 1; precision <= 16; ++precision) {
        char candidate[64];
        std::snprintf(candidate, sizeof(candidate), "%.*g", precision, value);
        std::sscanf(candidate, "%lf", &back);
        if (back == value) return candidate;
    }
    return buf;
}

} // namespace detail

/// Parse a decision matrix from CSV. `source_name` labels errors.
inline DecisionMatrix parse_matrix_csv(std::istream& in, const std::string& source_name) {
    std::string line;
    std::size_t line_no = 0;

    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::trim(line).empty()) continue;
        header = detail::split_fields(line);
        break;
    }
    if (header.empty())
        throw ParseError(source_name + ": empty file", line_no, 1);
    if (header[0] != "alternative")
        throw ParseError(source_name + ":" + std::to_string(line_no) +
                             ":1: header must start with 'alternative', got '" + header[0] + "'",
                         line_no, 1);
    if (header.size() < 2)
        throw ParseError(source_name + ":" + std::to_string(line_no) + ": no criterion columns",
                         line_no, 1);

    const std::size_t n = header.size() - 1;
    std::vector<CriterionSpec> criteria;
    criteria.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        criteria.push_back({header[j + 1], Direction::Benefit, 1.0 / static_cast<double>(n)});

    std::vector<std::string> alternatives;
    std::vector<double> values;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::trim(line).empty()) continue;
        const std::vector<std::string> fields = detail::split_fields(line);
        if (fields.size() != header.size())
            throw ParseError(source_name + ":" + std::to_string(line_no) + ": ragged row: got " +
                                 std::to_string(fields.size()) + " fields, expected " +
                                 std::to_string(header.size()),
                             line_no, fields.size());
        if (fields[0].empty())
            throw ParseError(source_name + ":" + std::to_string(line_no) +
                                 ":1: empty alternative id",
                             line_no, 1);
        alternatives.push_back(fields[0]);
        for (std::size_t j = 0; j < n; ++j)
            values.push_back(detail::parse_number(fields[j + 1], source_name, line_no, j + 2));
    }
    return DecisionMatrix(std::move(alternatives), std::move(criteria), std::move(values));
}

inline DecisionMatrix load_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file '" + path.string() + "'", 0, 0);
    return parse_matrix_csv(in, path.filename().string());
}

/// Inverse of parse_matrix_csv; values are written so they re-read bit-equal.
inline void write_matrix_csv(std::ostream& out, const DecisionMatrix& matrix) {
    out << "alternative";
    for (const auto& c : matrix.criteria()) out << ',' << c.name;
    out << '\n';
    for (std::size_t i = 0; i < matrix.alternative_count(); ++i) {
        out << matrix.alternatives()[i];
        for (std::size_t j = 0; j < matrix.criterion_count(); ++j)
            out << ',' << detail::format_roundtrip(matrix.value(i, j));
        out << '\n';
    }
}

struct ProblemConfig {
    std::filesystem::path matrix_path;
    std::vector<CriterionSpec> criteria; // may be empty: keep matrix defaults
    Method method = Method::CoCoFISo;
    double lambda = 0.5;
    double tie_tolerance = kDefaultTieTolerance;
    bool paper_exact_weights = false;
    bool auto_repair = false;
};

inline ProblemConfig parse_config(std::istream& in, const std::string& source_name,
                                  const std::filesystem::path& base_dir) {
    ProblemConfig config;
    std::string line;
    std::size_t line_no = 0;
    std::string section; // criterion name, or empty for top level
    bool have_matrix = false;

    auto fail = [&](const std::string& message) -> ParseError {
        return ParseError(source_name + ":" + std::to_string(line_no) + ": " + message, line_no, 1);
    };
    auto parse_bool = [&](const std::string& value) {
        if (value == "true") return true;
        if (value == "false") return false;
        throw fail("expected true or false, got '" + value + "'");
    };

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string text = detail::trim(line);
        if (text.empty()) continue;

        if (text.front() == '[') {
            if (text.back() != ']') throw fail("unterminated section header");
            const std::string inner = detail::trim(std::string_view(text).substr(1, text.size() - 2));
            if (inner.rfind("criterion ", 0) != 0)
                throw fail("unknown section '" + inner + "' (expected [criterion NAME])");
            section = detail::trim(std::string_view(inner).substr(10));
            if (section.empty()) throw fail("criterion section needs a name");
            for (const auto& c : config.criteria)
                if (c.name == section) throw fail("duplicate criterion section '" + section + "'");
            config.criteria.push_back({section, Direction::Benefit, 0.0});
            continue;
        }

        const auto eq = text.find('=');
        if (eq == std::string::npos) throw fail("expected key = value");
        const std::string key = detail::trim(std::string_view(text).substr(0, eq));
        const std::string value = detail::trim(std::string_view(text).substr(eq + 1));
        if (key.empty()) throw fail("empty key");
        if (value.empty()) throw fail("empty value for '" + key + "'");

        if (section.empty()) {
            if (key == "matrix") {
                std::filesystem::path p(value);
                config.matrix_path = p.is_absolute() ? p : base_dir / p;
                have_matrix = true;
            } else if (key == "method") {
                config.method = parse_method(value);
            } else if (key == "lambda") {
                config.lambda = detail::parse_number(value, source_name, line_no, 1);
            } else if (key == "tie_tolerance") {
                config.tie_tolerance = detail::parse_number(value, source_name, line_no, 1);
            } else if (key == "paper_exact_weights") {
                config.paper_exact_weights = parse_bool(value);
            } else if (key == "auto_repair") {
                config.auto_repair = parse_bool(value);
            } else {
                throw fail("unknown key '" + key + "'");
            }
        } else {
            CriterionSpec& spec = config.criteria.back();
            if (key == "direction") {
                if (value == "benefit")
                    spec.direction = Direction::Benefit;
                else if (value == "cost")
                    spec.direction = Direction::Cost;
                else
                    throw fail("direction must be benefit or cost, got '" + value + "'");
            } else if (key == "weight") {
                spec.weight = detail::parse_number(value, source_name, line_no, 1);
            } else {
                throw fail("unknown criterion key '" + key + "'");
            }
        }
    }
    if (!have_matrix)
        throw ParseError(source_name + ": missing required key 'matrix'", line_no, 1);
    return config;
}

inline ProblemConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path.string() + "'", 0, 0);
    return parse_config(in, path.filename().string(), path.parent_path());
}

/// Load the configured matrix and apply the configured criterion specs.
/// Configured criteria must cover the matrix header exactly.
inline DecisionMatrix load_problem(const ProblemConfig& config) {
    DecisionMatrix matrix = load_matrix(config.matrix_path);
    if (config.criteria.empty()) return matrix;

    std::vector<CriterionSpec> criteria;
    criteria.reserve(matrix.criterion_count());
    for (const auto& column : matrix.criteria()) {
        const auto it = std::find_if(config.criteria.begin(), config.criteria.end(),
                                     [&](const CriterionSpec& c) { return c.name == column.name; });
        if (it == config.criteria.end())
            throw InvalidArgument("config: no [criterion " + column.name +
                                  "] section for matrix column '" + column.name + "'");
        criteria.push_back(*it);
    }
    for (const auto& c : config.criteria) {
        const bool known = std::any_of(matrix.criteria().begin(), matrix.criteria().end(),
                                       [&](const CriterionSpec& col) { return col.name == c.name; });
        if (!known)
            throw InvalidArgument("config: criterion '" + c.name + "' is not a matrix column");
    }
    return DecisionMatrix(matrix.alternatives(), std::move(criteria), matrix.values());
}

// ---- report writers -------------------------------------------------------

inline void write_ranking_csv(std::ostream& out, const Ranking& ranking) {
    out << "alternative,score,rank\n";
    for (const auto& e : ranking.entries())
        out << e.alternative << ',' << detail::format_fixed(e.score) << ',' << e.rank << '\n';
}

inline void write_ranking_pretty(std::ostream& out, const Ranking& ranking) {
    std::size_t width = 11; // "alternative"
    for (const auto& e : ranking.entries()) width = std::max(width, e.alternative.size());
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-*s  %12s  %4s\n", static_cast<int>(width), "alternative",
                  "score", "rank");
    out << buf;
    for (const auto& e : ranking.entries()) {
        std::snprintf(buf, sizeof(buf), "%-*s  %12.6f  %4d\n", static_cast<int>(width),
                      e.alternative.c_str(), e.score, e.rank);
        out << buf;
    }
}

struct ComparisonRow {
    std::string method_a;
    std::string method_b;
    double spearman = 0.0;
    double kendall = 0.0;
    double agreement = 0.0;
};

inline void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows) {
    out << "method_a,method_b,spearman,kendall,agreement_percent\n";
    for (const auto& r : rows) {
        out << r.method_a << ',' << r.method_b << ',' << detail::format_fixed(r.spearman) << ','
            << detail::format_fixed(r.kendall) << ',' << detail::format_fixed(r.agreement) << '\n';
    }
}

inline void write_comparison_pretty(std::ostream& out, std::span<const ComparisonRow> rows) {
    char buf[200];
    std::snprintf(buf, sizeof(buf), "%-12s  %-12s  %10s  %10s  %10s\n", "method a", "method b",
                  "spearman", "kendall", "agree %");
    out << buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%-12s  %-12s  %10.6f  %10.6f  %10.2f\n",
                      r.method_a.c_str(), r.method_b.c_str(), r.spearman, r.kendall, r.agreement);
        out << buf;
    }
}

inline void write_sensitivity_csv(std::ostream& out, const SensitivityReport& report) {
    out << "alternative";
    for (const auto& s : report.scenarios) out << ',' << s.label;
    out << '\n';
    for (std::size_t i = 0; i < report.alternatives.size(); ++i) {
        out << report.alternatives[i];
        for (int rank : report.rank_matrix[i]) out << ',' << rank;
        out << '\n';
    }
    out << '\n';
    out << "criterion,different_pct,half_equal_pct,three_equal_pct,stable_pct\n";
    for (const auto& g : report.stability.groups) {
        out << g.criterion;
        for (double pct : g.percent) out << ',' << detail::format_fixed(pct);
        out << '\n';
    }
}

inline void write_sensitivity_pretty(std::ostream& out, const SensitivityReport& report) {
    std::size_t width = 11;
    for (const auto& id : report.alternatives) width = std::max(width, id.size());
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%-*s", static_cast<int>(width), "alternative");
    out << buf;
    for (const auto& s : report.scenarios) {
        std::snprintf(buf, sizeof(buf), " %4s", s.label.c_str());
        out << buf;
    }
    out << '\n';
    for (std::size_t i = 0; i < report.alternatives.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%-*s", static_cast<int>(width),
                      report.alternatives[i].c_str());
        out << buf;
        for (int rank : report.rank_matrix[i]) {
            std::snprintf(buf, sizeof(buf), " %4d", rank);
            out << buf;
        }
        out << '\n';
    }
    out << '\n';
    out << "rank stability by prioritized criterion (% of alternatives)\n";
    std::snprintf(buf, sizeof(buf), "%-10s  %9s  %9s  %9s  %9s\n", "criterion", "different",
                  "half", "three", "stable");
    out << buf;
    for (const auto& g : report.stability.groups) {
        std::snprintf(buf, sizeof(buf), "%-10s  %9.2f  %9.2f  %9.2f  %9.2f\n", g.criterion.c_str(),
                      g.percent[0], g.percent[1], g.percent[2], g.percent[3]);
        out << buf;
    }
}

} // namespace cocofiso

#pragma once

/// Rank-agreement analytics: Spearman (mid-rank ties), Kendall tau-b,
/// exact-rank agreement percentage, and the four-situation stability
/// classification of repeated sensitivity runs.

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cocofiso/core.hpp"
#include "cocofiso/errors.hpp"

namespace cocofiso {

namespace detail {

/// Aligned rank vectors for the shared id set; throws on any mismatch.
inline std::pair<std::vector<int>, std::vector<int>> aligned_ranks(const Ranking& r1,
                                                                   const Ranking& r2,
                                                                   const char* where) {
    if (r1.size() != r2.size())
        throw InvalidArgument(std::string(where) + ": rankings differ in size");
    if (r1.size() < 2)
        throw InvalidArgument(std::string(where) + ": need at least 2 alternatives");
    const auto map2 = r2.rank_map();
    std::vector<int> a, b;
    a.reserve(r1.size());
    b.reserve(r1.size());
    for (const auto& e : r1.entries()) {
        const auto it = map2.find(e.alternative);
        if (it == map2.end())
            throw InvalidArgument(std::string(where) + ": alternative '" + e.alternative +
                                  "' missing from second ranking");
        a.push_back(e.rank);
        b.push_back(it->second);
    }
    return {std::move(a), std::move(b)};
}

/// Competition rank -> fractional (mid) rank: a tie group of size s at rank r
/// occupies positions r..r+s-1, so each member gets r + (s-1)/2.
inline std::vector<double> fractional_ranks(const std::vector<int>& ranks) {
    std::unordered_map<int, int> multiplicity;
    for (int r : ranks) ++multiplicity[r];
    std::vector<double> out;
    out.reserve(ranks.size());
    for (int r : ranks) out.push_back(r + (multiplicity[r] - 1) * 0.5);
    return out;
}

} // namespace detail

/// Pearson correlation of fractional ranks; equals 1 - 6*sum(d^2)/(n(n^2-1))
/// when neither ranking has ties.
inline double spearman(const Ranking& r1, const Ranking& r2) {
    auto [a, b] = detail::aligned_ranks(r1, r2, "spearman");
    const std::vector<double> x = detail::fractional_ranks(a);
    const std::vector<double> y = detail::fractional_ranks(b);
    const std::size_t n = x.size();

    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw InvalidArgument("spearman: a ranking is entirely tied");
    return sxy / std::sqrt(sxx * syy);
}

/// Kendall tau-b: (concordant - discordant) / sqrt((n0 - n1)(n0 - n2)) with
/// the usual per-ranking tie counts n1, n2.
inline double kendall(const Ranking& r1, const Ranking& r2) {
    auto [a, b] = detail::aligned_ranks(r1, r2, "kendall");
    const std::size_t n = a.size();

    double concordant = 0.0, discordant = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double prod = static_cast<double>(a[i] - a[j]) * static_cast<double>(b[i] - b[j]);
            if (prod > 0.0)
                concordant += 1.0;
            else if (prod < 0.0)
                discordant += 1.0;
        }
    }

    auto tie_pairs = [](const std::vector<int>& ranks) {
        std::unordered_map<int, double> counts;
        for (int r : ranks) counts[r] += 1.0;
        double t = 0.0;
        for (const auto& [rank, c] : counts) t += c * (c - 1.0) / 2.0;
        return t;
    };
    const double n0 = static_cast<double>(n) * (static_cast<double>(n) - 1.0) / 2.0;
    const double n1 = tie_pairs(a);
    const double n2 = tie_pairs(b);
    const double denom = std::sqrt((n0 - n1) * (n0 - n2));
    if (denom == 0.0)
        throw InvalidArgument("kendall: a ranking is entirely tied");
    return (concordant - discordant) / denom;
}

/// Percentage of alternatives assigned the identical rank by both rankings.
inline double agreement_percent(const Ranking& r1, const Ranking& r2) {
    auto [a, b] = detail::aligned_ranks(r1, r2, "agreement_percent");
    std::size_t equal = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == b[i]) ++equal;
    return 100.0 * static_cast<double>(equal) / static_cast<double>(a.size());
}

struct CorrelationReport {
    double spearman = 0.0;
    double kendall = 0.0;
    std::size_t n = 0;
};

inline CorrelationReport correlate(const Ranking& r1, const Ranking& r2) {
    return {spearman(r1, r2), kendall(r1, r2), r1.size()};
}

/// How often an alternative keeps its rank across the 4 runs that prioritize
/// one criterion: the situation is the maximum multiplicity of any single
/// rank value among the 4 (1 = all different ... 4 = fully stable).
enum class Situation { DifferentRanks = 1, HalfEqual = 2, ThreeEqual = 3, Stable = 4 };

struct CriterionRuns {
    std::string criterion;
    std::vector<Ranking> runs; // exactly 4
};

struct StabilityClassification {
    struct Group {
        std::string criterion;
        std::vector<std::pair<std::string, Situation>> by_alternative;
        std::array<double, 4> percent{}; // situations 1..4, sums to 100
    };
    std::vector<Group> groups;
};

inline StabilityClassification stability_classify(std::span<const CriterionRuns> runs_per_criterion,
                                                  std::span<const std::string> order = {}) {
    StabilityClassification out;
    for (const auto& group : runs_per_criterion) {
        if (group.runs.size() != 4)
            throw InvalidArgument("stability_classify: criterion '" + group.criterion + "' has " +
                                  std::to_string(group.runs.size()) + " runs, expected 4");

        std::vector<std::string> ids(order.begin(), order.end());
        if (ids.empty())
            for (const auto& e : group.runs.front().entries()) ids.push_back(e.alternative);

        StabilityClassification::Group g;
        g.criterion = group.criterion;
        std::array<std::size_t, 4> counts{};
        for (const auto& id : ids) {
            std::map<int, int> multiplicity;
            for (const auto& run : group.runs) ++multiplicity[run.rank_of(id)];
            int max_mult = 0;
            for (const auto& [rank, c] : multiplicity) max_mult = std::max(max_mult, c);
            const auto situation = static_cast<Situation>(max_mult);
            ++counts[static_cast<std::size_t>(max_mult - 1)];
            g.by_alternative.emplace_back(id, situation);
        }
        for (std::size_t s = 0; s < 4; ++s)
            g.percent[s] = 100.0 * static_cast<double>(counts[s]) / static_cast<double>(ids.size());
        out.groups.push_back(std::move(g));
    }
    return out;
}

} // namespace cocofiso

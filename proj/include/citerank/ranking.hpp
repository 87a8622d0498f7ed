#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "citerank/indicators.hpp"

namespace citerank {

struct RankingRow {
    std::string journal_id;
    double value = 0.0;
    std::size_t rank = 0;     // 1-based, no gaps
    double percentile = 0.0;  // 100 * (N - rank + 1) / N
};

struct RankingTable {
    std::string indicator_name;
    std::optional<std::string> scope;  // category label; empty = global
    std::vector<RankingRow> rows;

    std::optional<std::size_t> rank_of(std::string_view journal_id) const;
};

inline constexpr std::string_view kPercentileFormula = "percentile = 100*(N - rank + 1)/N";

/// Orders (id, value) pairs by value descending, ties by ascending id, and
/// returns the permutation. Entries without a value are left out.
std::vector<std::size_t> ranking_order(const std::vector<std::string>& ids,
                                       const std::vector<std::optional<double>>& values);

/// Journals without a value on `key` are excluded. With a category, only
/// journals listing that category take part.
RankingTable rank(const std::vector<JournalIndicator>& indicators, IndicatorKey key,
                  const std::optional<std::string>& category = std::nullopt);
RankingTable rank(const std::vector<JournalIndicator>& indicators, std::string_view key,
                  const std::optional<std::string>& category = std::nullopt);

struct Correlation {
    double spearman = 0.0;
    std::size_t n = 0;
};

/// Spearman correlation over the journals both tables contain. Those journals
/// are re-ranked 1..n by each table's rank column first. Throws
/// InsufficientData for fewer than 3 common journals.
Correlation correlate(const RankingTable& a, const RankingTable& b);

}  // namespace citerank

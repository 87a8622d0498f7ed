#include "citerank/ranking.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "citerank/errors.hpp"

namespace citerank {

std::optional<std::size_t> RankingTable::rank_of(std::string_view journal_id) const {
    for (const auto& row : rows) {
        if (row.journal_id == journal_id) return row.rank;
    }
    return std::nullopt;
}

std::vector<std::size_t> ranking_order(const std::vector<std::string>& ids,
                                       const std::vector<std::optional<double>>& values) {
    std::vector<std::size_t> order;
    order.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (values[i]) order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (*values[a] != *values[b]) return *values[a] > *values[b];
        return ids[a] < ids[b];
    });
    return order;
}

RankingTable rank(const std::vector<JournalIndicator>& indicators, IndicatorKey key,
                  const std::optional<std::string>& category) {
    std::vector<std::string> ids;
    std::vector<std::optional<double>> values;
    for (const auto& ind : indicators) {
        if (category && std::find(ind.categories.begin(), ind.categories.end(), *category) ==
                            ind.categories.end()) {
            continue;
        }
        ids.push_back(ind.journal_id);
        values.push_back(ind.value(key));
    }

    RankingTable table;
    table.indicator_name = std::string(to_string(key));
    table.scope = category;
    const auto order = ranking_order(ids, values);
    const auto n = static_cast<double>(order.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        const auto i = order[r];
        const auto position = r + 1;
        table.rows.push_back(RankingRow{ids[i], *values[i], position,
                                        100.0 * (n - static_cast<double>(position) + 1.0) / n});
    }
    return table;
}

RankingTable rank(const std::vector<JournalIndicator>& indicators, std::string_view key,
                  const std::optional<std::string>& category) {
    return rank(indicators, parse_indicator(key), category);
}

Correlation correlate(const RankingTable& a, const RankingTable& b) {
    std::unordered_map<std::string_view, std::size_t> rank_b;
    for (const auto& row : b.rows) rank_b.emplace(row.journal_id, row.rank);

    struct Pair {
        std::size_t ra, rb;
    };
    std::vector<Pair> common;
    for (const auto& row : a.rows) {
        if (auto it = rank_b.find(row.journal_id); it != rank_b.end()) common.push_back({row.rank, it->second});
    }
    const auto n = common.size();
    if (n < 3) {
        throw InsufficientData("rank correlation needs at least 3 common journals, found " +
                               std::to_string(n));
    }

    // Dense re-ranking within the common subset; rank columns are distinct.
    auto dense = [&](auto member) {
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](auto x, auto y) { return common[x].*member < common[y].*member; });
        std::vector<std::int64_t> out(n);
        for (std::size_t r = 0; r < n; ++r) out[idx[r]] = static_cast<std::int64_t>(r + 1);
        return out;
    };
    const auto xa = dense(&Pair::ra);
    const auto xb = dense(&Pair::rb);

    std::int64_t d2 = 0;
    for (std::size_t i = 0; i < n; ++i) d2 += (xa[i] - xb[i]) * (xa[i] - xb[i]);
    const auto nn = static_cast<double>(n);
    return Correlation{1.0 - 6.0 * static_cast<double>(d2) / (nn * (nn * nn - 1.0)), n};
}

}  // namespace citerank

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "citerank/errors.hpp"
#include "citerank/ranking.hpp"
#include "citerank/synthetic.hpp"
#include "support/oracle.hpp"

using namespace citerank;

namespace {

JournalIndicator ind(std::string id, std::optional<double> fncsi, std::vector<std::string> cats = {}) {
    JournalIndicator x;
    x.journal_id = std::move(id);
    x.fncsi = fncsi;
    x.fnif = fncsi ? std::optional<double>(*fncsi * 3.0) : std::nullopt;
    x.categories = std::move(cats);
    return x;
}

RankingTable table_from(const std::vector<std::pair<std::string, double>>& rows) {
    std::vector<JournalIndicator> v;
    for (const auto& [id, value] : rows) v.push_back(ind(id, value));
    return rank(v, IndicatorKey::Fncsi);
}

}  // namespace

TEST_CASE("rank orders by value, then by journal id", "[ranking]") {
    auto t = rank({ind("jB", 0.7), ind("jA", 0.9)}, IndicatorKey::Fncsi);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].journal_id == "jA");
    CHECK(t.rows[0].rank == 1);
    CHECK(t.rows[1].rank == 2);
    CHECK(t.indicator_name == "fncsi");

    t = rank({ind("jB", 0.5), ind("jA", 0.5)}, "fncsi");
    CHECK(t.rows[0].journal_id == "jA");
    CHECK(t.rows[1].journal_id == "jB");
}

TEST_CASE("rank excludes unrankable journals and rejects unknown keys", "[ranking]") {
    const std::vector<JournalIndicator> v = {ind("a", 0.2), ind("b", std::nullopt), ind("c", 0.4)};
    const auto t = rank(v, IndicatorKey::Fncsi);
    CHECK(t.rows.size() == 2);
    CHECK_FALSE(t.rank_of("b").has_value());
    CHECK_THROWS_AS(rank(v, "impact"), UsageError);
    CHECK(rank(v, IndicatorKey::Jif).rows.empty());
}

TEST_CASE("percentile ranks run from 100 down to 100/N", "[ranking]") {
    std::vector<JournalIndicator> v;
    for (int i = 0; i < 7; ++i) v.push_back(ind("j" + std::to_string(i), 0.1 * i));
    const auto t = rank(v, IndicatorKey::Fncsi);
    CHECK(t.rows.front().percentile == 100.0);
    CHECK(t.rows.back().percentile == 100.0 / 7.0);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        CHECK(t.rows[i].rank == i + 1);
        if (i) {
            CHECK(t.rows[i].percentile < t.rows[i - 1].percentile);
            CHECK(t.rows[i].value <= t.rows[i - 1].value);
        }
    }
}

TEST_CASE("category scope includes multi-category journals in each table", "[ranking]") {
    const std::vector<JournalIndicator> v = {ind("a", 0.9, {"ONCOLOGY", "CELL BIOLOGY"}), ind("b", 0.8, {"ONCOLOGY"}),
                                             ind("c", 0.7, {"CELL BIOLOGY"}), ind("d", 0.6, {})};
    const auto onc = rank(v, IndicatorKey::Fncsi, std::string("ONCOLOGY"));
    REQUIRE(onc.rows.size() == 2);
    CHECK(onc.scope == "ONCOLOGY");
    const auto cell = rank(v, IndicatorKey::Fncsi, std::string("CELL BIOLOGY"));
    REQUIRE(cell.rows.size() == 2);
    CHECK(cell.rows[1].journal_id == "c");
    CHECK(cell.rows[1].percentile == 50.0);
    CHECK(rank(v, IndicatorKey::Fncsi, std::string("NONE")).rows.empty());
}

TEST_CASE("ranking depends only on the order of values", "[ranking][property]") {
    std::mt19937_64 gen(4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<JournalIndicator> v, w;
        for (int i = 0; i < 20; ++i) {
            const double x = static_cast<double>(gen() % 10) / 10.0;  // deliberate ties
            v.push_back(ind("j" + std::to_string(i), x));
            w.push_back(ind("j" + std::to_string(i), std::exp(3.0 * x) + 7.0));
        }
        const auto a = rank(v, IndicatorKey::Fncsi);
        const auto b = rank(w, IndicatorKey::Fncsi);
        for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].journal_id == b.rows[i].journal_id);
    }
}

TEST_CASE("correlate basics", "[ranking][correlation]") {
    const auto t = table_from({{"a", 4}, {"b", 3}, {"c", 2}, {"d", 1}});
    const auto rev = table_from({{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}});
    CHECK(correlate(t, t).spearman == 1.0);
    CHECK(correlate(t, t).n == 4);
    CHECK(correlate(t, rev).spearman == -1.0);
    CHECK_THROWS_AS(correlate(t, table_from({{"a", 1}, {"b", 2}, {"x", 3}})), InsufficientData);

    // different journal sets: only the common ones count
    const auto partial = table_from({{"z", 9}, {"d", 5}, {"c", 4}, {"b", 3}});
    const auto r = correlate(t, partial);
    CHECK(r.n == 3);
    CHECK(r.spearman == -1.0);
}

TEST_CASE("fncsi and fnif rankings agree with an independent rank correlation", "[ranking][correlation]") {
    SyntheticProfile p;
    p.journals = 40;
    const auto corpus = generate_corpus(p, 21);
    const auto all = compute_all(corpus);
    const auto a = rank(all, IndicatorKey::Fncsi);
    const auto b = rank(all, IndicatorKey::Fnif);
    const auto r = correlate(a, b);

    std::vector<double> x, y;
    for (const auto& row : a.rows) {
        x.push_back(static_cast<double>(row.rank));
        y.push_back(static_cast<double>(b.rank_of(row.journal_id).value()));
    }
    CHECK(r.spearman == Catch::Approx(oracle::pearson(x, y)).margin(1e-12));
    CHECK(r.spearman > 0.8);
}

TEST_CASE("correlate of a table with itself is 1", "[ranking][property]") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto c = oracle::random_corpus(seed, {.max_journals = 15, .max_publications = 200, .max_topics = 3});
        const auto t = rank(compute_all(c), IndicatorKey::Jif);
        if (t.rows.size() < 3) continue;
        CHECK(correlate(t, t).spearman == 1.0);
    }
}

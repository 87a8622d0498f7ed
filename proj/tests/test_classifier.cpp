#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <sstream>

#include "citerank/classifier.hpp"
#include "citerank/errors.hpp"
#include "support/fixtures.hpp"

using namespace citerank;

namespace {

// Corpus with classified papers P0.. carrying `topics`, plus one unclassified
// paper "U".
Corpus with_topics(const std::vector<std::string>& topics) {
    Corpus c;
    c.journals.emplace("j", Journal{"j", "j", {}});
    for (std::size_t i = 0; i < topics.size(); ++i) {
        c.publications.push_back({"P" + std::to_string(i), "j", 2018, DocType::Article, 1, topics[i]});
        c.topics.insert(topics[i]);
    }
    c.publications.push_back({"U", "j", 2018, DocType::Article, 0, std::nullopt});
    return c;
}

std::vector<std::string> ids(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("P" + std::to_string(i));
    return out;
}

std::optional<std::string> topic_of(const Corpus& c, const std::string& id) {
    for (const auto& p : c.publications) {
        if (p.pub_id == id) return p.topic_id;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("strict majority wins", "[classifier]") {
    const auto c = with_topics({"t1", "t1", "t2"});
    const auto [out, report] = assign_majority(c, {{"U", ids(3)}});
    CHECK(topic_of(out, "U") == "t1");
    CHECK(report.assigned == 1);
    CHECK(report.unassigned == 0);
}

TEST_CASE("ties go to the smallest topic id regardless of record order", "[classifier]") {
    // Exhaustive over every ordering of the related ids for several tied
    // multisets: the chosen topic must always be the smallest among the most
    // frequent ones.
    const std::vector<std::vector<std::string>> cases = {
        {"t1", "t2"}, {"t2", "t1"}, {"t3", "t1", "t3", "t1", "t2"}, {"b", "a", "c"}, {"t9", "t10"}};
    for (const auto& topics : cases) {
        const auto c = with_topics(topics);
        std::map<std::string, int> freq;
        for (const auto& t : topics) ++freq[t];
        const auto top = std::max_element(freq.begin(), freq.end(),
                                          [](auto& a, auto& b) { return a.second < b.second; })->second;
        std::string expected;
        for (const auto& [t, n] : freq) {
            if (n == top) {
                expected = t;
                break;
            }
        }
        auto order = ids(topics.size());
        std::sort(order.begin(), order.end());
        do {
            const auto [out, report] = assign_majority(c, {{"U", order}});
            CHECK(topic_of(out, "U") == expected);
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST_CASE("no related topic leaves the paper unclassified", "[classifier]") {
    Corpus c = with_topics({});
    c.publications.push_back({"V", "j", 2018, DocType::Article, 0, std::nullopt});
    const auto [out, report] = assign_majority(c, {{"U", {"V", "EXT1"}}});
    CHECK_FALSE(topic_of(out, "U").has_value());
    CHECK(report.unassigned == 2);  // U and V
    CHECK(report.assigned == 0);
    CHECK(report.ignored_external == 1);
}

TEST_CASE("assignment is single pass, idempotent and never overwrites", "[classifier]") {
    // V gets t1 from P0; U's only related record is V, which was unclassified
    // before the pass, so U stays unclassified.
    Corpus c = with_topics({"t1", "t2"});
    c.publications.push_back({"V", "j", 2018, DocType::Article, 0, std::nullopt});
    const std::vector<RelatedRecords> related = {{"V", {"P0"}}, {"U", {"V"}}, {"P1", {"P0"}}};
    const auto [once, r1] = assign_majority(c, related);
    CHECK(topic_of(once, "V") == "t1");
    CHECK_FALSE(topic_of(once, "U").has_value());
    CHECK(topic_of(once, "P1") == "t2");

    // a second pass may only fill U now that V carries a topic, never change others
    const auto [twice, r2] = assign_majority(once, related);
    for (const auto& p : once.publications) {
        if (p.topic_id) CHECK(topic_of(twice, p.pub_id) == p.topic_id);
    }

    // idempotent when no record points at a newly assigned paper
    const std::vector<RelatedRecords> flat = {{"V", {"P0"}}, {"U", {"P1", "P0", "P1"}}};
    const auto [a, ra] = assign_majority(c, flat);
    const auto [b, rb] = assign_majority(a, flat);
    CHECK(a == b);
    CHECK(topic_of(a, "U") == "t2");
}

TEST_CASE("chosen topic always comes from the related records", "[classifier][property]") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::string> topics;
        const auto n = 1 + gen() % 7;
        for (std::size_t i = 0; i < n; ++i) topics.push_back("t" + std::to_string(gen() % 4));
        const auto c = with_topics(topics);
        const auto [out, report] = assign_majority(c, {{"U", ids(n)}});
        const auto t = topic_of(out, "U");
        REQUIRE(t.has_value());
        CHECK(std::find(topics.begin(), topics.end(), *t) != topics.end());
        CHECK(out.topics == c.topics);
    }
}

TEST_CASE("related-records file validation", "[classifier]") {
    std::istringstream in("pub_id,related_ids\n"
                          "U,P0|P1\n"
                          "W,\n"
                          "X,P0|X\n");
    const auto load = read_related(in);
    REQUIRE(load.records.size() == 1);
    CHECK(load.records[0].related_ids == std::vector<std::string>{"P0", "P1"});
    REQUIRE(load.errors.size() == 2);
    CHECK(load.errors[0].row == 3);
    CHECK_THAT(load.errors[1].message, Catch::Matchers::ContainsSubstring("itself"));

    std::istringstream bad("pub_id,rel\nU,P0\n");
    CHECK_THROWS_AS(read_related(bad), SchemaError);
}

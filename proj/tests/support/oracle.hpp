#pragma once

// Brute-force reference implementations. Everything here works directly on
// Publication records with all-pairs loops and string-keyed maps; nothing is
// shared with the histogram kernel under test.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "citerank/corpus.hpp"

namespace oracle {

using citerank::Corpus;
using citerank::DocType;
using citerank::Publication;

/// All-pairs success probability of `journal` in cell (topic, doc); nullopt
/// when either side is empty.
inline std::optional<double> csi_pairs(const Corpus& c, const std::string& journal, const std::string& topic,
                                       DocType doc) {
    double score = 0.0;
    std::int64_t na = 0, no = 0;
    for (const auto& a : c.publications) {
        if (a.journal_id != journal || !a.topic_id || *a.topic_id != topic || a.doc_type != doc) continue;
        ++na;
    }
    for (const auto& o : c.publications) {
        if (o.journal_id == journal || !o.topic_id || *o.topic_id != topic || o.doc_type != doc) continue;
        ++no;
    }
    if (na == 0 || no == 0) return std::nullopt;
    for (const auto& a : c.publications) {
        if (a.journal_id != journal || !a.topic_id || *a.topic_id != topic || a.doc_type != doc) continue;
        for (const auto& o : c.publications) {
            if (o.journal_id == journal || !o.topic_id || *o.topic_id != topic || o.doc_type != doc) continue;
            if (a.citations > o.citations) score += 1.0;
            else if (a.citations == o.citations) score += 0.5;
        }
    }
    return score / (static_cast<double>(na) * static_cast<double>(no));
}

/// FNCSI following the two-level weighting literally: per-topic mean over
/// doc types, then paper-weighted mean over topics. Cells without comparison
/// papers are dropped and the weights renormalized.
inline std::optional<double> fncsi(const Corpus& c, const std::string& journal) {
    std::map<std::string, std::map<DocType, std::int64_t>> counts;  // topic -> doc -> N_A^{t,d}
    for (const auto& p : c.publications) {
        if (p.journal_id == journal && p.topic_id) ++counts[*p.topic_id][p.doc_type];
    }
    double numerator = 0.0;
    std::int64_t scored_total = 0;
    for (const auto& [topic, by_doc] : counts) {
        double topic_sum = 0.0;
        std::int64_t topic_scored = 0;
        for (const auto& [doc, n] : by_doc) {
            if (auto p = csi_pairs(c, journal, topic, doc)) {
                topic_sum += static_cast<double>(n) * *p;
                topic_scored += n;
            }
        }
        if (topic_scored == 0) continue;
        const double s_t = topic_sum / static_cast<double>(topic_scored);
        numerator += static_cast<double>(topic_scored) * s_t;
        scored_total += topic_scored;
    }
    if (scored_total == 0) return std::nullopt;
    return numerator / static_cast<double>(scored_total);
}

inline double cell_mean(const Corpus& c, const std::string& topic, DocType doc) {
    double sum = 0.0;
    std::int64_t n = 0;
    for (const auto& p : c.publications) {
        if (p.topic_id && *p.topic_id == topic && p.doc_type == doc) {
            sum += static_cast<double>(p.citations);
            ++n;
        }
    }
    return n ? sum / static_cast<double>(n) : 0.0;
}

inline double topic_mean(const Corpus& c, const std::string& topic) {
    double sum = 0.0;
    std::int64_t n = 0;
    for (const auto& p : c.publications) {
        if (p.topic_id && *p.topic_id == topic) {
            sum += static_cast<double>(p.citations);
            ++n;
        }
    }
    return n ? sum / static_cast<double>(n) : 0.0;
}

inline std::optional<double> fnif(const Corpus& c, const std::string& journal) {
    double sum = 0.0;
    std::int64_t n = 0;
    for (const auto& p : c.publications) {
        if (p.journal_id != journal || !p.topic_id) continue;
        ++n;
        const double mu = cell_mean(c, *p.topic_id, p.doc_type);
        if (mu > 0.0) sum += static_cast<double>(p.citations) / mu;
    }
    if (n == 0) return std::nullopt;
    return sum / static_cast<double>(n);
}

inline std::optional<double> expected_jif(const Corpus& c, const std::string& journal) {
    double sum = 0.0;
    std::int64_t n = 0;
    for (const auto& p : c.publications) {
        if (p.journal_id != journal || !p.topic_id) continue;
        ++n;
        sum += topic_mean(c, *p.topic_id);
    }
    if (n == 0) return std::nullopt;
    return sum / static_cast<double>(n);
}

inline std::optional<double> jif(const Corpus& c, const std::string& journal) {
    double sum = 0.0;
    std::int64_t n = 0;
    for (const auto& p : c.publications) {
        if (p.journal_id != journal) continue;
        ++n;
        sum += static_cast<double>(p.citations);
    }
    if (n == 0) return std::nullopt;
    return sum / static_cast<double>(n);
}

/// Pearson correlation of two rank vectors (Spearman when the inputs are ranks).
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

// ---------------------------------------------------------------------------
// Random corpora for property tests.

struct RandomCorpusLimits {
    std::size_t max_journals = 50;
    std::size_t max_publications = 2000;
    std::size_t max_topics = 10;
    std::int64_t max_citations = 40;
    double unclassified_rate = 0.0;
};

inline Corpus random_corpus(std::uint64_t seed, const RandomCorpusLimits& lim = {}) {
    std::mt19937_64 gen(seed);
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return lo + static_cast<std::size_t>(gen() % (hi - lo + 1));
    };
    const auto journals = pick(2, lim.max_journals);
    const auto topics = pick(1, lim.max_topics);
    const auto pubs = pick(journals, lim.max_publications);
    // a skewed citation range makes ties and dominance both common
    const auto cite_cap = static_cast<std::int64_t>(pick(1, static_cast<std::size_t>(lim.max_citations)));

    Corpus c;
    for (std::size_t j = 0; j < journals; ++j) {
        const auto id = "J" + std::to_string(100 + j);
        c.journals.emplace(id, citerank::Journal{id, "Journal " + id, {"C" + std::to_string(j % 3)}});
    }
    for (std::size_t i = 0; i < pubs; ++i) {
        Publication p;
        p.pub_id = "P" + std::to_string(100000 + i);
        p.journal_id = "J" + std::to_string(100 + (i < journals ? i : pick(0, journals - 1)));
        p.pub_year = 2017 + static_cast<int>(gen() % 2);
        p.doc_type = gen() % 4 == 0 ? DocType::Review : DocType::Article;
        const auto u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        p.citations = static_cast<std::int64_t>(u * u * static_cast<double>(cite_cap + 1));
        if (static_cast<double>(gen() >> 11) * 0x1.0p-53 >= lim.unclassified_rate) {
            p.topic_id = "T" + std::to_string(pick(0, topics - 1));
            c.topics.insert(*p.topic_id);
        }
        c.publications.push_back(std::move(p));
    }
    return c;
}

}  // namespace oracle

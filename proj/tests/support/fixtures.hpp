#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "citerank/corpus.hpp"

namespace fixtures {

struct Row {
    std::string journal;
    std::string topic;  // "" = unclassified
    citerank::DocType doc = citerank::DocType::Article;
    std::int64_t citations = 0;
};

/// Corpus with ids P0, P1, ... in row order; journals are created on demand.
inline citerank::Corpus corpus(std::initializer_list<Row> rows) {
    citerank::Corpus c;
    int i = 0;
    for (const auto& r : rows) {
        citerank::Publication p;
        p.pub_id = "P" + std::to_string(i++);
        p.journal_id = r.journal;
        p.pub_year = 2017;
        p.doc_type = r.doc;
        p.citations = r.citations;
        if (!r.topic.empty()) {
            p.topic_id = r.topic;
            c.topics.insert(r.topic);
        }
        c.journals.try_emplace(r.journal, citerank::Journal{r.journal, r.journal, {}});
        c.publications.push_back(std::move(p));
    }
    return c;
}

inline constexpr auto A = citerank::DocType::Article;
inline constexpr auto R = citerank::DocType::Review;

}  // namespace fixtures

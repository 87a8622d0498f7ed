#include "citerank/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "citerank/errors.hpp"
#include "citerank/random.hpp"

namespace citerank {

namespace {

std::string padded(std::string_view prefix, std::size_t value, std::size_t count) {
    const auto width = std::max<std::size_t>(3, std::to_string(count).size());
    auto digits = std::to_string(value);
    return std::string(prefix) + std::string(width - std::min(width, digits.size()), '0') + digits;
}

std::int64_t draw_poisson(Rng& rng, double mean) {
    if (mean > 60.0) {
        return std::max<std::int64_t>(0, std::llround(mean + std::sqrt(mean) * rng.normal()));
    }
    const double limit = std::exp(-mean);
    std::int64_t k = 0;
    double p = rng.uniform();
    while (p > limit) {
        ++k;
        p *= rng.uniform();
    }
    return k;
}

std::int64_t draw_citations(Rng& rng, const SyntheticProfile& profile, double log_scale) {
    switch (profile.family) {
        case CitationFamily::LogNormal:
            return static_cast<std::int64_t>(std::floor(std::exp(log_scale + profile.spread * rng.normal())));
        case CitationFamily::Poisson:
            return draw_poisson(rng, std::exp(log_scale));
        case CitationFamily::Geometric: {
            const double mean = std::exp(log_scale);
            const double p = 1.0 / (1.0 + mean);
            double u = rng.uniform();
            while (u <= 0.0) u = rng.uniform();
            return static_cast<std::int64_t>(std::floor(std::log(u) / std::log1p(-p)));
        }
    }
    return 0;
}

}  // namespace

void SyntheticProfile::validate() const {
    if (journals == 0) throw UsageError("profile: journals must be >= 1");
    if (topics == 0) throw UsageError("profile: topics must be >= 1");
    if (min_size == 0 || min_size > max_size) throw UsageError("profile: need 1 <= min_size <= max_size");
    if (topics_per_journal == 0 || topics_per_journal > topics) {
        throw UsageError("profile: topics_per_journal must be in [1, topics]");
    }
    auto unit = [](double x) { return x >= 0.0 && x <= 1.0; };
    if (!unit(review_fraction)) throw UsageError("profile: review_fraction must be in [0, 1]");
    if (!unit(unclassified_fraction)) throw UsageError("profile: unclassified_fraction must be in [0, 1]");
    if (spread < 0.0 || journal_spread < 0.0 || topic_spread < 0.0) {
        throw UsageError("profile: spreads must be non-negative");
    }
    for (const auto& o : outliers) {
        if (o.journal >= journals) throw UsageError("profile: outlier journal out of range");
        if (o.top_citations < 0) throw UsageError("profile: outlier top_citations must be >= 0");
        if (!unit(o.zero_fraction)) throw UsageError("profile: outlier zero_fraction must be in [0, 1]");
        const auto zeros = static_cast<std::size_t>(std::llround(o.zero_fraction * static_cast<double>(min_size)));
        if (o.top_papers + zeros > min_size) {
            throw UsageError("profile: outlier needs more papers than min_size allows");
        }
    }
}

SyntheticProfile parse_profile(std::string_view json_text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("profile is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw UsageError("profile must be a JSON object");

    SyntheticProfile p;
    try {
        for (const auto& [key, value] : doc.items()) {
            if (key == "journals") p.journals = value.get<std::size_t>();
            else if (key == "topics") p.topics = value.get<std::size_t>();
            else if (key == "min_size") p.min_size = value.get<std::size_t>();
            else if (key == "max_size") p.max_size = value.get<std::size_t>();
            else if (key == "topics_per_journal") p.topics_per_journal = value.get<std::size_t>();
            else if (key == "review_fraction") p.review_fraction = value.get<double>();
            else if (key == "unclassified_fraction") p.unclassified_fraction = value.get<double>();
            else if (key == "location") p.location = value.get<double>();
            else if (key == "spread") p.spread = value.get<double>();
            else if (key == "journal_spread") p.journal_spread = value.get<double>();
            else if (key == "topic_spread") p.topic_spread = value.get<double>();
            else if (key == "review_boost") p.review_boost = value.get<double>();
            else if (key == "year") p.year = value.get<int>();
            else if (key == "family") {
                const auto name = value.get<std::string>();
                if (name == "lognormal") p.family = CitationFamily::LogNormal;
                else if (name == "poisson") p.family = CitationFamily::Poisson;
                else if (name == "geometric") p.family = CitationFamily::Geometric;
                else throw UsageError("profile: unknown family '" + name + "'");
            } else if (key == "outliers") {
                for (const auto& o : value) {
                    OutlierSpec spec;
                    for (const auto& [ok, ov] : o.items()) {
                        if (ok == "journal") spec.journal = ov.get<std::size_t>();
                        else if (ok == "top_citations") spec.top_citations = ov.get<std::int64_t>();
                        else if (ok == "top_papers") spec.top_papers = ov.get<std::size_t>();
                        else if (ok == "zero_fraction") spec.zero_fraction = ov.get<double>();
                        else throw UsageError("profile: unknown outlier key '" + ok + "'");
                    }
                    p.outliers.push_back(spec);
                }
            } else {
                throw UsageError("profile: unknown key '" + key + "'");
            }
        }
    } catch (const json::exception& e) {
        throw UsageError(std::string("profile: bad value: ") + e.what());
    }
    p.validate();
    return p;
}

std::string journal_label(std::size_t index, std::size_t count) { return padded("J", index, count); }

Corpus generate_corpus(const SyntheticProfile& profile, std::uint64_t seed) {
    profile.validate();
    Rng rng(seed);

    std::vector<std::string> topic_ids;
    std::vector<double> topic_effect;
    for (std::size_t t = 0; t < profile.topics; ++t) {
        topic_ids.push_back(padded("T", t, profile.topics));
        topic_effect.push_back(profile.topic_spread * (rng.uniform() - 0.5));
    }

    std::vector<Journal> journals;
    std::vector<Publication> pubs;
    std::size_t next_pub = 0;
    const std::size_t pub_width_hint = profile.journals * profile.max_size;

    for (std::size_t j = 0; j < profile.journals; ++j) {
        const auto id = journal_label(j, profile.journals);
        const double journal_effect = profile.journal_spread * rng.normal();

        // primary topic plus distinct extras
        std::vector<std::size_t> topics{j % profile.topics};
        while (topics.size() < profile.topics_per_journal) {
            const auto t = static_cast<std::size_t>(rng.below(profile.topics));
            if (std::find(topics.begin(), topics.end(), t) == topics.end()) topics.push_back(t);
        }

        Journal journal{id, "Synthetic Journal " + id.substr(1), {"CAT-" + topic_ids[topics[0]]}};
        if (topics.size() > 1 && rng.bernoulli(0.3)) journal.categories.push_back("CAT-" + topic_ids[topics[1]]);
        journals.push_back(journal);

        const auto size = profile.min_size + static_cast<std::size_t>(
                                                 rng.below(profile.max_size - profile.min_size + 1));
        const OutlierSpec* outlier = nullptr;
        for (const auto& o : profile.outliers) {
            if (o.journal == j) outlier = &o;
        }
        const std::size_t zeros =
            outlier ? static_cast<std::size_t>(std::llround(outlier->zero_fraction * static_cast<double>(size))) : 0;

        for (std::size_t k = 0; k < size; ++k) {
            Publication p;
            p.pub_id = padded("P", next_pub++, pub_width_hint);
            p.journal_id = id;
            p.pub_year = profile.year - 1 - static_cast<int>(k % 2);
            p.doc_type = rng.bernoulli(profile.review_fraction) ? DocType::Review : DocType::Article;
            const auto topic = topics.size() == 1 || rng.bernoulli(0.6)
                                   ? topics[0]
                                   : topics[1 + static_cast<std::size_t>(rng.below(topics.size() - 1))];
            const double log_scale = profile.location + journal_effect + topic_effect[topic] +
                                     (p.doc_type == DocType::Review ? profile.review_boost : 0.0);
            const auto drawn = draw_citations(rng, profile, log_scale);
            if (outlier) {
                if (k < outlier->top_papers) p.citations = outlier->top_citations;
                else if (k < outlier->top_papers + zeros) p.citations = 0;
                else p.citations = std::max<std::int64_t>(1, std::min(drawn, outlier->top_citations));
            } else {
                p.citations = drawn;
            }
            if (!rng.bernoulli(profile.unclassified_fraction)) p.topic_id = topic_ids[topic];
            pubs.push_back(std::move(p));
        }
    }
    return assemble_corpus(std::move(pubs), std::move(journals),
                           "citations in " + std::to_string(profile.year) + " to items published " +
                               std::to_string(profile.year - 2) + "-" + std::to_string(profile.year - 1));
}

}  // namespace citerank

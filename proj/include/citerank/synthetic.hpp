#pragma once

// Seed-deterministic synthetic corpora for desk-scale checks.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "citerank/corpus.hpp"

namespace citerank {

enum class CitationFamily { LogNormal, Poisson, Geometric };

/// A journal with a skewed citation profile: `top_papers` papers at
/// `top_citations`, a `zero_fraction` share of uncited papers, and the rest
/// drawn from the regular model but cited at least once.
struct OutlierSpec {
    std::size_t journal = 0;  // 0-based journal number
    std::int64_t top_citations = 2000;
    std::size_t top_papers = 1;
    double zero_fraction = 0.7;
};

struct SyntheticProfile {
    std::size_t journals = 30;
    std::size_t topics = 5;
    std::size_t min_size = 50;
    std::size_t max_size = 200;
    std::size_t topics_per_journal = 2;
    double review_fraction = 0.1;
    double unclassified_fraction = 0.0;

    // Citations are drawn around exp(location + journal + topic + review effects).
    CitationFamily family = CitationFamily::LogNormal;
    double location = 1.0;
    double spread = 1.0;          // log-scale sigma for LogNormal
    double journal_spread = 0.5;  // sd of the per-journal log effect
    double topic_spread = 1.0;    // width of the per-topic log effect
    double review_boost = 0.7;    // log effect of being a review

    int year = 2018;
    std::vector<OutlierSpec> outliers;

    /// Throws UsageError describing the first inconsistent field.
    void validate() const;
};

/// Parses a JSON profile. Unknown keys and bad values raise UsageError.
/// Keys mirror the field names; `family` is "lognormal", "poisson" or
/// "geometric"; `outliers` is a list of objects with `journal`,
/// `top_citations`, `top_papers`, `zero_fraction`.
SyntheticProfile parse_profile(std::string_view json_text);

std::string journal_label(std::size_t index, std::size_t count);

Corpus generate_corpus(const SyntheticProfile& profile, std::uint64_t seed);

}  // namespace citerank

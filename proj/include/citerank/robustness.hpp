#pragma once

// Ranking stability: bootstrap resampling of every journal's papers, the
// relative-change statistic over the sampled ranks, and the document-type
// flip perturbation.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "citerank/corpus.hpp"
#include "citerank/indicators.hpp"

namespace citerank {

struct RankingSamples {
    std::string journal_id;
    std::vector<std::size_t> rankings;  // one per simulation
};

using SampleMap = std::map<std::string, RankingSamples>;

struct BootstrapRun {
    IndicatorKey key = IndicatorKey::Fncsi;
    std::uint64_t seed = 0;
    std::size_t simulations = 0;
    /// Rank given to a journal that is unrankable in a simulation: N + 1 with N
    /// the number of journals rankable on the original corpus.
    std::size_t sentinel_rank = 0;
    SampleMap samples;
};

/// Each simulation resamples every journal's papers with replacement to the
/// journal's original size, rebuilds all cells from the resample and ranks the
/// journals that were rankable on the original corpus. Simulation s draws from
/// derive_seed(seed, s), so results do not depend on `threads`.
/// Throws UsageError if sims == 0 and InsufficientData if no journal is
/// rankable.
BootstrapRun bootstrap_rankings(const Corpus& corpus, IndicatorKey key, std::size_t sims,
                                std::uint64_t seed, unsigned threads = 1);

/// Mean over journals of (max - min) / mean of each journal's sampled ranks.
/// Throws UsageError on empty input or an empty sample list.
double relative_change(const SampleMap& samples);

struct RankSummary {
    std::size_t min = 0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    std::size_t max = 0;
    std::size_t unrankable = 0;  // simulations that assigned the sentinel rank
};

/// Linear-interpolation quantile of sorted data, p in [0, 1].
double quantile_sorted(const std::vector<double>& sorted, double p);

RankSummary summarize(const std::vector<std::size_t>& rankings, std::size_t sentinel_rank);

struct RobustnessReport {
    std::string indicator_name;
    std::map<std::string, RankSummary> per_journal;
    double delta = 0.0;
    std::uint64_t seed = 0;
    std::size_t simulations = 0;
    std::size_t sentinel_rank = 0;
};

RobustnessReport robustness_report(const BootstrapRun& run);

/// Toggles Article <-> Review on every journal's most-cited paper (ties: the
/// smallest pub_id), all journals at once. Returns a new corpus.
Corpus flip_doc_type(const Corpus& corpus);

struct RankShift {
    std::string journal_id;
    std::optional<std::size_t> original_rank;
    std::optional<std::size_t> perturbed_rank;

    /// |perturbed - original| when both ranks exist.
    std::optional<std::size_t> displacement() const;
};

/// Ranks on the original corpus and on flip_doc_type(corpus), one row per
/// journal in id order.
std::vector<RankShift> perturbation_comparison(const Corpus& corpus, IndicatorKey key);

/// Median of the displacements that exist; nullopt when none do.
std::optional<double> median_displacement(const std::vector<RankShift>& shifts);

}  // namespace citerank

#pragma once

// Serialization of indicator tables, rankings and robustness results as
// delimited text (with '#' comment headers) or JSON. Output depends only on
// the inputs, so repeated runs are byte-identical.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "citerank/corpus.hpp"
#include "citerank/indicators.hpp"
#include "citerank/ranking.hpp"
#include "citerank/robustness.hpp"

namespace citerank::report {

/// Provenance written at the top of every output file.
struct RunMeta {
    std::string command;
    std::string config_hash;
    std::optional<std::uint64_t> seed;
};

/// Shortest decimal that round-trips to the same double.
std::string format_number(double value);

std::uint64_t fnv1a64(std::string_view data, std::uint64_t hash = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t value);

inline constexpr std::string_view kUnrankable = "unrankable";

void write_indicators_csv(std::ostream& out, const std::vector<JournalIndicator>& indicators,
                          const RunMeta& meta);
void write_indicators_json(std::ostream& out, const std::vector<JournalIndicator>& indicators,
                           const RunMeta& meta);

void write_ranking_csv(std::ostream& out, const RankingTable& table, const RunMeta& meta);
void write_ranking_json(std::ostream& out, const RankingTable& table, const RunMeta& meta);

/// Full report including every journal's sampled ranks.
void write_robustness_json(std::ostream& out, const RobustnessReport& report, const BootstrapRun& run,
                           const RunMeta& meta);
/// Per-journal min / quartiles / max, for plotting.
void write_quartiles_csv(std::ostream& out, const RobustnessReport& report, const RunMeta& meta);

void write_flip_csv(std::ostream& out, const std::vector<RankShift>& shifts, IndicatorKey key,
                    const RunMeta& meta);
void write_flip_json(std::ostream& out, const std::vector<RankShift>& shifts, IndicatorKey key,
                     const RunMeta& meta);

struct SummaryInput {
    const Corpus* corpus = nullptr;
    const ValidationReport* validation = nullptr;
    const std::vector<JournalIndicator>* indicators = nullptr;
    std::optional<std::string> category;
};

/// Coverage, validation outcome, FNCSI-vs-FNIF rank correlation and every
/// journal's values and ranks on all four indicators.
void write_summary_json(std::ostream& out, const SummaryInput& input, const RunMeta& meta);
void write_summary_csv(std::ostream& out, const SummaryInput& input, const RunMeta& meta);

}  // namespace citerank::report

#pragma once

// Field-normalized journal indicators computed over (topic, document type)
// cells:
//
//   FNCSI         probability that a journal's paper out-cites a paper of the
//                 same topic and document type from another journal (ties
//                 count one half), weighted by the journal's paper counts.
//   FNIF          mean of citations / cell mean citation.
//   expected JIF  paper-weighted mean of the topic mean citation (both
//                 document types pooled).
//   JIF           citations per item over every item of the journal.
//
// Cells keep a sorted citation histogram with prefix counts, so the pairwise
// success count of a journal in a cell costs O(distinct values of the journal)
// instead of O(N_A * N_O).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "citerank/corpus.hpp"

namespace citerank {

enum class IndicatorKey : std::uint8_t { Fncsi, Fnif, ExpectedJif, Jif };

inline constexpr IndicatorKey kAllIndicators[] = {IndicatorKey::Fncsi, IndicatorKey::Fnif,
                                                  IndicatorKey::ExpectedJif, IndicatorKey::Jif};

/// "fncsi", "fnif", "expected_jif" (or "expected-jif"), "jif". Throws UsageError
/// for anything else.
IndicatorKey parse_indicator(std::string_view name);
std::string_view to_string(IndicatorKey key) noexcept;

// ---------------------------------------------------------------------------
// Indexed paper set

inline constexpr std::int32_t kUnclassified = -1;

struct ScoredPaper {
    std::uint32_t journal = 0;
    std::int32_t topic = kUnclassified;
    DocType doc_type = DocType::Article;
    std::int64_t citations = 0;
};

/// Papers with journal and topic ids replaced by dense indices. Both id lists
/// are sorted, so index order is identifier order.
struct PaperSet {
    std::vector<std::string> journal_ids;
    std::vector<std::string> topic_ids;
    std::vector<ScoredPaper> papers;
};

/// Journals are every key of `corpus.journals` plus any journal id that only
/// appears on publications.
PaperSet index_corpus(const Corpus& corpus);

// ---------------------------------------------------------------------------
// Cells

struct CellKey {
    std::uint32_t topic = 0;
    DocType doc_type = DocType::Article;

    friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

/// One journal's papers inside a cell, as (value index, multiplicity) pairs in
/// ascending value order.
struct JournalHistogram {
    std::uint32_t journal = 0;
    std::int64_t papers = 0;
    std::int64_t citation_sum = 0;
    std::vector<std::pair<std::uint32_t, std::int64_t>> bins;
};

struct CellStats {
    std::vector<std::int64_t> values;  // distinct citation counts, ascending
    std::vector<std::int64_t> counts;  // multiplicity of values[i] in the cell
    std::vector<std::int64_t> below;   // papers in the cell with citations < values[i]
    std::vector<JournalHistogram> journals;  // ascending journal index
    std::int64_t total = 0;
    std::int64_t citation_sum = 0;
    double mean = 0.0;

    const JournalHistogram* find(std::uint32_t journal) const;
};

struct Cell {
    CellKey key;
    CellStats stats;
};

struct JournalTotals {
    std::int64_t papers = 0;  // all papers, classified or not
    std::int64_t citation_sum = 0;
    std::int64_t classified = 0;
    std::vector<std::size_t> cells;               // indices into CellTable::cells(), ascending
    std::vector<std::pair<std::uint32_t, std::int64_t>> topic_papers;  // (topic, N_A^t), ascending
};

struct TopicTotals {
    std::int64_t papers = 0;
    std::int64_t citation_sum = 0;
    double mean = 0.0;  // mu_t, both document types pooled
};

/// Every classified paper lands in exactly one cell. Cells are ordered by
/// (topic index, document type).
class CellTable {
public:
    explicit CellTable(const PaperSet& papers);

    const std::vector<std::string>& journal_ids() const noexcept { return journal_ids_; }
    const std::vector<std::string>& topic_ids() const noexcept { return topic_ids_; }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    const std::vector<JournalTotals>& journals() const noexcept { return journals_; }
    const std::vector<TopicTotals>& topics() const noexcept { return topics_; }

    const CellStats* find(CellKey key) const;
    const CellStats* find(std::string_view topic_id, DocType doc_type) const;
    std::optional<std::uint32_t> journal_index(std::string_view journal_id) const;

private:
    std::vector<std::string> journal_ids_;
    std::vector<std::string> topic_ids_;
    std::vector<Cell> cells_;
    std::vector<JournalTotals> journals_;
    std::vector<TopicTotals> topics_;
};

CellTable build_cells(const Corpus& corpus);

// ---------------------------------------------------------------------------
// Per-journal indicators

/// Pairwise outcome of a journal's papers against the rest of a cell.
struct CellSuccess {
    std::int64_t wins = 0;       // pairs with c_a > c_o
    std::int64_t ties = 0;       // pairs with c_a == c_o
    std::int64_t n_journal = 0;  // N_{A^{t,d}}
    std::int64_t n_other = 0;    // N_{O^{t,d}}

    bool empty_comparison() const noexcept { return n_other == 0; }

    /// (wins + ties / 2) / (n_journal * n_other), one rounding. Empty
    /// comparison yields nullopt.
    std::optional<double> probability() const noexcept;
};

/// Throws std::invalid_argument if the journal has no paper in the cell.
CellSuccess csi_cell(std::uint32_t journal, const CellStats& cell);

struct TopicShare {
    std::optional<double> success;  // S^t_A; empty when every cell of t lacks comparisons
    std::int64_t papers = 0;        // N_{A^t}
    std::int64_t scored = 0;        // N'_{A^t}: papers in cells with comparisons

    friend bool operator==(const TopicShare&, const TopicShare&) = default;
};

struct FncsiResult {
    std::optional<double> value;
    std::map<std::string, TopicShare> topics;
    std::int64_t papers = 0;  // N_A (classified)
    std::int64_t scored = 0;  // N'_A
};

FncsiResult fncsi(const CellTable& table, std::uint32_t journal);
std::optional<double> fnif(const CellTable& table, std::uint32_t journal);
std::optional<double> expected_jif(const CellTable& table, std::uint32_t journal);
std::optional<double> jif(const CellTable& table, std::uint32_t journal);

/// One indicator for every journal of the table, indexed like journal_ids().
std::vector<std::optional<double>> score_journals(const CellTable& table, IndicatorKey key);

struct JournalIndicator {
    std::string journal_id;
    std::vector<std::string> categories;
    std::optional<double> fncsi;
    std::optional<double> fnif;
    std::optional<double> expected_jif;
    std::optional<double> jif;
    std::int64_t n_pubs = 0;      // classified papers, = sum of topic_breakdown papers
    std::int64_t n_all = 0;       // every paper, the JIF denominator
    std::map<std::string, TopicShare> topic_breakdown;

    std::optional<double> value(IndicatorKey key) const noexcept;
};

/// One record per journal in id order. Unrankable indicators stay empty.
std::vector<JournalIndicator> compute_all(const Corpus& corpus);

}  // namespace citerank

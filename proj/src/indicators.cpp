#include "citerank/indicators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "citerank/errors.hpp"

namespace citerank {

IndicatorKey parse_indicator(std::string_view name) {
    if (name == "fncsi") return IndicatorKey::Fncsi;
    if (name == "fnif") return IndicatorKey::Fnif;
    if (name == "expected_jif" || name == "expected-jif") return IndicatorKey::ExpectedJif;
    if (name == "jif") return IndicatorKey::Jif;
    throw UsageError("unknown indicator '" + std::string(name) +
                     "' (expected fncsi, fnif, expected-jif or jif)");
}

std::string_view to_string(IndicatorKey key) noexcept {
    switch (key) {
        case IndicatorKey::Fncsi: return "fncsi";
        case IndicatorKey::Fnif: return "fnif";
        case IndicatorKey::ExpectedJif: return "expected_jif";
        case IndicatorKey::Jif: return "jif";
    }
    return "unknown";
}

PaperSet index_corpus(const Corpus& corpus) {
    PaperSet set;
    std::set<std::string_view> journals;
    for (const auto& [id, j] : corpus.journals) journals.insert(id);
    std::set<std::string_view> topics;
    for (const auto& p : corpus.publications) {
        journals.insert(p.journal_id);
        if (p.topic_id) topics.insert(*p.topic_id);
    }
    set.journal_ids.assign(journals.begin(), journals.end());
    set.topic_ids.assign(topics.begin(), topics.end());

    auto index_of = [](const std::vector<std::string>& ids, std::string_view id) {
        return static_cast<std::uint32_t>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };
    set.papers.reserve(corpus.publications.size());
    for (const auto& p : corpus.publications) {
        ScoredPaper sp;
        sp.journal = index_of(set.journal_ids, p.journal_id);
        sp.topic = p.topic_id ? static_cast<std::int32_t>(index_of(set.topic_ids, *p.topic_id))
                              : kUnclassified;
        sp.doc_type = p.doc_type;
        sp.citations = p.citations;
        set.papers.push_back(sp);
    }
    return set;
}

// ---------------------------------------------------------------------------

const JournalHistogram* CellStats::find(std::uint32_t journal) const {
    auto it = std::lower_bound(journals.begin(), journals.end(), journal,
                               [](const JournalHistogram& h, std::uint32_t j) { return h.journal < j; });
    return it != journals.end() && it->journal == journal ? &*it : nullptr;
}

CellTable::CellTable(const PaperSet& set)
    : journal_ids_(set.journal_ids),
      topic_ids_(set.topic_ids),
      journals_(set.journal_ids.size()),
      topics_(set.topic_ids.size()) {
    std::vector<ScoredPaper> classified;
    classified.reserve(set.papers.size());
    for (const auto& p : set.papers) {
        auto& jt = journals_.at(p.journal);
        ++jt.papers;
        jt.citation_sum += p.citations;
        if (p.topic == kUnclassified) continue;
        ++jt.classified;
        auto& tt = topics_.at(static_cast<std::size_t>(p.topic));
        ++tt.papers;
        tt.citation_sum += p.citations;
        classified.push_back(p);
    }
    for (auto& tt : topics_) {
        if (tt.papers > 0) tt.mean = static_cast<double>(tt.citation_sum) / static_cast<double>(tt.papers);
    }

    std::sort(classified.begin(), classified.end(), [](const ScoredPaper& a, const ScoredPaper& b) {
        return std::tie(a.topic, a.doc_type, a.citations, a.journal) <
               std::tie(b.topic, b.doc_type, b.citations, b.journal);
    });

    std::vector<std::pair<std::uint32_t, std::uint32_t>> journal_values;  // (journal, value index)
    for (std::size_t begin = 0; begin < classified.size();) {
        const CellKey key{static_cast<std::uint32_t>(classified[begin].topic), classified[begin].doc_type};
        std::size_t end = begin;
        while (end < classified.size() && classified[end].topic == classified[begin].topic &&
               classified[end].doc_type == key.doc_type) {
            ++end;
        }

        CellStats stats;
        journal_values.clear();
        for (std::size_t i = begin; i < end; ++i) {
            const auto c = classified[i].citations;
            if (stats.values.empty() || stats.values.back() != c) {
                stats.values.push_back(c);
                stats.counts.push_back(0);
                stats.below.push_back(stats.total);
            }
            ++stats.counts.back();
            ++stats.total;
            stats.citation_sum += c;
            journal_values.emplace_back(classified[i].journal,
                                        static_cast<std::uint32_t>(stats.values.size() - 1));
        }
        stats.mean = static_cast<double>(stats.citation_sum) / static_cast<double>(stats.total);

        std::sort(journal_values.begin(), journal_values.end());
        for (const auto& [journal, vi] : journal_values) {
            if (stats.journals.empty() || stats.journals.back().journal != journal) {
                stats.journals.push_back(JournalHistogram{journal, 0, 0, {}});
            }
            auto& h = stats.journals.back();
            ++h.papers;
            h.citation_sum += stats.values[vi];
            if (h.bins.empty() || h.bins.back().first != vi) h.bins.emplace_back(vi, 0);
            ++h.bins.back().second;
        }

        const auto cell_index = cells_.size();
        for (const auto& h : stats.journals) {
            auto& jt = journals_[h.journal];
            jt.cells.push_back(cell_index);
            if (jt.topic_papers.empty() || jt.topic_papers.back().first != key.topic) {
                jt.topic_papers.emplace_back(key.topic, 0);
            }
            jt.topic_papers.back().second += h.papers;
        }
        cells_.push_back(Cell{key, std::move(stats)});
        begin = end;
    }
}

const CellStats* CellTable::find(CellKey key) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), key,
                               [](const Cell& c, const CellKey& k) { return c.key < k; });
    return it != cells_.end() && it->key == key ? &it->stats : nullptr;
}

const CellStats* CellTable::find(std::string_view topic_id, DocType doc_type) const {
    auto it = std::lower_bound(topic_ids_.begin(), topic_ids_.end(), topic_id);
    if (it == topic_ids_.end() || *it != topic_id) return nullptr;
    return find(CellKey{static_cast<std::uint32_t>(it - topic_ids_.begin()), doc_type});
}

std::optional<std::uint32_t> CellTable::journal_index(std::string_view journal_id) const {
    auto it = std::lower_bound(journal_ids_.begin(), journal_ids_.end(), journal_id);
    if (it == journal_ids_.end() || *it != journal_id) return std::nullopt;
    return static_cast<std::uint32_t>(it - journal_ids_.begin());
}

CellTable build_cells(const Corpus& corpus) { return CellTable(index_corpus(corpus)); }

// ---------------------------------------------------------------------------

std::optional<double> CellSuccess::probability() const noexcept {
    if (n_other == 0 || n_journal == 0) return std::nullopt;
    return static_cast<double>(2 * wins + ties) / static_cast<double>(2 * n_journal * n_other);
}

CellSuccess csi_cell(std::uint32_t journal, const CellStats& cell) {
    const auto* hist = cell.find(journal);
    if (!hist) throw std::invalid_argument("journal has no paper in this cell");

    CellSuccess s;
    s.n_journal = hist->papers;
    s.n_other = cell.total - hist->papers;
    std::int64_t own_below = 0;  // the journal's papers with fewer citations than the current bin
    for (const auto& [vi, m] : hist->bins) {
        const auto others_below = cell.below[vi] - own_below;
        const auto others_equal = cell.counts[vi] - m;
        s.wins += m * others_below;
        s.ties += m * others_equal;
        own_below += m;
    }
    return s;
}

FncsiResult fncsi(const CellTable& table, std::uint32_t journal) {
    const auto& jt = table.journals().at(journal);
    FncsiResult result;
    result.papers = jt.classified;

    // Weighted numerators in fixed (topic, doc type) order.
    double total = 0.0;
    double topic_sum = 0.0;
    std::optional<std::uint32_t> current_topic;
    TopicShare share;
    auto flush = [&] {
        if (!current_topic) return;
        if (share.scored > 0) share.success = topic_sum / static_cast<double>(share.scored);
        result.topics.emplace(table.topic_ids()[*current_topic], share);
    };
    for (const auto ci : jt.cells) {
        const auto& cell = table.cells()[ci];
        if (!current_topic || *current_topic != cell.key.topic) {
            flush();
            current_topic = cell.key.topic;
            share = TopicShare{};
            topic_sum = 0.0;
        }
        const auto s = csi_cell(journal, cell.stats);
        share.papers += s.n_journal;
        if (const auto p = s.probability()) {
            const double weighted = static_cast<double>(s.n_journal) * *p;
            topic_sum += weighted;
            total += weighted;
            share.scored += s.n_journal;
            result.scored += s.n_journal;
        }
    }
    flush();
    if (result.scored > 0) result.value = total / static_cast<double>(result.scored);
    return result;
}

std::optional<double> fnif(const CellTable& table, std::uint32_t journal) {
    const auto& jt = table.journals().at(journal);
    if (jt.classified == 0) return std::nullopt;
    double sum = 0.0;
    for (const auto ci : jt.cells) {
        const auto& stats = table.cells()[ci].stats;
        // uncited cell: every paper in it has 0 citations and contributes 0
        if (stats.citation_sum == 0) continue;
        sum += static_cast<double>(stats.find(journal)->citation_sum) / stats.mean;
    }
    return sum / static_cast<double>(jt.classified);
}

std::optional<double> expected_jif(const CellTable& table, std::uint32_t journal) {
    const auto& jt = table.journals().at(journal);
    if (jt.classified == 0) return std::nullopt;
    double sum = 0.0;
    for (const auto& [topic, n] : jt.topic_papers) {
        sum += table.topics()[topic].mean * static_cast<double>(n);
    }
    return sum / static_cast<double>(jt.classified);
}

std::optional<double> jif(const CellTable& table, std::uint32_t journal) {
    const auto& jt = table.journals().at(journal);
    if (jt.papers == 0) return std::nullopt;
    return static_cast<double>(jt.citation_sum) / static_cast<double>(jt.papers);
}

std::vector<std::optional<double>> score_journals(const CellTable& table, IndicatorKey key) {
    const auto n = static_cast<std::uint32_t>(table.journal_ids().size());
    std::vector<std::optional<double>> out(n);
    for (std::uint32_t j = 0; j < n; ++j) {
        switch (key) {
            case IndicatorKey::Fncsi: out[j] = fncsi(table, j).value; break;
            case IndicatorKey::Fnif: out[j] = fnif(table, j); break;
            case IndicatorKey::ExpectedJif: out[j] = expected_jif(table, j); break;
            case IndicatorKey::Jif: out[j] = jif(table, j); break;
        }
    }
    return out;
}

std::optional<double> JournalIndicator::value(IndicatorKey key) const noexcept {
    switch (key) {
        case IndicatorKey::Fncsi: return fncsi;
        case IndicatorKey::Fnif: return fnif;
        case IndicatorKey::ExpectedJif: return expected_jif;
        case IndicatorKey::Jif: return jif;
    }
    return std::nullopt;
}

std::vector<JournalIndicator> compute_all(const Corpus& corpus) {
    const CellTable table = build_cells(corpus);
    std::vector<JournalIndicator> out;
    out.reserve(table.journal_ids().size());
    for (std::uint32_t j = 0; j < table.journal_ids().size(); ++j) {
        JournalIndicator ind;
        ind.journal_id = table.journal_ids()[j];
        if (auto it = corpus.journals.find(ind.journal_id); it != corpus.journals.end()) {
            ind.categories = it->second.categories;
        }
        auto f = fncsi(table, j);
        ind.fncsi = f.value;
        ind.topic_breakdown = std::move(f.topics);
        ind.fnif = fnif(table, j);
        ind.expected_jif = expected_jif(table, j);
        ind.jif = jif(table, j);
        ind.n_pubs = table.journals()[j].classified;
        ind.n_all = table.journals()[j].papers;
        out.push_back(std::move(ind));
    }
    return out;
}

}  // namespace citerank

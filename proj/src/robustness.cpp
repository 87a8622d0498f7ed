#include "citerank/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "citerank/errors.hpp"
#include "citerank/random.hpp"
#include "citerank/ranking.hpp"

namespace citerank {

namespace {

// Ranks of `members` (journal indices) under `scores`; unrankable members get
// `sentinel`.
std::vector<std::size_t> rank_members(const std::vector<std::string>& ids,
                                      const std::vector<std::uint32_t>& members,
                                      const std::vector<std::optional<double>>& scores,
                                      std::size_t sentinel) {
    std::vector<std::string> member_ids;
    std::vector<std::optional<double>> member_scores;
    member_ids.reserve(members.size());
    for (const auto j : members) {
        member_ids.push_back(ids[j]);
        member_scores.push_back(scores[j]);
    }
    std::vector<std::size_t> ranks(members.size(), sentinel);
    const auto order = ranking_order(member_ids, member_scores);
    for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = r + 1;
    return ranks;
}

}  // namespace

BootstrapRun bootstrap_rankings(const Corpus& corpus, IndicatorKey key, std::size_t sims,
                                std::uint64_t seed, unsigned threads) {
    if (sims == 0) throw UsageError("bootstrap needs at least one simulation");

    const PaperSet base = index_corpus(corpus);
    const auto original = score_journals(CellTable(base), key);

    std::vector<std::uint32_t> members;
    for (std::uint32_t j = 0; j < original.size(); ++j) {
        if (original[j]) members.push_back(j);
    }
    if (members.empty()) throw InsufficientData("no journal is rankable on " + std::string(to_string(key)));

    std::vector<std::vector<std::size_t>> by_journal(base.journal_ids.size());
    for (std::size_t i = 0; i < base.papers.size(); ++i) by_journal[base.papers[i].journal].push_back(i);

    BootstrapRun run;
    run.key = key;
    run.seed = seed;
    run.simulations = sims;
    run.sentinel_rank = members.size() + 1;

    // ranks[s][m]: rank of members[m] in simulation s
    std::vector<std::vector<std::size_t>> ranks(sims);
    auto simulate = [&](std::size_t s) {
        Rng rng(derive_seed(seed, s));
        PaperSet resample;
        resample.journal_ids = base.journal_ids;
        resample.topic_ids = base.topic_ids;
        resample.papers.reserve(base.papers.size());
        for (const auto& papers : by_journal) {
            for (std::size_t k = 0; k < papers.size(); ++k) {
                resample.papers.push_back(base.papers[papers[rng.below(papers.size())]]);
            }
        }
        ranks[s] = rank_members(base.journal_ids, members, score_journals(CellTable(resample), key),
                                run.sentinel_rank);
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(sims)));
    if (workers == 1) {
        for (std::size_t s = 0; s < sims; ++s) simulate(s);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t s = w; s < sims; s += workers) simulate(s);
            });
        }
    }

    for (std::size_t m = 0; m < members.size(); ++m) {
        RankingSamples samples{base.journal_ids[members[m]], {}};
        samples.rankings.reserve(sims);
        for (std::size_t s = 0; s < sims; ++s) samples.rankings.push_back(ranks[s][m]);
        run.samples.emplace(samples.journal_id, std::move(samples));
    }
    return run;
}

double relative_change(const SampleMap& samples) {
    if (samples.empty()) throw UsageError("relative change of an empty sample set");
    double sum = 0.0;
    for (const auto& [id, s] : samples) {
        if (s.rankings.empty()) throw UsageError("journal " + id + " has no sampled ranks");
        const auto [lo, hi] = std::minmax_element(s.rankings.begin(), s.rankings.end());
        const double total = std::accumulate(s.rankings.begin(), s.rankings.end(), 0.0);
        const double avg = total / static_cast<double>(s.rankings.size());
        sum += static_cast<double>(*hi - *lo) / avg;
    }
    return sum / static_cast<double>(samples.size());
}

double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) throw UsageError("quantile of empty data");
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

RankSummary summarize(const std::vector<std::size_t>& rankings, std::size_t sentinel_rank) {
    std::vector<double> sorted(rankings.begin(), rankings.end());
    std::sort(sorted.begin(), sorted.end());
    RankSummary s;
    s.min = static_cast<std::size_t>(sorted.front());
    s.max = static_cast<std::size_t>(sorted.back());
    s.q1 = quantile_sorted(sorted, 0.25);
    s.median = quantile_sorted(sorted, 0.5);
    s.q3 = quantile_sorted(sorted, 0.75);
    s.unrankable = static_cast<std::size_t>(std::count(rankings.begin(), rankings.end(), sentinel_rank));
    return s;
}

RobustnessReport robustness_report(const BootstrapRun& run) {
    RobustnessReport report;
    report.indicator_name = std::string(to_string(run.key));
    report.seed = run.seed;
    report.simulations = run.simulations;
    report.sentinel_rank = run.sentinel_rank;
    for (const auto& [id, s] : run.samples) report.per_journal.emplace(id, summarize(s.rankings, run.sentinel_rank));
    report.delta = relative_change(run.samples);
    return report;
}

Corpus flip_doc_type(const Corpus& corpus) {
    std::map<std::string_view, std::size_t> top;  // journal -> index of its most-cited paper
    const auto& pubs = corpus.publications;
    for (std::size_t i = 0; i < pubs.size(); ++i) {
        auto [it, inserted] = top.emplace(pubs[i].journal_id, i);
        if (inserted) continue;
        const auto& best = pubs[it->second];
        if (pubs[i].citations > best.citations ||
            (pubs[i].citations == best.citations && pubs[i].pub_id < best.pub_id)) {
            it->second = i;
        }
    }
    Corpus out = corpus;
    for (const auto& [journal, i] : top) out.publications[i].doc_type = opposite(out.publications[i].doc_type);
    return out;
}

std::optional<std::size_t> RankShift::displacement() const {
    if (!original_rank || !perturbed_rank) return std::nullopt;
    return *original_rank > *perturbed_rank ? *original_rank - *perturbed_rank
                                            : *perturbed_rank - *original_rank;
}

std::vector<RankShift> perturbation_comparison(const Corpus& corpus, IndicatorKey key) {
    const auto before = compute_all(corpus);
    const auto after = compute_all(flip_doc_type(corpus));
    const auto rank_before = rank(before, key);
    const auto rank_after = rank(after, key);

    std::vector<RankShift> shifts;
    shifts.reserve(before.size());
    for (const auto& ind : before) {
        shifts.push_back(
            RankShift{ind.journal_id, rank_before.rank_of(ind.journal_id), rank_after.rank_of(ind.journal_id)});
    }
    return shifts;
}

std::optional<double> median_displacement(const std::vector<RankShift>& shifts) {
    std::vector<double> d;
    for (const auto& s : shifts) {
        if (auto x = s.displacement()) d.push_back(static_cast<double>(*x));
    }
    if (d.empty()) return std::nullopt;
    std::sort(d.begin(), d.end());
    return quantile_sorted(d, 0.5);
}

}  // namespace citerank

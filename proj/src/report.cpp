#include "citerank/report.hpp"

#include <array>
#include <charconv>
#include <json.hpp>
#include <ostream>

#include "citerank/delimited.hpp"
#include "citerank/errors.hpp"

namespace citerank::report {

using nlohmann::ordered_json;

namespace {

void write_csv_header(std::ostream& out, const RunMeta& meta) {
    out << "# citerank " << CITERANK_VERSION << '\n';
    out << "# command=" << meta.command;
    if (meta.seed) out << " seed=" << *meta.seed;
    out << " config=" << meta.config_hash << '\n';
}

ordered_json meta_json(const RunMeta& meta) {
    ordered_json m;
    m["tool"] = "citerank";
    m["version"] = CITERANK_VERSION;
    m["command"] = meta.command;
    if (meta.seed) m["seed"] = *meta.seed;
    m["config_hash"] = meta.config_hash;
    return m;
}

std::string cell(const std::optional<double>& v) {
    return v ? format_number(*v) : std::string(kUnrankable);
}

ordered_json json_value(const std::optional<double>& v) {
    return v ? ordered_json(*v) : ordered_json(std::string(kUnrankable));
}

std::string cell(const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string(kUnrankable);
}

ordered_json json_value(const std::optional<std::size_t>& v) {
    return v ? ordered_json(*v) : ordered_json(std::string(kUnrankable));
}

void finish(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace

std::string format_number(double value) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return ec == std::errc{} ? std::string(buf.data(), ptr) : std::string("nan");
}

std::uint64_t fnv1a64(std::string_view data, std::uint64_t hash) {
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, value >>= 4) s[static_cast<std::size_t>(i)] = digits[value & 0xF];
    return s;
}

void write_indicators_csv(std::ostream& out, const std::vector<JournalIndicator>& indicators,
                          const RunMeta& meta) {
    write_csv_header(out, meta);
    out << "journal_id,n_pubs,n_all,fncsi,fnif,expected_jif,jif\n";
    for (const auto& ind : indicators) {
        delimited::write_row(out, {ind.journal_id, std::to_string(ind.n_pubs), std::to_string(ind.n_all),
                                   cell(ind.fncsi), cell(ind.fnif), cell(ind.expected_jif), cell(ind.jif)});
    }
}

void write_indicators_json(std::ostream& out, const std::vector<JournalIndicator>& indicators,
                           const RunMeta& meta) {
    ordered_json doc;
    doc["meta"] = meta_json(meta);
    auto& rows = doc["journals"] = ordered_json::array();
    for (const auto& ind : indicators) {
        ordered_json j;
        j["journal_id"] = ind.journal_id;
        j["categories"] = ind.categories;
        j["n_pubs"] = ind.n_pubs;
        j["n_all"] = ind.n_all;
        for (auto key : kAllIndicators) j[std::string(to_string(key))] = json_value(ind.value(key));
        auto& topics = j["topic_breakdown"] = ordered_json::object();
        for (const auto& [topic, share] : ind.topic_breakdown) {
            topics[topic] = {{"fncsi", json_value(share.success)},
                             {"papers", share.papers},
                             {"scored", share.scored}};
        }
        rows.push_back(std::move(j));
    }
    finish(out, doc);
}

void write_ranking_csv(std::ostream& out, const RankingTable& table, const RunMeta& meta) {
    write_csv_header(out, meta);
    out << "# indicator=" << table.indicator_name << " scope=" << table.scope.value_or("global")
        << " journals=" << table.rows.size() << '\n';
    out << "# " << kPercentileFormula << '\n';
    out << "rank,journal_id," << table.indicator_name << ",percentile\n";
    for (const auto& row : table.rows) {
        delimited::write_row(out, {std::to_string(row.rank), row.journal_id, format_number(row.value),
                                   format_number(row.percentile)});
    }
}

void write_ranking_json(std::ostream& out, const RankingTable& table, const RunMeta& meta) {
    ordered_json doc;
    doc["meta"] = meta_json(meta);
    doc["indicator"] = table.indicator_name;
    doc["scope"] = table.scope.value_or("global");
    doc["percentile_formula"] = kPercentileFormula;
    auto& rows = doc["rows"] = ordered_json::array();
    for (const auto& row : table.rows) {
        rows.push_back({{"rank", row.rank},
                        {"journal_id", row.journal_id},
                        {"value", row.value},
                        {"percentile", row.percentile}});
    }
    finish(out, doc);
}

void write_robustness_json(std::ostream& out, const RobustnessReport& report, const BootstrapRun& run,
                           const RunMeta& meta) {
    ordered_json doc;
    doc["meta"] = meta_json(meta);
    doc["indicator"] = report.indicator_name;
    doc["seed"] = report.seed;
    doc["simulations"] = report.simulations;
    doc["sentinel_rank"] = report.sentinel_rank;
    doc["sentinel_note"] = "journals unrankable in a simulation receive rank N+1";
    doc["delta"] = report.delta;
    auto& per = doc["per_journal"] = ordered_json::object();
    for (const auto& [id, s] : report.per_journal) {
        ordered_json j{{"min", s.min},       {"q1", s.q1},   {"median", s.median},
                       {"q3", s.q3},         {"max", s.max}, {"unrankable_sims", s.unrankable}};
        if (auto it = run.samples.find(id); it != run.samples.end()) j["rankings"] = it->second.rankings;
        per[id] = std::move(j);
    }
    finish(out, doc);
}

void write_quartiles_csv(std::ostream& out, const RobustnessReport& report, const RunMeta& meta) {
    write_csv_header(out, meta);
    out << "# indicator=" << report.indicator_name << " simulations=" << report.simulations
        << " delta=" << format_number(report.delta) << " sentinel_rank=" << report.sentinel_rank << '\n';
    out << "journal_id,min,q1,median,q3,max,unrankable_sims\n";
    for (const auto& [id, s] : report.per_journal) {
        delimited::write_row(out, {id, std::to_string(s.min), format_number(s.q1), format_number(s.median),
                                   format_number(s.q3), std::to_string(s.max), std::to_string(s.unrankable)});
    }
}

void write_flip_csv(std::ostream& out, const std::vector<RankShift>& shifts, IndicatorKey key,
                    const RunMeta& meta) {
    write_csv_header(out, meta);
    const auto median = median_displacement(shifts);
    out << "# indicator=" << to_string(key) << " median_abs_displacement=" << cell(median) << '\n';
    out << "journal_id,original_rank,perturbed_rank,displacement\n";
    for (const auto& s : shifts) {
        delimited::write_row(out, {s.journal_id, cell(s.original_rank), cell(s.perturbed_rank),
                                   cell(s.displacement())});
    }
}

void write_flip_json(std::ostream& out, const std::vector<RankShift>& shifts, IndicatorKey key,
                     const RunMeta& meta) {
    ordered_json doc;
    doc["meta"] = meta_json(meta);
    doc["indicator"] = to_string(key);
    doc["median_abs_displacement"] = json_value(median_displacement(shifts));
    auto& rows = doc["journals"] = ordered_json::array();
    for (const auto& s : shifts) {
        rows.push_back({{"journal_id", s.journal_id},
                        {"original_rank", json_value(s.original_rank)},
                        {"perturbed_rank", json_value(s.perturbed_rank)},
                        {"displacement", json_value(s.displacement())}});
    }
    finish(out, doc);
}

namespace {

struct SummaryTables {
    std::vector<RankingTable> tables;  // in kAllIndicators order
    std::optional<Correlation> fncsi_fnif;
};

SummaryTables summary_tables(const SummaryInput& input) {
    SummaryTables s;
    for (auto key : kAllIndicators) s.tables.push_back(rank(*input.indicators, key, input.category));
    try {
        s.fncsi_fnif = correlate(s.tables[0], s.tables[1]);
    } catch (const InsufficientData&) {
    }
    return s;
}

}  // namespace

void write_summary_json(std::ostream& out, const SummaryInput& input, const RunMeta& meta) {
    const auto coverage = coverage_stats(*input.corpus);
    const auto s = summary_tables(input);

    ordered_json doc;
    doc["meta"] = meta_json(meta);
    doc["census"] = input.corpus->census_label;
    doc["scope"] = input.category.value_or("global");
    doc["publications"] = input.corpus->publications.size();
    doc["journals"] = input.corpus->journals.size();
    doc["topics"] = input.corpus->topics.size();
    doc["coverage"] = {{"publication_fraction", coverage.publication_fraction},
                       {"journal_fraction_over_90pct", coverage.journal_fraction},
                       {"classified", coverage.classified},
                       {"journals_over_threshold", coverage.journals_over_threshold}};
    doc["validation_findings"] = input.validation ? input.validation->findings.size() : 0;
    if (s.fncsi_fnif) {
        doc["spearman_fncsi_fnif"] = {{"rho", s.fncsi_fnif->spearman}, {"n", s.fncsi_fnif->n}};
    } else {
        doc["spearman_fncsi_fnif"] = nullptr;
    }
    doc["percentile_formula"] = kPercentileFormula;
    auto& rows = doc["journals_detail"] = ordered_json::array();
    for (const auto& ind : *input.indicators) {
        ordered_json j;
        j["journal_id"] = ind.journal_id;
        for (std::size_t k = 0; k < std::size(kAllIndicators); ++k) {
            const auto name = std::string(to_string(kAllIndicators[k]));
            j[name] = json_value(ind.value(kAllIndicators[k]));
            j[name + "_rank"] = json_value(s.tables[k].rank_of(ind.journal_id));
        }
        rows.push_back(std::move(j));
    }
    finish(out, doc);
}

void write_summary_csv(std::ostream& out, const SummaryInput& input, const RunMeta& meta) {
    const auto coverage = coverage_stats(*input.corpus);
    const auto s = summary_tables(input);
    write_csv_header(out, meta);
    out << "# scope=" << input.category.value_or("global")
        << " publication_coverage=" << format_number(coverage.publication_fraction)
        << " journal_coverage_over_90pct=" << format_number(coverage.journal_fraction) << '\n';
    out << "# spearman_fncsi_fnif=" << (s.fncsi_fnif ? format_number(s.fncsi_fnif->spearman) : "n/a") << '\n';
    out << "journal_id";
    for (auto key : kAllIndicators) out << ',' << to_string(key) << ',' << to_string(key) << "_rank";
    out << '\n';
    for (const auto& ind : *input.indicators) {
        std::vector<std::string> fields{ind.journal_id};
        for (std::size_t k = 0; k < std::size(kAllIndicators); ++k) {
            fields.push_back(cell(ind.value(kAllIndicators[k])));
            fields.push_back(cell(s.tables[k].rank_of(ind.journal_id)));
        }
        delimited::write_row(out, fields);
    }
}

}  // namespace citerank::report

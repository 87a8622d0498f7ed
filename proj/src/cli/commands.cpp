#include "citerank/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "citerank/classifier.hpp"
#include "citerank/corpus.hpp"
#include "citerank/errors.hpp"
#include "citerank/ranking.hpp"
#include "citerank/report.hpp"
#include "citerank/robustness.hpp"
#include "citerank/synthetic.hpp"

namespace citerank::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void require_readable(const fs::path& path, std::string_view flag) {
    if (path.empty()) throw UsageError(std::string(flag) + " is required");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError(std::string(flag) + ": cannot read " + path.string());
}

std::string slug(std::string_view label) {
    std::string s;
    for (char c : label) {
        const auto u = static_cast<unsigned char>(c);
        s.push_back(std::isalnum(u) ? static_cast<char>(std::tolower(u)) : '_');
    }
    return s;
}

class Output {
public:
    explicit Output(const fs::path& dir) : dir_(dir) { fs::create_directories(dir_); }

    template <typename Writer>
    fs::path write(const std::string& name, Writer&& writer) {
        const auto path = dir_ / name;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        writer(out);
        if (!out) throw std::runtime_error("write failed for " + path.string());
        return path;
    }

private:
    fs::path dir_;
};

bool wants(const RunConfig& config, OutputFormat f) {
    return std::find(config.formats.begin(), config.formats.end(), f) != config.formats.end();
}

struct LoadTally {
    std::size_t row_errors = 0;
    std::size_t findings = 0;
};

/// Loads and validates the corpus, applying majority assignment when related
/// records are configured. Diagnostics go to `err`; nullopt means failure.
std::optional<Corpus> load_corpus(const RunConfig& config, std::ostream& err, bool require_valid = true,
                                  LoadTally* tally = nullptr) {
    auto pubs = load_publications(config.publications_path);
    auto journals = load_journals(config.journals_path);
    for (const auto& e : pubs.errors) err << config.publications_path.string() << ": row " << e.row << ": " << e.message << '\n';
    for (const auto& e : journals.errors) err << config.journals_path.string() << ": row " << e.row << ": " << e.message << '\n';
    const bool row_errors = !pubs.errors.empty() || !journals.errors.empty();

    auto corpus = assemble_corpus(std::move(pubs.publications), std::move(journals.journals),
                                  "citations in the census year to articles and reviews of the two prior years");
    const auto report = validate_corpus(corpus);
    for (const auto& f : report.findings) {
        err << "validation: " << to_string(f.kind) << ": " << f.pub_id << ": " << f.detail << '\n';
    }
    if (tally) {
        tally->row_errors = pubs.errors.size() + journals.errors.size();
        tally->findings = report.findings.size();
    }
    if (require_valid && (row_errors || !report.accepted())) return std::nullopt;

    if (config.related_path) {
        auto related = load_related(*config.related_path);
        for (const auto& e : related.errors) {
            err << config.related_path->string() << ": row " << e.row << ": " << e.message << '\n';
        }
        if (require_valid && !related.errors.empty()) return std::nullopt;
        auto [classified, assignment] = assign_majority(corpus, related.records);
        err << "classify: assigned=" << assignment.assigned << " unassigned=" << assignment.unassigned
            << " ignored_external=" << assignment.ignored_external << '\n';
        corpus = std::move(classified);
    }
    return corpus;
}

report::RunMeta meta_for(const RunConfig& config, std::string_view command, bool seeded) {
    report::RunMeta meta;
    meta.command = std::string(command);
    meta.config_hash = config.config_hash(command);
    if (seeded) meta.seed = config.seed;
    return meta;
}

void write_rankings(Output& output, const RunConfig& config, const std::vector<JournalIndicator>& indicators,
                    const report::RunMeta& meta) {
    for (auto key : config.indicators) {
        const auto table = rank(indicators, key, config.category);
        std::string base = "ranking_" + std::string(to_string(key));
        if (config.category) base += "__" + slug(*config.category);
        if (wants(config, OutputFormat::Csv)) {
            output.write(base + ".csv", [&](std::ostream& o) { report::write_ranking_csv(o, table, meta); });
        }
        if (wants(config, OutputFormat::Json)) {
            output.write(base + ".json", [&](std::ostream& o) { report::write_ranking_json(o, table, meta); });
        }
    }
}

}  // namespace

void RunConfig::validate_inputs() const {
    if (sims < 1) throw UsageError("--sims must be >= 1");
    if (indicators.empty()) throw UsageError("at least one --indicator is required");
    if (formats.empty()) throw UsageError("at least one --format is required");
    require_readable(publications_path, "--pubs");
    require_readable(journals_path, "--journals");
    if (related_path) require_readable(*related_path, "--related");
}

std::string RunConfig::config_hash(std::string_view command) const {
    std::ostringstream canon;
    canon << "command=" << command << ";indicators=";
    for (auto k : indicators) canon << to_string(k) << ',';
    canon << ";category=" << category.value_or("") << ";sims=" << sims << ";seed=" << seed << ";formats=";
    for (auto f : formats) canon << (f == OutputFormat::Csv ? "csv," : "json,");
    auto hash = report::fnv1a64(canon.str());
    auto mix_file = [&](const std::optional<fs::path>& p) {
        if (p && !p->empty()) {
            std::ifstream in(*p, std::ios::binary);
            if (in) {
                std::ostringstream ss;
                ss << in.rdbuf();
                hash = report::fnv1a64(ss.str(), hash);
            }
        }
        hash = report::fnv1a64("|", hash);
    };
    mix_file(publications_path);
    mix_file(journals_path);
    mix_file(related_path);
    mix_file(profile_path);
    return report::hex64(hash);
}

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
    LoadTally tally;
    const auto corpus = load_corpus(config, err, /*require_valid=*/false, &tally);
    const auto coverage = coverage_stats(*corpus);
    const auto row_errors = tally.row_errors;
    out << "publications=" << corpus->publications.size() << " journals=" << corpus->journals.size()
        << " topics=" << corpus->topics.size() << '\n';
    out << "row_errors=" << row_errors << " findings=" << tally.findings << '\n';
    out << "publication_coverage=" << report::format_number(coverage.publication_fraction)
        << " journal_coverage_over_90pct=" << report::format_number(coverage.journal_fraction) << '\n';
    const bool ok = row_errors == 0 && tally.findings == 0;
    out << (ok ? "accepted" : "rejected") << '\n';
    return ok ? kExitOk : kExitDataError;
}

int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!config.related_path) throw UsageError("classify needs --related");
    const auto corpus = load_corpus(config, err);
    if (!corpus) return kExitDataError;
    Output output(config.output_dir);
    const auto path = output.write("publications.classified.csv",
                                   [&](std::ostream& o) { write_publications(o, corpus->publications); });
    const auto coverage = coverage_stats(*corpus);
    out << "wrote " << path.string() << '\n';
    out << "publication_coverage=" << report::format_number(coverage.publication_fraction)
        << " journal_coverage_over_90pct=" << report::format_number(coverage.journal_fraction) << '\n';
    return kExitOk;
}

int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto corpus = load_corpus(config, err);
    if (!corpus) return kExitDataError;
    const auto indicators = compute_all(*corpus);
    const auto meta = meta_for(config, "compute", false);
    Output output(config.output_dir);
    if (wants(config, OutputFormat::Csv)) {
        output.write("indicators.csv", [&](std::ostream& o) { report::write_indicators_csv(o, indicators, meta); });
    }
    if (wants(config, OutputFormat::Json)) {
        output.write("indicators.json", [&](std::ostream& o) { report::write_indicators_json(o, indicators, meta); });
    }
    write_rankings(output, config, indicators, meta);
    out << "compute: " << indicators.size() << " journals written to " << config.output_dir.string() << '\n';
    return kExitOk;
}

int cmd_rank(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto corpus = load_corpus(config, err);
    if (!corpus) return kExitDataError;
    const auto indicators = compute_all(*corpus);
    const auto meta = meta_for(config, "rank", false);
    Output output(config.output_dir);
    write_rankings(output, config, indicators, meta);
    for (auto key : config.indicators) {
        const auto table = rank(indicators, key, config.category);
        out << "# " << table.indicator_name << " (" << table.scope.value_or("global") << ")\n";
        for (const auto& row : table.rows) {
            out << row.rank << '\t' << row.journal_id << '\t' << report::format_number(row.value) << '\t'
                << report::format_number(row.percentile) << '\n';
        }
    }
    return kExitOk;
}

int cmd_robustness(const RunConfig& config, RobustnessMode mode, std::ostream& out, std::ostream& err) {
    const auto corpus = load_corpus(config, err);
    if (!corpus) return kExitDataError;
    Output output(config.output_dir);

    if (mode == RobustnessMode::Bootstrap) {
        const auto meta = meta_for(config, "bootstrap", true);
        for (auto key : config.indicators) {
            const auto run = bootstrap_rankings(*corpus, key, config.sims, config.seed, config.threads);
            const auto rep = robustness_report(run);
            const auto base = "bootstrap_" + std::string(to_string(key));
            output.write(base + ".json", [&](std::ostream& o) { report::write_robustness_json(o, rep, run, meta); });
            output.write(base + "_quartiles.csv", [&](std::ostream& o) { report::write_quartiles_csv(o, rep, meta); });
            out << "bootstrap " << rep.indicator_name << ": delta=" << report::format_number(rep.delta)
                << " sims=" << rep.simulations << " seed=" << rep.seed << " journals=" << rep.per_journal.size()
                << '\n';
        }
        return kExitOk;
    }

    const auto meta = meta_for(config, "flip-test", false);
    for (auto key : config.indicators) {
        const auto shifts = perturbation_comparison(*corpus, key);
        const auto base = "flip_" + std::string(to_string(key));
        if (wants(config, OutputFormat::Csv)) {
            output.write(base + ".csv", [&](std::ostream& o) { report::write_flip_csv(o, shifts, key, meta); });
        }
        if (wants(config, OutputFormat::Json)) {
            output.write(base + ".json", [&](std::ostream& o) { report::write_flip_json(o, shifts, key, meta); });
        }
        const auto median = median_displacement(shifts);
        out << "flip-test " << to_string(key) << ": journals=" << shifts.size()
            << " median_abs_displacement=" << (median ? report::format_number(*median) : "n/a") << '\n';
    }
    return kExitOk;
}

int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream&) {
    SyntheticProfile profile;
    if (config.profile_path) profile = parse_profile(read_file(*config.profile_path));
    const auto corpus = generate_corpus(profile, config.seed);
    Output output(config.output_dir);
    output.write("publications.csv", [&](std::ostream& o) { write_publications(o, corpus.publications); });
    output.write("journals.csv", [&](std::ostream& o) { write_journals(o, corpus.journals); });
    out << "generate: " << corpus.publications.size() << " publications, " << corpus.journals.size()
        << " journals, seed=" << config.seed << '\n';
    return kExitOk;
}

int cmd_report(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto corpus = load_corpus(config, err);
    if (!corpus) return kExitDataError;
    const auto validation = validate_corpus(*corpus);
    const auto indicators = compute_all(*corpus);
    const auto meta = meta_for(config, "report", false);
    report::SummaryInput input{&*corpus, &validation, &indicators, config.category};
    Output output(config.output_dir);
    if (wants(config, OutputFormat::Json)) {
        output.write("report.json", [&](std::ostream& o) { report::write_summary_json(o, input, meta); });
    }
    if (wants(config, OutputFormat::Csv)) {
        output.write("report.csv", [&](std::ostream& o) { report::write_summary_csv(o, input, meta); });
    }
    out << "report: " << indicators.size() << " journals written to " << config.output_dir.string() << '\n';
    return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"citerank: field-normalized journal indicators, rankings and ranking robustness"};
    app.set_version_flag("--version", CITERANK_VERSION);
    app.set_config("--config", "", "TOML/INI file supplying any flag; command-line flags win");
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    std::string pubs, journals, related, profile, out_dir = ".";
    std::vector<std::string> indicator_names;
    std::vector<std::string> format_names;
    std::string category;

    app.add_option("--pubs", pubs, "Publications file (pub_id,journal_id,pub_year,doc_type,citations,topic_id)");
    app.add_option("--journals", journals, "Journals file (journal_id,title,categories)");
    app.add_option("--related", related, "Related-records file (pub_id,related_ids)");
    app.add_option("--indicator", indicator_names, "fncsi, fnif, expected-jif, jif (repeatable)")
        ->check([](const std::string& s) -> std::string {
            try {
                parse_indicator(s);
                return {};
            } catch (const UsageError& e) {
                return e.what();
            }
        });
    app.add_option("--category", category, "Restrict rankings to journals in this category");
    app.add_option("--sims", config.sims, "Bootstrap simulations")->check(CLI::PositiveNumber);
    app.add_option("--seed", config.seed, "Random seed");
    app.add_option("--threads", config.threads, "Worker threads for bootstrap")->check(CLI::PositiveNumber);
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--format", format_names, "csv and/or json (repeatable)")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--profile", profile, "Synthetic corpus profile (JSON) for generate");

    struct Sub {
        CLI::App* app;
        std::string name;
    };
    std::vector<Sub> subs;
    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"validate", "Check input files and report coverage"},
             {"classify", "Assign topics to unclassified publications by majority rule"},
             {"compute", "Compute indicators and write rankings"},
             {"rank", "Print and write rankings for the chosen indicators"},
             {"bootstrap", "Bootstrap ranking stability"},
             {"flip-test", "Document-type flip perturbation"},
             {"generate", "Write a synthetic corpus"},
             {"report", "Write a combined summary report"}}) {
        subs.push_back({app.add_subcommand(name, help), name});
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << CITERANK_VERSION << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::string command;
    for (const auto& s : subs) {
        if (s.app->parsed()) command = s.name;
    }

    config.publications_path = pubs;
    config.journals_path = journals;
    if (!related.empty()) config.related_path = related;
    if (!profile.empty()) config.profile_path = profile;
    if (!category.empty()) config.category = category;
    config.output_dir = out_dir;
    if (!format_names.empty()) {
        config.formats.clear();
        for (const auto& f : format_names) config.formats.push_back(f == "json" ? OutputFormat::Json : OutputFormat::Csv);
    }
    for (const auto& name : indicator_names) config.indicators.push_back(parse_indicator(name));
    if (config.indicators.empty()) {
        if (command == "bootstrap" || command == "flip-test") {
            config.indicators = {IndicatorKey::Fncsi, IndicatorKey::Fnif};
        } else if (command == "rank") {
            config.indicators = {IndicatorKey::Fncsi};
        } else {
            config.indicators.assign(std::begin(kAllIndicators), std::end(kAllIndicators));
        }
    }

    try {
        if (command == "generate") return cmd_generate(config, out, err);
        config.validate_inputs();
        if (command == "validate") return cmd_validate(config, out, err);
        if (command == "classify") return cmd_classify(config, out, err);
        if (command == "compute") return cmd_compute(config, out, err);
        if (command == "rank") return cmd_rank(config, out, err);
        if (command == "bootstrap") return cmd_robustness(config, RobustnessMode::Bootstrap, out, err);
        if (command == "flip-test") return cmd_robustness(config, RobustnessMode::Flip, out, err);
        if (command == "report") return cmd_report(config, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    }
    err << "error: unknown command\n";
    return kExitUsage;
}

}  // namespace citerank::cli

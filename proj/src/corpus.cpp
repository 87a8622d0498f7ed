#include "citerank/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "citerank/delimited.hpp"
#include "citerank/errors.hpp"

namespace citerank {

namespace {

constexpr std::string_view kPublicationColumns[] = {"pub_id",    "journal_id", "pub_year",
                                                    "doc_type",  "citations",  "topic_id"};
constexpr std::string_view kJournalColumns[] = {"journal_id", "title", "categories"};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

template <typename Int>
std::optional<Int> parse_int(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    Int value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) return std::nullopt;
    return value;
}

template <std::size_t N>
std::vector<std::size_t> require_columns(const delimited::Table& table,
                                         const std::string_view (&names)[N],
                                         std::string_view what) {
    if (table.header.empty()) throw SchemaError(std::string(what) + " file has no header row");
    std::vector<std::size_t> index;
    std::string missing;
    for (auto name : names) {
        if (auto col = table.column(name)) {
            index.push_back(*col);
        } else {
            if (!missing.empty()) missing += ", ";
            missing += name;
        }
    }
    if (!missing.empty()) {
        throw SchemaError(std::string(what) + " file is missing required column(s): " + missing);
    }
    return index;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return in;
}

}  // namespace

std::string_view to_string(DocType d) noexcept {
    return d == DocType::Article ? "Article" : "Review";
}

std::optional<DocType> parse_doc_type(std::string_view text) noexcept {
    text = trim(text);
    auto iequals = [](std::string_view a, std::string_view b) {
        return a.size() == b.size() &&
               std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
                   return std::tolower(static_cast<unsigned char>(x)) ==
                          std::tolower(static_cast<unsigned char>(y));
               });
    };
    if (iequals(text, "article")) return DocType::Article;
    if (iequals(text, "review")) return DocType::Review;
    return std::nullopt;
}

std::size_t Corpus::publication_count(std::string_view journal_id) const {
    return static_cast<std::size_t>(
        std::count_if(publications.begin(), publications.end(),
                      [&](const Publication& p) { return p.journal_id == journal_id; }));
}

PublicationLoad read_publications(std::istream& in) {
    const auto table = delimited::read(in);
    const auto col = require_columns(table, kPublicationColumns, "publications");

    PublicationLoad result;
    std::unordered_set<std::string> seen;
    for (const auto& row : table.rows) {
        auto error = [&](std::string msg) { result.errors.push_back({row.line, std::move(msg)}); };
        auto field = [&](std::size_t which) -> std::string_view {
            const auto i = col[which];
            return i < row.fields.size() ? trim(row.fields[i]) : std::string_view{};
        };
        if (row.fields.size() != table.header.size()) {
            error("expected " + std::to_string(table.header.size()) + " fields, found " +
                  std::to_string(row.fields.size()));
            continue;
        }

        Publication pub;
        pub.pub_id = std::string(field(0));
        pub.journal_id = std::string(field(1));
        if (pub.pub_id.empty()) {
            error("empty pub_id");
            continue;
        }
        if (pub.journal_id.empty()) {
            error("empty journal_id for " + pub.pub_id);
            continue;
        }
        const auto year = parse_int<int>(field(2));
        if (!year) {
            error("unparseable pub_year '" + std::string(field(2)) + "'");
            continue;
        }
        pub.pub_year = *year;
        const auto doc = parse_doc_type(field(3));
        if (!doc) {
            error("unsupported doc_type '" + std::string(field(3)) + "' (expected Article or Review)");
            continue;
        }
        pub.doc_type = *doc;
        const auto cites = parse_int<std::int64_t>(field(4));
        if (!cites) {
            error("unparseable citations '" + std::string(field(4)) + "'");
            continue;
        }
        if (*cites < 0) {
            error("negative citations (" + std::to_string(*cites) + ") for " + pub.pub_id);
            continue;
        }
        pub.citations = *cites;
        if (const auto topic = field(5); !topic.empty()) pub.topic_id = std::string(topic);

        if (!seen.insert(pub.pub_id).second) {
            error("duplicate pub_id " + pub.pub_id);
            continue;
        }
        result.publications.push_back(std::move(pub));
    }
    return result;
}

PublicationLoad load_publications(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_publications(in);
}

JournalLoad read_journals(std::istream& in) {
    const auto table = delimited::read(in);
    const auto col = require_columns(table, kJournalColumns, "journals");

    JournalLoad result;
    std::unordered_set<std::string> seen;
    for (const auto& row : table.rows) {
        auto field = [&](std::size_t which) -> std::string_view {
            const auto i = col[which];
            return i < row.fields.size() ? trim(row.fields[i]) : std::string_view{};
        };
        Journal journal;
        journal.journal_id = std::string(field(0));
        if (journal.journal_id.empty()) {
            result.errors.push_back({row.line, "empty journal_id"});
            continue;
        }
        if (!seen.insert(journal.journal_id).second) {
            result.errors.push_back({row.line, "duplicate journal_id " + journal.journal_id});
            continue;
        }
        journal.title = std::string(field(1));
        for (auto& c : delimited::split_list(field(2))) {
            auto label = trim(c);
            if (!label.empty()) journal.categories.emplace_back(label);
        }
        result.journals.push_back(std::move(journal));
    }
    return result;
}

JournalLoad load_journals(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_journals(in);
}

Corpus assemble_corpus(std::vector<Publication> publications, std::vector<Journal> journals,
                       std::string census_label) {
    Corpus corpus;
    corpus.census_label = std::move(census_label);
    for (auto& j : journals) {
        auto id = j.journal_id;
        corpus.journals.emplace(std::move(id), std::move(j));
    }
    for (const auto& p : publications) {
        if (p.topic_id) corpus.topics.insert(*p.topic_id);
    }
    corpus.publications = std::move(publications);
    return corpus;
}

void write_publications(std::ostream& out, const std::vector<Publication>& publications) {
    out << "pub_id,journal_id,pub_year,doc_type,citations,topic_id\n";
    for (const auto& p : publications) {
        delimited::write_row(out, {p.pub_id, p.journal_id, std::to_string(p.pub_year),
                                   std::string(to_string(p.doc_type)),
                                   std::to_string(p.citations), p.topic_id.value_or("")});
    }
}

void write_journals(std::ostream& out, const std::map<std::string, Journal>& journals) {
    out << "journal_id,title,categories\n";
    for (const auto& [id, j] : journals) {
        delimited::write_row(out, {j.journal_id, j.title, delimited::join_list(j.categories)});
    }
}

std::string_view to_string(Finding::Kind kind) noexcept {
    switch (kind) {
        case Finding::Kind::DanglingJournal: return "dangling-journal";
        case Finding::Kind::UnknownTopic: return "unknown-topic";
        case Finding::Kind::DuplicatePublication: return "duplicate-publication";
        case Finding::Kind::NegativeCitations: return "negative-citations";
    }
    return "unknown";
}

ValidationReport validate_corpus(const Corpus& corpus) {
    ValidationReport report;
    std::unordered_set<std::string_view> seen;
    for (const auto& p : corpus.publications) {
        if (!seen.insert(p.pub_id).second) {
            report.findings.push_back(
                {Finding::Kind::DuplicatePublication, p.pub_id, "pub_id occurs more than once"});
        }
        if (!corpus.journals.contains(p.journal_id)) {
            report.findings.push_back(
                {Finding::Kind::DanglingJournal, p.pub_id, "journal " + p.journal_id + " not found"});
        }
        if (p.topic_id && !corpus.topics.contains(*p.topic_id)) {
            report.findings.push_back(
                {Finding::Kind::UnknownTopic, p.pub_id, "topic " + *p.topic_id + " not found"});
        }
        if (p.citations < 0) {
            report.findings.push_back({Finding::Kind::NegativeCitations, p.pub_id,
                                       "citations " + std::to_string(p.citations)});
        }
    }
    return report;
}

CoverageReport coverage_stats(const Corpus& corpus) {
    CoverageReport report;
    struct Tally {
        std::size_t total = 0;
        std::size_t classified = 0;
    };
    std::unordered_map<std::string_view, Tally> per_journal;
    for (const auto& p : corpus.publications) {
        auto& t = per_journal[p.journal_id];
        ++t.total;
        ++report.publications;
        if (p.classified()) {
            ++t.classified;
            ++report.classified;
        }
    }
    report.journals_with_publications = per_journal.size();
    for (const auto& [id, t] : per_journal) {
        // strict "more than 90%", compared in integers
        if (10 * t.classified > 9 * t.total) ++report.journals_over_threshold;
    }
    if (report.publications > 0) {
        report.publication_fraction =
            static_cast<double>(report.classified) / static_cast<double>(report.publications);
        report.journal_fraction = static_cast<double>(report.journals_over_threshold) /
                                  static_cast<double>(report.journals_with_publications);
    }
    return report;
}

}  // namespace citerank

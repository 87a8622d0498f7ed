#pragma once

// Publication corpus: data model, delimited-text ingestion, validation and
// classification coverage.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace citerank {

enum class DocType : std::uint8_t { Article = 0, Review = 1 };

inline constexpr std::size_t kDocTypeCount = 2;

std::string_view to_string(DocType d) noexcept;

/// Parses "Article" / "Review" (case-insensitive). Anything else is rejected.
std::optional<DocType> parse_doc_type(std::string_view text) noexcept;

constexpr DocType opposite(DocType d) noexcept {
    return d == DocType::Article ? DocType::Review : DocType::Article;
}

struct Publication {
    std::string pub_id;
    std::string journal_id;
    int pub_year = 0;
    DocType doc_type = DocType::Article;
    std::int64_t citations = 0;
    std::optional<std::string> topic_id;  // empty = unclassified

    bool classified() const noexcept { return topic_id.has_value(); }
    friend bool operator==(const Publication&, const Publication&) = default;
};

struct Journal {
    std::string journal_id;
    std::string title;
    std::vector<std::string> categories;

    friend bool operator==(const Journal&, const Journal&) = default;
};

struct Corpus {
    std::vector<Publication> publications;
    std::map<std::string, Journal> journals;
    std::set<std::string> topics;
    std::string census_label;

    /// Number of publications carrying `journal_id` (classified or not).
    std::size_t publication_count(std::string_view journal_id) const;

    friend bool operator==(const Corpus&, const Corpus&) = default;
};

// ---------------------------------------------------------------------------
// Ingestion

/// A row that could not be turned into a record. Row numbers are 1-based with
/// the header on row 1.
struct RowError {
    std::size_t row = 0;
    std::string message;
};

struct PublicationLoad {
    std::vector<Publication> publications;
    std::vector<RowError> errors;
};

struct JournalLoad {
    std::vector<Journal> journals;
    std::vector<RowError> errors;
};

/// Reads a publications table. The delimiter (comma or tab) is detected from
/// the header line; LF and CRLF line endings are accepted. Throws SchemaError
/// when a required column is missing. Row-level problems (negative citations,
/// unknown document type, duplicate pub_id, malformed numbers) are collected in
/// `errors` and the offending row is left out of `publications`.
PublicationLoad read_publications(std::istream& in);
PublicationLoad load_publications(const std::filesystem::path& path);

/// Reads a journals table (`journal_id,title,categories`, categories
/// `|`-separated).
JournalLoad read_journals(std::istream& in);
JournalLoad load_journals(const std::filesystem::path& path);

/// Builds a corpus from loaded records. The topic set is the set of topic ids
/// that occur on publications.
Corpus assemble_corpus(std::vector<Publication> publications, std::vector<Journal> journals,
                       std::string census_label = {});

void write_publications(std::ostream& out, const std::vector<Publication>& publications);
void write_journals(std::ostream& out, const std::map<std::string, Journal>& journals);

// ---------------------------------------------------------------------------
// Validation

struct Finding {
    enum class Kind { DanglingJournal, UnknownTopic, DuplicatePublication, NegativeCitations };
    Kind kind;
    std::string pub_id;
    std::string detail;

    friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
    std::vector<Finding> findings;

    bool accepted() const noexcept { return findings.empty(); }
    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

std::string_view to_string(Finding::Kind kind) noexcept;

/// Lists dangling journal references, unknown topic ids and duplicate
/// publication ids, in publication order.
ValidationReport validate_corpus(const Corpus& corpus);

// ---------------------------------------------------------------------------
// Coverage

struct CoverageReport {
    std::size_t publications = 0;
    std::size_t classified = 0;
    std::size_t journals_with_publications = 0;
    std::size_t journals_over_threshold = 0;

    /// Fraction of publications with a topic.
    double publication_fraction = 0.0;
    /// Fraction of journals (with >= 1 publication) having more than 90% of
    /// their publications classified.
    double journal_fraction = 0.0;
};

CoverageReport coverage_stats(const Corpus& corpus);

}  // namespace citerank

#pragma once

// Minimal delimited-text (CSV/TSV) reading and writing with RFC 4180 quoting.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace citerank::delimited {

struct Row {
    std::size_t line = 0;  // 1-based, header is line 1
    std::vector<std::string> fields;
};

struct Table {
    char delimiter = ',';
    std::vector<std::string> header;
    std::vector<Row> rows;

    /// Index of `name` in the header, if present.
    std::optional<std::size_t> column(std::string_view name) const;
};

/// Reads a whole table. The delimiter is a tab if the header line contains
/// one, otherwise a comma. Blank lines are skipped; a trailing '\r' is
/// stripped. A UTF-8 byte-order mark before the header is ignored.
Table read(std::istream& in);

/// Splits one line. Quoted fields may contain the delimiter and doubled quotes.
std::vector<std::string> split(std::string_view line, char delimiter);

/// Writes `field`, quoting it when it contains the delimiter, a quote or a
/// line break.
void write_field(std::ostream& out, std::string_view field, char delimiter = ',');

void write_row(std::ostream& out, const std::vector<std::string>& fields, char delimiter = ',');

/// Splits a `|`-separated list. An empty string yields an empty list.
std::vector<std::string> split_list(std::string_view text, char separator = '|');

std::string join_list(const std::vector<std::string>& items, char separator = '|');

}  // namespace citerank::delimited

#include "citerank/delimited.hpp"

#include <istream>
#include <ostream>

namespace citerank::delimited {

std::optional<std::size_t> Table::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    return std::nullopt;
}

std::vector<std::string> split(std::string_view line, char delimiter) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(ch);
            }
        } else if (ch == '"' && current.empty()) {
            quoted = true;
        } else if (ch == delimiter) {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

Table read(std::istream& in) {
    Table table;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        if (!have_header) {
            if (line.empty()) continue;
            table.delimiter = line.find('\t') != std::string::npos ? '\t' : ',';
            table.header = split(line, table.delimiter);
            have_header = true;
            continue;
        }
        if (line.empty()) continue;
        table.rows.push_back(Row{line_no, split(line, table.delimiter)});
    }
    return table;
}

void write_field(std::ostream& out, std::string_view field, char delimiter) {
    const bool needs_quotes = field.find_first_of(std::string{delimiter, '"', '\n', '\r'}) !=
                              std::string_view::npos;
    if (!needs_quotes) {
        out << field;
        return;
    }
    out << '"';
    for (char ch : field) {
        if (ch == '"') out << '"';
        out << ch;
    }
    out << '"';
}

void write_row(std::ostream& out, const std::vector<std::string>& fields, char delimiter) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << delimiter;
        write_field(out, fields[i], delimiter);
    }
    out << '\n';
}

std::vector<std::string> split_list(std::string_view text, char separator) {
    std::vector<std::string> items;
    if (text.empty()) return items;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(separator, start);
        items.emplace_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return items;
}

std::string join_list(const std::vector<std::string>& items, char separator) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out.push_back(separator);
        out += items[i];
    }
    return out;
}

}  // namespace citerank::delimited

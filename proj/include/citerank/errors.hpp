#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace citerank {

/// Input file is missing a required column or has no header.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A single record violates a data invariant. `row()` is 1-based and counts
/// the header as row 1, so it matches what an editor shows.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::size_t row, const std::string& what)
        : std::runtime_error("row " + std::to_string(row) + ": " + what), row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// Bad arguments from the caller (unknown indicator key, sims < 1, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Too few observations for a statistic (e.g. Spearman over < 3 journals).
class InsufficientData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace citerank

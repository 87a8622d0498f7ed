#pragma once

// Command implementations behind the `citerank` executable. Each command
// returns the process exit status: 0 success, 1 data/validation error,
// 2 usage error.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "citerank/indicators.hpp"

namespace citerank::cli {

enum class OutputFormat { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    std::filesystem::path publications_path;
    std::filesystem::path journals_path;
    std::optional<std::filesystem::path> related_path;
    std::optional<std::filesystem::path> profile_path;  // generate only
    std::vector<IndicatorKey> indicators;
    std::optional<std::string> category;
    std::size_t sims = 100;
    std::uint64_t seed = 42;
    unsigned threads = 1;
    std::filesystem::path output_dir = ".";
    std::vector<OutputFormat> formats{OutputFormat::Csv};

    /// Checks the invariants shared by all commands that read a corpus:
    /// sims >= 1, at least one indicator, readable input files. Throws
    /// UsageError.
    void validate_inputs() const;

    /// Stable hash of the command, every setting that affects output and the
    /// bytes of every input file. Paths and output_dir are not included.
    std::string config_hash(std::string_view command) const;
};

enum class RobustnessMode { Bootstrap, Flip };

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_rank(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_robustness(const RunConfig& config, RobustnessMode mode, std::ostream& out, std::ostream& err);
int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_report(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (subcommand, flags, optional --config file) and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace citerank::cli

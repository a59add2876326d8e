#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace monochrome {

inline constexpr const char* kVersion = "0.1.0";

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int internal = 1;
inline constexpr int usage = 2;
inline constexpr int gate = 3;
inline constexpr int numerical = 4;
}  // namespace exit_code

struct RunConfig {
    std::string subcommand;
    /// Edge-list file or family spec string.
    std::string graph;
    std::optional<std::uint64_t> seed;
    std::uint32_t colors = 2;
    std::string statistic = "edges";
    std::size_t samples = 10'000;
    /// "json" or "csv"; empty selects the subcommand default.
    std::string format;
    /// Output file; empty writes to the stream passed to run().
    std::string out;
    /// 0 uses MONOCHROME_WORKERS or 1.
    std::size_t workers = 0;

    // census
    std::size_t max_cycle = 4;
    std::size_t tuples = 0;
    // extremal
    std::optional<double> budget;
    // moments
    std::string kind = "rawN";
    std::size_t order = 2;
    bool fourth = false;
    // limit
    std::string regime;
    std::size_t sample = 0;
    // compare
    std::string empirical;
    std::string law;
    std::string metric = "tv";
    double tol = 0.05;
    double center = 0.0;
    double scale = 1.0;
    // birthday
    std::optional<std::uint64_t> people;
    std::uint64_t days = 365;
    bool lambda_from = false;
    std::optional<double> edges;
    std::string days_power;
};

/// Executes one subcommand. Output goes to `config.out` when set (plus a
/// "<out>.manifest.json" beside it), otherwise to `out`. Errors are reported
/// on `err` and mapped to exit codes: 2 usage, 3 gate, 4 numerical.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and calls run().
int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monochrome

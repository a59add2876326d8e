#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "monochrome/graph.hpp"
#include "monochrome/rational.hpp"

namespace monochrome {

namespace stat {
struct MonoEdges {};
struct MonoStars {
    std::size_t r = 2;
};
struct MonoCycles {
    std::size_t g = 3;
};
}  // namespace stat

using Statistic = std::variant<stat::MonoEdges, stat::MonoStars, stat::MonoCycles>;

/// Parses "edges", "stars:r" or "cycles:g". Errors: ParseError.
Statistic parse_statistic(const std::string& text);
std::string describe(const Statistic& s);
/// Errors: InvalidArgument (r = 0), UnsupportedLength (g outside [3, 8]).
void validate(const Statistic& s);

/// Evaluates one statistic on many colorings of a fixed graph; the cycle
/// list for MonoCycles is built once.
class StatisticEvaluator {
public:
    StatisticEvaluator(const Graph& g, Statistic stat);

    /// Colors must already be validated.
    std::uint64_t operator()(std::span<const std::uint32_t> colors) const;

    const Graph& graph() const noexcept { return graph_; }

private:
    const Graph& graph_;
    Statistic stat_;
    std::vector<Vertex> cycle_vertices_;  // flattened, g per cycle
};

/// Errors: BadColorVector (wrong length or color >= c), plus validate().
std::uint64_t mono_count(const Graph& g, std::span<const std::uint32_t> colors, std::uint32_t c,
                         const Statistic& stat);

struct SimulationRun {
    std::uint64_t seed = 0;
    std::uint32_t colors = 0;
    std::size_t sample_count = 0;
    std::vector<std::uint64_t> counts;

    /// value -> relative frequency.
    std::map<std::uint64_t, double> pmf() const;
    /// value -> number of samples.
    std::map<std::uint64_t, std::uint64_t> histogram() const;
    std::vector<double> standardized(double center, double scale) const;
};

/// Sample i draws n i.i.d. uniform colors from CounterRng(seed, i), so the
/// run is identical for every worker count (0 means one worker).
/// Errors: InvalidArgument (c < 2, samples = 0).
SimulationRun simulate(const Graph& g, std::uint32_t c, const Statistic& stat, std::size_t samples,
                       std::uint64_t seed, std::size_t workers = 1);

/// Colors of sample `index` in a run seeded with `seed`.
std::vector<std::uint32_t> sample_coloring(std::size_t n, std::uint32_t c, std::uint64_t seed, std::uint64_t index);

inline constexpr std::uint64_t kExactEnumerationGate = 10'000'000;

using ExactPmf = std::map<std::uint64_t, Rational>;

/// All c^n colorings. Errors: EnumerationGateExceeded (c^n > 1e7).
ExactPmf exact_distribution(const Graph& g, std::uint32_t c, const Statistic& stat);

/// Exact counts of colorings per value (denominator c^n).
std::map<std::uint64_t, std::uint64_t> exact_counts(const Graph& g, std::uint32_t c, const Statistic& stat);

struct TruncatedPmf {
    std::vector<long double> probabilities;  // index = value
    long double tail = 0.0L;                 // mass above the last index
};

/// Monochromatic-edge pmf of K_n under c colors by a dynamic program over
/// color occupancies, truncated at `max_value`.
TruncatedPmf complete_graph_edge_pmf(std::size_t n, std::uint64_t c, std::size_t max_value);

/// prod_{i<people} (1 - i/days).
double birthday_no_match(std::uint64_t people, std::uint64_t days);
/// Smallest number of people whose no-match probability falls below `threshold`.
std::uint64_t birthday_threshold(std::uint64_t days, double threshold = 0.5);

}  // namespace monochrome

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "monochrome/graph.hpp"
#include "monochrome/multigraph.hpp"

namespace monochrome {

inline constexpr std::size_t kMinCycleLength = 3;
inline constexpr std::size_t kMaxCycleLength = 8;
inline constexpr std::size_t kMaxPatternEdges = 6;
inline constexpr std::size_t kMaxTupleLength = 4;
inline constexpr std::uint64_t kTupleEnumerationGate = 100'000'000;

/// Number of g-cycles (each unlabeled cycle once), 3 <= g <= 8, by rooted
/// DFS. For g = 3 and g = 4 the result is cross-checked against the walk
/// trace closed forms.
std::uint64_t count_cycles(const Graph& g, std::size_t length);

/// Every g-cycle as a vertex sequence starting at its smallest vertex.
std::vector<std::vector<Vertex>> enumerate_cycles(const Graph& g, std::size_t length);

/// tr(A^3)/6 via common-neighbour counts.
std::uint64_t triangles_by_trace(const Graph& g);
/// (tr(A^4) - 2 sum d^2 + 2m) / 8 via common-neighbour counts.
std::uint64_t four_cycles_by_trace(const Graph& g);

/// Number of edge subsets S of `host` with host[S] isomorphic to `pattern`.
/// |E(pattern)| <= 6 and no isolated pattern vertices.
std::uint64_t count_subgraph(const Graph& host, const Graph& pattern);

struct TupleClass {
    MultiGraphPattern pattern;
    std::uint64_t count = 0;
};

/// Canonical key -> class, for all m^k ordered k-tuples of host edges.
using TupleCensus = std::map<std::string, TupleClass>;

/// Errors: InvalidArgument (k outside [1,4]), EnumerationGateExceeded
/// (m^k > 1e8).
TupleCensus count_multigraph_tuples(const Graph& g, std::size_t k);

/// tr(A^g) / n^g from the spectrum; g >= 2.
double hom_density_cycle(const Graph& g, std::size_t length);

struct TightComponent {
    enum class Kind { Cycle, DoubledEdge } kind;
    std::size_t length;  // cycle length, 2 for a doubled edge

    friend bool operator==(const TightComponent&, const TightComponent&) = default;
};

/// Components of a multigraph with minimum degree >= 2 and |V| = |E|. Every
/// component of such a multigraph is a simple cycle or an isolated doubled
/// edge; anything else is reported as std::logic_error.
std::vector<TightComponent> decompose_tight_multigraph(const MultiGraphPattern& h);

}  // namespace monochrome

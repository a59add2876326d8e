#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monochrome/graph.hpp"

namespace monochrome {

struct MultiEdge {
    std::uint8_t u;
    std::uint8_t v;
    std::uint8_t multiplicity;

    friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
};

/// Small multigraph without self-loops or isolated vertices: the object
/// formed by an ordered tuple of host edges.
///
/// The canonical key is the lexicographically smallest upper-triangle
/// multiplicity string over all vertex orderings that respect a degree-based
/// refinement, so isomorphic patterns share a key. Supported up to
/// kMaxVertices vertices.
class MultiGraphPattern {
public:
    static constexpr std::size_t kMaxVertices = 12;

    /// `edges` lists every copy of a multi-edge separately. All vertices in
    /// [0, n) must be covered by some edge.
    static MultiGraphPattern from_edges(std::size_t n, std::span<const std::pair<int, int>> edges);
    static MultiGraphPattern from_graph(const Graph& simple);

    std::size_t vertex_count() const noexcept { return n_; }
    /// Edge count with multiplicity.
    std::size_t edge_count() const noexcept { return total_edges_; }
    /// Distinct vertex pairs with their multiplicities, sorted.
    const std::vector<MultiEdge>& edges() const noexcept { return edges_; }
    std::size_t degree(std::size_t v) const noexcept { return degree_[v]; }
    std::size_t min_degree() const noexcept;
    std::size_t component_count() const;
    /// Underlying simple graph H_S.
    Graph simple_graph() const;
    bool is_simple() const noexcept;

    const std::string& canonical_key() const noexcept { return key_; }
    /// Friendly name for common classes ("doubled-edge", "2-path", "4-cycle",
    /// ...), otherwise the edge listing in canonical labels, so isomorphic
    /// patterns share a name.
    std::string name() const;
    /// Edge listing, e.g. "0-1x2 1-2".
    std::string describe() const;

private:
    void finalize();
    static std::string listing(const std::vector<MultiEdge>& edges);

    std::size_t n_ = 0;
    std::size_t total_edges_ = 0;
    std::vector<MultiEdge> edges_;
    std::vector<std::size_t> degree_;
    std::string key_;
    std::string canonical_listing_;
};

inline constexpr std::size_t kMaxAutomorphismVertices = 10;

/// Automorphism count of a simple graph by permutation search (<= 10 vertices).
std::uint64_t automorphism_count(const Graph& h);

}  // namespace monochrome

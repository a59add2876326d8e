#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace monochrome {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u;
    Vertex v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raw input pair; signed so that negative labels are reported as OutOfRange
/// rather than wrapping.
using VertexPair = std::pair<std::int64_t, std::int64_t>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored canonically (u < v, sorted lexicographically) together
/// with a CSR adjacency whose neighbor lists are sorted. Instances are
/// immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Validates and canonicalizes `pairs`. Throws OutOfRange, SelfLoop or
    /// DuplicateEdge naming the offending pair.
    static Graph from_edge_list(std::size_t n, std::span<const VertexPair> pairs);
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph edgeless(std::size_t n);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(Vertex u, Vertex v) const noexcept;

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void build_adjacency();

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adjacency_;
};

struct BasicStats {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<std::size_t> degrees;
    std::size_t components = 0;
};

BasicStats basic_stats(const Graph& g);

/// Number of connected components; isolated vertices count as components.
std::size_t component_count(const Graph& g);

/// Component label per vertex, labels dense from 0 in order of first vertex.
std::vector<std::size_t> component_labels(const Graph& g, std::size_t* count = nullptr);

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Drops isolated vertices and relabels the rest densely, preserving order.
Graph without_isolated_vertices(const Graph& g);

std::size_t min_degree(const Graph& g);
bool is_forest(const Graph& g);

/// Adjacency matrix as row-major doubles (dense, n*n).
std::vector<double> adjacency_matrix(const Graph& g);

}  // namespace monochrome

#include "monochrome/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "monochrome/errors.hpp"

namespace monochrome {

namespace {

std::string pair_text(std::int64_t u, std::int64_t v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edge_list(std::size_t n, std::span<const VertexPair> pairs) {
    Graph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        if (a < 0 || b < 0 || static_cast<std::uint64_t>(a) >= n || static_cast<std::uint64_t>(b) >= n) {
            fail(ErrorCode::OutOfRange, "pair " + pair_text(a, b) + " outside [0," + std::to_string(n) + ")");
        }
        if (a == b) {
            fail(ErrorCode::SelfLoop, "pair " + pair_text(a, b));
        }
        const auto u = static_cast<Vertex>(std::min(a, b));
        const auto v = static_cast<Vertex>(std::max(a, b));
        if (!seen.insert((std::uint64_t{u} << 32) | v).second) {
            fail(ErrorCode::DuplicateEdge, "pair " + pair_text(a, b) + " repeats an earlier edge");
        }
        g.edges_.push_back({u, v});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.build_adjacency();
    return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<VertexPair> pairs;
    pairs.reserve(edges.size());
    for (const auto& e : edges) pairs.emplace_back(e.u, e.v);
    return from_edge_list(n, pairs);
}

Graph Graph::edgeless(std::size_t n) {
    Graph g;
    g.n_ = n;
    g.build_adjacency();
    return g;
}

void Graph::build_adjacency() {
    offsets_.assign(n_ + 1, 0);
    for (const auto& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    adjacency_.assign(2 * edges_.size(), 0);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
        adjacency_[cursor[e.u]++] = e.v;
        adjacency_[cursor[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n_; ++v) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
    if (u >= n_ || v >= n_) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::size_t> component_labels(const Graph& g, std::size_t* count) {
    const std::size_t n = g.vertex_count();
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(n, unset);
    std::vector<Vertex> stack;
    std::size_t next = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] != unset) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (label[w] == unset) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return label;
}

std::size_t component_count(const Graph& g) {
    std::size_t count = 0;
    component_labels(g, &count);
    return count;
}

BasicStats basic_stats(const Graph& g) {
    BasicStats s;
    s.n = g.vertex_count();
    s.m = g.edge_count();
    s.degrees.resize(s.n);
    for (Vertex v = 0; v < s.n; ++v) s.degrees[v] = g.degree(v);
    s.components = component_count(g);
    return s;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<std::int64_t> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<std::int64_t>(i);
    std::vector<VertexPair> pairs;
    for (const auto& e : g.edges()) {
        if (index[e.u] >= 0 && index[e.v] >= 0) pairs.emplace_back(index[e.u], index[e.v]);
    }
    return Graph::from_edge_list(vertices.size(), pairs);
}

Graph without_isolated_vertices(const Graph& g) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) > 0) keep.push_back(v);
    }
    return induced_subgraph(g, keep);
}

std::size_t min_degree(const Graph& g) {
    std::size_t best = g.vertex_count() == 0 ? 0 : g.degree(0);
    for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
    return best;
}

bool is_forest(const Graph& g) {
    return g.edge_count() + component_count(g) == g.vertex_count();
}

std::vector<double> adjacency_matrix(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<double> a(n * n, 0.0);
    for (const auto& e : g.edges()) {
        a[e.u * n + e.v] = 1.0;
        a[e.v * n + e.u] = 1.0;
    }
    return a;
}

}  // namespace monochrome

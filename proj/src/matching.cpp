#include "monochrome/matching.hpp"

#include <deque>
#include <limits>

namespace monochrome {

BipartiteMatching hopcroft_karp(std::size_t right_count, const std::vector<std::vector<std::uint32_t>>& adj) {
    const std::size_t left_count = adj.size();
    BipartiteMatching m;
    m.left_mate.assign(left_count, kUnmatched);
    m.right_mate.assign(right_count, kUnmatched);
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(left_count);
    std::vector<std::size_t> cursor(left_count);

    auto bfs = [&] {
        std::deque<std::uint32_t> queue;
        bool found = false;
        for (std::uint32_t u = 0; u < left_count; ++u) {
            dist[u] = m.left_mate[u] == kUnmatched ? 0 : inf;
            if (dist[u] == 0) queue.push_back(u);
        }
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            for (auto w : adj[u]) {
                const auto next = m.right_mate[w];
                if (next == kUnmatched) {
                    found = true;
                } else if (dist[next] == inf) {
                    dist[next] = dist[u] + 1;
                    queue.push_back(next);
                }
            }
        }
        return found;
    };
    auto dfs = [&](auto&& self, std::uint32_t u) -> bool {
        for (; cursor[u] < adj[u].size(); ++cursor[u]) {
            const auto w = adj[u][cursor[u]];
            const auto next = m.right_mate[w];
            if (next == kUnmatched || (dist[next] == dist[u] + 1 && self(self, next))) {
                m.left_mate[u] = w;
                m.right_mate[w] = u;
                return true;
            }
        }
        dist[u] = inf;
        return false;
    };
    while (bfs()) {
        std::fill(cursor.begin(), cursor.end(), 0);
        for (std::uint32_t u = 0; u < left_count; ++u) {
            if (m.left_mate[u] == kUnmatched && dfs(dfs, u)) ++m.size;
        }
    }
    return m;
}

VertexCover konig_cover(const std::vector<std::vector<std::uint32_t>>& adj, const BipartiteMatching& m) {
    const std::size_t left_count = adj.size();
    std::vector<bool> left_reached(left_count, false);
    std::vector<bool> right_reached(m.right_mate.size(), false);
    std::deque<std::uint32_t> queue;
    for (std::uint32_t u = 0; u < left_count; ++u) {
        if (m.left_mate[u] == kUnmatched) {
            left_reached[u] = true;
            queue.push_back(u);
        }
    }
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto w : adj[u]) {
            if (right_reached[w] || m.left_mate[u] == w) continue;
            right_reached[w] = true;
            const auto next = m.right_mate[w];
            if (next != kUnmatched && !left_reached[next]) {
                left_reached[next] = true;
                queue.push_back(next);
            }
        }
    }
    VertexCover cover;
    cover.left.resize(left_count);
    for (std::size_t u = 0; u < left_count; ++u) cover.left[u] = !left_reached[u];
    cover.right = std::move(right_reached);
    return cover;
}

std::vector<std::vector<std::uint32_t>> double_cover_adjacency(const Graph& g) {
    std::vector<std::vector<std::uint32_t>> adj(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        adj[v].assign(nb.begin(), nb.end());
    }
    return adj;
}

std::size_t double_cover_matching_size(const Graph& g) {
    return hopcroft_karp(g.vertex_count(), double_cover_adjacency(g)).size;
}

}  // namespace monochrome

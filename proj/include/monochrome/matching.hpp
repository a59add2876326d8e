#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "monochrome/graph.hpp"

namespace monochrome {

inline constexpr std::uint32_t kUnmatched = UINT32_MAX;

struct BipartiteMatching {
    std::vector<std::uint32_t> left_mate;   // kUnmatched if free
    std::vector<std::uint32_t> right_mate;
    std::size_t size = 0;
};

/// Maximum matching in a bipartite graph given by left adjacency lists.
BipartiteMatching hopcroft_karp(std::size_t right_count, const std::vector<std::vector<std::uint32_t>>& left_adjacency);

/// Minimum vertex cover from a maximum matching by alternating reachability
/// from the free left vertices: (L \ Z) u (R n Z).
struct VertexCover {
    std::vector<bool> left;
    std::vector<bool> right;
};
VertexCover konig_cover(const std::vector<std::vector<std::uint32_t>>& left_adjacency, const BipartiteMatching& m);

/// Left vertex v joined to right vertex w for every edge vw, both directions.
std::vector<std::vector<std::uint32_t>> double_cover_adjacency(const Graph& g);

/// Maximum matching size of the bipartite double cover.
std::size_t double_cover_matching_size(const Graph& g);

}  // namespace monochrome

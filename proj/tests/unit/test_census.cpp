#include <doctest.h>

#include <numeric>
#include <random>

#include "monochrome/census.hpp"
#include "monochrome/errors.hpp"
#include "monochrome/generators.hpp"
#include "monochrome/spectral.hpp"
#include "oracles.hpp"

using namespace monochrome;

namespace {

Graph from_pairs(std::size_t n, std::vector<VertexPair> pairs) { return Graph::from_edge_list(n, pairs); }

MultiGraphPattern pattern(std::size_t n, std::vector<std::pair<int, int>> edges) {
    return MultiGraphPattern::from_edges(n, edges);
}

std::map<std::string, std::uint64_t> by_name(const TupleCensus& census) {
    std::map<std::string, std::uint64_t> out;
    for (const auto& [key, cls] : census) out[cls.pattern.name()] += cls.count;
    return out;
}

}  // namespace

TEST_CASE("cycle counts") {
    const Graph k4 = generate(family::Complete{4});
    CHECK(count_cycles(k4, 3) == 4);
    CHECK(count_cycles(k4, 4) == 3);
    CHECK(count_cycles(generate(family::CompleteBipartite{2, 4}), 4) == 6);
    const Graph c5 = generate(family::Cycle{5});
    CHECK(count_cycles(c5, 5) == 1);
    CHECK(count_cycles(c5, 3) == 0);
    CHECK_THROWS_AS(count_cycles(c5, 2), Error);
    CHECK_THROWS_AS(count_cycles(c5, 9), Error);
    // K_n has n!/(2g (n-g)!) g-cycles.
    const Graph k7 = generate(family::Complete{7});
    CHECK(count_cycles(k7, 5) == 7 * 6 * 5 * 4 * 3 / 10);
    CHECK(count_cycles(k7, 7) == 360);
    CHECK(count_cycles(generate(family::Hypercube{3}), 6) == 16);
}

TEST_CASE("cycle enumeration agrees with independent oracles on random graphs") {
    std::uint64_t state = 11;
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::lcg_graph(4 + trial % 5, 0.55, state);
        for (std::size_t len = 3; len <= std::min<std::size_t>(8, g.vertex_count()); ++len) {
            CHECK(count_cycles(g, len) == oracle::cycles_by_sequences(g, len));
        }
        CHECK(triangles_by_trace(g) * 6 == static_cast<std::uint64_t>(oracle::trace_power(g, 3)));
    }
}

TEST_CASE("trace closed forms match enumeration on random graphs") {
    std::uint64_t state = 99;
    for (int trial = 0; trial < 10000; ++trial) {
        const Graph g = oracle::lcg_graph(5 + trial % 26, 0.05 + 0.4 * ((trial * 7) % 10) / 10.0, state);
        REQUIRE(count_cycles(g, 3) == triangles_by_trace(g));
        REQUIRE(count_cycles(g, 4) == four_cycles_by_trace(g));
    }
}

TEST_CASE("count_cycles equals edge-subset enumeration for small hosts") {
    std::uint64_t state = 5;
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::lcg_graph(6 + trial % 3, 0.5, state);
        if (g.edge_count() > 15) continue;
        for (std::size_t len = 3; len <= 6; ++len) {
            CHECK(count_cycles(g, len) == count_subgraph(g, generate(family::Cycle{len})));
        }
    }
}

TEST_CASE("count_subgraph") {
    const Graph k4 = generate(family::Complete{4});
    CHECK(count_subgraph(k4, generate(family::Path{2})) == 12);
    const Graph k3 = generate(family::Complete{3});
    CHECK(count_subgraph(k3, k3) == 1);
    CHECK(count_subgraph(generate(family::Star{4}), generate(family::Star{2})) == 6);
    // Two disjoint edges in K4: the three perfect matchings.
    CHECK(count_subgraph(k4, from_pairs(4, {{0, 1}, {2, 3}})) == 3);
    CHECK(count_subgraph(generate(family::Complete{5}), k4) == 5);
    CHECK_THROWS_AS(count_subgraph(k4, generate(family::Path{7})), Error);
    CHECK_THROWS_AS(count_subgraph(k4, Graph::edgeless(2)), Error);
}

TEST_CASE("multigraph tuple census") {
    const Graph k3 = generate(family::Complete{3});
    CHECK(by_name(count_multigraph_tuples(k3, 2)) ==
          std::map<std::string, std::uint64_t>{{"doubled-edge", 3}, {"2-path", 6}});
    CHECK(by_name(count_multigraph_tuples(k3, 1)) == std::map<std::string, std::uint64_t>{{"single-edge", 3}});
    const Graph two = from_pairs(4, {{0, 1}, {2, 3}});
    CHECK(by_name(count_multigraph_tuples(two, 2)) ==
          std::map<std::string, std::uint64_t>{{"doubled-edge", 2}, {"2-matching", 2}});

    CHECK_THROWS_AS(count_multigraph_tuples(k3, 5), Error);
    try {
        count_multigraph_tuples(generate(family::Complete{20}), 4);
        FAIL("expected gate");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EnumerationGateExceeded);
    }
}

TEST_CASE("tuple census totals and simple classes") {
    std::uint64_t state = 3;
    for (int trial = 0; trial < 8; ++trial) {
        const Graph g = oracle::lcg_graph(7, 0.6, state);
        const std::uint64_t m = g.edge_count();
        if (m < 2) continue;
        for (std::size_t k = 1; k <= 4; ++k) {
            std::uint64_t total = 0;
            for (const auto& [key, cls] : count_multigraph_tuples(g, k)) total += cls.count;
            std::uint64_t expected = 1;
            for (std::size_t i = 0; i < k; ++i) expected *= m;
            CHECK(total == expected);
        }
        const auto four = by_name(count_multigraph_tuples(g, 4));
        auto get = [&](const std::string& name) { return four.count(name) ? four.at(name) : 0; };
        CHECK(get("4-cycle") == 24 * count_cycles(g, 4));
        // Two distinct doubled edges: choose the pair, then 4!/(2!2!) orders.
        CHECK(get("2-doubled-matching") + get("0-2x2 1-2x2") == 6 * m * (m - 1) / 2);
        const auto three = by_name(count_multigraph_tuples(g, 3));
        CHECK((three.count("3-cycle") ? three.at("3-cycle") : 0) == 6 * count_cycles(g, 3));
    }
}

TEST_CASE("canonical keys identify isomorphic patterns") {
    const auto a = pattern(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const auto b = pattern(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
    CHECK(a.canonical_key() == b.canonical_key());
    CHECK(a.name() == "4-cycle");
    const auto path = pattern(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(path.canonical_key() != pattern(4, {{0, 1}, {0, 2}, {0, 3}}).canonical_key());
    CHECK(pattern(2, {{0, 1}, {1, 0}}).name() == "doubled-edge");
    CHECK(pattern(3, {{0, 1}, {0, 1}, {1, 2}}).canonical_key() == pattern(3, {{2, 1}, {0, 2}, {0, 2}}).canonical_key());
    CHECK(pattern(3, {{0, 1}, {0, 1}, {1, 2}}).canonical_key() != pattern(3, {{0, 1}, {1, 2}, {1, 2}, {0, 1}}).canonical_key());
    // Relabelled random multigraphs share keys.
    std::uint64_t state = 17;
    std::mt19937 shuffler(17);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::pair<int, int>> edges;
        const int n = 6;
        for (int i = 0; i < 7; ++i) {
            state = state * 6364136223846793005ULL + 1;
            const int u = static_cast<int>((state >> 33) % n);
            const int v = static_cast<int>((state >> 45) % n);
            if (u != v) edges.emplace_back(u, v);
        }
        std::vector<int> used(n, 0);
        for (auto [u, v] : edges) used[u] = used[v] = 1;
        std::vector<int> relabel(n, -1);
        int next = 0;
        for (int v = 0; v < n; ++v)
            if (used[v]) relabel[v] = next++;
        if (next == 0) continue;
        std::vector<std::pair<int, int>> compact, permuted;
        for (auto [u, v] : edges) compact.emplace_back(relabel[u], relabel[v]);
        std::vector<int> perm(next);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), shuffler);
        for (auto [u, v] : compact) permuted.emplace_back(perm[u], perm[v]);
        std::shuffle(permuted.begin(), permuted.end(), shuffler);
        CHECK(pattern(next, compact).canonical_key() == pattern(next, permuted).canonical_key());
    }
    CHECK_THROWS_AS(pattern(3, {{0, 1}}), Error);
    CHECK_THROWS_AS(pattern(13, {}), Error);
}

TEST_CASE("homomorphism densities") {
    CHECK(hom_density_cycle(generate(family::Complete{2}), 4) == doctest::Approx(0.125));
    CHECK(hom_density_cycle(generate(family::Complete{3}), 3) == doctest::Approx(2.0 / 9.0));
    CHECK(hom_density_cycle(Graph::edgeless(5), 4) == 0.0);
    CHECK_THROWS_AS(hom_density_cycle(Graph::edgeless(5), 1), Error);
}

TEST_CASE("tight multigraph decomposition") {
    using K = TightComponent::Kind;
    CHECK(decompose_tight_multigraph(pattern(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})) ==
          std::vector<TightComponent>{{K::Cycle, 4}});
    CHECK(decompose_tight_multigraph(pattern(5, {{0, 1}, {0, 1}, {2, 3}, {3, 4}, {4, 2}})) ==
          std::vector<TightComponent>{{K::DoubledEdge, 2}, {K::Cycle, 3}});
    try {
        decompose_tight_multigraph(pattern(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}}));
        FAIL("expected precondition error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PreconditionViolated);
    }
    CHECK_THROWS_AS(decompose_tight_multigraph(pattern(3, {{0, 1}, {1, 2}, {1, 2}})), Error);
}

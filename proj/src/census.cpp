#include "monochrome/census.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "monochrome/errors.hpp"
#include "monochrome/spectral.hpp"

namespace monochrome {

namespace {

void check_cycle_length(std::size_t length) {
    if (length < kMinCycleLength || length > kMaxCycleLength) {
        fail(ErrorCode::UnsupportedLength, "cycle length " + std::to_string(length) + " outside [" +
                                               std::to_string(kMinCycleLength) + "," +
                                               std::to_string(kMaxCycleLength) + "]");
    }
}

// Rooted DFS: the root is the smallest vertex of the cycle, every other
// vertex is larger, and the direction is fixed by path[1] < path[g-1].
template <class Visit>
void for_each_cycle(const Graph& g, std::size_t length, Visit&& visit) {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> path(length);
    std::vector<bool> on_path(n, false);
    for (Vertex root = 0; root < n; ++root) {
        path[0] = root;
        on_path[root] = true;
        auto extend = [&](auto&& self, std::size_t depth) -> void {
            const Vertex last = path[depth - 1];
            for (Vertex next : g.neighbors(last)) {
                if (next <= root || on_path[next]) continue;
                if (depth + 1 == length) {
                    if (path[1] < next && g.has_edge(next, root)) {
                        path[depth] = next;
                        visit(path);
                    }
                    continue;
                }
                path[depth] = next;
                on_path[next] = true;
                self(self, depth + 1);
                on_path[next] = false;
            }
        };
        extend(extend, 1);
        on_path[root] = false;
    }
}

// Accumulates, for every vertex a, the common-neighbour counts s2(a, b) for
// b > a and hands them to `visit(a, b, s2)`.
template <class Visit>
void for_each_common_neighbour_count(const Graph& g, Visit&& visit) {
    const std::size_t n = g.vertex_count();
    std::vector<std::uint64_t> count(n, 0);
    std::vector<Vertex> touched;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex w : g.neighbors(a)) {
            for (Vertex b : g.neighbors(w)) {
                if (b <= a) continue;
                if (count[b]++ == 0) touched.push_back(b);
            }
        }
        for (Vertex b : touched) {
            visit(a, b, count[b]);
            count[b] = 0;
        }
        touched.clear();
    }
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && result > cap / base) return cap + 1;
        result *= base;
    }
    return result;
}

}  // namespace

std::uint64_t triangles_by_trace(const Graph& g) {
    // tr(A^3) = sum over ordered adjacent pairs of s2 = 2 * sum over edges.
    std::uint64_t trace3 = 0;
    for_each_common_neighbour_count(g, [&](Vertex a, Vertex b, std::uint64_t s2) {
        if (g.has_edge(a, b)) trace3 += 2 * s2;
    });
    return trace3 / 6;
}

std::uint64_t four_cycles_by_trace(const Graph& g) {
    // tr(A^4) = sum_{a,b} (A^2)_{ab}^2 = sum_a d_a^2 + 2 sum_{a<b} s2(a,b)^2.
    std::uint64_t sum_deg_sq = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) sum_deg_sq += g.degree(v) * g.degree(v);
    std::uint64_t off = 0;
    for_each_common_neighbour_count(g, [&](Vertex, Vertex, std::uint64_t s2) { off += s2 * s2; });
    const std::uint64_t trace4 = sum_deg_sq + 2 * off;
    return (trace4 + 2 * g.edge_count() - 2 * sum_deg_sq) / 8;
}

std::uint64_t count_cycles(const Graph& g, std::size_t length) {
    check_cycle_length(length);
    std::uint64_t total = 0;
    for_each_cycle(g, length, [&](const std::vector<Vertex>&) { ++total; });
    if (length == 3 && total != triangles_by_trace(g)) {
        throw std::logic_error("triangle count disagrees with tr(A^3)/6");
    }
    if (length == 4 && total != four_cycles_by_trace(g)) {
        throw std::logic_error("4-cycle count disagrees with the tr(A^4) closed form");
    }
    return total;
}

std::vector<std::vector<Vertex>> enumerate_cycles(const Graph& g, std::size_t length) {
    check_cycle_length(length);
    std::vector<std::vector<Vertex>> cycles;
    for_each_cycle(g, length, [&](const std::vector<Vertex>& path) { cycles.push_back(path); });
    return cycles;
}

std::uint64_t count_subgraph(const Graph& host, const Graph& pattern) {
    const std::size_t k = pattern.edge_count();
    if (k > kMaxPatternEdges) {
        fail(ErrorCode::PatternTooLarge, "pattern has " + std::to_string(k) + " edges, limit is " +
                                             std::to_string(kMaxPatternEdges));
    }
    for (Vertex v = 0; v < pattern.vertex_count(); ++v) {
        if (pattern.degree(v) == 0) fail(ErrorCode::PreconditionViolated, "pattern has an isolated vertex");
    }
    if (k == 0) return 1;
    const std::size_t pattern_vertices = pattern.vertex_count();
    std::vector<std::size_t> pattern_degrees;
    for (Vertex v = 0; v < pattern_vertices; ++v) pattern_degrees.push_back(pattern.degree(v));
    std::sort(pattern_degrees.begin(), pattern_degrees.end());
    const std::size_t max_degree = pattern_degrees.back();
    const std::string target = MultiGraphPattern::from_graph(pattern).canonical_key();

    const auto& edges = host.edges();
    const std::size_t m = edges.size();
    std::vector<std::size_t> deg(host.vertex_count(), 0);
    std::vector<Vertex> touched;
    std::vector<std::size_t> chosen;
    std::uint64_t total = 0;

    auto touch = [&](Vertex v) {
        if (deg[v]++ == 0) touched.push_back(v);
    };
    auto untouch = [&](Vertex v) {
        if (--deg[v] == 0) touched.erase(std::find(touched.begin(), touched.end(), v));
    };
    auto matches = [&] {
        std::vector<std::size_t> degrees;
        for (Vertex v : touched) degrees.push_back(deg[v]);
        std::sort(degrees.begin(), degrees.end());
        if (degrees != pattern_degrees) return false;
        std::vector<std::pair<int, int>> local;
        for (std::size_t idx : chosen) {
            auto label = [&](Vertex v) {
                return static_cast<int>(std::find(touched.begin(), touched.end(), v) - touched.begin());
            };
            local.emplace_back(label(edges[idx].u), label(edges[idx].v));
        }
        return MultiGraphPattern::from_edges(touched.size(), local).canonical_key() == target;
    };
    auto extend = [&](auto&& self, std::size_t start) -> void {
        if (chosen.size() == k) {
            if (matches()) ++total;
            return;
        }
        for (std::size_t i = start; i + (k - chosen.size()) <= m; ++i) {
            const auto [u, v] = edges[i];
            if (deg[u] + 1 > max_degree || deg[v] + 1 > max_degree) continue;
            touch(u);
            touch(v);
            if (touched.size() <= pattern_vertices) {
                chosen.push_back(i);
                self(self, i + 1);
                chosen.pop_back();
            }
            untouch(v);
            untouch(u);
        }
    };
    extend(extend, 0);
    return total;
}

TupleCensus count_multigraph_tuples(const Graph& g, std::size_t k) {
    if (k < 1 || k > kMaxTupleLength) {
        fail(ErrorCode::InvalidArgument, "tuple length must lie in [1," + std::to_string(kMaxTupleLength) + "]");
    }
    const auto& edges = g.edges();
    const std::uint64_t m = edges.size();
    const std::uint64_t tuples = checked_power(m, k, kTupleEnumerationGate);
    if (tuples > kTupleEnumerationGate) {
        fail(ErrorCode::EnumerationGateExceeded,
             "m^k = " + std::to_string(m) + "^" + std::to_string(k) + " exceeds " +
                 std::to_string(kTupleEnumerationGate));
    }
    TupleCensus census;
    if (m == 0) return census;

    // Vertices are relabelled by first appearance in the tuple, so a tuple is
    // identified by a small integer code; codes map to classes via a cache.
    std::unordered_map<std::uint32_t, std::size_t> class_of_code;
    std::vector<TupleClass*> classes;
    std::vector<std::uint64_t> counts;
    std::array<Vertex, 2 * kMaxTupleLength> label_vertex{};
    std::size_t labels = 0;
    std::array<std::pair<int, int>, kMaxTupleLength> local{};

    auto label_of = [&](Vertex v) -> int {
        for (std::size_t i = 0; i < labels; ++i)
            if (label_vertex[i] == v) return static_cast<int>(i);
        label_vertex[labels] = v;
        return static_cast<int>(labels++);
    };
    auto classify = [&](std::uint32_t code) -> std::size_t {
        auto it = class_of_code.find(code);
        if (it != class_of_code.end()) return it->second;
        auto pattern = MultiGraphPattern::from_edges(labels, std::span(local.data(), k));
        auto [slot, inserted] = census.try_emplace(pattern.canonical_key(), TupleClass{pattern, 0});
        std::size_t id;
        auto found = std::find(classes.begin(), classes.end(), &slot->second);
        if (found == classes.end()) {
            id = classes.size();
            classes.push_back(&slot->second);
            counts.push_back(0);
        } else {
            id = static_cast<std::size_t>(found - classes.begin());
        }
        class_of_code.emplace(code, id);
        return id;
    };
    auto extend = [&](auto&& self, std::size_t depth, std::uint32_t code) -> void {
        for (const auto& e : edges) {
            const std::size_t saved = labels;
            const int a = label_of(e.u);
            const int b = label_of(e.v);
            local[depth] = {a, b};
            const std::uint32_t next = code * 64 + static_cast<std::uint32_t>(a * 8 + b);
            if (depth + 1 == k) {
                ++counts[classify(next)];
            } else {
                self(self, depth + 1, next);
            }
            labels = saved;
        }
    };
    extend(extend, 0, 0);
    for (std::size_t i = 0; i < classes.size(); ++i) classes[i]->count = counts[i];
    return census;
}

double hom_density_cycle(const Graph& g, std::size_t length) {
    if (length < 2) fail(ErrorCode::InvalidArgument, "homomorphism density needs cycle length >= 2");
    const std::size_t n = g.vertex_count();
    if (n == 0 || g.edge_count() == 0) return 0.0;
    const Spectrum spectrum = eigenvalues(g);
    return spectrum.trace_power(static_cast<int>(length)) / std::pow(static_cast<double>(n), length);
}

std::vector<TightComponent> decompose_tight_multigraph(const MultiGraphPattern& h) {
    if (h.min_degree() < 2) fail(ErrorCode::PreconditionViolated, "multigraph has a vertex of degree below 2");
    if (h.vertex_count() != h.edge_count()) {
        fail(ErrorCode::PreconditionViolated, "|V| = " + std::to_string(h.vertex_count()) + " differs from |E| = " +
                                                  std::to_string(h.edge_count()));
    }
    std::size_t component_total = 0;
    const Graph simple = h.simple_graph();
    const auto label = component_labels(simple, &component_total);
    std::vector<TightComponent> out;
    for (std::size_t c = 0; c < component_total; ++c) {
        std::size_t vertices = 0, edges_with_mult = 0, distinct = 0;
        bool all_simple = true;
        for (std::size_t v = 0; v < h.vertex_count(); ++v) vertices += label[v] == c;
        for (const auto& e : h.edges()) {
            if (label[e.u] != c) continue;
            edges_with_mult += e.multiplicity;
            ++distinct;
            all_simple = all_simple && e.multiplicity == 1;
        }
        bool degrees_two = true;
        for (std::size_t v = 0; v < h.vertex_count(); ++v)
            if (label[v] == c) degrees_two = degrees_two && h.degree(v) == 2;
        if (vertices == 2 && distinct == 1 && edges_with_mult == 2) {
            out.push_back({TightComponent::Kind::DoubledEdge, 2});
        } else if (all_simple && degrees_two && edges_with_mult == vertices) {
            out.push_back({TightComponent::Kind::Cycle, vertices});
        } else {
            throw std::logic_error("tight multigraph component is neither a cycle nor a doubled edge: " +
                                   h.describe());
        }
    }
    return out;
}

}  // namespace monochrome

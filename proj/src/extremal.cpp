#include "monochrome/extremal.hpp"

#include <cmath>

#include "monochrome/census.hpp"
#include "monochrome/errors.hpp"
#include "monochrome/matching.hpp"
#include "monochrome/multigraph.hpp"
#include "monochrome/spectral.hpp"

namespace monochrome {

namespace {

void require_no_isolated(const Graph& h) {
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        if (h.degree(v) == 0) {
            fail(ErrorCode::PreconditionViolated, "vertex " + std::to_string(v) + " is isolated");
        }
    }
}

}  // namespace

std::size_t deficiency(const Graph& h) {
    require_no_isolated(h);
    return h.vertex_count() - double_cover_matching_size(h);
}

FractionalSolution gamma(const Graph& h) {
    require_no_isolated(h);
    const auto adj = double_cover_adjacency(h);
    const auto matching = hopcroft_karp(h.vertex_count(), adj);
    const auto cover = konig_cover(adj, matching);

    FractionalSolution sol;
    const std::size_t n = h.vertex_count();
    sol.phi_half.resize(n);
    std::size_t total_half = 0;
    for (Vertex v = 0; v < n; ++v) {
        const auto half = static_cast<std::uint8_t>(2 - int(cover.left[v]) - int(cover.right[v]));
        sol.phi_half[v] = half;
        total_half += half;
        (half == 0 ? sol.zero_part : half == 1 ? sol.half_part : sol.one_part).push_back(v);
    }
    sol.gamma = Rational(total_half, 2);
    const Rational expected(n + (n - matching.size), 2);
    if (sol.gamma != expected) {
        throw std::logic_error("Konig cover does not attain (|V| + deficiency) / 2");
    }
    return sol;
}

bool is_union_of_stars(const Graph& h) {
    std::size_t count = 0;
    const auto label = component_labels(h, &count);
    std::vector<std::size_t> vertices(count, 0), edges(count, 0), hubs(count, 0);
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        ++vertices[label[v]];
        if (h.degree(v) > 1) ++hubs[label[v]];
    }
    for (const auto& e : h.edges()) ++edges[label[e.u]];
    for (std::size_t c = 0; c < count; ++c) {
        if (vertices[c] < 2 || edges[c] + 1 != vertices[c] || hubs[c] > 1) return false;
    }
    return true;
}

bool has_cycle_edge_factor(const Graph& h) {
    return double_cover_matching_size(h) == h.vertex_count();
}

StructuralReport structural_check(const FractionalSolution& sol, const Graph& h) {
    const std::size_t n = h.vertex_count();
    if (sol.phi_half.size() != n) {
        fail(ErrorCode::SolutionMismatch, "solution has " + std::to_string(sol.phi_half.size()) +
                                              " values for a graph on " + std::to_string(n) + " vertices");
    }
    std::size_t total_half = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (sol.phi_half[v] > 2) fail(ErrorCode::SolutionMismatch, "phi value outside {0, 1/2, 1}");
        total_half += sol.phi_half[v];
    }
    for (const auto& e : h.edges()) {
        if (sol.phi_half[e.u] + sol.phi_half[e.v] > 2) {
            fail(ErrorCode::SolutionMismatch,
                 "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") violates phi(x)+phi(y) <= 1");
        }
    }
    if (Rational(total_half, 2) != sol.gamma) {
        fail(ErrorCode::SolutionMismatch, "sum of phi differs from the stated objective");
    }

    StructuralReport report;
    report.saturating_matching_applicable = 2 * sol.gamma > n;

    // V0 -> V1 bipartite graph.
    std::vector<std::uint32_t> index_in_one(n, kUnmatched);
    for (std::uint32_t i = 0; i < sol.one_part.size(); ++i) index_in_one[sol.one_part[i]] = i;
    std::vector<std::vector<std::uint32_t>> adj(sol.zero_part.size());
    for (std::size_t i = 0; i < sol.zero_part.size(); ++i) {
        for (Vertex w : h.neighbors(sol.zero_part[i])) {
            if (index_in_one[w] != kUnmatched) adj[i].push_back(index_in_one[w]);
        }
    }
    report.saturating_matching = hopcroft_karp(sol.one_part.size(), adj).size == sol.zero_part.size();

    report.half_part_spanning = has_cycle_edge_factor(induced_subgraph(h, sol.half_part));
    report.union_of_stars = is_union_of_stars(h);
    return report;
}

ConditionReport condition_report(const Graph& g, std::size_t max_cycle_length) {
    if (g.edge_count() == 0) fail(ErrorCode::PreconditionViolated, "condition report needs at least one edge");
    if (max_cycle_length > kMaxCycleLength) {
        fail(ErrorCode::UnsupportedLength, "cycle ratios available up to length " + std::to_string(kMaxCycleLength));
    }
    ConditionReport report;
    report.m = g.edge_count();
    const double m = static_cast<double>(report.m);
    report.acf4_ratio = static_cast<double>(four_cycles_by_trace(g)) / (m * m);
    if (g.vertex_count() <= kSpectrumMaxVertices) report.usn_ratio = eigenvalues(g).usn_ratio();
    for (std::size_t len = kMinCycleLength; len <= max_cycle_length; ++len) {
        report.cycle_ratios[len] = static_cast<double>(count_cycles(g, len)) / std::pow(m, 0.5 * len);
    }
    return report;
}

double alon_asymptotic(const Graph& h, double edge_budget) {
    if (h.vertex_count() > kMaxAutomorphismVertices) {
        fail(ErrorCode::PatternTooLarge, "pattern has more than " + std::to_string(kMaxAutomorphismVertices) +
                                             " vertices");
    }
    if (!has_cycle_edge_factor(h)) {
        fail(ErrorCode::NoSpanningCycleEdgeFactor, "pattern has no spanning union of cycles and isolated edges");
    }
    return std::pow(2.0 * edge_budget, 0.5 * static_cast<double>(h.vertex_count())) /
           static_cast<double>(automorphism_count(h));
}

}  // namespace monochrome

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "monochrome/graph.hpp"
#include "monochrome/rational.hpp"

namespace monochrome {

/// Half-integral optimum of the fractional stable set LP.
struct FractionalSolution {
    /// phi(v) in half units: 0, 1 (= 1/2) or 2 (= 1).
    std::vector<std::uint8_t> phi_half;
    Rational gamma;
    std::vector<Vertex> zero_part;
    std::vector<Vertex> half_part;
    std::vector<Vertex> one_part;

    Rational phi(Vertex v) const { return Rational(phi_half[v], 2); }
};

/// |V| minus the maximum matching of the bipartite double cover.
/// Errors: PreconditionViolated (isolated vertex).
std::size_t deficiency(const Graph& h);

/// Errors: PreconditionViolated (isolated vertex).
FractionalSolution gamma(const Graph& h);

struct StructuralReport {
    bool saturating_matching = false;
    /// gamma > |V|/2, the case in which the saturating matching is guaranteed.
    bool saturating_matching_applicable = false;
    bool half_part_spanning = false;
    bool union_of_stars = false;
};

/// Errors: SolutionMismatch (sol infeasible or not matching h).
StructuralReport structural_check(const FractionalSolution& sol, const Graph& h);

/// Every component is a star K_{1,r}, r >= 1.
bool is_union_of_stars(const Graph& h);

/// Spanning subgraph made of disjoint cycles and isolated edges exists.
bool has_cycle_edge_factor(const Graph& h);

struct ConditionReport {
    std::size_t m = 0;
    double acf4_ratio = 0.0;
    /// Absent when the graph is over the dense spectrum gate.
    std::optional<double> usn_ratio;
    std::map<std::size_t, double> cycle_ratios;
};

inline constexpr std::size_t kDefaultConditionCycleLength = 8;

/// Cycle ratios N(C_g)/m^{g/2} for 3 <= g <= max_cycle_length.
/// Errors: PreconditionViolated (m = 0), UnsupportedLength.
ConditionReport condition_report(const Graph& g, std::size_t max_cycle_length = kDefaultConditionCycleLength);

/// (2l)^{|V|/2} / |Aut(H)|.
/// Errors: PatternTooLarge, NoSpanningCycleEdgeFactor.
double alon_asymptotic(const Graph& h, double edge_budget);

}  // namespace monochrome

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "monochrome/graph.hpp"

namespace monochrome {

namespace family {

struct Complete {
    std::size_t n;
};
struct CompleteBipartite {
    std::size_t a;
    std::size_t b;
};
/// K_{1,leaves}; the center is vertex 0.
struct Star {
    std::size_t leaves;
};
/// Path with `edges` edges on vertices 0..edges.
struct Path {
    std::size_t edges;
};
struct Cycle {
    std::size_t g;
};
/// Q_s on 2^s vertices, adjacent iff Hamming distance one.
struct Hypercube {
    std::size_t s;
};
struct ErdosRenyi {
    std::size_t n;
    double p;
    std::uint64_t seed;
};
/// Edge (i,j) present independently with probability kernel[i*n + j]; the
/// caller evaluates the kernel on the grid. Must be symmetric.
struct Inhomogeneous {
    std::size_t n;
    std::vector<double> kernel;
    std::uint64_t seed;
};
struct RandomRegular {
    std::size_t n;
    std::size_t d;
    std::uint64_t seed;
};
/// Offspring pmf (p_0, ..., p_K) with no mass beyond K; the tree contains
/// every individual born in generations 0..height.
struct GaltonWatson {
    std::vector<double> offspring_pmf;
    std::size_t height;
    std::uint64_t seed;
};
/// Path v_0..v_a plus, for each path edge, b extra g-cycles through it.
struct PathCycleGadget {
    std::size_t a;
    std::size_t b;
    std::size_t g;
};

}  // namespace family

using FamilySpec = std::variant<family::Complete, family::CompleteBipartite, family::Star, family::Path,
                                family::Cycle, family::Hypercube, family::ErdosRenyi, family::Inhomogeneous,
                                family::RandomRegular, family::GaltonWatson, family::PathCycleGadget>;

/// Throws InfeasibleSpec describing the violated constraint.
void validate(const FamilySpec& spec);

/// Pure function of the spec (seed included). Errors: InfeasibleSpec,
/// GenerationTimeout (random regular pairing model, 1000 attempts) and
/// SizeGateExceeded (Galton-Watson trees above kMaxGaltonWatsonVertices).
Graph generate(const FamilySpec& spec);

std::string describe(const FamilySpec& spec);
bool is_random_family(const FamilySpec& spec);

inline constexpr std::size_t kRegularMaxAttempts = 1000;
inline constexpr std::size_t kMaxGaltonWatsonVertices = 10'000'000;

}  // namespace monochrome

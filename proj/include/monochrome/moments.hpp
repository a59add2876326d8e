#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "monochrome/graph.hpp"
#include "monochrome/multigraph.hpp"
#include "monochrome/rational.hpp"

namespace monochrome {

inline constexpr std::size_t kMaxMomentOrder = 4;
inline constexpr std::size_t kMaxCentralProductEdges = 6;

/// E(M^k | G) for M ~ Binomial(m, 1/c), via Stirling numbers of the second kind.
Rational stirling_moment(std::uint64_t m, std::uint64_t c, std::size_t k);

/// S(k, j).
BigInt stirling_second(std::size_t k, std::size_t j);

struct CentralProducts {
    Rational ez;  // E prod (1{Y_i = Y_j} - 1/c)
    Rational ew;  // E prod (B_e - 1/c), B_e i.i.d. Ber(1/c)
};

/// Errors: PatternTooLarge (more than 6 edges with multiplicity).
CentralProducts expected_central_products(const MultiGraphPattern& h, std::uint64_t c);

/// E prod 1{Y_i = Y_j} over the edges of h: c^{-(|V| - components)}.
Rational monochromatic_probability(const MultiGraphPattern& h, std::uint64_t c);

enum class MomentKind { RawN, RawM, CentralZ, CentralW };

struct MomentRequest {
    MomentKind kind = MomentKind::RawN;
    std::size_t order = 1;
    std::uint64_t colors = 2;
};

struct MomentResult {
    /// Raw moment, or the unstandardized central moment E(N - m/c)^k.
    Rational unscaled;
    /// unscaled * (m/c)^{-k/2} when that is rational; always set for raw
    /// moments and for even k.
    std::optional<Rational> value;
    /// Central moments: the standardization is (m/c)^{scale_exponent}.
    Rational scale_base = 1;
    Rational scale_exponent = 0;
    double approx = 0.0;
};

/// Errors: InvalidArgument (order > 4, c < 2), EnumerationGateExceeded,
/// PreconditionViolated (central moment of an edgeless graph).
MomentResult conditional_moment(const Graph& g, const MomentRequest& request);

struct FourthMomentReport {
    Rational exact;
    Rational leading;
    /// (1/c)(1 - 1/c) N(C4) / m^2 as displayed in the decomposition.
    Rational c4_term;
    Rational remainder;
    /// Exact standardized contribution of every tuple class, keyed by name.
    std::map<std::string, Rational> class_contributions;
    /// Contribution of the 4-cycle class alone: 24 (1/c)(1 - 1/c) N(C4)/m^2.
    Rational c4_contribution;
};

FourthMomentReport fourth_moment_report(const Graph& g, std::uint64_t c);

struct SurrogateEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
};

/// Monte Carlo mean of T(H) = prod_{ij} sum_a S_ia S_ja, where the S_v are
/// independent centered normal vectors with covariance I/c - J/c^2.
SurrogateEstimate gaussian_surrogate_mean(const MultiGraphPattern& h, std::uint64_t c, std::size_t samples,
                                          std::uint64_t seed);

}  // namespace monochrome

#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "monochrome/generators.hpp"
#include "monochrome/graph.hpp"

namespace monochrome {

namespace law {

struct Poisson {
    double mean;
};
struct PointMass {
    double value;
};
/// Mixing variable Z ~ Poisson(mean).
struct PoissonMixing {
    double mean;
};
/// Mixing variable drawn uniformly from the stored samples.
struct EmpiricalMixing {
    std::vector<double> samples;
};
using Mixing = std::variant<PointMass, PoissonMixing, EmpiricalMixing>;
struct PoissonMixture {
    Mixing mixing;
};
struct Normal {
    double mean;
    double variance;
};
/// scale * sum_i w_i (chi^2_dof - dof), independent terms.
struct WeightedChiSquare {
    std::vector<double> weights;
    double dof;
    double scale;
};
/// Atom of mass `atom` at 0, otherwise Normal(0, variance).
struct AtomPlusNormal {
    double atom;
    double variance;
};

}  // namespace law

using LimitLaw = std::variant<law::Poisson, law::PoissonMixture, law::Normal, law::WeightedChiSquare,
                              law::AtomPlusNormal>;

/// Throws InvalidArgument naming the violated parameter constraint.
void validate(const LimitLaw& law);
std::string describe(const LimitLaw& law);
bool is_discrete(const LimitLaw& law);

/// Weighted chi-square with weights rescaled to unit l2 norm.
law::WeightedChiSquare normalized_weighted_chi_square(std::vector<double> weights, double dof, double scale);

/// Equal weights merged into one chi-square term with the summed dof, and
/// the smallest weights dropped while their total square stays below 1e-6.
struct ChiSquareComponents {
    std::vector<double> weights;
    std::vector<double> dofs;
    double truncated_square_mass = 0.0;
};
inline constexpr double kWeightTruncation = 1e-6;
ChiSquareComponents reduce_weights(const law::WeightedChiSquare& w);

/// Errors: WrongLawKind for continuous laws.
double law_pmf(const LimitLaw& law, std::int64_t k);
/// Weighted chi-square cdfs come from a cached table of sorted Monte Carlo
/// draws (kChiSquareTableSamples, fixed internal seed).
double law_cdf(const LimitLaw& law, double x);
inline constexpr std::size_t kChiSquareTableSamples = 10'000'000;
inline constexpr std::uint64_t kChiSquareTableSeed = 0x6d6f6e6fULL;

std::complex<double> law_characteristic_function(const LimitLaw& law, double t);

/// Sample i is drawn from CounterRng(seed, i).
std::vector<double> sample_law(const LimitLaw& law, std::size_t count, std::uint64_t seed);

/// prod_j (1 - 2 t w_j)^{-dof/2} e^{-dof t w_j}.
/// Errors: DomainExceeded unless |t| < 1 / (2 max|w_j|).
double weighted_chisq_mgf(const std::vector<double>& weights, double dof, double t);

/// E(exp(t Delta) | G) = prod_j (1 - lambda~_j t / c)^{(1-c)/2}.
/// Errors: DomainExceeded unless |t| < c / (2 max|lambda~_j|).
double delta_conditional_mgf(const Graph& g, std::uint32_t c, double t);

/// Draws of Q(G)/sqrt(2m), Q = sum over edges of sum_a S_ia S_ja, where the
/// S_v are independent with covariance I/c - J/c^2.
std::vector<double> surrogate_delta_samples(const Graph& g, std::uint32_t c, std::size_t count, std::uint64_t seed);

/// E e^{itZ} for monochromatic g-cycles in the path-cycle gadget.
std::complex<double> gadget_char_function(std::size_t a, std::size_t b, std::uint32_t c, std::size_t g, double t);

namespace regime {
struct Fixed {
    std::uint32_t colors;
};
/// lambda = lim m/c; infinity for m/c -> infinity.
struct Growing {
    double ratio;
};
}  // namespace regime
using ColorRegime = std::variant<regime::Fixed, regime::Growing>;

inline constexpr double kAcf4NormalThreshold = 1e-2;
inline constexpr double kAcf4DenseThreshold = 1e-1;
inline constexpr double kDenseEdgeDensity = 0.1;

/// Errors: AmbiguousRegime (gray zone or no matching rule), SizeGateExceeded.
LimitLaw limit_for(const Graph& g, const ColorRegime& regime);
LimitLaw limit_for(const FamilySpec& family, const ColorRegime& regime);

}  // namespace monochrome

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

namespace monochrome {

/// Support value -> probability.
using Pmf = std::map<double, double>;

/// 1/2 sum |p(x) - q(x)| over the union of supports.
double tv_distance(const Pmf& p, const Pmf& q);

/// sup_x |F_n(x) - F(x)|, checking both sides of every jump of F_n. The
/// cdf's left limits are taken at the next representable value below.
/// Errors: InvalidArgument (no samples).
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov distance. Errors: InvalidArgument.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

struct MomentSummary {
    /// Index k holds the k-th moment (index 0 unused).
    std::vector<double> raw;
    std::vector<double> central;
    std::vector<double> raw_se;
    std::vector<double> central_se;
};

inline constexpr std::size_t kMaxEmpiricalMomentOrder = 8;
inline constexpr std::size_t kMaxJackknifeBlocks = 10'000;

/// Plug-in moments with delete-one-block jackknife standard errors.
/// Errors: InvalidArgument (empty input, k_max > 8).
MomentSummary empirical_moments(std::span<const double> samples, std::size_t k_max);

/// Standard error of the sample mean from `replicates` bootstrap resamples.
double bootstrap_mean_se(std::span<const double> values, std::size_t replicates, std::uint64_t seed);

Pmf binomial_pmf(std::uint64_t trials, double p);
/// Poisson pmf on 0..max_value (the mass above is dropped).
Pmf poisson_pmf(double mean, std::uint64_t max_value);
/// Frequencies normalized to sum to one.
Pmf pmf_from_counts(const std::map<std::uint64_t, std::uint64_t>& counts);

}  // namespace monochrome

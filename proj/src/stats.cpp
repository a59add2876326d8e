#include "monochrome/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "monochrome/errors.hpp"
#include "monochrome/rng.hpp"

namespace monochrome {

double tv_distance(const Pmf& p, const Pmf& q) {
    double total = 0.0;
    auto a = p.begin();
    auto b = q.begin();
    while (a != p.end() || b != q.end()) {
        if (b == q.end() || (a != p.end() && a->first < b->first)) {
            total += std::abs(a->second);
            ++a;
        } else if (a == p.end() || b->first < a->first) {
            total += std::abs(b->second);
            ++b;
        } else {
            total += std::abs(a->second - b->second);
            ++a;
            ++b;
        }
    }
    return 0.5 * total;
}

double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) fail(ErrorCode::InvalidArgument, "KS statistic needs at least one sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const double x = sorted[i];
        const double below = cdf(std::nextafter(x, -std::numeric_limits<double>::infinity()));
        worst = std::max(worst, std::abs(static_cast<double>(i) / n - below));
        worst = std::max(worst, std::abs(static_cast<double>(j) / n - cdf(x)));
        i = j;
    }
    return worst;
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) fail(ErrorCode::InvalidArgument, "two-sample KS needs nonempty samples");
    std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    const double nx = static_cast<double>(x.size()), ny = static_cast<double>(y.size());
    std::size_t i = 0, j = 0;
    double worst = 0.0;
    while (i < x.size() || j < y.size()) {
        double v;
        if (j == y.size()) v = x[i];
        else if (i == x.size()) v = y[j];
        else v = std::min(x[i], y[j]);
        while (i < x.size() && x[i] == v) ++i;
        while (j < y.size() && y[j] == v) ++j;
        worst = std::max(worst, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
    }
    return worst;
}

namespace {

// Raw and central moments from power sums s[j] = sum x^j over `count` values.
void moments_from_sums(const std::vector<double>& s, double count, std::size_t k_max, std::vector<double>& raw,
                       std::vector<double>& central) {
    raw.assign(k_max + 1, 0.0);
    central.assign(k_max + 1, 0.0);
    for (std::size_t k = 1; k <= k_max; ++k) raw[k] = s[k] / count;
    const double mu = raw[1];
    for (std::size_t k = 1; k <= k_max; ++k) {
        double total = 0.0, binom = 1.0;
        for (std::size_t j = 0; j <= k; ++j) {
            total += binom * std::pow(-mu, static_cast<double>(k - j)) * (j == 0 ? 1.0 : raw[j]);
            binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
        }
        central[k] = total;
    }
    central[1] = 0.0;
}

}  // namespace

MomentSummary empirical_moments(std::span<const double> samples, std::size_t k_max) {
    if (samples.empty()) fail(ErrorCode::InvalidArgument, "moments need at least one sample");
    if (k_max > kMaxEmpiricalMomentOrder) {
        fail(ErrorCode::InvalidArgument, "moment order limited to " + std::to_string(kMaxEmpiricalMomentOrder));
    }
    const std::size_t n = samples.size();
    const std::size_t blocks = std::min(n, kMaxJackknifeBlocks);
    std::vector<std::vector<double>> block_sums(blocks, std::vector<double>(k_max + 1, 0.0));
    std::vector<double> block_count(blocks, 0.0);
    std::vector<double> total(k_max + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t b = i * blocks / n;
        double power = 1.0;
        for (std::size_t k = 0; k <= k_max; ++k) {
            block_sums[b][k] += power;
            total[k] += power;
            power *= samples[i];
        }
        block_count[b] += 1.0;
    }
    MomentSummary out;
    moments_from_sums(total, static_cast<double>(n), k_max, out.raw, out.central);
    out.raw_se.assign(k_max + 1, 0.0);
    out.central_se.assign(k_max + 1, 0.0);
    if (blocks < 2) return out;

    std::vector<std::vector<double>> raw_loo(blocks), central_loo(blocks);
    std::vector<double> leave_out(k_max + 1);
    for (std::size_t b = 0; b < blocks; ++b) {
        for (std::size_t k = 0; k <= k_max; ++k) leave_out[k] = total[k] - block_sums[b][k];
        moments_from_sums(leave_out, static_cast<double>(n) - block_count[b], k_max, raw_loo[b], central_loo[b]);
    }
    const double nb = static_cast<double>(blocks);
    for (std::size_t k = 1; k <= k_max; ++k) {
        double mean_raw = 0.0, mean_central = 0.0;
        for (std::size_t b = 0; b < blocks; ++b) {
            mean_raw += raw_loo[b][k] / nb;
            mean_central += central_loo[b][k] / nb;
        }
        double var_raw = 0.0, var_central = 0.0;
        for (std::size_t b = 0; b < blocks; ++b) {
            var_raw += std::pow(raw_loo[b][k] - mean_raw, 2);
            var_central += std::pow(central_loo[b][k] - mean_central, 2);
        }
        out.raw_se[k] = std::sqrt((nb - 1.0) / nb * var_raw);
        out.central_se[k] = std::sqrt((nb - 1.0) / nb * var_central);
    }
    return out;
}

double bootstrap_mean_se(std::span<const double> values, std::size_t replicates, std::uint64_t seed) {
    if (values.empty() || replicates < 2) {
        fail(ErrorCode::InvalidArgument, "bootstrap needs values and at least two replicates");
    }
    std::vector<double> means(replicates);
    for (std::size_t r = 0; r < replicates; ++r) {
        CounterRng rng(seed, r);
        double sum = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i) sum += values[rng.uniform_below(values.size())];
        means[r] = sum / static_cast<double>(values.size());
    }
    double mean = 0.0;
    for (double m : means) mean += m;
    mean /= static_cast<double>(replicates);
    double var = 0.0;
    for (double m : means) var += (m - mean) * (m - mean);
    return std::sqrt(var / static_cast<double>(replicates - 1));
}

Pmf binomial_pmf(std::uint64_t trials, double p) {
    Pmf out;
    for (std::uint64_t k = 0; k <= trials; ++k) {
        const double n = static_cast<double>(trials), kd = static_cast<double>(k);
        double log_p = std::lgamma(n + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(n - kd + 1.0);
        if (k > 0) log_p += kd * std::log(p);
        if (k < trials) log_p += (n - kd) * std::log1p(-p);
        out[kd] = (p == 0.0) ? (k == 0 ? 1.0 : 0.0) : (p == 1.0 ? (k == trials ? 1.0 : 0.0) : std::exp(log_p));
    }
    return out;
}

Pmf poisson_pmf(double mean, std::uint64_t max_value) {
    Pmf out;
    for (std::uint64_t k = 0; k <= max_value; ++k) {
        const double kd = static_cast<double>(k);
        out[kd] = mean == 0.0 ? (k == 0 ? 1.0 : 0.0) : std::exp(kd * std::log(mean) - mean - std::lgamma(kd + 1.0));
    }
    return out;
}

Pmf pmf_from_counts(const std::map<std::uint64_t, std::uint64_t>& counts) {
    double total = 0.0;
    for (auto [v, c] : counts) total += static_cast<double>(c);
    Pmf out;
    for (auto [v, c] : counts) out[static_cast<double>(v)] = static_cast<double>(c) / total;
    return out;
}

}  // namespace monochrome

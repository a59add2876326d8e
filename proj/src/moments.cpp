#include "monochrome/moments.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <vector>

#include "monochrome/census.hpp"
#include "monochrome/errors.hpp"
#include "monochrome/rng.hpp"

namespace monochrome {

namespace {

void require_colors(std::uint64_t c) {
    if (c < 2) fail(ErrorCode::InvalidArgument, "color count must be at least 2");
}

Rational power(const Rational& base, std::size_t exp) {
    Rational r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

std::optional<BigInt> exact_sqrt(const BigInt& x) {
    if (x < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(x);
    if (r * r != x) return std::nullopt;
    return r;
}

std::optional<Rational> exact_sqrt(const Rational& x) {
    auto num = exact_sqrt(numerator(x));
    auto den = exact_sqrt(denominator(x));
    if (!num || !den) return std::nullopt;
    return Rational(*num, *den);
}

// |V| - components of the multigraph on the given edge slots.
std::size_t rank_of(std::size_t n, const std::vector<std::pair<int, int>>& slots, std::uint32_t mask) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t merges = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!(mask >> i & 1U)) continue;
        auto [a, b] = slots[i];
        const int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            ++merges;
        }
    }
    return merges;
}

}  // namespace

BigInt stirling_second(std::size_t k, std::size_t j) {
    std::vector<std::vector<BigInt>> s(k + 1, std::vector<BigInt>(k + 1, 0));
    s[0][0] = 1;
    for (std::size_t a = 1; a <= k; ++a)
        for (std::size_t b = 1; b <= a; ++b) s[a][b] = BigInt(b) * s[a - 1][b] + s[a - 1][b - 1];
    return j <= k ? s[k][j] : BigInt(0);
}

Rational stirling_moment(std::uint64_t m, std::uint64_t c, std::size_t k) {
    require_colors(c);
    Rational total = 0;
    BigInt falling = 1;
    for (std::size_t j = 0; j <= k; ++j) {
        if (j > 0) falling *= BigInt(m) - BigInt(j - 1);
        if (falling == 0 && j > 0) break;
        total += Rational(stirling_second(k, j) * falling) / power(Rational(c), j);
    }
    return total;
}

Rational monochromatic_probability(const MultiGraphPattern& h, std::uint64_t c) {
    require_colors(c);
    const std::size_t rank = h.vertex_count() - h.component_count();
    return Rational(1) / power(Rational(c), rank);
}

CentralProducts expected_central_products(const MultiGraphPattern& h, std::uint64_t c) {
    require_colors(c);
    const std::size_t k = h.edge_count();
    if (k > kMaxCentralProductEdges) {
        fail(ErrorCode::PatternTooLarge, "pattern has " + std::to_string(k) + " edges, limit is " +
                                             std::to_string(kMaxCentralProductEdges));
    }
    std::vector<std::pair<int, int>> slots;
    for (const auto& e : h.edges())
        for (int i = 0; i < e.multiplicity; ++i) slots.emplace_back(e.u, e.v);

    const Rational inv_c(1, c);
    CentralProducts out;
    // Expand prod (1{.} - 1/c) over all subsets F of the edge slots.
    for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
        const std::size_t outside = k - static_cast<std::size_t>(std::popcount(mask));
        Rational term = power(inv_c, outside + rank_of(h.vertex_count(), slots, mask));
        if (outside % 2 == 1) term = -term;
        out.ez += term;
    }
    out.ew = 1;
    for (const auto& e : h.edges()) {
        const Rational p = inv_c;
        const Rational q = 1 - p;
        Rational neg = power(-p, e.multiplicity);
        out.ew *= p * power(q, e.multiplicity) + q * neg;
    }
    return out;
}

MomentResult conditional_moment(const Graph& g, const MomentRequest& request) {
    require_colors(request.colors);
    const std::size_t k = request.order;
    if (k > kMaxMomentOrder) {
        fail(ErrorCode::InvalidArgument, "moment order limited to " + std::to_string(kMaxMomentOrder));
    }
    const std::uint64_t c = request.colors;
    const std::uint64_t m = g.edge_count();
    const bool central = request.kind == MomentKind::CentralZ || request.kind == MomentKind::CentralW;
    if (central && m == 0) fail(ErrorCode::PreconditionViolated, "central moments need at least one edge");

    MomentResult result;
    if (k == 0) {
        result.unscaled = 1;
    } else if (request.kind == MomentKind::RawM) {
        result.unscaled = stirling_moment(m, c, k);
    } else if (m > 0) {
        for (const auto& [key, cls] : count_multigraph_tuples(g, k)) {
            const Rational weight(cls.count);
            switch (request.kind) {
                case MomentKind::RawN: result.unscaled += weight * monochromatic_probability(cls.pattern, c); break;
                case MomentKind::CentralZ: result.unscaled += weight * expected_central_products(cls.pattern, c).ez; break;
                case MomentKind::CentralW: result.unscaled += weight * expected_central_products(cls.pattern, c).ew; break;
                case MomentKind::RawM: break;
            }
        }
    }

    if (!central) {
        result.value = result.unscaled;
        result.approx = to_double(result.unscaled);
        return result;
    }
    result.scale_base = Rational(m, c);
    result.scale_exponent = Rational(-static_cast<long>(k), 2);
    std::optional<Rational> factor;
    if (k % 2 == 0) {
        factor = Rational(1) / power(result.scale_base, k / 2);
    } else if (auto root = exact_sqrt(result.scale_base)) {
        factor = Rational(1) / power(*root, k);
    }
    if (factor) result.value = result.unscaled * *factor;
    result.approx = to_double(result.unscaled) * std::pow(to_double(result.scale_base), -0.5 * double(k));
    return result;
}

FourthMomentReport fourth_moment_report(const Graph& g, std::uint64_t c) {
    require_colors(c);
    const std::uint64_t m = g.edge_count();
    if (m == 0) fail(ErrorCode::PreconditionViolated, "fourth moment report needs at least one edge");
    const Rational scale = Rational(c * c) / Rational(BigInt(m) * m);
    FourthMomentReport report;
    for (const auto& [key, cls] : count_multigraph_tuples(g, 4)) {
        const Rational ez = expected_central_products(cls.pattern, c).ez;
        if (ez == 0) continue;
        report.class_contributions[cls.pattern.name()] += Rational(cls.count) * ez * scale;
    }
    for (const auto& [name, value] : report.class_contributions) report.exact += value;

    const Rational inv_c(1, c);
    const Rational four_cycles(four_cycles_by_trace(g));
    report.leading = 3 * (1 - inv_c) * (1 - inv_c);
    report.c4_term = inv_c * (1 - inv_c) * four_cycles / Rational(BigInt(m) * m);
    report.remainder = report.exact - report.leading - report.c4_term;
    report.c4_contribution = 24 * report.c4_term;
    return report;
}

SurrogateEstimate gaussian_surrogate_mean(const MultiGraphPattern& h, std::uint64_t c, std::size_t samples,
                                          std::uint64_t seed) {
    require_colors(c);
    if (samples < 2) fail(ErrorCode::InvalidArgument, "surrogate estimate needs at least 2 samples");
    const std::size_t n = h.vertex_count();
    const double inv_sqrt_c = 1.0 / std::sqrt(static_cast<double>(c));
    std::vector<double> s(n * c);
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        CounterRng rng(seed, i);
        // S_v = (G - mean(G)) / sqrt(c) has covariance I/c - J/c^2.
        for (std::size_t v = 0; v < n; ++v) {
            double mean = 0.0;
            for (std::size_t a = 0; a < c; ++a) mean += s[v * c + a] = rng.normal();
            mean /= static_cast<double>(c);
            for (std::size_t a = 0; a < c; ++a) s[v * c + a] = (s[v * c + a] - mean) * inv_sqrt_c;
        }
        double t = 1.0;
        for (const auto& e : h.edges()) {
            double dot = 0.0;
            for (std::size_t a = 0; a < c; ++a) dot += s[e.u * c + a] * s[e.v * c + a];
            t *= std::pow(dot, e.multiplicity);
        }
        sum += t;
        sum_sq += t * t;
    }
    const double count = static_cast<double>(samples);
    SurrogateEstimate est;
    est.mean = sum / count;
    est.standard_error = std::sqrt(std::max(0.0, sum_sq / count - est.mean * est.mean) / (count - 1.0));
    return est;
}

}  // namespace monochrome

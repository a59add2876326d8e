#include "monochrome/limit_laws.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>

#include "monochrome/census.hpp"
#include "monochrome/errors.hpp"
#include "monochrome/rng.hpp"
#include "monochrome/spectral.hpp"

namespace monochrome {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double poisson_pmf(double mean, std::int64_t k) {
    if (k < 0) return 0.0;
    if (mean == 0.0) return k == 0 ? 1.0 : 0.0;
    const double kd = static_cast<double>(k);
    return std::exp(kd * std::log(mean) - mean - std::lgamma(kd + 1.0));
}

// E[e^{-Z} Z^k / k!] with Z ~ Poisson(mu), summed until the remaining terms
// are below 1e-12 relative to the partial sum.
double poisson_mixing_pmf(double mu, std::int64_t k) {
    if (k < 0) return 0.0;
    double total = 0.0;
    const double peak = std::max(mu, static_cast<double>(k));
    const auto cap = static_cast<std::int64_t>(peak + 60.0 * std::sqrt(peak + 1.0) + 200.0);
    for (std::int64_t j = 0; j <= cap; ++j) {
        const double term = poisson_pmf(mu, j) * poisson_pmf(static_cast<double>(j), k);
        total += term;
        if (static_cast<double>(j) > peak && term < 1e-12 * total) break;
    }
    return total;
}

// Shortest text that round-trips.
std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string weights_key(const law::WeightedChiSquare& w) {
    std::string key = format_double(w.dof) + ";" + format_double(w.scale);
    for (double x : w.weights) key += ";" + format_double(x);
    return key;
}

double sample_chi_square_sum(CounterRng& rng, const ChiSquareComponents& comp, double scale) {
    double total = 0.0;
    for (std::size_t j = 0; j < comp.weights.size(); ++j) {
        total += comp.weights[j] * (rng.chi_square(comp.dofs[j]) - comp.dofs[j]);
    }
    return scale * total;
}

std::shared_ptr<const std::vector<double>> chi_square_table(const law::WeightedChiSquare& w) {
    static std::mutex mutex;
    static std::map<std::string, std::shared_ptr<const std::vector<double>>> cache;
    const std::string key = weights_key(w);
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto table = std::make_shared<std::vector<double>>(sample_law(w, kChiSquareTableSamples, kChiSquareTableSeed));
    std::sort(table->begin(), table->end());
    cache.emplace(key, table);
    return table;
}

double sample_one(const LimitLaw& law, CounterRng& rng, const ChiSquareComponents* comp) {
    return std::visit(
        overloaded{
            [&](const law::Poisson& p) { return static_cast<double>(rng.poisson(p.mean)); },
            [&](const law::PoissonMixture& p) {
                const double z = std::visit(
                    overloaded{[](const law::PointMass& m) { return m.value; },
                               [&](const law::PoissonMixing& m) { return static_cast<double>(rng.poisson(m.mean)); },
                               [&](const law::EmpiricalMixing& m) {
                                   return m.samples[rng.uniform_below(m.samples.size())];
                               }},
                    p.mixing);
                return static_cast<double>(rng.poisson(z));
            },
            [&](const law::Normal& p) { return p.mean + std::sqrt(p.variance) * rng.normal(); },
            [&](const law::WeightedChiSquare& p) { return sample_chi_square_sum(rng, *comp, p.scale); },
            [&](const law::AtomPlusNormal& p) {
                return rng.uniform01() < p.atom ? 0.0 : std::sqrt(p.variance) * rng.normal();
            },
        },
        law);
}

void require_regime(const ColorRegime& r) {
    if (auto* f = std::get_if<regime::Fixed>(&r); f && f->colors < 2) {
        fail(ErrorCode::InvalidArgument, "fixed color regime needs c >= 2");
    }
    if (auto* g = std::get_if<regime::Growing>(&r); g && !(g->ratio >= 0.0)) {
        fail(ErrorCode::InvalidArgument, "growing regime needs a ratio lim m/c >= 0");
    }
}

LimitLaw growing_limit(const regime::Growing& g) {
    if (std::isinf(g.ratio)) return law::Normal{0.0, 1.0};
    return law::Poisson{g.ratio};
}

LimitLaw fixed_normal(std::uint32_t c) { return law::Normal{0.0, 1.0 - 1.0 / c}; }

LimitLaw fixed_chi_square(std::vector<double> weights, std::uint32_t c) {
    return normalized_weighted_chi_square(std::move(weights), c - 1.0, 1.0 / (2.0 * c));
}

[[noreturn]] void ambiguous(const std::string& why) { fail(ErrorCode::AmbiguousRegime, why); }

}  // namespace

void validate(const LimitLaw& law) {
    auto bad = [](const std::string& msg) { fail(ErrorCode::InvalidArgument, msg); };
    std::visit(overloaded{
                   [&](const law::Poisson& p) {
                       if (!(p.mean >= 0.0)) bad("Poisson mean must be >= 0");
                   },
                   [&](const law::PoissonMixture& p) {
                       std::visit(overloaded{[&](const law::PointMass& m) {
                                                 if (!(m.value >= 0.0)) bad("point mass must be >= 0");
                                             },
                                             [&](const law::PoissonMixing& m) {
                                                 if (!(m.mean >= 0.0)) bad("mixing mean must be >= 0");
                                             },
                                             [&](const law::EmpiricalMixing& m) {
                                                 if (m.samples.empty()) bad("empirical mixing needs samples");
                                                 for (double z : m.samples)
                                                     if (!(z >= 0.0)) bad("mixing samples must be >= 0");
                                             }},
                                  p.mixing);
                   },
                   [&](const law::Normal& p) {
                       if (!(p.variance > 0.0)) bad("normal variance must be > 0");
                   },
                   [&](const law::WeightedChiSquare& p) {
                       double sq = 0.0;
                       for (double w : p.weights) sq += w * w;
                       if (std::abs(sq - 1.0) > 1e-10) bad("chi-square weights must have unit l2 norm");
                       if (!(p.dof >= 1.0)) bad("chi-square dof must be >= 1");
                       if (!(p.scale > 0.0)) bad("chi-square scale must be > 0");
                   },
                   [&](const law::AtomPlusNormal& p) {
                       if (!(p.atom >= 0.0 && p.atom <= 1.0)) bad("atom mass must lie in [0,1]");
                       if (!(p.variance > 0.0)) bad("normal variance must be > 0");
                   },
               },
               law);
}

std::string describe(const LimitLaw& law) {
    return std::visit(
        overloaded{
            [](const law::Poisson& p) { return "Poisson(" + format_double(p.mean) + ")"; },
            [](const law::PoissonMixture& p) {
                return "PoissonMixture(" +
                       std::visit(overloaded{[](const law::PointMass& m) { return "PointMass(" + format_double(m.value) + ")"; },
                                             [](const law::PoissonMixing& m) {
                                                 return "PoissonMixing(" + format_double(m.mean) + ")";
                                             },
                                             [](const law::EmpiricalMixing& m) {
                                                 return "Empirical(" + std::to_string(m.samples.size()) + " samples)";
                                             }},
                                  p.mixing) +
                       ")";
            },
            [](const law::Normal& p) { return "Normal(" + format_double(p.mean) + ", " + format_double(p.variance) + ")"; },
            [](const law::WeightedChiSquare& p) {
                return "WeightedChiSquare(" + std::to_string(p.weights.size()) + " weights, dof " + format_double(p.dof) +
                       ", scale " + format_double(p.scale) + ")";
            },
            [](const law::AtomPlusNormal& p) {
                return "AtomPlusNormal(" + format_double(p.atom) + ", " + format_double(p.variance) + ")";
            },
        },
        law);
}

bool is_discrete(const LimitLaw& law) {
    return std::holds_alternative<law::Poisson>(law) || std::holds_alternative<law::PoissonMixture>(law);
}

law::WeightedChiSquare normalized_weighted_chi_square(std::vector<double> weights, double dof, double scale) {
    double sq = 0.0;
    for (double w : weights) sq += w * w;
    if (!(sq > 0.0)) fail(ErrorCode::InvalidArgument, "chi-square weights are all zero");
    const double norm = std::sqrt(sq);
    for (double& w : weights) w /= norm;
    law::WeightedChiSquare out{std::move(weights), dof, scale};
    validate(out);
    return out;
}

ChiSquareComponents reduce_weights(const law::WeightedChiSquare& w) {
    double max_abs = 0.0;
    for (double x : w.weights) max_abs = std::max(max_abs, std::abs(x));
    const double tie = 1e-9 * max_abs;
    std::vector<double> sorted;
    for (double x : w.weights)
        if (std::abs(x) > tie) sorted.push_back(x);
    std::sort(sorted.begin(), sorted.end());

    struct Group {
        double weight;
        double dof;
        double square;
    };
    std::vector<Group> groups;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        double sum = 0.0;
        while (j < sorted.size() && sorted[j] - sorted[i] <= tie) sum += sorted[j++];
        const double count = static_cast<double>(j - i);
        const double mean = sum / count;
        groups.push_back({mean, count * w.dof, count * mean * mean});
        i = j;
    }
    // Drop the smallest groups while their combined square mass stays small.
    std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
        return std::abs(a.weight) > std::abs(b.weight);
    });
    ChiSquareComponents out;
    double tail = 0.0;
    std::size_t keep = groups.size();
    while (keep > 1 && tail + groups[keep - 1].square < kWeightTruncation) tail += groups[--keep].square;
    for (std::size_t i = 0; i < keep; ++i) {
        out.weights.push_back(groups[i].weight);
        out.dofs.push_back(groups[i].dof);
    }
    out.truncated_square_mass = tail;
    return out;
}

double law_pmf(const LimitLaw& law, std::int64_t k) {
    if (auto* p = std::get_if<law::Poisson>(&law)) return poisson_pmf(p->mean, k);
    if (auto* p = std::get_if<law::PoissonMixture>(&law)) {
        return std::visit(overloaded{[&](const law::PointMass& m) { return poisson_pmf(m.value, k); },
                                     [&](const law::PoissonMixing& m) { return poisson_mixing_pmf(m.mean, k); },
                                     [&](const law::EmpiricalMixing& m) {
                                         double total = 0.0;
                                         for (double z : m.samples) total += poisson_pmf(z, k);
                                         return total / static_cast<double>(m.samples.size());
                                     }},
                          p->mixing);
    }
    fail(ErrorCode::WrongLawKind, "pmf requested for continuous law " + describe(law));
}

double law_cdf(const LimitLaw& law, double x) {
    if (is_discrete(law)) {
        if (x < 0.0) return 0.0;
        const auto top = static_cast<std::int64_t>(std::floor(x));
        double total = 0.0;
        for (std::int64_t k = 0; k <= top; ++k) {
            const double p = law_pmf(law, k);
            total += p;
            if (total >= 1.0 - 1e-15 || (k > 10 && p < 1e-300)) break;
        }
        return std::min(1.0, total);
    }
    if (auto* p = std::get_if<law::Normal>(&law)) return normal_cdf((x - p->mean) / std::sqrt(p->variance));
    if (auto* p = std::get_if<law::AtomPlusNormal>(&law)) {
        return (x >= 0.0 ? p->atom : 0.0) + (1.0 - p->atom) * normal_cdf(x / std::sqrt(p->variance));
    }
    const auto table = chi_square_table(std::get<law::WeightedChiSquare>(law));
    const auto pos = std::upper_bound(table->begin(), table->end(), x) - table->begin();
    return static_cast<double>(pos) / static_cast<double>(table->size());
}

std::complex<double> law_characteristic_function(const LimitLaw& law, double t) {
    using C = std::complex<double>;
    const C i(0.0, 1.0);
    const C unit = std::exp(i * t) - 1.0;
    return std::visit(
        overloaded{
            [&](const law::Poisson& p) { return std::exp(p.mean * unit); },
            [&](const law::PoissonMixture& p) {
                return std::visit(overloaded{[&](const law::PointMass& m) { return std::exp(m.value * unit); },
                                             [&](const law::PoissonMixing& m) {
                                                 return std::exp(m.mean * (std::exp(unit) - 1.0));
                                             },
                                             [&](const law::EmpiricalMixing& m) {
                                                 C total = 0.0;
                                                 for (double z : m.samples) total += std::exp(z * unit);
                                                 return total / static_cast<double>(m.samples.size());
                                             }},
                                  p.mixing);
            },
            [&](const law::Normal& p) { return std::exp(i * t * p.mean - 0.5 * p.variance * t * t); },
            [&](const law::WeightedChiSquare& p) {
                C total = 1.0;
                for (double w : p.weights) {
                    const double s = p.scale * w * t;
                    total *= std::pow(1.0 - 2.0 * i * s, -0.5 * p.dof) * std::exp(-i * s * p.dof);
                }
                return total;
            },
            [&](const law::AtomPlusNormal& p) {
                return p.atom + (1.0 - p.atom) * std::exp(-0.5 * p.variance * t * t) + C(0.0);
            },
        },
        law);
}

std::vector<double> sample_law(const LimitLaw& law, std::size_t count, std::uint64_t seed) {
    validate(law);
    std::optional<ChiSquareComponents> comp;
    if (auto* w = std::get_if<law::WeightedChiSquare>(&law)) comp = reduce_weights(*w);
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        CounterRng rng(seed, i);
        out[i] = sample_one(law, rng, comp ? &*comp : nullptr);
    }
    return out;
}

double weighted_chisq_mgf(const std::vector<double>& weights, double dof, double t) {
    double max_abs = 0.0;
    for (double w : weights) max_abs = std::max(max_abs, std::abs(w));
    if (max_abs > 0.0 && !(std::abs(t) < 1.0 / (2.0 * max_abs))) {
        fail(ErrorCode::DomainExceeded, "|t| = " + format_double(std::abs(t)) + " is outside the domain |t| < " +
                                            format_double(1.0 / (2.0 * max_abs)));
    }
    double log_total = 0.0;
    for (double w : weights) log_total += -0.5 * dof * std::log1p(-2.0 * t * w) - dof * t * w;
    return std::exp(log_total);
}

double delta_conditional_mgf(const Graph& g, std::uint32_t c, double t) {
    if (c < 2) fail(ErrorCode::InvalidArgument, "color count must be at least 2");
    if (g.edge_count() == 0) fail(ErrorCode::PreconditionViolated, "graph has no edges");
    const auto normalized = eigenvalues(g).normalized();
    double max_abs = 0.0;
    for (double x : normalized) max_abs = std::max(max_abs, std::abs(x));
    const double limit = c / (2.0 * max_abs);
    if (!(std::abs(t) < limit)) {
        fail(ErrorCode::DomainExceeded,
             "|t| = " + format_double(std::abs(t)) + " is outside the domain |t| < " + format_double(limit));
    }
    double log_total = 0.0;
    for (double x : normalized) log_total += 0.5 * (1.0 - c) * std::log1p(-x * t / c);
    return std::exp(log_total);
}

std::vector<double> surrogate_delta_samples(const Graph& g, std::uint32_t c, std::size_t count, std::uint64_t seed) {
    if (c < 2) fail(ErrorCode::InvalidArgument, "color count must be at least 2");
    if (g.edge_count() == 0) fail(ErrorCode::PreconditionViolated, "graph has no edges");
    const std::size_t n = g.vertex_count();
    const double inv_sqrt_c = 1.0 / std::sqrt(static_cast<double>(c));
    const double norm = std::sqrt(2.0 * static_cast<double>(g.edge_count()));
    std::vector<double> s(n * c), out(count);
    for (std::size_t i = 0; i < count; ++i) {
        CounterRng rng(seed, i);
        for (std::size_t v = 0; v < n; ++v) {
            double mean = 0.0;
            for (std::size_t a = 0; a < c; ++a) mean += s[v * c + a] = rng.normal();
            mean /= static_cast<double>(c);
            for (std::size_t a = 0; a < c; ++a) s[v * c + a] = (s[v * c + a] - mean) * inv_sqrt_c;
        }
        double q = 0.0;
        for (const auto& e : g.edges())
            for (std::size_t a = 0; a < c; ++a) q += s[e.u * c + a] * s[e.v * c + a];
        out[i] = q / norm;
    }
    return out;
}

std::complex<double> gadget_char_function(std::size_t a, std::size_t b, std::uint32_t c, std::size_t g, double t) {
    if (g < 3) fail(ErrorCode::UnsupportedLength, "gadget cycles need g >= 3");
    if (c < 1) fail(ErrorCode::InvalidArgument, "color count must be positive");
    using C = std::complex<double>;
    const double q = std::pow(static_cast<double>(c), 2.0 - static_cast<double>(g));
    const C base = 1.0 - q + std::exp(C(0.0, t)) * q;
    C per_edge = 1.0;
    for (std::size_t i = 0; i < b; ++i) per_edge *= base;
    // N_a ~ Binomial(a, 1/c).
    const double p = 1.0 / c;
    C total = 0.0, power = 1.0;
    for (std::size_t k = 0; k <= a; ++k) {
        const double log_pmf = std::lgamma(a + 1.0) - std::lgamma(k + 1.0) - std::lgamma(a - k + 1.0) +
                               (k == 0 ? 0.0 : k * std::log(p)) + (a == k ? 0.0 : (a - k) * std::log1p(-p));
        total += std::exp(log_pmf) * power;
        power *= per_edge;
    }
    return total;
}

LimitLaw limit_for(const Graph& g, const ColorRegime& r) {
    require_regime(r);
    if (auto* growing = std::get_if<regime::Growing>(&r)) return growing_limit(*growing);
    const std::uint32_t c = std::get<regime::Fixed>(r).colors;
    const double m = static_cast<double>(g.edge_count());
    if (m == 0.0) fail(ErrorCode::PreconditionViolated, "graph has no edges");
    const double acf4 = static_cast<double>(four_cycles_by_trace(g)) / (m * m);
    if (acf4 < kAcf4NormalThreshold) return fixed_normal(c);
    if (acf4 <= kAcf4DenseThreshold) {
        ambiguous("4-cycle ratio " + format_double(acf4) + " lies in the gray zone [" +
                  format_double(kAcf4NormalThreshold) + ", " + format_double(kAcf4DenseThreshold) + "]");
    }
    const double n = static_cast<double>(g.vertex_count());
    const double density = 2.0 * m / (n * (n - 1.0));
    if (density < kDenseEdgeDensity) {
        ambiguous("4-cycle ratio " + format_double(acf4) + " is large but edge density " + format_double(density) +
                  " is below " + format_double(kDenseEdgeDensity));
    }
    return fixed_chi_square(eigenvalues(g).eigenvalues, c);
}

LimitLaw limit_for(const FamilySpec& spec, const ColorRegime& r) {
    require_regime(r);
    validate(spec);
    if (auto* growing = std::get_if<regime::Growing>(&r)) return growing_limit(*growing);
    const std::uint32_t c = std::get<regime::Fixed>(r).colors;
    if (std::holds_alternative<family::Complete>(spec)) return fixed_chi_square({1.0}, c);
    if (std::holds_alternative<family::Star>(spec)) return fixed_normal(c);
    if (auto* kb = std::get_if<family::CompleteBipartite>(&spec)) {
        const auto lo = std::min(kb->a, kb->b), hi = std::max(kb->a, kb->b);
        if (lo == 1) return fixed_normal(c);
        if (lo == 2) {
            if (c == 2) return law::AtomPlusNormal{0.5, 1.0};
            ambiguous("K_{2,n} with c > 2 has a two-normal mixture limit");
        }
        if (static_cast<double>(lo) >= kDenseEdgeDensity * static_cast<double>(hi)) {
            return fixed_chi_square({1.0, -1.0}, c);
        }
        ambiguous("unbalanced complete bipartite graph");
    }
    if (auto* er = std::get_if<family::ErdosRenyi>(&spec)) {
        const double acf4 = 0.5 * er->p * er->p;
        if (acf4 < kAcf4NormalThreshold) return fixed_normal(c);
        if (acf4 <= kAcf4DenseThreshold) {
            ambiguous("expected 4-cycle ratio p^2/2 = " + format_double(acf4) + " lies in the gray zone");
        }
        return fixed_chi_square({1.0}, c);
    }
    return limit_for(generate(spec), r);
}

}  // namespace monochrome

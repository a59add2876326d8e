#include "monochrome/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "monochrome/errors.hpp"
#include "monochrome/rng.hpp"

namespace monochrome {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

[[noreturn]] void infeasible(const std::string& what) { fail(ErrorCode::InfeasibleSpec, what); }

void check_probability(double p, const std::string& what) {
    if (!(p >= 0.0 && p <= 1.0)) infeasible(what + " must lie in [0,1]");
}

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> edges;
    edges.reserve(a * b);
    for (Vertex u = 0; u < a; ++u)
        for (std::size_t j = 0; j < b; ++j) edges.push_back({u, static_cast<Vertex>(a + j)});
    return Graph::from_edges(a + b, edges);
}

Graph path(std::size_t length) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < length; ++v) edges.push_back({v, v + 1});
    return Graph::from_edges(length + 1, edges);
}

Graph cycle(std::size_t g) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < g; ++v) edges.push_back({v, v + 1});
    edges.push_back({0, static_cast<Vertex>(g - 1)});
    return Graph::from_edges(g, edges);
}

Graph hypercube(std::size_t s) {
    const std::size_t n = std::size_t{1} << s;
    std::vector<Edge> edges;
    edges.reserve(n * s / 2);
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t bit = 0; bit < s; ++bit) {
            const auto w = static_cast<Vertex>(v ^ (std::size_t{1} << bit));
            if (v < w) edges.push_back({v, w});
        }
    return Graph::from_edges(n, edges);
}

Graph erdos_renyi(const family::ErdosRenyi& spec) {
    CounterRng rng(spec.seed, 0);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < spec.n; ++u)
        for (Vertex v = u + 1; v < spec.n; ++v)
            if (rng.uniform01() < spec.p) edges.push_back({u, v});
    return Graph::from_edges(spec.n, edges);
}

Graph inhomogeneous(const family::Inhomogeneous& spec) {
    CounterRng rng(spec.seed, 0);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < spec.n; ++u)
        for (Vertex v = u + 1; v < spec.n; ++v)
            if (rng.uniform01() < spec.kernel[u * spec.n + v]) edges.push_back({u, v});
    return Graph::from_edges(spec.n, edges);
}

// Configuration (pairing) model; the whole pairing is redrawn whenever it
// produces a loop or a multi-edge, so accepted graphs are uniform among
// simple d-regular graphs.
Graph random_regular(const family::RandomRegular& spec) {
    const std::size_t points = spec.n * spec.d;
    std::vector<Vertex> stubs(points);
    std::vector<Edge> edges;
    for (std::size_t attempt = 0; attempt < kRegularMaxAttempts; ++attempt) {
        CounterRng rng(spec.seed, attempt);
        for (std::size_t i = 0; i < points; ++i) stubs[i] = static_cast<Vertex>(i / spec.d);
        for (std::size_t i = points; i > 1; --i) {
            std::swap(stubs[i - 1], stubs[rng.uniform_below(i)]);
        }
        edges.clear();
        bool simple = true;
        for (std::size_t i = 0; i < points && simple; i += 2) {
            Vertex u = stubs[i], v = stubs[i + 1];
            if (u == v) simple = false;
            edges.push_back({std::min(u, v), std::max(u, v)});
        }
        if (!simple) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        return Graph::from_edges(spec.n, edges);
    }
    fail(ErrorCode::GenerationTimeout, "pairing model rejected " + std::to_string(kRegularMaxAttempts) +
                                           " attempts for n=" + std::to_string(spec.n) +
                                           ", d=" + std::to_string(spec.d));
}

Graph galton_watson(const family::GaltonWatson& spec) {
    CounterRng rng(spec.seed, 0);
    std::vector<double> cdf(spec.offspring_pmf.size());
    std::partial_sum(spec.offspring_pmf.begin(), spec.offspring_pmf.end(), cdf.begin());
    std::vector<Edge> edges;
    std::vector<Vertex> generation{0};
    std::size_t total = 1;
    for (std::size_t depth = 0; depth < spec.height && !generation.empty(); ++depth) {
        std::vector<Vertex> next;
        for (Vertex parent : generation) {
            const double u = rng.uniform01() * cdf.back();
            const auto children =
                static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
            const std::size_t count = std::min(children, cdf.size() - 1);
            for (std::size_t c = 0; c < count; ++c) {
                if (total >= kMaxGaltonWatsonVertices) {
                    fail(ErrorCode::SizeGateExceeded,
                         "Galton-Watson tree exceeds " + std::to_string(kMaxGaltonWatsonVertices) + " vertices");
                }
                const auto child = static_cast<Vertex>(total++);
                edges.push_back({parent, child});
                next.push_back(child);
            }
        }
        generation = std::move(next);
    }
    return Graph::from_edges(total, edges);
}

Graph path_cycle_gadget(const family::PathCycleGadget& spec) {
    const std::size_t inner = spec.g - 2;
    const std::size_t n = spec.a + 1 + spec.a * spec.b * inner;
    std::vector<Edge> edges;
    edges.reserve(spec.a + spec.a * spec.b * (spec.g - 1));
    auto add = [&](std::size_t u, std::size_t v) {
        edges.push_back({static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))});
    };
    for (std::size_t i = 0; i < spec.a; ++i) {
        add(i, i + 1);
        for (std::size_t j = 0; j < spec.b; ++j) {
            const std::size_t base = spec.a + 1 + (i * spec.b + j) * inner;
            add(i, base);
            for (std::size_t k = 0; k + 1 < inner; ++k) add(base + k, base + k + 1);
            add(base + inner - 1, i + 1);
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace

void validate(const FamilySpec& spec) {
    std::visit(overloaded{
                   [](const family::Complete&) {},
                   [](const family::CompleteBipartite&) {},
                   [](const family::Star&) {},
                   [](const family::Path&) {},
                   [](const family::Cycle& s) {
                       if (s.g < 3) infeasible("cycle length must be at least 3");
                   },
                   [](const family::Hypercube& s) {
                       if (s.s > 24) infeasible("hypercube dimension above 24");
                   },
                   [](const family::ErdosRenyi& s) { check_probability(s.p, "edge probability"); },
                   [](const family::Inhomogeneous& s) {
                       if (s.kernel.size() != s.n * s.n) infeasible("kernel grid must have n*n entries");
                       for (std::size_t i = 0; i < s.n; ++i)
                           for (std::size_t j = 0; j < s.n; ++j) {
                               check_probability(s.kernel[i * s.n + j], "kernel entry");
                               if (s.kernel[i * s.n + j] != s.kernel[j * s.n + i])
                                   infeasible("kernel grid must be symmetric");
                           }
                   },
                   [](const family::RandomRegular& s) {
                       if ((s.n * s.d) % 2 != 0) infeasible("n*d must be even for a d-regular graph");
                       if (s.d >= s.n && !(s.n == 0 && s.d == 0)) infeasible("degree must be below n");
                   },
                   [](const family::GaltonWatson& s) {
                       if (s.offspring_pmf.empty()) infeasible("offspring pmf is empty");
                       double total = 0.0;
                       for (double p : s.offspring_pmf) {
                           check_probability(p, "offspring probability");
                           total += p;
                       }
                       if (std::abs(total - 1.0) > 1e-9)
                           infeasible("offspring pmf must sum to 1 (tail mass beyond the last entry is not allowed)");
                   },
                   [](const family::PathCycleGadget& s) {
                       if (s.g < 3) infeasible("gadget cycle length must be at least 3");
                       if (s.a < 1 || s.b < 1) infeasible("gadget needs a >= 1 and b >= 1");
                   },
               },
               spec);
}

Graph generate(const FamilySpec& spec) {
    validate(spec);
    return std::visit(overloaded{
                          [](const family::Complete& s) { return complete(s.n); },
                          [](const family::CompleteBipartite& s) { return complete_bipartite(s.a, s.b); },
                          [](const family::Star& s) { return complete_bipartite(1, s.leaves); },
                          [](const family::Path& s) { return path(s.edges); },
                          [](const family::Cycle& s) { return cycle(s.g); },
                          [](const family::Hypercube& s) { return hypercube(s.s); },
                          [](const family::ErdosRenyi& s) { return erdos_renyi(s); },
                          [](const family::Inhomogeneous& s) { return inhomogeneous(s); },
                          [](const family::RandomRegular& s) { return random_regular(s); },
                          [](const family::GaltonWatson& s) { return galton_watson(s); },
                          [](const family::PathCycleGadget& s) { return path_cycle_gadget(s); },
                      },
                      spec);
}

std::string describe(const FamilySpec& spec) {
    std::ostringstream out;
    std::visit(overloaded{
                   [&](const family::Complete& s) { out << "complete(n=" << s.n << ")"; },
                   [&](const family::CompleteBipartite& s) { out << "bipartite(a=" << s.a << ",b=" << s.b << ")"; },
                   [&](const family::Star& s) { out << "star(leaves=" << s.leaves << ")"; },
                   [&](const family::Path& s) { out << "path(edges=" << s.edges << ")"; },
                   [&](const family::Cycle& s) { out << "cycle(g=" << s.g << ")"; },
                   [&](const family::Hypercube& s) { out << "hypercube(s=" << s.s << ")"; },
                   [&](const family::ErdosRenyi& s) {
                       out << "er(n=" << s.n << ",p=" << s.p << ",seed=" << s.seed << ")";
                   },
                   [&](const family::Inhomogeneous& s) { out << "inhom(n=" << s.n << ",seed=" << s.seed << ")"; },
                   [&](const family::RandomRegular& s) {
                       out << "regular(n=" << s.n << ",d=" << s.d << ",seed=" << s.seed << ")";
                   },
                   [&](const family::GaltonWatson& s) {
                       out << "gw(K=" << s.offspring_pmf.size() - 1 << ",height=" << s.height
                           << ",seed=" << s.seed << ")";
                   },
                   [&](const family::PathCycleGadget& s) {
                       out << "gadget(a=" << s.a << ",b=" << s.b << ",g=" << s.g << ")";
                   },
               },
               spec);
    return out.str();
}

bool is_random_family(const FamilySpec& spec) {
    return std::holds_alternative<family::ErdosRenyi>(spec) || std::holds_alternative<family::Inhomogeneous>(spec) ||
           std::holds_alternative<family::RandomRegular>(spec) || std::holds_alternative<family::GaltonWatson>(spec);
}

}  // namespace monochrome

#include "monochrome/colorsim.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <thread>

#include "monochrome/census.hpp"
#include "monochrome/errors.hpp"
#include "monochrome/rng.hpp"

namespace monochrome {

namespace {

std::uint64_t choose(std::uint64_t n, std::size_t r) {
    if (r > n) return 0;
    std::uint64_t out = 1;
    for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

std::size_t parse_size(std::string_view text, const std::string& whole) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        fail(ErrorCode::ParseError, "bad statistic '" + whole + "'");
    }
    return value;
}

void check_colors(std::size_t n, std::span<const std::uint32_t> colors, std::uint32_t c) {
    if (colors.size() != n) {
        fail(ErrorCode::BadColorVector,
             "color vector has length " + std::to_string(colors.size()) + ", graph has " + std::to_string(n) + " vertices");
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (colors[v] >= c) {
            fail(ErrorCode::BadColorVector, "vertex " + std::to_string(v) + " has color " + std::to_string(colors[v]) +
                                                " outside [0," + std::to_string(c) + ")");
        }
    }
}

void check_gate(std::size_t n, std::uint32_t c) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > kExactEnumerationGate / c) {
            fail(ErrorCode::EnumerationGateExceeded, std::to_string(c) + "^" + std::to_string(n) +
                                                         " colorings exceed " + std::to_string(kExactEnumerationGate));
        }
        total *= c;
    }
}

}  // namespace

Statistic parse_statistic(const std::string& text) {
    Statistic out;
    if (text == "edges") {
        out = stat::MonoEdges{};
    } else if (text.rfind("stars:", 0) == 0) {
        out = stat::MonoStars{parse_size(std::string_view(text).substr(6), text)};
    } else if (text.rfind("cycles:", 0) == 0) {
        out = stat::MonoCycles{parse_size(std::string_view(text).substr(7), text)};
    } else {
        fail(ErrorCode::ParseError, "unknown statistic '" + text + "' (expected edges, stars:r or cycles:g)");
    }
    validate(out);
    return out;
}

std::string describe(const Statistic& s) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, stat::MonoEdges>) return "edges";
            else if constexpr (std::is_same_v<T, stat::MonoStars>) return "stars:" + std::to_string(x.r);
            else return "cycles:" + std::to_string(x.g);
        },
        s);
}

void validate(const Statistic& s) {
    if (auto* star = std::get_if<stat::MonoStars>(&s); star && star->r == 0) {
        fail(ErrorCode::InvalidArgument, "star statistic needs r >= 1");
    }
    if (auto* cyc = std::get_if<stat::MonoCycles>(&s); cyc && (cyc->g < kMinCycleLength || cyc->g > kMaxCycleLength)) {
        fail(ErrorCode::UnsupportedLength, "cycle statistic needs 3 <= g <= 8, got " + std::to_string(cyc->g));
    }
}

StatisticEvaluator::StatisticEvaluator(const Graph& g, Statistic stat) : graph_(g), stat_(stat) {
    validate(stat_);
    if (auto* cyc = std::get_if<stat::MonoCycles>(&stat_)) {
        for (const auto& cycle : enumerate_cycles(g, cyc->g))
            cycle_vertices_.insert(cycle_vertices_.end(), cycle.begin(), cycle.end());
    }
}

std::uint64_t StatisticEvaluator::operator()(std::span<const std::uint32_t> colors) const {
    std::uint64_t total = 0;
    if (std::holds_alternative<stat::MonoEdges>(stat_)) {
        for (const auto& e : graph_.edges()) total += colors[e.u] == colors[e.v];
    } else if (auto* star = std::get_if<stat::MonoStars>(&stat_)) {
        for (Vertex v = 0; v < graph_.vertex_count(); ++v) {
            std::uint64_t same = 0;
            for (Vertex w : graph_.neighbors(v)) same += colors[w] == colors[v];
            total += choose(same, star->r);
        }
    } else {
        const std::size_t g = std::get<stat::MonoCycles>(stat_).g;
        for (std::size_t i = 0; i < cycle_vertices_.size(); i += g) {
            const auto first = colors[cycle_vertices_[i]];
            bool mono = true;
            for (std::size_t j = 1; j < g && mono; ++j) mono = colors[cycle_vertices_[i + j]] == first;
            total += mono;
        }
    }
    return total;
}

std::uint64_t mono_count(const Graph& g, std::span<const std::uint32_t> colors, std::uint32_t c,
                         const Statistic& stat) {
    check_colors(g.vertex_count(), colors, c);
    return StatisticEvaluator(g, stat)(colors);
}

std::map<std::uint64_t, double> SimulationRun::pmf() const {
    std::map<std::uint64_t, double> out;
    for (auto [value, count] : histogram()) out[value] = static_cast<double>(count) / static_cast<double>(sample_count);
    return out;
}

std::map<std::uint64_t, std::uint64_t> SimulationRun::histogram() const {
    std::map<std::uint64_t, std::uint64_t> out;
    for (auto v : counts) ++out[v];
    return out;
}

std::vector<double> SimulationRun::standardized(double center, double scale) const {
    std::vector<double> out(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) out[i] = (static_cast<double>(counts[i]) - center) / scale;
    return out;
}

std::vector<std::uint32_t> sample_coloring(std::size_t n, std::uint32_t c, std::uint64_t seed, std::uint64_t index) {
    CounterRng rng(seed, index);
    std::vector<std::uint32_t> colors(n);
    for (auto& x : colors) x = static_cast<std::uint32_t>(rng.uniform_below(c));
    return colors;
}

SimulationRun simulate(const Graph& g, std::uint32_t c, const Statistic& stat, std::size_t samples,
                       std::uint64_t seed, std::size_t workers) {
    if (c < 2) fail(ErrorCode::InvalidArgument, "simulation needs at least 2 colors");
    if (samples == 0) fail(ErrorCode::InvalidArgument, "simulation needs at least 1 sample");
    const StatisticEvaluator evaluate(g, stat);
    SimulationRun run;
    run.seed = seed;
    run.colors = c;
    run.sample_count = samples;
    run.counts.resize(samples);
    const std::size_t n = g.vertex_count();

    auto work = [&](std::size_t begin, std::size_t end) {
        std::vector<std::uint32_t> colors(n);
        for (std::size_t i = begin; i < end; ++i) {
            CounterRng rng(seed, i);
            for (auto& x : colors) x = static_cast<std::uint32_t>(rng.uniform_below(c));
            run.counts[i] = evaluate(colors);
        }
    };
    workers = std::clamp<std::size_t>(workers, 1, samples);
    if (workers == 1) {
        work(0, samples);
    } else {
        std::vector<std::jthread> threads;
        for (std::size_t w = 0; w < workers; ++w) {
            threads.emplace_back(work, samples * w / workers, samples * (w + 1) / workers);
        }
    }
    return run;
}

std::map<std::uint64_t, std::uint64_t> exact_counts(const Graph& g, std::uint32_t c, const Statistic& stat) {
    if (c < 2) fail(ErrorCode::InvalidArgument, "exact distribution needs at least 2 colors");
    const std::size_t n = g.vertex_count();
    check_gate(n, c);
    const StatisticEvaluator evaluate(g, stat);
    const bool incremental = std::holds_alternative<stat::MonoEdges>(stat);

    std::vector<std::uint32_t> colors(n, 0);
    std::map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t current = evaluate(colors);
    auto recolor = [&](Vertex v, std::uint32_t to) {
        if (incremental) {
            for (Vertex w : g.neighbors(v)) {
                current -= colors[w] == colors[v];
                current += colors[w] == to;
            }
        }
        colors[v] = to;
    };
    while (true) {
        ++counts[incremental ? current : evaluate(colors)];
        // Base-c ripple increment.
        std::size_t pos = 0;
        while (pos < n && colors[pos] + 1 == c) {
            recolor(static_cast<Vertex>(pos), 0);
            ++pos;
        }
        if (pos == n) break;
        recolor(static_cast<Vertex>(pos), colors[pos] + 1);
    }
    return counts;
}

ExactPmf exact_distribution(const Graph& g, std::uint32_t c, const Statistic& stat) {
    const auto counts = exact_counts(g, c, stat);
    std::uint64_t total = 0;
    for (auto [value, count] : counts) total += count;
    ExactPmf pmf;
    for (auto [value, count] : counts) pmf[value] = Rational(count, total);
    return pmf;
}

TruncatedPmf complete_graph_edge_pmf(std::size_t n, std::uint64_t c, std::size_t max_value) {
    if (c < 1) fail(ErrorCode::InvalidArgument, "color count must be positive");
    // weight[j][s]: sum over occupancies of the colors processed so far with
    // j vertices and s monochromatic edges of prod 1/(t! c^t).
    const std::size_t width = max_value + 1;
    std::vector<long double> weight((n + 1) * width, 0.0L), next;
    weight[0] = 1.0L;
    std::vector<long double> per_color(n + 1);
    per_color[0] = 1.0L;
    for (std::size_t t = 1; t <= n; ++t) per_color[t] = per_color[t - 1] / (static_cast<long double>(t) * c);
    for (std::uint64_t color = 0; color < c; ++color) {
        next.assign(weight.size(), 0.0L);
        for (std::size_t j = 0; j <= n; ++j) {
            for (std::size_t s = 0; s < width; ++s) {
                const long double w = weight[j * width + s];
                if (w == 0.0L) continue;
                for (std::size_t t = 0; j + t <= n; ++t) {
                    const std::size_t edges = s + t * (t - 1) / 2;
                    if (edges > max_value) break;
                    next[(j + t) * width + edges] += w * per_color[t];
                }
            }
        }
        weight.swap(next);
    }
    long double factorial = 1.0L;
    for (std::size_t i = 2; i <= n; ++i) factorial *= i;
    TruncatedPmf out;
    out.probabilities.resize(width);
    long double total = 0.0L;
    for (std::size_t s = 0; s < width; ++s) {
        out.probabilities[s] = weight[n * width + s] * factorial;
        total += out.probabilities[s];
    }
    out.tail = std::max(0.0L, 1.0L - total);
    return out;
}

double birthday_no_match(std::uint64_t people, std::uint64_t days) {
    if (days == 0) fail(ErrorCode::InvalidArgument, "days must be positive");
    long double p = 1.0L;
    for (std::uint64_t i = 1; i < people; ++i) {
        if (i >= days) return 0.0;
        p *= 1.0L - static_cast<long double>(i) / days;
    }
    return static_cast<double>(p);
}

std::uint64_t birthday_threshold(std::uint64_t days, double threshold) {
    if (days == 0) fail(ErrorCode::InvalidArgument, "days must be positive");
    long double p = 1.0L;
    std::uint64_t people = 1;
    while (p >= threshold) {
        if (people >= days) return days + 1;
        p *= 1.0L - static_cast<long double>(people) / days;
        ++people;
    }
    return people;
}

}  // namespace monochrome

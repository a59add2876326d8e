#include <doctest.h>

#include <cmath>

#include "monochrome/census.hpp"
#include "monochrome/colorsim.hpp"
#include "monochrome/errors.hpp"
#include "monochrome/generators.hpp"
#include "monochrome/moments.hpp"
#include "oracles.hpp"

using namespace monochrome;

namespace {

MultiGraphPattern pattern(std::size_t n, std::vector<std::pair<int, int>> edges) {
    return MultiGraphPattern::from_edges(n, edges);
}

Rational power(Rational base, std::size_t k) {
    Rational r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= base;
    return r;
}

Rational moment(const Graph& g, MomentKind kind, std::size_t k, std::uint64_t c) {
    return conditional_moment(g, {kind, k, c}).unscaled;
}

// E (N - center)^k from the exact pmf.
Rational exact_moment(const Graph& g, std::uint32_t c, std::size_t k, Rational center) {
    Rational total = 0;
    for (const auto& [value, p] : exact_distribution(g, c, stat::MonoEdges{})) total += p * power(Rational(value) - center, k);
    return total;
}

}  // namespace

TEST_CASE("Stirling moment examples") {
    CHECK(stirling_moment(3, 2, 1) == Rational(3, 2));
    CHECK(stirling_moment(3, 2, 2) == 3);
    CHECK(stirling_moment(3, 2, 3) == Rational(27, 4));
    CHECK(stirling_moment(5, 3, 0) == 1);
    CHECK(stirling_second(4, 2) == 7);
    CHECK(stirling_second(6, 3) == 90);
    CHECK(stirling_second(3, 0) == 0);
    CHECK(stirling_second(0, 0) == 1);
}

TEST_CASE("Stirling moment equals the binomial moment") {
    for (std::uint64_t m = 0; m <= 30; ++m)
        for (std::uint64_t c : {2, 3, 7})
            for (std::size_t k = 0; k <= 6; ++k) CHECK(stirling_moment(m, c, k) == oracle::binomial_raw_moment(m, c, k));
}

TEST_CASE("expected central products examples") {
    const auto doubled = expected_central_products(pattern(2, {{0, 1}, {0, 1}}), 2);
    CHECK(doubled.ez == Rational(1, 4));
    CHECK(doubled.ew == Rational(1, 4));
    const auto c4 = expected_central_products(pattern(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 2);
    CHECK(c4.ez == Rational(1, 16));
    CHECK(c4.ew == 0);
    const auto two_doubled = expected_central_products(pattern(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}}), 2);
    CHECK(two_doubled.ez == Rational(1, 16));
    CHECK(two_doubled.ew == Rational(1, 16));
    for (std::uint64_t c : {3, 5}) {
        const Rational ic(1, c);
        CHECK(expected_central_products(pattern(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), c).ez == power(ic, 3) * (1 - ic));
        CHECK(expected_central_products(pattern(3, {{0, 1}, {1, 2}, {2, 0}}), c).ez == power(ic, 2) * (1 - ic));
    }
    CHECK(monochromatic_probability(pattern(4, {{0, 1}, {2, 3}}), 3) == Rational(1, 9));
    CHECK(monochromatic_probability(pattern(3, {{0, 1}, {1, 2}, {2, 0}}), 3) == Rational(1, 9));
    std::vector<std::pair<int, int>> seven(7, {0, 1});
    CHECK_THROWS_AS(expected_central_products(pattern(2, seven), 2), Error);
}

TEST_CASE("tree equality and degree-1 annihilation over all tuple patterns") {
    std::size_t trees = 0, leaves = 0;
    for (std::size_t k = 1; k <= 4; ++k) {
        for (const auto& [key, cls] : count_multigraph_tuples(generate(family::Complete{8}), k)) {
            for (std::uint64_t c : {2, 3, 4}) {
                const auto p = expected_central_products(cls.pattern, c);
                if (is_forest(cls.pattern.simple_graph())) {
                    CHECK(p.ez == p.ew);
                    ++trees;
                }
                if (cls.pattern.min_degree() == 1) {
                    CHECK(p.ez == 0);
                    CHECK(p.ew == 0);
                    ++leaves;
                }
            }
        }
    }
    CHECK(trees > 20);
    CHECK(leaves > 20);
}

TEST_CASE("conditional moment examples") {
    const Graph k3 = generate(family::Complete{3});
    CHECK(moment(k3, MomentKind::RawN, 2, 2) == 3);
    CHECK(moment(k3, MomentKind::RawN, 3, 2) - moment(k3, MomentKind::RawM, 3, 2) == Rational(3, 4));
    const auto c4 = conditional_moment(generate(family::Cycle{4}), {MomentKind::CentralZ, 4, 2});
    REQUIRE(c4.value.has_value());
    CHECK(*c4.value == 1);
    CHECK(c4.approx == doctest::Approx(1.0));

    // m/c = 3/2 is not a rational square, so odd orders stay unscaled.
    const auto odd = conditional_moment(k3, {MomentKind::CentralZ, 3, 2});
    CHECK_FALSE(odd.value.has_value());
    CHECK(odd.scale_base == Rational(3, 2));
    CHECK(odd.scale_exponent == Rational(-3, 2));
    CHECK(odd.unscaled == exact_moment(k3, 2, 3, Rational(3, 2)));
    CHECK(odd.approx == doctest::Approx(to_double(odd.unscaled) * std::pow(1.5, -1.5)));

    // m/c = 4 is a square: odd orders are scaled exactly.
    const auto square = conditional_moment(generate(family::Path{8}), {MomentKind::CentralW, 3, 2});
    REQUIRE(square.value.has_value());
    CHECK(*square.value == square.unscaled / 8);

    CHECK_THROWS_AS(conditional_moment(k3, {MomentKind::RawN, 5, 2}), Error);
    CHECK_THROWS_AS(conditional_moment(k3, {MomentKind::RawN, 2, 1}), Error);
    CHECK_THROWS_AS(conditional_moment(Graph::edgeless(3), {MomentKind::CentralZ, 2, 2}), Error);
}

TEST_CASE("raw and central moments match exact enumeration") {
    std::uint64_t state = 31;
    for (int trial = 0; trial < 12; ++trial) {
        const Graph g = oracle::lcg_graph(4 + trial % 5, 0.5, state);
        if (g.edge_count() == 0) continue;
        for (std::uint32_t c : {2u, 3u}) {
            const Rational mean(g.edge_count(), c);
            for (std::size_t k = 1; k <= 4; ++k) {
                CHECK(moment(g, MomentKind::RawN, k, c) == exact_moment(g, c, k, 0));
                CHECK(moment(g, MomentKind::CentralZ, k, c) == exact_moment(g, c, k, mean));
                CHECK(moment(g, MomentKind::RawM, k, c) == stirling_moment(g.edge_count(), c, k));
            }
            CHECK(moment(g, MomentKind::RawN, 2, c) == stirling_moment(g.edge_count(), c, 2));
            // Exact second moment, including the -m/c^2 term.
            const Rational m(g.edge_count());
            CHECK(moment(g, MomentKind::RawN, 2, c) == m * m / (c * c) + m / c - m / (c * c));
        }
    }
}

TEST_CASE("central W moments are binomial central moments") {
    const Graph g = generate(family::Complete{5});
    for (std::uint64_t c : {2, 3}) {
        const Rational p(1, c);
        for (std::size_t k = 1; k <= 4; ++k) {
            Rational direct = 0;
            for (std::uint64_t j = 0; j <= 10; ++j) {
                Rational prob = 1;
                std::uint64_t b = 1;
                for (std::uint64_t i = 1; i <= j; ++i) b = b * (10 - j + i) / i;
                prob *= b;
                prob *= power(p, j) * power(1 - p, 10 - j);
                direct += prob * power(Rational(j) - 10 * p, k);
            }
            CHECK(moment(g, MomentKind::CentralW, k, c) == direct);
        }
    }
}

TEST_CASE("fourth moment report") {
    const auto c4 = fourth_moment_report(generate(family::Cycle{4}), 2);
    CHECK(c4.exact == 1);
    CHECK(c4.leading == Rational(3, 4));
    CHECK(c4.c4_term == Rational(1, 64));
    CHECK(c4.remainder == Rational(15, 64));
    CHECK(c4.c4_contribution == Rational(3, 8));
    Rational sum = 0;
    for (const auto& [name, value] : c4.class_contributions) sum += value;
    CHECK(sum == c4.exact);
    CHECK(c4.class_contributions.at("4-cycle") == Rational(3, 8));

    const auto k2 = fourth_moment_report(generate(family::Complete{2}), 2);
    CHECK(k2.exact == Rational(1, 4));
    CHECK(k2.leading == Rational(3, 4));
    CHECK(k2.remainder == Rational(-1, 2));

    const auto tree = fourth_moment_report(generate(family::Star{6}), 3);
    CHECK(tree.c4_term == 0);
    const auto petersen_like = fourth_moment_report(generate(family::Cycle{7}), 3);
    CHECK(petersen_like.c4_term == 0);
}

TEST_CASE("Gaussian surrogate matches EZ for tight patterns") {
    const std::vector<MultiGraphPattern> tight{
        pattern(2, {{0, 1}, {0, 1}}),
        pattern(3, {{0, 1}, {1, 2}, {2, 0}}),
        pattern(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
        pattern(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}}),
    };
    for (const auto& h : tight) {
        for (std::uint64_t c : {2, 3}) {
            const auto est = gaussian_surrogate_mean(h, c, 1000000, 21);
            const double ez = to_double(expected_central_products(h, c).ez);
            CHECK(std::abs(est.mean - ez) <= 4 * est.standard_error);
        }
    }
}

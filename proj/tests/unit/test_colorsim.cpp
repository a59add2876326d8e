#include <doctest.h>

#include <cmath>

#include "monochrome/colorsim.hpp"
#include "monochrome/errors.hpp"
#include "monochrome/generators.hpp"
#include "monochrome/stats.hpp"
#include "oracles.hpp"

using namespace monochrome;

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("statistic parsing") {
    CHECK(describe(parse_statistic("edges")) == "edges");
    CHECK(std::get<stat::MonoStars>(parse_statistic("stars:3")).r == 3);
    CHECK(std::get<stat::MonoCycles>(parse_statistic("cycles:5")).g == 5);
    CHECK_THROWS_AS(parse_statistic("triangles"), Error);
    CHECK_THROWS_AS(parse_statistic("stars:x"), Error);
    CHECK_THROWS_AS(validate(stat::MonoCycles{9}), Error);
    CHECK_THROWS_AS(validate(stat::MonoStars{0}), Error);
}

TEST_CASE("mono_count examples") {
    const std::vector<std::uint32_t> k3c{1, 1, 2};
    CHECK(mono_count(generate(family::Complete{3}), k3c, 3, stat::MonoEdges{}) == 1);
    const std::vector<std::uint32_t> star{1, 1, 1, 2, 2};
    CHECK(mono_count(generate(family::Star{4}), star, 3, stat::MonoStars{2}) == 1);
    const std::vector<std::uint32_t> c4{1, 1, 1, 1};
    CHECK(mono_count(generate(family::Cycle{4}), c4, 2, stat::MonoCycles{4}) == 1);

    const std::vector<std::uint32_t> short_vec{0, 0};
    CHECK_THROWS_AS(mono_count(generate(family::Complete{3}), short_vec, 2, stat::MonoEdges{}), Error);
    const std::vector<std::uint32_t> big{0, 0, 2};
    try {
        mono_count(generate(family::Complete{3}), big, 2, stat::MonoEdges{});
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadColorVector);
    }
}

TEST_CASE("mono_count matches brute force") {
    std::uint64_t state = 11;
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracle::lcg_graph(8, 0.5, state);
        const auto colors = sample_coloring(8, 3, 5, static_cast<std::uint64_t>(trial));
        CHECK(mono_count(g, colors, 3, stat::MonoEdges{}) == oracle::mono_edges(g, colors));
        // Mono stars: sum over centers of C(mono degree, r).
        std::uint64_t stars = 0;
        for (Vertex v = 0; v < 8; ++v) {
            std::uint64_t d = 0;
            for (Vertex w : g.neighbors(v)) d += colors[w] == colors[v];
            stars += binom(d, 2);
        }
        CHECK(mono_count(g, colors, 3, stat::MonoStars{2}) == stars);
    }
}

TEST_CASE("exact distribution examples") {
    const auto k3 = exact_distribution(generate(family::Complete{3}), 2, stat::MonoEdges{});
    CHECK(k3 == ExactPmf{{1, Rational(3, 4)}, {3, Rational(1, 4)}});
    const auto k2 = exact_distribution(generate(family::Complete{2}), 2, stat::MonoEdges{});
    CHECK(k2 == ExactPmf{{0, Rational(1, 2)}, {1, Rational(1, 2)}});
    const auto p2 = exact_distribution(generate(family::Path{2}), 2, stat::MonoEdges{});
    CHECK(p2 == ExactPmf{{0, Rational(1, 4)}, {1, Rational(1, 2)}, {2, Rational(1, 4)}});
    try {
        exact_distribution(generate(family::Complete{24}), 2, stat::MonoEdges{});
        FAIL("expected gate");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EnumerationGateExceeded);
    }
}

TEST_CASE("exact distribution matches the enumeration oracle") {
    std::uint64_t state = 8;
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracle::lcg_graph(3 + trial % 5, 0.5, state);
        for (std::uint32_t c : {2u, 3u}) {
            const auto mine = exact_distribution(g, c, stat::MonoEdges{});
            ExactPmf expected;
            for (const auto& [k, p] : oracle::mono_edge_pmf(g, c)) expected[k] = p;
            CHECK(mine == expected);
        }
    }
}

TEST_CASE("paths give binomial edge counts") {
    for (std::uint32_t c : {2u, 3u, 5u}) {
        const auto pmf = exact_distribution(generate(family::Path{5}), c, stat::MonoEdges{});
        for (std::uint64_t k = 0; k <= 5; ++k) {
            const Rational p(1, c);
            Rational expected = Rational(binom(5, k));
            for (std::uint64_t i = 0; i < k; ++i) expected *= p;
            for (std::uint64_t i = k; i < 5; ++i) expected *= 1 - p;
            CHECK(pmf.at(k) == expected);
        }
    }
}

TEST_CASE("simulation examples") {
    const auto k2 = simulate(generate(family::Complete{2}), 2, stat::MonoEdges{}, 100000, 1);
    CHECK(k2.pmf().at(1) >= 0.49);
    CHECK(k2.pmf().at(1) <= 0.51);

    const auto k23 = simulate(generate(family::Complete{23}), 365, stat::MonoEdges{}, 100000, 7);
    CHECK(k23.pmf().at(0) >= 0.48);
    CHECK(k23.pmf().at(0) <= 0.51);
    CHECK(birthday_no_match(23, 365) == doctest::Approx(0.4927027656760146).epsilon(1e-12));

    const Graph star = generate(family::Star{9});
    const auto stars = simulate(star, 2, stat::MonoStars{2}, 100000, 3);
    const auto edges = simulate(star, 2, stat::MonoEdges{}, 100000, 3);
    for (std::size_t i = 0; i < stars.counts.size(); ++i) REQUIRE(stars.counts[i] == binom(edges.counts[i], 2));
}

TEST_CASE("simulation is independent of the worker count") {
    const Graph g = generate(family::Complete{12});
    const auto one = simulate(g, 4, stat::MonoCycles{3}, 5000, 99, 1);
    const auto three = simulate(g, 4, stat::MonoCycles{3}, 5000, 99, 3);
    const auto zero = simulate(g, 4, stat::MonoCycles{3}, 5000, 99, 0);
    CHECK(one.counts == three.counts);
    CHECK(one.counts == zero.counts);
    CHECK(simulate(g, 4, stat::MonoEdges{}, 10, 1).counts != simulate(g, 4, stat::MonoEdges{}, 10, 2).counts);
    for (std::size_t i = 0; i < 10; ++i) {
        const auto colors = sample_coloring(12, 4, 1, i);
        CHECK(simulate(g, 4, stat::MonoEdges{}, 10, 1).counts[i] == mono_count(g, colors, 4, stat::MonoEdges{}));
    }
    CHECK_THROWS_AS(simulate(g, 1, stat::MonoEdges{}, 10, 1), Error);
    CHECK_THROWS_AS(simulate(g, 2, stat::MonoEdges{}, 0, 1), Error);
}

TEST_CASE("simulation agrees with the exact pmf") {
    const Graph g = generate(family::Cycle{6});
    const auto exact = exact_distribution(g, 3, stat::MonoEdges{});
    const auto run = simulate(g, 3, stat::MonoEdges{}, 200000, 5);
    Pmf p, q;
    for (const auto& [k, r] : exact) p[static_cast<double>(k)] = to_double(r);
    for (const auto& [k, f] : run.pmf()) q[static_cast<double>(k)] = f;
    CHECK(tv_distance(p, q) < 0.01);
    const auto z = run.standardized(2.0, 2.0);
    CHECK(z[0] == doctest::Approx((static_cast<double>(run.counts[0]) - 2.0) / 2.0));
    std::uint64_t total = 0;
    for (auto [k, count] : run.histogram()) total += count;
    CHECK(total == 200000);
}

TEST_CASE("complete graph occupancy pmf matches enumeration") {
    for (std::size_t n : {3, 5, 7}) {
        for (std::uint32_t c : {2u, 3u}) {
            const auto exact = exact_distribution(generate(family::Complete{n}), c, stat::MonoEdges{});
            const auto dp = complete_graph_edge_pmf(n, c, n * (n - 1) / 2);
            long double sum = 0;
            for (std::size_t k = 0; k < dp.probabilities.size(); ++k) {
                const double want = exact.count(k) ? to_double(exact.at(k)) : 0.0;
                CHECK(static_cast<double>(dp.probabilities[k]) == doctest::Approx(want).epsilon(1e-12));
                sum += dp.probabilities[k];
            }
            CHECK(static_cast<double>(sum + dp.tail) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    const auto k23 = complete_graph_edge_pmf(23, 365, 0);
    CHECK(static_cast<double>(k23.probabilities[0]) == doctest::Approx(birthday_no_match(23, 365)).epsilon(1e-12));
}

TEST_CASE("birthday helpers") {
    CHECK(birthday_threshold(365) == 23);
    CHECK(birthday_no_match(1, 365) == 1.0);
    CHECK(birthday_no_match(366, 365) == 0.0);
}

#include "oracles.hpp"

#include "cospec/constructions.hpp"
#include "cospec/enumerate.hpp"
#include "cospec/exact.hpp"

#include <doctest.h>

using namespace cospec;
using oracle::coefficients;
using oracle::from_roots;

TEST_SUITE("exact") {

TEST_CASE("complete graphs") {
    for (long long n = 2; n <= 10; ++n)
        CHECK(char_poly(complete_graph(static_cast<std::size_t>(n))) ==
              from_roots({{n - 1, 1}, {-1, static_cast<std::size_t>(n - 1)}}));
    CHECK(inertia(complete_graph(6)) == Inertia{1, 0, 5});
}

TEST_CASE("small hand-checked polynomials") {
    CHECK(char_poly(empty_graph(4)) == IntPolynomial::monomial(4));
    CHECK(char_poly(Graph(0)) == IntPolynomial::constant(1));
    CHECK(char_poly(path_graph(3)) == coefficients({0, -2, 0, 1}));
    CHECK(char_poly(cycle_graph(4)) == coefficients({0, 0, -4, 0, 1}));
}

TEST_CASE("char poly agrees with cofactor determinants") {
    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_graph(rng, 1 + uniform_below(rng, 7));
        const IntPolynomial p = char_poly(g);
        CHECK(p.is_monic());
        CHECK(p.degree() == static_cast<long>(g.order()));
        const auto a = oracle::adjacency(g);
        for (long long x : {-3, -1, 0, 2, 5})
            CHECK(p.evaluate(x) == oracle::char_poly_at(a, x));
    }
}

TEST_CASE("inertia examples") {
    const Graph h1(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
                       {3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
    CHECK(inertia(h1) == Inertia{2, 0, 6});
    CHECK(inertia(empty_graph(4)) == Inertia{0, 4, 0});
    CHECK_THROWS(inertia_from_char_poly(coefficients({1, 0, 1})));
}

TEST_CASE("rank and nullity") {
    CHECK(rank_nullity(complete_graph(4)) == RankNullity{4, 0});
    CHECK(rank_nullity(path_graph(3)) == RankNullity{2, 1});
    CHECK(rank_nullity(two_copies(complete_graph(3))) == RankNullity{6, 0});
}

TEST_CASE("rank matches rational elimination") {
    Rng rng(99);
    for (int t = 0; t < 200; ++t) {
        const Graph g = random_graph(rng, 1 + uniform_below(rng, 10));
        CHECK(inertia(g).rank() == oracle::rational_rank(oracle::adjacency(g)));
    }
}

TEST_CASE("trace powers") {
    const Graph k3 = complete_graph(3);
    CHECK(trace_power(k3, 4) == 18);
    CHECK(trace_power(cycle_graph(6), 3) == 0);
    CHECK(trace_power(k3, 3) == 6);
    CHECK_THROWS(trace_power(k3, 0));
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        const Graph g = random_graph(rng, 1 + uniform_below(rng, 9));
        CHECK(trace_power(g, 2) == 2 * g.edge_count());
        CHECK(trace_power(g, 1) == 0);
    }
}

TEST_CASE("squared char poly examples") {
    CHECK(squared_char_poly(complete_graph(2)) == from_roots({{1, 2}}));
    CHECK(squared_char_poly(cycle_graph(4)) == from_roots({{4, 2}, {0, 2}}));
    for (long long n = 2; n <= 7; ++n)
        CHECK(squared_char_poly(complete_graph(static_cast<std::size_t>(n))) ==
              from_roots({{(n - 1) * (n - 1), 1}, {1, static_cast<std::size_t>(n - 1)}}));
}

TEST_CASE("squared char poly equals char poly of A squared") {
    Rng rng(17);
    for (int t = 0; t < 60; ++t) {
        const Graph g = random_graph(rng, 1 + uniform_below(rng, 9));
        const IntMatrix a = adjacency_matrix(g);
        CHECK(squared_char_poly(g) == char_poly(a * a));
    }
}

TEST_CASE("bipartite char polys are symmetric") {
    for (const Graph& g : all_graphs_up_to(6)) {
        if (!is_bipartite(g))
            continue;
        const IntPolynomial p = char_poly(g);
        CHECK(p == (g.order() % 2 == 0 ? p.reflected() : -p.reflected()));
    }
}

} // TEST_SUITE

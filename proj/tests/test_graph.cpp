#include "oracles.hpp"

#include "cospec/enumerate.hpp"
#include "cospec/exact.hpp"
#include "cospec/graph.hpp"

#include <doctest.h>

using namespace cospec;

namespace {

Graph fig1_f() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}}); }

} // namespace

TEST_SUITE("graph") {

TEST_CASE("construction validates endpoints and loops") {
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::out_of_range);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    const Graph g(4, {{0, 1}, {1, 0}, {2, 3}});
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
}

TEST_CASE("adjacency is symmetric with zero diagonal") {
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        const Graph g = random_graph(rng, 1 + uniform_below(rng, 20));
        std::size_t ones = 0;
        for (Vertex u = 0; u < g.order(); ++u) {
            CHECK_FALSE(g.has_edge(u, u));
            for (Vertex v = 0; v < g.order(); ++v) {
                CHECK(g.has_edge(u, v) == g.has_edge(v, u));
                ones += g.has_edge(u, v) ? 1 : 0;
            }
        }
        CHECK(ones == 2 * g.edge_count());
    }
}

TEST_CASE("graph6 decoding matches the reference decoder") {
    for (const std::string s : {"D?{", "FwCW?", "@", "A_", "Bw", "DzW", "G~?GW[", "I?@dup_W?"}) {
        CAPTURE(s);
        const Graph g = parse_graph6(s);
        CHECK(oracle::adjacency(g) == oracle::decode_graph6(s));
    }
    const Graph d = parse_graph6("D?{");
    CHECK(d.order() == 5);
    // 'D' = 5 vertices, then bits 000000 111100: edges 0-4, 1-4, 2-4, 3-4.
    CHECK(d.edges() == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

TEST_CASE("graph6 small examples") {
    const Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);
    CHECK(write_graph6(complete_graph(1)) == "@");
    CHECK(write_graph6(Graph(0)) == "?");
    CHECK(write_graph6(parse_graph6("FwCW?")) == "FwCW?");
    CHECK(write_graph6(complete_graph(5)) == "D~{");
}

TEST_CASE("graph6 header and extended sizes") {
    CHECK(parse_graph6(">>graph6<<D~{") == complete_graph(5));
    const Graph big = cycle_graph(70);
    const std::string s = write_graph6(big);
    CHECK(s.substr(0, 4) == "~?@E");
    CHECK(oracle::adjacency(parse_graph6(s)) == oracle::decode_graph6(s));
    CHECK(parse_graph6(s) == big);
}

TEST_CASE("graph6 errors carry positions") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    try {
        parse_graph6("D?{x");
        FAIL("expected an error");
    } catch (const Graph6Error& e) {
        CHECK(e.position() == 3);
    }
    try {
        parse_graph6("D?\x20");
        FAIL("expected an error");
    } catch (const Graph6Error& e) {
        CHECK(e.position() == 2);
    }
    // Last byte of A_ is 100000; A` sets a padding bit.
    CHECK_THROWS_AS(parse_graph6("A`"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("D?"), Graph6Error);
}

TEST_CASE("graph6 round trip on random graphs") {
    Rng rng(2024);
    for (int t = 0; t < 1000; ++t) {
        const Graph g = random_graph(rng, uniform_below(rng, 13));
        const std::string s = write_graph6(g);
        CHECK(parse_graph6(s) == g);
        CHECK(write_graph6(parse_graph6(s)) == s);
    }
}

TEST_CASE("graph6 line reader skips blanks and header") {
    const auto graphs = read_graph6_lines(">>graph6<<\nBw\n\r\nD~{\r\n");
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == complete_graph(3));
    CHECK(graphs[1] == complete_graph(5));
}

TEST_CASE("degree sequences") {
    CHECK(degree_sequence(complete_graph(4)) == std::vector<std::size_t>{3, 3, 3, 3});
    CHECK(degree_sequence(empty_graph(3)) == std::vector<std::size_t>{0, 0, 0});
    // Vertices 1 and 2 of this F are adjacent to every other vertex.
    CHECK(degree_sequence(fig1_f()) == std::vector<std::size_t>{2, 2, 2, 4, 4});
}

TEST_CASE("regularity") {
    CHECK(is_regular(complete_graph(5)) == std::optional<std::size_t>(4));
    CHECK_FALSE(is_regular(path_graph(3)).has_value());
    CHECK(is_regular(cycle_graph(6)) == std::optional<std::size_t>(2));
    CHECK(is_regular(empty_graph(3)) == std::optional<std::size_t>(0));
}

TEST_CASE("bipartition certificates") {
    const auto c6 = is_bipartite(cycle_graph(6));
    REQUIRE(c6.has_value());
    CHECK(c6->first_size == 3);
    CHECK(c6->second_size == 3);
    CHECK_FALSE(is_bipartite(complete_graph(3)).has_value());
    const auto k23 = is_bipartite(complete_bipartite_graph(2, 3));
    REQUIRE(k23.has_value());
    CHECK(std::min(k23->first_size, k23->second_size) == 2);
    CHECK(std::max(k23->first_size, k23->second_size) == 3);
    for (auto [u, v] : complete_bipartite_graph(2, 3).edges())
        CHECK(k23->side[u] != k23->side[v]);
}

TEST_CASE("connectivity") {
    const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(is_connected(two_triangles));
    CHECK(connected_components(two_triangles).size() == 2);
    CHECK(is_connected(complete_graph(4)));
    CHECK(is_connected(complete_graph(1)));
}

TEST_CASE("bipartite exactly when the spectrum is symmetric") {
    for (const Graph& g : all_graphs_up_to(7)) {
        if (!is_connected(g))
            continue;
        const IntPolynomial p = char_poly(g);
        const IntPolynomial sym = g.order() % 2 == 0 ? p.reflected() : -p.reflected();
        CHECK((p == sym) == is_bipartite(g).has_value());
    }
}

TEST_CASE("relabel applies the permutation") {
    const Graph p3 = path_graph(3); // 0-1-2
    const std::vector<Vertex> perm{2, 0, 1};
    const Graph r = relabel(p3, perm);
    CHECK(r.has_edge(2, 0));
    CHECK(r.has_edge(0, 1));
    CHECK_FALSE(r.has_edge(2, 1));
}

TEST_CASE("vertex sets are sorted and unique") {
    const VertexSet s{4, 1, 4, 2};
    CHECK(s.members() == std::vector<Vertex>{1, 2, 4});
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(3));
}

} // TEST_SUITE

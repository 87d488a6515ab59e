#include "oracles.hpp"

#include "cospec/canonical.hpp"
#include "cospec/classify.hpp"
#include "cospec/constructions.hpp"
#include "cospec/enumerate.hpp"
#include "cospec/exact.hpp"
#include "cospec/spectrum.hpp"

#include <doctest.h>

#include <cmath>

using namespace cospec;
using oracle::from_roots;

namespace {

const IntPolynomial x = IntPolynomial::monomial(1);

double max_deviation(const IntPolynomial& exact, const RowlinsonResult& r) {
    double worst = 0;
    for (std::size_t i = 0; i < std::max(exact.coeffs().size(), r.coeffs.size()); ++i) {
        const double a = i < r.coeffs.size() ? r.coeffs[i] : 0.0;
        worst = std::max(worst, std::abs(exact.coeff(i).convert_to<double>() - a));
    }
    return worst;
}

} // namespace

TEST_SUITE("constructions") {

TEST_CASE("bipartite double cover layout") {
    const Graph f = path_graph(3);
    const Graph t = tensor_k2(f);
    CHECK(t.order() == 6);
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 0; v < 3; ++v) {
            CHECK(t.has_edge(u, 3 + v) == f.has_edge(u, v));
            CHECK_FALSE(t.has_edge(u, v));
        }
    CHECK(tensor_k2(complete_graph(1)).edge_count() == 0);
    CHECK(tensor_k2(complete_graph(1)).order() == 2);
}

TEST_CASE("double cover of an odd cycle is the long cycle") {
    const Graph t = tensor_k2(cycle_graph(5));
    CHECK(is_connected(t));
    CHECK(is_regular(t) == std::optional<std::size_t>(2));
    CHECK(canonical_form(t) == canonical_form(cycle_graph(10)));
}

TEST_CASE("two copies and disjoint union") {
    const Graph k4 = complete_graph(4);
    CHECK(char_poly(two_copies(k4)) == from_roots({{3, 2}, {-1, 6}}));
    CHECK(char_poly(two_copies(complete_graph(3))) == from_roots({{2, 2}, {-1, 4}}));
    CHECK(two_copies(complete_graph(1)) == empty_graph(2));
    CHECK(disjoint_union(k4, Graph(0)) == k4);
    Rng rng(12);
    for (int t = 0; t < 20; ++t) {
        const Graph g = random_graph(rng, 1 + uniform_below(rng, 6));
        const Graph h = random_graph(rng, 1 + uniform_below(rng, 6));
        CHECK(char_poly(disjoint_union(g, h)) == char_poly(g) * char_poly(h));
    }
}

TEST_CASE("product definitions") {
    const Graph p2 = path_graph(2);
    const Graph p3 = path_graph(3);
    // (a, b) -> a * 3 + b
    const Graph strong = strong_product(p2, p3);
    const Graph cart = cartesian_product(p2, p3);
    const Graph tens = tensor_product(p2, p3);
    CHECK(cart.has_edge(0, 1));
    CHECK(cart.has_edge(0, 3));
    CHECK_FALSE(cart.has_edge(0, 4));
    CHECK(tens.has_edge(0, 4));
    CHECK_FALSE(tens.has_edge(0, 1));
    CHECK(strong.has_edge(0, 1));
    CHECK(strong.has_edge(0, 3));
    CHECK(strong.has_edge(0, 4));
    CHECK(strong.edge_count() == cart.edge_count() + tens.edge_count());
}

TEST_CASE("product edge counts and the coenergetic pair") {
    const Graph k4 = complete_graph(4);
    CHECK(cartesian_product(k4, k4).edge_count() == 48);
    CHECK(tensor_product(k4, k4).edge_count() == 72);
    CHECK(strong_product(k4, k4) == complete_graph(16));
    const Graph c = cartesian_product(k4, k4);
    const Graph t = tensor_product(k4, k4);
    CHECK(energy(c) == doctest::Approx(36));
    CHECK(energy(t) == doctest::Approx(36));
    const PairReport r = classify_pair(c, t);
    CHECK_FALSE(r.filters.edges);
    CHECK_FALSE(r.singularly_cospectral);
    CHECK(r.equienergetic.equal);
    CHECK_FALSE(r.equienergetic.exact);
}

TEST_CASE("tensor with K2 matches the double cover") {
    Rng rng(2);
    for (int t = 0; t < 20; ++t) {
        const Graph f = random_graph(rng, 1 + uniform_below(rng, 7));
        CHECK(char_poly(tensor_product(f, complete_graph(2))) == char_poly(tensor_k2(f)));
        CHECK(canonical_form(tensor_product(f, complete_graph(2))) == canonical_form(tensor_k2(f)));
    }
}

TEST_CASE("adding a vertex") {
    CHECK(add_vertex(complete_graph(4), VertexSet{0, 1, 2, 3}) == complete_graph(5));
    CHECK(add_vertex(empty_graph(1), VertexSet{0}) == complete_graph(2));
    CHECK_THROWS_AS(add_vertex(complete_graph(3), VertexSet{}), std::invalid_argument);
    CHECK_THROWS(add_vertex(complete_graph(3), VertexSet{3}));
    const Graph g = add_vertex(path_graph(4), VertexSet{0, 3});
    CHECK(g.order() == 5);
    CHECK(g.neighbors(4) == std::vector<Vertex>{0, 3});
}

TEST_CASE("Rowlinson formula") {
    const auto k5 = rowlinson_char_poly(complete_graph(4), VertexSet{0, 1, 2, 3});
    CHECK(max_deviation(char_poly(complete_graph(5)), k5) < 1e-6);
    const Graph g = tensor_k2(complete_graph(5));
    const VertexSet s{2, 3, 4, 7, 8, 9};
    const auto r = rowlinson_char_poly(g, s);
    CHECK(max_deviation(char_poly(add_vertex(g, s)), r) < 1e-6);
    CHECK(max_deviation(family_gknj_char_poly(5, 3), r) < 1e-6);
    CHECK_THROWS(rowlinson_char_poly(g, VertexSet{}));
}

TEST_CASE("Rowlinson formula on random inputs") {
    Rng rng(7);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + uniform_below(rng, 10);
        const Graph g = random_graph(rng, n);
        const VertexSet s = random_nonempty_subset(rng, n);
        CHECK(max_deviation(char_poly(add_vertex(g, s)), rowlinson_char_poly(g, s)) < 1e-5);
    }
}

TEST_CASE("families over complete graphs") {
    const auto g = family_gknj(5, 3);
    const auto h = family_hknj(5, 3);
    CHECK(g.graph.order() == 11);
    CHECK(h.graph.order() == 11);
    CHECK(g.root == 10);
    CHECK(family_attachment(5, 3) == VertexSet{0, 1, 2, 5, 6, 7});
    CHECK(g.graph == add_vertex(tensor_k2(complete_graph(5)), family_attachment(5, 3)));
    CHECK(h.graph == add_vertex(two_copies(complete_graph(5)), family_attachment(5, 3)));
    // 1-based S = {3,4,5,8,9,10}; K5 symmetry maps it onto S_3.
    CHECK(canonical_form(g.graph) ==
          canonical_form(add_vertex(tensor_k2(complete_graph(5)), VertexSet{2, 3, 4, 7, 8, 9})));
    CHECK_THROWS(family_gknj(2, 1));
    CHECK_THROWS(family_gknj(4, 0));
    CHECK_THROWS(family_hknj(4, 5));
}

TEST_CASE("family characteristic polynomials") {
    for (std::size_t n = 3; n <= 8; ++n) {
        const long long nn = static_cast<long long>(n);
        for (std::size_t j = 1; j <= n; ++j) {
            CAPTURE(n);
            CAPTURE(j);
            const long long jj = static_cast<long long>(j);
            const IntPolynomial q = x * IntPolynomial{1, 1} * IntPolynomial{-(nn - 1), 1} -
                                    IntPolynomial::constant(2 * jj) * IntPolynomial{-(nn - 1 - jj), 1};
            CHECK(family_cubic(n, j) == q);
            const IntPolynomial pg = from_roots({{1, n - 1}, {-1, n - 2}, {-(nn - 1), 1}}) * q;
            const IntPolynomial ph = from_roots({{-1, 2 * n - 3}, {nn - 1, 1}}) * q;
            CHECK(char_poly(family_gknj(n, j).graph) == pg);
            CHECK(char_poly(family_hknj(n, j).graph) == ph);
            CHECK(family_gknj_char_poly(n, j) == pg);
            CHECK(family_hknj_char_poly(n, j) == ph);
        }
    }
}

TEST_CASE("coalescence") {
    const Graph p3 = coalesce(complete_graph(2), 0, complete_graph(2), 0);
    CHECK(p3 == Graph(3, {{0, 1}, {0, 2}}));
    CHECK(canonical_form(p3) == canonical_form(path_graph(3)));
    const Graph tri = complete_graph(3);
    const Graph sq = cycle_graph(4);
    const Graph gh = coalesce(tri, 1, sq, 1);
    CHECK(gh.order() == 6);
    CHECK(gh.edge_count() == 7);
    CHECK(gh.degree(1) == 4);
    CHECK_THROWS(coalesce(tri, 3, sq, 0));
}

TEST_CASE("coalescence is symmetric up to isomorphism") {
    Rng rng(19);
    for (int t = 0; t < 50; ++t) {
        const Graph g = random_graph(rng, 1 + uniform_below(rng, 6));
        const Graph h = random_graph(rng, 1 + uniform_below(rng, 6));
        const Vertex gv = uniform_below(rng, g.order());
        const Vertex hv = uniform_below(rng, h.order());
        CHECK(canonical_form(coalesce(g, gv, h, hv)) == canonical_form(coalesce(h, hv, g, gv)));
    }
}

TEST_CASE("Schwenk identity") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        const std::size_t ng = 1 + uniform_below(rng, 8);
        const std::size_t nh = 1 + uniform_below(rng, 9 - ng);
        const Graph g = random_graph(rng, ng);
        const Graph h = random_graph(rng, nh);
        const Vertex gv = uniform_below(rng, ng);
        const Vertex hv = uniform_below(rng, nh);
        const IntPolynomial pg = char_poly(g), ph = char_poly(h);
        const IntPolynomial pgv = char_poly(delete_vertex(g, gv)), phv = char_poly(delete_vertex(h, hv));
        CHECK(char_poly(coalesce(g, gv, h, hv)) == pg * phv + pgv * ph - x * pgv * phv);
    }
}

TEST_CASE("vertex deletion") {
    CHECK(delete_vertex(complete_graph(4), 2) == complete_graph(3));
    CHECK(delete_vertex(path_graph(3), 1) == empty_graph(2));
    CHECK(delete_vertex(complete_graph(1), 0).order() == 0);
}

TEST_CASE("coalescence chains") {
    const auto [g1, h1] = coalesce_chain(4, 2, 1);
    CHECK(g1.graph == family_gknj(4, 2).graph);
    CHECK(h1.graph == family_hknj(4, 2).graph);
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto [g, h] = coalesce_chain(3, 2, k);
        CHECK(g.graph.order() == k * 7 - (k - 1));
        CHECK(h.graph.order() == k * 7 - (k - 1));
    }
    const auto [g2, h2] = coalesce_chain(3, 1, 2);
    CHECK(g2.graph.order() == 13);
    CHECK(classify_pair(g2.graph, h2.graph).ncsc);
    const auto [g3, h3] = coalesce_chain(4, 2, 3);
    CHECK(strip_zero_roots(squared_char_poly(g3.graph)).reduced ==
          strip_zero_roots(squared_char_poly(h3.graph)).reduced);
    CHECK_THROWS(coalesce_chain(4, 2, 0));
}

TEST_CASE("construction dispatch") {
    for (const auto& name : construction_kind_names())
        CHECK(construction_kind_name(*parse_construction_kind(name)) == name);
    CHECK_FALSE(parse_construction_kind("nope").has_value());
    ConstructionSpec spec;
    spec.kind = ConstructionKind::family_gknj;
    spec.n = 5;
    spec.j = 3;
    CHECK(build(spec) == family_gknj(5, 3).graph);
    spec.kind = ConstructionKind::coalesce;
    spec.left = complete_graph(2);
    spec.right = complete_graph(2);
    CHECK(build(spec) == Graph(3, {{0, 1}, {0, 2}}));
    spec.kind = ConstructionKind::disjoint_union;
    spec.right.reset();
    CHECK_THROWS(build(spec));
}

} // TEST_SUITE

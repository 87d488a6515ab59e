#include "cospec/constructions.hpp"

#include "cospec/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace cospec {

namespace {

std::string tag(const Graph& g) { return g.label().empty() ? std::string("G") : g.label(); }

void check_vertex(const Graph& g, Vertex v, const char* what) {
    if (v >= g.order())
        throw std::out_of_range(std::string(what) + " vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(g.order()));
}

void check_family(std::size_t n, std::size_t j) {
    if (n < 3)
        throw std::invalid_argument("family builders need n >= 3");
    if (j < 1 || j > n)
        throw std::invalid_argument("family builders need 1 <= j <= n");
}

// Multiply the float polynomial p by (x - root).
void times_linear(std::vector<double>& p, double root) {
    p.push_back(0.0);
    for (std::size_t i = p.size() - 1; i > 0; --i)
        p[i] = p[i - 1] - root * p[i];
    p[0] = -root * p[0];
}

} // namespace

Graph tensor_k2(const Graph& f) {
    const std::size_t n = f.order();
    std::vector<Edge> edges;
    for (const auto& [u, v] : f.edges()) {
        edges.emplace_back(u, n + v);
        edges.emplace_back(v, n + u);
    }
    return Graph(2 * n, edges, tag(f) + "xK2");
}

Graph two_copies(const Graph& f) { return disjoint_union(f, f).with_label("2" + tag(f)); }

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> edges = g.edges();
    for (const auto& [u, v] : h.edges())
        edges.emplace_back(g.order() + u, g.order() + v);
    return Graph(g.order() + h.order(), edges, tag(g) + "+" + tag(h));
}

namespace {

enum class ProductRule { strong, cartesian, tensor };

Graph product(const Graph& g, const Graph& h, ProductRule rule, const std::string& symbol) {
    const std::size_t ng = g.order();
    const std::size_t nh = h.order();
    std::vector<Edge> edges;
    for (Vertex a1 = 0; a1 < ng; ++a1)
        for (Vertex b1 = 0; b1 < nh; ++b1)
            for (Vertex a2 = 0; a2 < ng; ++a2)
                for (Vertex b2 = 0; b2 < nh; ++b2) {
                    const Vertex x = a1 * nh + b1;
                    const Vertex y = a2 * nh + b2;
                    if (x >= y)
                        continue;
                    const bool ga = a1 != a2 && g.has_edge(a1, a2);
                    const bool hb = b1 != b2 && h.has_edge(b1, b2);
                    bool adjacent = false;
                    switch (rule) {
                    case ProductRule::strong:
                        adjacent = (a1 == a2 && hb) || (b1 == b2 && ga) || (ga && hb);
                        break;
                    case ProductRule::cartesian:
                        adjacent = (a1 == a2 && hb) || (b1 == b2 && ga);
                        break;
                    case ProductRule::tensor:
                        adjacent = ga && hb;
                        break;
                    }
                    if (adjacent)
                        edges.emplace_back(x, y);
                }
    return Graph(ng * nh, edges, tag(g) + symbol + tag(h));
}

} // namespace

Graph strong_product(const Graph& g, const Graph& h) { return product(g, h, ProductRule::strong, "[s]"); }
Graph cartesian_product(const Graph& g, const Graph& h) { return product(g, h, ProductRule::cartesian, "[]"); }
Graph tensor_product(const Graph& g, const Graph& h) { return product(g, h, ProductRule::tensor, "x"); }

Graph add_vertex(const Graph& g, const VertexSet& s) {
    if (s.empty())
        throw std::invalid_argument("add_vertex needs a nonempty neighbour set");
    std::vector<Edge> edges = g.edges();
    for (Vertex v : s) {
        check_vertex(g, v, "neighbour");
        edges.emplace_back(v, g.order());
    }
    return Graph(g.order() + 1, edges, tag(g) + "+v");
}

Graph delete_vertex(const Graph& g, Vertex v) {
    check_vertex(g, v, "deleted");
    std::vector<Edge> edges;
    auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };
    for (const auto& [a, b] : g.edges())
        if (a != v && b != v)
            edges.emplace_back(shift(a), shift(b));
    return Graph(g.order() - 1, edges, tag(g) + "-" + std::to_string(v));
}

Graph coalesce(const Graph& g, Vertex gv, const Graph& h, Vertex hv) {
    check_vertex(g, gv, "left");
    check_vertex(h, hv, "right");
    const std::size_t ng = g.order();
    auto map_h = [&](Vertex x) -> Vertex {
        if (x == hv)
            return gv;
        return ng + (x < hv ? x : x - 1);
    };
    std::vector<Edge> edges = g.edges();
    for (const auto& [a, b] : h.edges())
        edges.emplace_back(map_h(a), map_h(b));
    return Graph(ng + h.order() - 1, edges, tag(g) + "." + tag(h));
}

VertexSet family_attachment(std::size_t n, std::size_t j) {
    std::vector<Vertex> s;
    for (Vertex i = 0; i < j; ++i) {
        s.push_back(i);
        s.push_back(n + i);
    }
    return VertexSet(std::move(s));
}

RootedGraph family_gknj(std::size_t n, std::size_t j) {
    check_family(n, j);
    const Graph g = add_vertex(tensor_k2(complete_graph(n)), family_attachment(n, j));
    return {g.with_label("G(K" + std::to_string(n) + "," + std::to_string(j) + ")"), 2 * n};
}

RootedGraph family_hknj(std::size_t n, std::size_t j) {
    check_family(n, j);
    const Graph g = add_vertex(two_copies(complete_graph(n)), family_attachment(n, j));
    return {g.with_label("H(K" + std::to_string(n) + "," + std::to_string(j) + ")"), 2 * n};
}

IntPolynomial family_cubic(std::size_t n, std::size_t j) {
    check_family(n, j);
    const BigInt top(n - 1);
    const BigInt jj(j);
    const IntPolynomial x = IntPolynomial::monomial(1);
    return x * IntPolynomial::linear(-1) * IntPolynomial::linear(top) -
           IntPolynomial::constant(2 * jj) * IntPolynomial::linear(top - jj);
}

IntPolynomial family_gknj_char_poly(std::size_t n, std::size_t j) {
    return IntPolynomial::linear(1).pow(n - 1) * IntPolynomial::linear(-1).pow(n - 2) *
           IntPolynomial::linear(-BigInt(n - 1)) * family_cubic(n, j);
}

IntPolynomial family_hknj_char_poly(std::size_t n, std::size_t j) {
    return IntPolynomial::linear(-1).pow(2 * n - 3) * IntPolynomial::linear(BigInt(n - 1)) * family_cubic(n, j);
}

std::pair<RootedGraph, RootedGraph> coalesce_chain(std::size_t n, std::size_t j, std::size_t k) {
    check_family(n, j);
    if (k < 1)
        throw std::invalid_argument("coalesce_chain needs k >= 1");
    const RootedGraph g1 = family_gknj(n, j);
    const RootedGraph h1 = family_hknj(n, j);
    RootedGraph g = g1;
    RootedGraph h = h1;
    for (std::size_t step = 2; step <= k; ++step) {
        g.graph = coalesce(g.graph, g.root, g1.graph, g1.root);
        h.graph = coalesce(h.graph, h.root, h1.graph, h1.root);
    }
    const std::string suffix = "^" + std::to_string(k);
    g.graph = g.graph.with_label(g1.graph.label() + suffix);
    h.graph = h.graph.with_label(h1.graph.label() + suffix);
    return {std::move(g), std::move(h)};
}

// P_{G*}(x) = x P_G(x) - sum_i rho_i^2 P_G(x) / (x - mu_i), with rho_i the
// norm of the projection of the indicator of S onto the i-th eigenspace.
RowlinsonResult rowlinson_char_poly(const Graph& g, const VertexSet& s, std::optional<double> tol) {
    if (s.empty())
        throw std::invalid_argument("vertex addition needs a nonempty neighbour set");
    for (Vertex v : s)
        check_vertex(g, v, "neighbour");
    const std::size_t n = g.order();
    const EigenDecomposition eig = jacobi_eigen(adjacency_as_real(g), true);
    double rho = 0.0;
    for (double x : eig.values)
        rho = std::max(rho, std::abs(x));
    const double t = tol ? *tol : default_tolerance(rho);
    if (!(t > 0.0))
        throw std::invalid_argument("tolerance must be positive");

    struct Space {
        double mean;
        std::size_t mult;
        double weight;
    };
    std::vector<Space> spaces;
    RowlinsonResult out;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i < n && eig.values[i - 1] - eig.values[i] <= 10.0 * t)
            continue;
        double sum = 0.0;
        double weight = 0.0;
        for (std::size_t k = start; k < i; ++k) {
            sum += eig.values[k];
            double dot = 0.0;
            for (Vertex v : s)
                dot += eig.vectors[k][v];
            weight += dot * dot;
        }
        out.cluster_residual = std::max(out.cluster_residual, eig.values[start] - eig.values[i - 1]);
        spaces.push_back({sum / static_cast<double>(i - start), i - start, weight});
        start = i;
    }
    out.eigenspaces = spaces.size();

    auto product_except = [&](std::optional<std::size_t> skip) {
        std::vector<double> p{1.0};
        for (std::size_t i = 0; i < spaces.size(); ++i) {
            std::size_t times = spaces[i].mult;
            if (skip && *skip == i)
                --times;
            for (std::size_t r = 0; r < times; ++r)
                times_linear(p, spaces[i].mean);
        }
        return p;
    };

    std::vector<double> result(n + 2, 0.0);
    const auto pg = product_except(std::nullopt);
    for (std::size_t i = 0; i < pg.size(); ++i)
        result[i + 1] += pg[i];
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        const auto q = product_except(i);
        for (std::size_t c = 0; c < q.size(); ++c)
            result[c] -= spaces[i].weight * q[c];
    }
    out.coeffs = std::move(result);
    return out;
}

namespace {

constexpr std::array<std::pair<ConstructionKind, const char*>, 12> kKindNames{{
    {ConstructionKind::tensor_k2, "tensor-k2"},
    {ConstructionKind::two_copies, "double"},
    {ConstructionKind::disjoint_union, "union"},
    {ConstructionKind::strong_product, "strong"},
    {ConstructionKind::cartesian_product, "cartesian"},
    {ConstructionKind::tensor_product, "tensor"},
    {ConstructionKind::add_vertex, "add-vertex"},
    {ConstructionKind::family_gknj, "gknj"},
    {ConstructionKind::family_hknj, "hknj"},
    {ConstructionKind::coalesce, "coalesce"},
    {ConstructionKind::coalesce_chain_g, "chain-g"},
    {ConstructionKind::coalesce_chain_h, "chain-h"},
}};

const Graph& need(const std::optional<Graph>& g, const char* which) {
    if (!g)
        throw std::invalid_argument(std::string("construction needs a ") + which + " graph");
    return *g;
}

} // namespace

std::optional<ConstructionKind> parse_construction_kind(const std::string& name) {
    for (const auto& [kind, text] : kKindNames)
        if (name == text)
            return kind;
    return std::nullopt;
}

std::string construction_kind_name(ConstructionKind kind) {
    for (const auto& [k, text] : kKindNames)
        if (k == kind)
            return text;
    return "unknown";
}

std::vector<std::string> construction_kind_names() {
    std::vector<std::string> out;
    for (const auto& entry : kKindNames)
        out.emplace_back(entry.second);
    return out;
}

Graph build(const ConstructionSpec& spec) {
    switch (spec.kind) {
    case ConstructionKind::tensor_k2:
        return tensor_k2(need(spec.left, "base"));
    case ConstructionKind::two_copies:
        return two_copies(need(spec.left, "base"));
    case ConstructionKind::disjoint_union:
        return disjoint_union(need(spec.left, "left"), need(spec.right, "right"));
    case ConstructionKind::strong_product:
        return strong_product(need(spec.left, "left"), need(spec.right, "right"));
    case ConstructionKind::cartesian_product:
        return cartesian_product(need(spec.left, "left"), need(spec.right, "right"));
    case ConstructionKind::tensor_product:
        return tensor_product(need(spec.left, "left"), need(spec.right, "right"));
    case ConstructionKind::add_vertex:
        return add_vertex(need(spec.left, "base"), spec.set);
    case ConstructionKind::family_gknj:
        return family_gknj(spec.n, spec.j).graph;
    case ConstructionKind::family_hknj:
        return family_hknj(spec.n, spec.j).graph;
    case ConstructionKind::coalesce:
        return coalesce(need(spec.left, "left"), spec.left_vertex, need(spec.right, "right"), spec.right_vertex);
    case ConstructionKind::coalesce_chain_g:
        return coalesce_chain(spec.n, spec.j, spec.k).first.graph;
    case ConstructionKind::coalesce_chain_h:
        return coalesce_chain(spec.n, spec.j, spec.k).second.graph;
    }
    throw std::invalid_argument("unknown construction kind");
}

} // namespace cospec

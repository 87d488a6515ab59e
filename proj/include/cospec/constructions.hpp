#ifndef COSPEC_CONSTRUCTIONS_HPP
#define COSPEC_CONSTRUCTIONS_HPP

#include "cospec/graph.hpp"
#include "cospec/poly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cospec {

// Bipartite double cover F x K2: vertex x of the first copy is x, of the
// second copy n + x; x ~ n + y iff xy is an edge of F.
Graph tensor_k2(const Graph& f);

// 2F, first copy then second copy.
Graph two_copies(const Graph& f);

Graph disjoint_union(const Graph& g, const Graph& h);

// Product vertex (a, b) has index a * |V(h)| + b.
Graph strong_product(const Graph& g, const Graph& h);
Graph cartesian_product(const Graph& g, const Graph& h);
Graph tensor_product(const Graph& g, const Graph& h);

// New vertex n adjacent exactly to s. Rejects an empty s.
Graph add_vertex(const Graph& g, const VertexSet& s);

// Vertices after v shift down by one.
Graph delete_vertex(const Graph& g, Vertex v);

/// Identify gv of g with hv of h. The merged vertex keeps index gv; the
/// remaining vertices of h follow those of g in their original order.
Graph coalesce(const Graph& g, Vertex gv, const Graph& h, Vertex hv);

// Graph with a distinguished vertex (the one added by a vertex-addition build).
struct RootedGraph {
    Graph graph;
    Vertex root = 0;
};

// {0..j-1} u {n..n+j-1}
VertexSet family_attachment(std::size_t n, std::size_t j);

// add_vertex(tensor_k2(K_n), S_j) and add_vertex(two_copies(K_n), S_j); n >= 3, 1 <= j <= n.
RootedGraph family_gknj(std::size_t n, std::size_t j);
RootedGraph family_hknj(std::size_t n, std::size_t j);

// x(x+1)(x-(n-1)) - 2j(x-(n-1-j))
IntPolynomial family_cubic(std::size_t n, std::size_t j);
// (x-1)^{n-1} (x+1)^{n-2} (x+(n-1)) Q_{n,j}
IntPolynomial family_gknj_char_poly(std::size_t n, std::size_t j);
// (x+1)^{2n-3} (x-(n-1)) Q_{n,j}
IntPolynomial family_hknj_char_poly(std::size_t n, std::size_t j);

/// k copies of G_{K_n,j} (resp. H_{K_n,j}) glued one after another at the
/// distinguished vertex; both graphs have k(2n+1) - (k-1) vertices.
std::pair<RootedGraph, RootedGraph> coalesce_chain(std::size_t n, std::size_t j, std::size_t k);

/// Vertex-addition formula evaluated numerically from the spectral
/// decomposition of g. Coefficients are indexed by power of x.
struct RowlinsonResult {
    std::vector<double> coeffs;
    // Largest eigenvalue spread inside any clustered eigenspace.
    double cluster_residual = 0;
    std::size_t eigenspaces = 0;
};

RowlinsonResult rowlinson_char_poly(const Graph& g, const VertexSet& s, std::optional<double> tol = std::nullopt);

enum class ConstructionKind {
    tensor_k2,
    two_copies,
    disjoint_union,
    strong_product,
    cartesian_product,
    tensor_product,
    add_vertex,
    family_gknj,
    family_hknj,
    coalesce,
    coalesce_chain_g,
    coalesce_chain_h,
};

// Parameters a construction kind may use; unused fields are ignored.
struct ConstructionSpec {
    ConstructionKind kind = ConstructionKind::tensor_k2;
    std::optional<Graph> left;
    std::optional<Graph> right;
    VertexSet set;
    Vertex left_vertex = 0;
    Vertex right_vertex = 0;
    std::size_t n = 0;
    std::size_t j = 0;
    std::size_t k = 1;
};

std::optional<ConstructionKind> parse_construction_kind(const std::string& name);
std::string construction_kind_name(ConstructionKind kind);
std::vector<std::string> construction_kind_names();

// Validates parameters for the kind (std::invalid_argument on violation) and builds.
Graph build(const ConstructionSpec& spec);

} // namespace cospec

#endif // COSPEC_CONSTRUCTIONS_HPP

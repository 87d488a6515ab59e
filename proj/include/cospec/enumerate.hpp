#ifndef COSPEC_ENUMERATE_HPP
#define COSPEC_ENUMERATE_HPP

#include "cospec/graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace cospec {

// One representative per isomorphism class on exactly n vertices, ordered by canonical graph6.
// Grows classes on n-1 vertices by one vertex with every neighbourhood and deduplicates.
std::vector<Graph> all_graphs(std::size_t n);

// All graphs with 1..max_n vertices, by order then canonical graph6.
std::vector<Graph> all_graphs_up_to(std::size_t max_n);

// Deterministic across platforms: uses raw engine output, not std distributions.
using Rng = std::mt19937_64;

std::size_t uniform_below(Rng& rng, std::size_t bound);
Graph random_graph(Rng& rng, std::size_t n, double edge_probability = 0.5);
std::vector<Vertex> random_permutation(Rng& rng, std::size_t n);
VertexSet random_nonempty_subset(Rng& rng, std::size_t n);

} // namespace cospec

#endif // COSPEC_ENUMERATE_HPP

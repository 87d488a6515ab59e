#ifndef COSPEC_CANONICAL_HPP
#define COSPEC_CANONICAL_HPP

#include "cospec/graph.hpp"

#include <string>
#include <vector>

namespace cospec {

struct CanonicalLabeling {
    // labeling[v] is the canonical index of vertex v.
    std::vector<Vertex> labeling;
    // Automorphism generators found during the search (as vertex maps).
    std::vector<std::vector<Vertex>> generators;
    std::size_t leaves = 0;
};

/// Canonical labeling by equitable refinement plus backtracking over
/// individualized vertices. Subtrees known to be images of explored ones
/// under discovered automorphisms are skipped.
CanonicalLabeling canonical_labeling(const Graph& g);

// graph6 of the canonically relabeled graph; equal iff the graphs are isomorphic.
std::string canonical_form(const Graph& g);

} // namespace cospec

#endif // COSPEC_CANONICAL_HPP

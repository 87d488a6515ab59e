#ifndef COSPEC_WALKS_HPP
#define COSPEC_WALKS_HPP

#include "cospec/graph.hpp"
#include "cospec/poly.hpp"

#include <utility>
#include <vector>

namespace cospec {

// Closed-walk counts of even length: at(k) is trace(A^{2k}) for k = 1..horizon.
struct WalkProfile {
    std::vector<BigInt> counts;
    std::size_t horizon = 0;

    const BigInt& at(std::size_t k) const { return counts.at(k - 1); }
    friend bool operator==(const WalkProfile&, const WalkProfile&) = default;
};

// Repeated exact multiplication by A^2. Horizon is capped at 2n by default;
// pass allow_beyond_cap to lift the cap.
WalkProfile walk_profile(const Graph& g, std::size_t horizon, bool allow_beyond_cap = false);

// Equal walk counts of every even length up to 2*horizon. With
// horizon >= max(n_g, n_h) this decides singular cospectrality.
bool walk_equivalent(const Graph& g, const Graph& h, std::size_t horizon);

// Same comparison on precomputed profiles; both must reach the horizon.
bool walk_equivalent(const WalkProfile& g, const WalkProfile& h, std::size_t horizon);

// (C_{2j}, C_j + C_j), j >= 3.
std::pair<Graph, Graph> cycle_pair(std::size_t j);

} // namespace cospec

#endif // COSPEC_WALKS_HPP

#include "cospec/walks.hpp"

#include "cospec/constructions.hpp"
#include "cospec/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace cospec {

WalkProfile walk_profile(const Graph& g, std::size_t horizon, bool allow_beyond_cap) {
    if (horizon < 1)
        throw std::invalid_argument("walk horizon must be >= 1");
    if (!allow_beyond_cap && horizon > std::max<std::size_t>(2 * g.order(), 1))
        throw std::invalid_argument("walk horizon exceeds the default cap of 2n");
    const IntMatrix a = adjacency_matrix(g);
    const IntMatrix a2 = a * a;
    WalkProfile w;
    w.horizon = horizon;
    w.counts.reserve(horizon);
    IntMatrix power = a2;
    for (std::size_t k = 1; k <= horizon; ++k) {
        if (k > 1)
            power = power * a2;
        w.counts.push_back(power.trace());
    }
    return w;
}

bool walk_equivalent(const Graph& g, const Graph& h, std::size_t horizon) {
    if (g.edge_count() != h.edge_count())
        return false;
    return walk_profile(g, horizon, true).counts == walk_profile(h, horizon, true).counts;
}

bool walk_equivalent(const WalkProfile& g, const WalkProfile& h, std::size_t horizon) {
    if (g.horizon < horizon || h.horizon < horizon)
        throw std::invalid_argument("walk profile shorter than the requested horizon");
    return std::equal(g.counts.begin(), g.counts.begin() + static_cast<long>(horizon), h.counts.begin());
}

std::pair<Graph, Graph> cycle_pair(std::size_t j) {
    if (j < 3)
        throw std::invalid_argument("cycle_pair needs j >= 3");
    const Graph cj = cycle_graph(j);
    return {cycle_graph(2 * j), two_copies(cj)};
}

} // namespace cospec

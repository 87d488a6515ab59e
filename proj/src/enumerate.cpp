#include "cospec/enumerate.hpp"

#include "cospec/canonical.hpp"

#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cospec {

std::vector<Graph> all_graphs(std::size_t n) {
    if (n == 0)
        return {Graph(0)};
    if (n == 1)
        return {Graph(1)};
    std::map<std::string, Graph> classes;
    for (const Graph& base : all_graphs(n - 1)) {
        const auto old_edges = base.edges();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
            std::vector<Edge> edges = old_edges;
            for (Vertex v = 0; v + 1 < n; ++v)
                if ((mask >> v) & 1u)
                    edges.emplace_back(v, n - 1);
            Graph g(n, edges);
            auto key = canonical_form(g);
            if (!classes.contains(key))
                classes.emplace(key, parse_graph6(key));
        }
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [key, g] : classes)
        out.push_back(std::move(g));
    return out;
}

std::vector<Graph> all_graphs_up_to(std::size_t max_n) {
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        auto level = all_graphs(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::size_t uniform_below(Rng& rng, std::size_t bound) {
    if (bound == 0)
        throw std::invalid_argument("uniform_below(0)");
    // Rejection sampling keeps the draw unbiased and engine-defined.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
}

Graph random_graph(Rng& rng, std::size_t n, double p) {
    const auto threshold = static_cast<std::uint64_t>(p * 18446744073709551615.0);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng() < threshold || p >= 1.0)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::vector<Vertex> random_permutation(Rng& rng, std::size_t n) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
    return perm;
}

VertexSet random_nonempty_subset(Rng& rng, std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("no nonempty subset of an empty vertex set");
    std::vector<Vertex> members;
    while (members.empty())
        for (Vertex v = 0; v < n; ++v)
            if (rng() & 1u)
                members.push_back(v);
    return VertexSet(std::move(members));
}

} // namespace cospec

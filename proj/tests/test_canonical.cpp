#include "oracles.hpp"

#include "cospec/canonical.hpp"
#include "cospec/constructions.hpp"
#include "cospec/enumerate.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace cospec;

TEST_SUITE("canonical") {

TEST_CASE("labeling is a permutation") {
    Rng rng(1);
    for (int t = 0; t < 30; ++t) {
        const Graph g = random_graph(rng, uniform_below(rng, 15));
        auto lab = canonical_labeling(g).labeling;
        REQUIRE(lab.size() == g.order());
        std::sort(lab.begin(), lab.end());
        for (std::size_t i = 0; i < lab.size(); ++i)
            CHECK(lab[i] == i);
    }
}

TEST_CASE("canonical form is a relabeling of the input") {
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        const Graph g = random_graph(rng, 1 + uniform_below(rng, 12));
        const auto lab = canonical_labeling(g).labeling;
        CHECK(canonical_form(g) == write_graph6(relabel(g, lab)));
    }
}

TEST_CASE("agrees with brute force on all small random graphs") {
    // Two graphs share a canonical form exactly when they share the brute-force form.
    Rng rng(77);
    std::map<std::string, std::string> fast_to_slow;
    std::map<std::string, std::string> slow_to_fast;
    for (int t = 0; t < 600; ++t) {
        const Graph g = random_graph(rng, 1 + uniform_below(rng, 6));
        const std::string fast = canonical_form(g);
        const std::string slow = oracle::brute_force_canonical(g);
        const auto [a, a_new] = fast_to_slow.emplace(fast, slow);
        const auto [b, b_new] = slow_to_fast.emplace(slow, fast);
        CHECK(a->second == slow);
        CHECK(b->second == fast);
    }
}

TEST_CASE("class counts match brute force") {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::set<std::string> fast, slow;
        const std::size_t pairs = n * (n - 1) / 2;
        for (std::size_t mask = 0; mask < (std::size_t{1} << pairs); ++mask) {
            std::vector<Edge> edges;
            std::size_t bit = 0;
            for (Vertex v = 1; v < n; ++v)
                for (Vertex u = 0; u < v; ++u, ++bit)
                    if ((mask >> bit) & 1u)
                        edges.push_back({u, v});
            const Graph g(n, edges);
            fast.insert(canonical_form(g));
            slow.insert(oracle::brute_force_canonical(g));
        }
        CHECK(fast.size() == slow.size());
    }
}

TEST_CASE("eleven classes on four vertices") {
    CHECK(all_graphs(4).size() == 11);
    const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 1; n <= expected.size(); ++n)
        CHECK(all_graphs(n).size() == expected[n - 1]);
}

TEST_CASE("invariant under random relabeling") {
    Rng rng(31337);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + uniform_below(rng, 12);
        const Graph g = random_graph(rng, n);
        const Graph h = relabel(g, random_permutation(rng, n));
        CHECK(canonical_form(g) == canonical_form(h));
    }
}

TEST_CASE("highly symmetric graphs") {
    Rng rng(3);
    for (const Graph& g : {cycle_graph(12), tensor_k2(complete_graph(6)), two_copies(complete_graph(6)),
                           complete_bipartite_graph(5, 6), cartesian_product(complete_graph(3), complete_graph(4))}) {
        const std::string f = canonical_form(g);
        for (int t = 0; t < 10; ++t)
            CHECK(canonical_form(relabel(g, random_permutation(rng, g.order()))) == f);
    }
    CHECK(canonical_form(cycle_graph(8)) != canonical_form(two_copies(cycle_graph(4))));
}

TEST_CASE("generators are automorphisms") {
    const Graph g = cartesian_product(cycle_graph(4), complete_graph(2));
    const auto lab = canonical_labeling(g);
    for (const auto& gen : lab.generators)
        CHECK(relabel(g, gen) == g);
}

} // TEST_SUITE

#include "oracles.hpp"

#include "cospec/canonical.hpp"
#include "cospec/classify.hpp"
#include "cospec/constructions.hpp"
#include "cospec/enumerate.hpp"
#include "cospec/json_io.hpp"
#include "cospec/search.hpp"
#include "cospec/walks.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace cospec;

namespace {

using NamedPair = std::pair<std::string, std::string>;

NamedPair ordered(std::string a, std::string b) {
    if (b < a)
        std::swap(a, b);
    return {a, b};
}

std::set<NamedPair> reported(const SearchResult& r, std::vector<IndexPair> Bucket::*field) {
    std::set<NamedPair> out;
    for (const Bucket& b : r.buckets)
        for (auto [i, j] : b.*field)
            out.insert(ordered(b.members.at(i), b.members.at(j)));
    return out;
}

struct Expected {
    std::set<NamedPair> ncsc, cospectral, almost;
};

// All-pairs classification over the distinct isomorphism classes of the input.
Expected brute_force(const std::vector<std::string>& lines) {
    std::map<std::string, Graph> unique;
    for (const std::string& line : lines) {
        try {
            const Graph g = parse_graph6(line);
            unique.emplace(canonical_form(g), g);
        } catch (const Graph6Error&) {
        }
    }
    std::vector<std::pair<std::string, SpectralProfile>> items;
    for (const auto& [key, g] : unique)
        items.emplace_back(key, spectral_profile(g));
    Expected e;
    for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            const PairReport r = classify_profiles(items[i].second, items[j].second);
            const NamedPair p = ordered(items[i].first, items[j].first);
            if (r.ncsc)
                e.ncsc.insert(p);
            if (r.cospectral)
                e.cospectral.insert(p);
            if (r.almost_cospectral && !r.cospectral)
                e.almost.insert(p);
        }
    return e;
}

std::vector<std::string> to_lines(const std::vector<Graph>& graphs) {
    std::vector<std::string> lines;
    for (const Graph& g : graphs)
        lines.push_back(write_graph6(g));
    return lines;
}

} // namespace

TEST_SUITE("search") {

TEST_CASE("fingerprint keys") {
    const auto [c6, two_c3] = cycle_pair(3);
    const Fingerprint a = fingerprint(c6);
    const Fingerprint b = fingerprint(two_c3);
    CHECK(a.sc_key == b.sc_key);
    CHECK(a.cp_key != b.cp_key);
    CHECK(a.edges == 6);
    CHECK(fingerprint(complete_graph(3)).sc_key != fingerprint(complete_graph(4)).sc_key);
    const Graph f = parse_graph6("DzW");
    const Fingerprint ff = fingerprint(relabel(f, std::vector<Vertex>{4, 2, 0, 3, 1}));
    CHECK(ff.sc_key == fingerprint(f).sc_key);
    CHECK(ff.cp_key == fingerprint(f).cp_key);
    CHECK(ff.ac_key == fingerprint(f).ac_key);
    CHECK(encode_coefficients(oracle::coefficients({-2, 0, 1})) == "-2,0,1");
}

TEST_CASE("empty stream") {
    const SearchResult r = scan({});
    CHECK(r.buckets.empty());
    CHECK(r.errors.empty());
    CHECK(r.stats.graphs_scanned == 0);
    CHECK(r.stats.ncsc_pairs == 0);
}

TEST_CASE("family pair lands in one NCSC bucket") {
    const std::vector<std::string> lines{write_graph6(family_gknj(5, 3).graph), write_graph6(family_hknj(5, 3).graph)};
    const SearchResult r = scan(lines, {4});
    CHECK(r.stats.shared_buckets == 1);
    CHECK(r.stats.ncsc_pairs == 1);
    for (const Bucket& b : r.buckets)
        if (b.members.size() > 1) {
            CHECK(b.members.size() == 2);
            CHECK(b.ncsc_pairs == std::vector<IndexPair>{{0, 1}});
        }
}

TEST_CASE("parse errors carry line numbers and the scan continues") {
    const std::vector<std::string> lines{">>graph6<<", "Bw", "", "D?{x", "Cl", "A`"};
    const SearchResult r = scan(lines, {2});
    REQUIRE(r.errors.size() == 2);
    CHECK(r.errors[0].line == 4);
    CHECK(r.errors[0].position == 3);
    CHECK(r.errors[1].line == 6);
    CHECK(r.stats.graphs_scanned == 2);
    CHECK(r.stats.parse_errors == 2);
    CHECK(r.stats.lines == 6);
}

TEST_CASE("isomorphs are merged") {
    const Graph f = parse_graph6("DzW");
    const std::vector<std::string> lines{write_graph6(f), write_graph6(relabel(f, std::vector<Vertex>{1, 0, 4, 3, 2})),
                                         "DzW"};
    const SearchResult r = scan(lines);
    CHECK(r.stats.unique_graphs == 1);
    CHECK(r.stats.duplicates == 2);
    CHECK(r.buckets.size() == 1);
}

TEST_CASE("split lines") {
    CHECK(split_lines("a\nb\r\nc") == std::vector<std::string>{"a", "b", "c"});
    CHECK(split_lines("").empty());
}

TEST_CASE("sound against all-pairs classification") {
    // Connected graphs up to five vertices, then all graphs up to five.
    std::vector<Graph> connected;
    for (const Graph& g : all_graphs_up_to(5))
        if (is_connected(g))
            connected.push_back(g);
    for (const auto& lines : {to_lines(connected), to_lines(all_graphs_up_to(5))}) {
        const SearchResult r = scan(lines, {4});
        const Expected e = brute_force(lines);
        CHECK(reported(r, &Bucket::ncsc_pairs) == e.ncsc);
        CHECK(reported(r, &Bucket::cospectral_pairs) == e.cospectral);
        CHECK(reported(r, &Bucket::almost_cospectral_pairs) == e.almost);
        CHECK(r.stats.ncsc_pairs == e.ncsc.size());
    }
}

TEST_CASE("sound on a mixed random corpus") {
    Rng rng(123);
    std::vector<std::string> lines;
    for (int t = 0; t < 400; ++t)
        lines.push_back(write_graph6(random_graph(rng, 1 + uniform_below(rng, 7))));
    lines.push_back(write_graph6(family_gknj(4, 2).graph));
    lines.push_back(write_graph6(family_hknj(4, 2).graph));
    const SearchResult r = scan(lines, {3});
    const Expected e = brute_force(lines);
    CHECK(reported(r, &Bucket::ncsc_pairs) == e.ncsc);
    CHECK(reported(r, &Bucket::cospectral_pairs) == e.cospectral);
    CHECK(reported(r, &Bucket::almost_cospectral_pairs) == e.almost);
    CHECK_FALSE(e.ncsc.empty());
}

TEST_CASE("every reported NCSC pair re-verifies") {
    const SearchResult r = scan(to_lines(all_graphs_up_to(6)), {4});
    CHECK(r.stats.ncsc_pairs > 0);
    for (const Bucket& b : r.buckets)
        for (auto [i, j] : b.ncsc_pairs)
            CHECK(classify_pair(parse_graph6(b.members[i]), parse_graph6(b.members[j])).ncsc);
}

TEST_CASE("results do not depend on the worker count") {
    Rng rng(9);
    std::vector<std::string> lines = to_lines(all_graphs_up_to(5));
    for (int t = 0; t < 300; ++t)
        lines.push_back(write_graph6(random_graph(rng, 1 + uniform_below(rng, 8))));
    lines.push_back("bad!");
    const std::string serial = to_json(scan_reference(lines)).dump();
    const std::string one = to_json(scan(lines, {1})).dump();
    const std::string eight = to_json(scan(lines, {8})).dump();
    CHECK(one == eight);
    CHECK(serial == one);
    CHECK(to_json(scan(lines, {8})).dump() == eight);
}

} // TEST_SUITE

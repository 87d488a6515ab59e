#include "cospec/json_io.hpp"

#include <sstream>

namespace cospec {

namespace {

std::string decimal(const BigInt& v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

Json profile_json(const SpectralProfile& p) {
    return Json{
        {"order", p.order},
        {"edges", p.edges},
        {"char_poly", to_json(p.char_poly)},
        {"squared_char_poly", to_json(p.squared_char_poly)},
        {"inertia", to_json(p.inertia)},
        {"bipartite", p.bipartite},
        {"connected", p.connected},
        {"energy", p.energy},
    };
}

Json pairs_json(const std::vector<IndexPair>& pairs) {
    Json out = Json::array();
    for (const auto& [i, j] : pairs)
        out.push_back(Json::array({i, j}));
    return out;
}

} // namespace

Json to_json(const IntPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs())
        coeffs.push_back(decimal(c));
    return Json{{"coeffs", coeffs}, {"text", p.to_string()}};
}

Json to_json(const Inertia& in) {
    return Json{{"positive", in.positive}, {"zero", in.zero}, {"negative", in.negative}};
}

Json to_json(const SpectrumNumeric& s) {
    Json groups = Json::array();
    for (const auto& g : s.groups)
        groups.push_back(Json::array({g.value, g.multiplicity}));
    return Json{{"groups", groups}, {"tol", s.tol}};
}

Json to_json(const PairReport& r) {
    return Json{
        {"cospectral", r.cospectral},
        {"singularly_cospectral", r.singularly_cospectral},
        {"almost_cospectral", r.almost_cospectral},
        {"ncsc", r.ncsc},
        {"equienergetic",
         {{"equal", r.equienergetic.equal},
          {"exact", r.equienergetic.exact},
          {"left_energy", r.equienergetic.left_energy},
          {"right_energy", r.equienergetic.right_energy}}},
        {"filters",
         {{"edges", r.filters.edges},
          {"rank", r.filters.rank},
          {"nullity_gap", r.filters.nullity_gap},
          {"inertia_balance", r.filters.inertia_balance}}},
        {"polynomials_compared", r.polynomials_compared},
        {"left", profile_json(r.left)},
        {"right", profile_json(r.right)},
    };
}

Json to_json(const WalkProfile& w) {
    Json counts = Json::array();
    for (const auto& c : w.counts)
        counts.push_back(decimal(c));
    return Json{{"horizon", w.horizon}, {"counts", counts}};
}

Json to_json(const SearchResult& r, bool include_timing) {
    Json buckets = Json::array();
    for (const auto& b : r.buckets) {
        if (b.members.size() < 2)
            continue;
        buckets.push_back(Json{
            {"sc_key", b.sc_key},
            {"edges", b.edges},
            {"rank", b.rank},
            {"members", b.members},
            {"orders", b.orders},
            {"ncsc_pairs", pairs_json(b.ncsc_pairs)},
            {"cospectral_pairs", pairs_json(b.cospectral_pairs)},
            {"almost_cospectral_pairs", pairs_json(b.almost_cospectral_pairs)},
        });
    }
    Json errors = Json::array();
    for (const auto& e : r.errors)
        errors.push_back(Json{{"line", e.line}, {"position", e.position}, {"message", e.message}});
    const ScanStats& s = r.stats;
    Json stats{
        {"lines", s.lines},
        {"graphs_scanned", s.graphs_scanned},
        {"unique_graphs", s.unique_graphs},
        {"duplicates", s.duplicates},
        {"buckets", s.buckets},
        {"shared_buckets", s.shared_buckets},
        {"ncsc_pairs", s.ncsc_pairs},
        {"cospectral_pairs", s.cospectral_pairs},
        {"almost_cospectral_pairs", s.almost_cospectral_pairs},
        {"parse_errors", s.parse_errors},
    };
    if (include_timing) {
        stats["workers"] = s.workers;
        stats["wall_seconds"] = s.wall_seconds;
    }
    return Json{{"buckets", buckets}, {"errors", errors}, {"stats", stats}};
}

Json to_json(const SuiteReport& r, bool include_timing) {
    Json params = Json::object();
    for (const auto& [k, v] : r.parameters)
        params[k] = v;
    Json counters = Json::object();
    for (const auto& [k, v] : r.counters)
        counters[k] = v;
    Json out{
        {"suite", r.suite},
        {"ok", r.ok()},
        {"checked", r.checked},
        {"passed", r.passed},
        {"worst_residual", r.worst_residual},
        {"parameters", params},
        {"counters", counters},
        {"failures", r.failures},
    };
    if (include_timing)
        out["wall_seconds"] = r.wall_seconds;
    return out;
}

} // namespace cospec

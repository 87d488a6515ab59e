#include "cospec/classify.hpp"

#include "cospec/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace cospec {

namespace {

std::size_t abs_diff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

} // namespace

SpectralProfile spectral_profile(const Graph& g) {
    SpectralProfile p;
    p.order = g.order();
    p.edges = g.edge_count();
    p.char_poly = char_poly(g);
    p.squared_char_poly = squared_char_poly(p.char_poly);
    p.sc_reduced = strip_zero_roots(p.squared_char_poly).reduced;
    p.ac_reduced = strip_zero_roots(p.char_poly).reduced;
    p.inertia = inertia_from_char_poly(p.char_poly);
    p.bipartite = is_bipartite(g).has_value();
    p.connected = is_connected(g);
    p.eigenvalues = eigenvalues(g).eigenvalues;
    p.energy = energy_of(p.eigenvalues);
    return p;
}

NecessaryChecks necessary_checks(const SpectralProfile& g, const SpectralProfile& h) {
    NecessaryChecks c;
    c.edges = g.edges == h.edges;
    c.rank = g.inertia.rank() == h.inertia.rank();
    c.nullity_gap = abs_diff(g.inertia.zero, h.inertia.zero) == abs_diff(g.order, h.order);
    // p(G) - p(H) == n(H) - n(G), rearranged to stay unsigned.
    c.inertia_balance = g.inertia.positive + g.inertia.negative == h.inertia.positive + h.inertia.negative;
    return c;
}

PairReport classify_profiles(const SpectralProfile& g, const SpectralProfile& h, double tol) {
    PairReport r;
    r.left = g;
    r.right = h;
    r.filters = necessary_checks(g, h);
    if (r.filters.all()) {
        r.polynomials_compared = true;
        r.singularly_cospectral = g.sc_reduced == h.sc_reduced;
        r.almost_cospectral = g.ac_reduced == h.ac_reduced;
        r.cospectral = g.char_poly == h.char_poly;
    }
    r.ncsc = r.singularly_cospectral && !r.cospectral;
    r.equienergetic.left_energy = g.energy;
    r.equienergetic.right_energy = h.energy;
    if (r.singularly_cospectral) {
        r.equienergetic.equal = true;
        r.equienergetic.exact = true;
    } else {
        r.equienergetic.equal = std::abs(g.energy - h.energy) < tol * std::max(1.0, g.energy);
        r.equienergetic.exact = false;
    }
    return r;
}

PairReport classify_pair(const Graph& g, const Graph& h) {
    return classify_profiles(spectral_profile(g), spectral_profile(h));
}

bool is_cospectral(const Graph& g, const Graph& h) {
    return g.order() == h.order() && g.edge_count() == h.edge_count() && char_poly(g) == char_poly(h);
}

bool is_singularly_cospectral(const Graph& g, const Graph& h) {
    if (g.edge_count() != h.edge_count())
        return false;
    return strip_zero_roots(squared_char_poly(g)).reduced == strip_zero_roots(squared_char_poly(h)).reduced;
}

bool is_almost_cospectral(const Graph& g, const Graph& h) {
    if (g.edge_count() != h.edge_count())
        return false;
    return strip_zero_roots(char_poly(g)).reduced == strip_zero_roots(char_poly(h)).reduced;
}

EquienergyVerdict is_equienergetic(const Graph& g, const Graph& h, double tol) {
    EquienergyVerdict v;
    if (is_singularly_cospectral(g, h)) {
        v.equal = true;
        v.exact = true;
        return v;
    }
    v.left_energy = energy(g);
    v.right_energy = energy(h);
    v.equal = std::abs(v.left_energy - v.right_energy) < tol * std::max(1.0, v.left_energy);
    return v;
}

RegularityVerdict check_regular_pair(const Graph& g, const Graph& h) {
    if (g.order() != h.order())
        throw std::invalid_argument("check_regular_pair needs graphs of equal order");
    RegularityVerdict v;
    v.singularly_cospectral = is_singularly_cospectral(g, h);
    v.applicable = is_regular(g).has_value() != is_regular(h).has_value();
    v.consistent = !(v.applicable && v.singularly_cospectral);
    return v;
}

std::size_t top_singular_multiplicity(const std::vector<double>& eigenvalues) {
    std::vector<double> sv;
    sv.reserve(eigenvalues.size());
    for (double x : eigenvalues)
        sv.push_back(std::abs(x));
    std::sort(sv.begin(), sv.end(), std::greater<>());
    if (sv.empty() || sv.front() <= zero_threshold(sv.front()))
        return 0;
    const auto groups = cluster_values(sv, default_tolerance(sv.front()));
    return groups.front().multiplicity;
}

AcImplicationVerdict check_sc_implies_ac(const SpectralProfile& g, const SpectralProfile& h) {
    AcImplicationVerdict v;
    const PairReport r = classify_profiles(g, h);
    v.singularly_cospectral = r.singularly_cospectral;
    v.almost_cospectral = r.almost_cospectral;
    if (!v.singularly_cospectral)
        return v;
    v.distinct_singular_values = distinct_root_count(g.sc_reduced);
    v.top_multiplicity = top_singular_multiplicity(g.eigenvalues);
    const bool connected = g.connected && h.connected;
    v.both_bipartite = g.bipartite && h.bipartite;
    v.top_value_repeated = connected && v.top_multiplicity >= 2;
    const bool three = connected && v.distinct_singular_values == 3;
    v.three_values_half_inertia =
        three && (g.inertia.positive == h.inertia.positive || g.inertia.negative == h.inertia.negative);
    v.three_values_inertia = three && g.inertia == h.inertia;
    if (v.any_applicable() && !v.almost_cospectral) {
        std::string which;
        if (v.both_bipartite)
            which += " bipartite";
        if (v.top_value_repeated)
            which += " repeated-top-singular-value";
        if (v.three_values_half_inertia)
            which += " three-values-half-inertia";
        if (v.three_values_inertia)
            which += " three-values-inertia";
        throw TheoremViolation("singularly cospectral pair meets hypotheses [" + which +
                               " ] but is not almost cospectral");
    }
    return v;
}

AcImplicationVerdict check_sc_implies_ac(const Graph& g, const Graph& h) {
    return check_sc_implies_ac(spectral_profile(g), spectral_profile(h));
}

} // namespace cospec

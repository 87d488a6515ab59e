#ifndef COSPEC_CLASSIFY_HPP
#define COSPEC_CLASSIFY_HPP

#include "cospec/exact.hpp"
#include "cospec/graph.hpp"
#include "cospec/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cospec {

/// Everything pair verdicts need from one graph, computed once.
struct SpectralProfile {
    std::size_t order = 0;
    std::size_t edges = 0;
    IntPolynomial char_poly;
    IntPolynomial squared_char_poly;
    IntPolynomial sc_reduced; // squared_char_poly without its zero roots
    IntPolynomial ac_reduced; // char_poly without its zero roots
    Inertia inertia;
    bool bipartite = false;
    bool connected = false;
    std::vector<double> eigenvalues; // numeric, descending; advisory only
    double energy = 0;
};

SpectralProfile spectral_profile(const Graph& g);

// Necessary conditions every singularly cospectral pair satisfies.
struct NecessaryChecks {
    bool edges = false;
    bool rank = false;
    bool nullity_gap = false;     // |z(G) - z(H)| == ||V(G)| - |V(H)||
    bool inertia_balance = false; // p(G) - p(H) == n(H) - n(G)
    bool all() const noexcept { return edges && rank && nullity_gap && inertia_balance; }
};

NecessaryChecks necessary_checks(const SpectralProfile& g, const SpectralProfile& h);

struct EquienergyVerdict {
    bool equal = false;
    bool exact = false; // true when implied by singular cospectrality, no floating point involved
    double left_energy = 0;
    double right_energy = 0;
};

struct PairReport {
    bool cospectral = false;
    bool singularly_cospectral = false;
    bool almost_cospectral = false;
    EquienergyVerdict equienergetic;
    bool ncsc = false;
    NecessaryChecks filters;
    bool polynomials_compared = false;
    SpectralProfile left;
    SpectralProfile right;
};

bool is_cospectral(const Graph& g, const Graph& h);
bool is_singularly_cospectral(const Graph& g, const Graph& h);
bool is_almost_cospectral(const Graph& g, const Graph& h);
EquienergyVerdict is_equienergetic(const Graph& g, const Graph& h, double tol = 1e-9);

// Cheap filters first, exact polynomial identities only when they pass.
PairReport classify_pair(const Graph& g, const Graph& h);
PairReport classify_profiles(const SpectralProfile& g, const SpectralProfile& h, double tol = 1e-9);

/// Regular vs non-regular graphs of equal order can never be singularly
/// cospectral. `consistent` is false only if the exact test disagrees.
struct RegularityVerdict {
    bool applicable = false;
    bool singularly_cospectral = false;
    bool consistent = true;
};

RegularityVerdict check_regular_pair(const Graph& g, const Graph& h);

// Thrown when a pair meets the hypotheses of an SC => AC theorem but is not almost cospectral.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct AcImplicationVerdict {
    bool singularly_cospectral = false;
    bool almost_cospectral = false;
    bool both_bipartite = false;       // bipartite pair
    bool top_value_repeated = false;   // connected, largest singular value multiplicity >= 2
    bool three_values_half_inertia = false; // connected, 3 distinct values, p or n equal
    bool three_values_inertia = false;      // connected, 3 distinct values, In equal
    std::size_t distinct_singular_values = 0;
    std::size_t top_multiplicity = 0;

    bool any_applicable() const noexcept {
        return both_bipartite || top_value_repeated || three_values_half_inertia || three_values_inertia;
    }
};

// Throws TheoremViolation when an applicable hypothesis set does not yield almost cospectrality.
AcImplicationVerdict check_sc_implies_ac(const Graph& g, const Graph& h);
AcImplicationVerdict check_sc_implies_ac(const SpectralProfile& g, const SpectralProfile& h);

// Multiplicity of the largest absolute eigenvalue, clustered at the default tolerance.
std::size_t top_singular_multiplicity(const std::vector<double>& eigenvalues);

} // namespace cospec

#endif // COSPEC_CLASSIFY_HPP

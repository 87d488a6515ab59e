#include "cospec/verify.hpp"

#include "cospec/classify.hpp"
#include "cospec/constructions.hpp"
#include "cospec/enumerate.hpp"
#include "cospec/exact.hpp"
#include "cospec/walks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace cospec {

namespace {

constexpr std::size_t kFailureCap = 25;

struct Tally {
    std::size_t checked = 0;
    std::size_t passed = 0;
    double worst = 0;
    std::vector<std::string> failures;
    std::map<std::string, std::size_t> counters;

    template <class Describe>
    void check(bool ok, Describe&& describe) {
        ++checked;
        if (ok)
            ++passed;
        else if (failures.size() < kFailureCap)
            failures.push_back(describe());
    }

    void residual(double r) { worst = std::max(worst, r); }

    void merge(Tally&& other) {
        checked += other.checked;
        passed += other.passed;
        worst = std::max(worst, other.worst);
        for (auto& f : other.failures)
            if (failures.size() < kFailureCap)
                failures.push_back(std::move(f));
        for (const auto& [k, v] : other.counters)
            counters[k] += v;
    }
};

// Runs task(i) for i in [0, count) across workers and folds the tallies in
// index order, so the result is independent of scheduling.
Tally sweep(std::size_t count, std::size_t workers, const std::function<Tally(std::size_t)>& task) {
    std::vector<Tally> parts(count);
    const auto n = static_cast<long>(count);
#pragma omp parallel for num_threads(static_cast<int>(std::max<std::size_t>(1, workers))) schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            parts[idx] = task(idx);
        } catch (const std::exception& e) {
            parts[idx] = Tally{};
            parts[idx].check(false, [&] { return "item " + std::to_string(idx) + ": " + e.what(); });
        }
    }
    Tally total;
    for (auto& p : parts)
        total.merge(std::move(p));
    return total;
}

template <class T>
std::vector<T> parallel_map(std::size_t count, std::size_t workers, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(count);
    const auto n = static_cast<long>(count);
#pragma omp parallel for num_threads(static_cast<int>(std::max<std::size_t>(1, workers))) schedule(dynamic, 4)
    for (long i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    return out;
}

std::size_t or_default(std::size_t value, std::size_t fallback) { return value == 0 ? fallback : value; }

Rng trial_rng(std::uint64_t seed, std::size_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    return Rng(seq);
}

std::string g6(const Graph& g) { return write_graph6(g); }

std::string pair_name(const Graph& g, const Graph& h) { return "(" + g6(g) + ", " + g6(h) + ")"; }

const IntPolynomial& x_poly() {
    static const IntPolynomial x = IntPolynomial::monomial(1);
    return x;
}

std::vector<Graph> corpus_or_default(const SuiteOptions& o, std::size_t n_min, std::size_t n_max) {
    if (!o.corpus)
        return corpus_graphs(n_min, n_max);
    std::vector<Graph> out;
    for (const auto& g : *o.corpus)
        if (g.order() >= n_min && g.order() <= n_max)
            out.push_back(g);
    return out;
}

Tally suite_gfhf(const SuiteOptions& o, SuiteReport& report) {
    const std::size_t n_max = or_default(o.n_max, 7);
    std::vector<Graph> base;
    for (auto& g : corpus_or_default(o, 1, n_max))
        if (is_connected(g))
            base.push_back(std::move(g));
    report.parameters.emplace_back("n_max", std::to_string(n_max));
    report.parameters.emplace_back("connected_graphs", std::to_string(base.size()));
    return sweep(base.size(), o.workers, [&](std::size_t i) {
        Tally t;
        const Graph& f = base[i];
        const Graph cover = tensor_k2(f);
        const Graph doubled = two_copies(f);
        const IntPolynomial p = char_poly(f);
        const IntPolynomial cover_cp = char_poly(cover);
        const IntPolynomial doubled_cp = char_poly(doubled);
        IntPolynomial expected_cover = p * p.reflected();
        if (f.order() % 2 == 1)
            expected_cover = -expected_cover;
        t.check(cover_cp == expected_cover, [&] { return "char_poly(F x K2) identity fails for " + g6(f); });
        t.check(doubled_cp == p * p, [&] { return "char_poly(2F) identity fails for " + g6(f); });
        const bool sc = strip_zero_roots(squared_char_poly(cover_cp)).reduced ==
                        strip_zero_roots(squared_char_poly(doubled_cp)).reduced;
        const bool cospectral = cover_cp == doubled_cp;
        if (is_bipartite(f)) {
            ++t.counters["bipartite"];
            t.check(sc && cospectral, [&] { return "bipartite F not cospectral pair: " + g6(f); });
        } else {
            ++t.counters["nonbipartite"];
            t.check(sc && !cospectral, [&] { return "nonbipartite F pair not NCSC: " + g6(f); });
        }
        return t;
    });
}

Tally suite_gknj(const SuiteOptions& o, SuiteReport& report) {
    const std::size_t n_max = or_default(o.n_max, 8);
    const std::size_t n_min = std::max<std::size_t>(3, o.n_min);
    report.parameters.emplace_back("n_min", std::to_string(n_min));
    report.parameters.emplace_back("n_max", std::to_string(n_max));
    std::vector<std::pair<std::size_t, std::size_t>> cases;
    for (std::size_t n = n_min; n <= n_max; ++n)
        for (std::size_t j = 1; j <= n; ++j)
            cases.emplace_back(n, j);
    return sweep(cases.size(), o.workers, [&](std::size_t i) {
        Tally t;
        const auto [n, j] = cases[i];
        const std::string tag = "(n=" + std::to_string(n) + ", j=" + std::to_string(j) + ")";
        const Graph g = family_gknj(n, j).graph;
        const Graph h = family_hknj(n, j).graph;
        const IntPolynomial pg = char_poly(g);
        const IntPolynomial ph = char_poly(h);
        t.check(pg == family_gknj_char_poly(n, j), [&] { return "G identity fails " + tag; });
        t.check(ph == family_hknj_char_poly(n, j), [&] { return "H identity fails " + tag; });

        // Q has three real roots with one positive and one negative, so the
        // inertia of Q pins the sign of the middle root.
        const IntPolynomial q = family_cubic(n, j);
        const Inertia in = inertia_from_char_poly(q);
        bool sign_ok = false;
        if (j <= n - 2)
            sign_ok = in == Inertia{2, 0, 1};
        else if (j == n - 1)
            sign_ok = in == Inertia{1, 1, 1} && q.coeff(0) == 0;
        else
            sign_ok = in == Inertia{1, 0, 2};
        t.check(sign_ok, [&] { return "middle root sign pattern fails " + tag; });

        const bool sc = strip_zero_roots(squared_char_poly(pg)).reduced ==
                        strip_zero_roots(squared_char_poly(ph)).reduced;
        t.check(sc && pg != ph, [&] { return "pair not NCSC " + tag; });
        return t;
    });
}

Tally suite_rowlinson(const SuiteOptions& o, SuiteReport& report) {
    const std::size_t n_max = or_default(o.n_max, 10);
    const std::size_t trials = or_default(o.trials, 100);
    constexpr double kTolerance = 1e-5;
    report.parameters.emplace_back("n_max", std::to_string(n_max));
    report.parameters.emplace_back("trials", std::to_string(trials));
    report.parameters.emplace_back("seed", std::to_string(o.seed));
    return sweep(trials, o.workers, [&](std::size_t trial) {
        Tally t;
        Rng rng = trial_rng(o.seed, trial);
        const std::size_t n = 1 + uniform_below(rng, n_max);
        const Graph g = random_graph(rng, n);
        const VertexSet s = random_nonempty_subset(rng, n);
        const IntPolynomial exact = char_poly(add_vertex(g, s));
        const RowlinsonResult approx = rowlinson_char_poly(g, s);
        double deviation = 0;
        const std::size_t len = std::max(exact.coeffs().size(), approx.coeffs.size());
        for (std::size_t i = 0; i < len; ++i) {
            const double e = exact.coeff(i).convert_to<double>();
            const double a = i < approx.coeffs.size() ? approx.coeffs[i] : 0.0;
            deviation = std::max(deviation, std::abs(e - a));
        }
        t.residual(deviation);
        t.check(deviation < kTolerance, [&] {
            return "trial " + std::to_string(trial) + " on " + g6(g) + ": deviation " + std::to_string(deviation);
        });
        return t;
    });
}

Tally suite_schwenk(const SuiteOptions& o, SuiteReport& report) {
    const std::size_t n_max = or_default(o.n_max, 8);
    const std::size_t trials = or_default(o.trials, 200);
    if (n_max < 1)
        throw std::invalid_argument("schwenk needs n_max >= 1");
    report.parameters.emplace_back("n_max", std::to_string(n_max));
    report.parameters.emplace_back("trials", std::to_string(trials));
    report.parameters.emplace_back("seed", std::to_string(o.seed));
    return sweep(trials, o.workers, [&](std::size_t trial) {
        Tally t;
        Rng rng = trial_rng(o.seed, trial);
        // The coalescence has ng + nh - 1 <= n_max vertices.
        const std::size_t ng = 1 + uniform_below(rng, n_max);
        const std::size_t nh = 1 + uniform_below(rng, n_max + 1 - ng);
        const Graph g = random_graph(rng, ng);
        const Graph h = random_graph(rng, nh);
        const Vertex gv = uniform_below(rng, ng);
        const Vertex hv = uniform_below(rng, nh);
        const IntPolynomial lhs = char_poly(coalesce(g, gv, h, hv));
        const IntPolynomial pg = char_poly(g);
        const IntPolynomial ph = char_poly(h);
        const IntPolynomial pg_minus = char_poly(delete_vertex(g, gv));
        const IntPolynomial ph_minus = char_poly(delete_vertex(h, hv));
        const IntPolynomial rhs = pg * ph_minus + pg_minus * ph - x_poly() * pg_minus * ph_minus;
        t.check(lhs == rhs, [&] {
            return "trial " + std::to_string(trial) + ": " + g6(g) + "@" + std::to_string(gv) + " . " + g6(h) +
                   "@" + std::to_string(hv);
        });
        return t;
    });
}

struct WalkEntry {
    Graph graph;
    WalkProfile profile;
    IntPolynomial sc_reduced;
};

Tally suite_walks(const SuiteOptions& o, SuiteReport& report) {
    const std::size_t n_min = or_default(o.n_min, 1);
    const std::size_t n_max = or_default(o.n_max, 6);
    const std::vector<Graph> corpus = corpus_or_default(o, n_min, n_max);
    std::size_t horizon = 1;
    for (const auto& g : corpus)
        horizon = std::max(horizon, g.order());
    report.parameters.emplace_back("n_min", std::to_string(n_min));
    report.parameters.emplace_back("n_max", std::to_string(n_max));
    report.parameters.emplace_back("graphs", std::to_string(corpus.size()));
    const auto entries = parallel_map<WalkEntry>(corpus.size(), o.workers, [&](std::size_t i) {
        const Graph& g = corpus[i];
        return WalkEntry{g, walk_profile(g, horizon, true), strip_zero_roots(squared_char_poly(g)).reduced};
    });
    return sweep(entries.size(), o.workers, [&](std::size_t i) {
        Tally t;
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const auto& a = entries[i];
            const auto& b = entries[j];
            const std::size_t k = std::max(a.graph.order(), b.graph.order());
            const bool walks = walk_equivalent(a.profile, b.profile, k);
            const bool exact = a.sc_reduced == b.sc_reduced;
            if (exact)
                ++t.counters["sc_pairs"];
            t.check(walks == exact, [&] { return "disagreement on " + pair_name(a.graph, b.graph); });
        }
        return t;
    });
}

std::vector<SpectralProfile> profiles_of(const std::vector<Graph>& corpus, std::size_t workers) {
    return parallel_map<SpectralProfile>(corpus.size(), workers,
                                         [&](std::size_t i) { return spectral_profile(corpus[i]); });
}

Tally suite_sc_implies_ac(const SuiteOptions& o, SuiteReport& report) {
    const std::size_t n_max = or_default(o.n_max, 6);
    const std::vector<Graph> corpus = corpus_or_default(o, or_default(o.n_min, 1), n_max);
    report.parameters.emplace_back("n_max", std::to_string(n_max));
    report.parameters.emplace_back("graphs", std::to_string(corpus.size()));
    const auto profiles = profiles_of(corpus, o.workers);
    return sweep(corpus.size(), o.workers, [&](std::size_t i) {
        Tally t;
        for (std::size_t j = i + 1; j < corpus.size(); ++j) {
            if (profiles[i].sc_reduced != profiles[j].sc_reduced)
                continue;
            try {
                const AcImplicationVerdict v = check_sc_implies_ac(profiles[i], profiles[j]);
                ++t.counters["sc_pairs"];
                t.counters["almost_cospectral"] += v.almost_cospectral ? 1 : 0;
                t.counters["bipartite"] += v.both_bipartite ? 1 : 0;
                t.counters["repeated_top_value"] += v.top_value_repeated ? 1 : 0;
                t.counters["three_values_half_inertia"] += v.three_values_half_inertia ? 1 : 0;
                t.counters["three_values_inertia"] += v.three_values_inertia ? 1 : 0;
                t.check(true, [] { return std::string(); });
            } catch (const TheoremViolation& e) {
                t.check(false, [&] { return pair_name(corpus[i], corpus[j]) + ": " + e.what(); });
            }
        }
        return t;
    });
}

Tally suite_prop_nec(const SuiteOptions& o, SuiteReport& report) {
    const std::size_t n_max = or_default(o.n_max, 6);
    const std::vector<Graph> corpus = corpus_or_default(o, or_default(o.n_min, 1), n_max);
    report.parameters.emplace_back("n_max", std::to_string(n_max));
    report.parameters.emplace_back("graphs", std::to_string(corpus.size()));
    const auto profiles = profiles_of(corpus, o.workers);
    return sweep(corpus.size(), o.workers, [&](std::size_t i) {
        Tally t;
        for (std::size_t j = i + 1; j < corpus.size(); ++j) {
            const auto& a = profiles[i];
            const auto& b = profiles[j];
            if (a.sc_reduced != b.sc_reduced)
                continue;
            ++t.counters["sc_pairs"];
            const PairReport r = classify_profiles(a, b);
            // Energy equality is exact through the polynomials; the float
            // energies are compared as an independent cross-check.
            const double gap = std::abs(a.energy - b.energy);
            t.residual(gap);
            const bool energies = gap <= 1e-9 * std::max(1.0, a.energy);
            t.check(r.filters.all() && r.singularly_cospectral && r.equienergetic.exact && energies,
                    [&] { return "necessary conditions fail on " + pair_name(corpus[i], corpus[j]); });
        }
        return t;
    });
}

Tally suite_regularity(const SuiteOptions& o, SuiteReport& report) {
    const std::size_t n_max = or_default(o.n_max, 6);
    const std::vector<Graph> corpus = corpus_or_default(o, or_default(o.n_min, 1), n_max);
    report.parameters.emplace_back("n_max", std::to_string(n_max));
    report.parameters.emplace_back("graphs", std::to_string(corpus.size()));
    return sweep(corpus.size(), o.workers, [&](std::size_t i) {
        Tally t;
        for (std::size_t j = i + 1; j < corpus.size(); ++j) {
            if (corpus[i].order() != corpus[j].order())
                continue;
            const RegularityVerdict v = check_regular_pair(corpus[i], corpus[j]);
            if (!v.applicable)
                continue;
            ++t.counters["applicable_pairs"];
            t.check(v.consistent, [&] { return "regular vs irregular pair is SC: " + pair_name(corpus[i], corpus[j]); });
        }
        return t;
    });
}

Tally suite_cycles(const SuiteOptions& o, SuiteReport& report) {
    const std::size_t j_min = std::max<std::size_t>(3, o.n_min);
    const std::size_t j_max = or_default(o.n_max, 10);
    report.parameters.emplace_back("j_min", std::to_string(j_min));
    report.parameters.emplace_back("j_max", std::to_string(j_max));
    const std::size_t count = j_max >= j_min ? j_max - j_min + 1 : 0;
    return sweep(count, o.workers, [&](std::size_t i) {
        Tally t;
        const std::size_t j = j_min + i;
        const auto [c2j, twice] = cycle_pair(j);
        const bool sc = is_singularly_cospectral(c2j, twice);
        const bool ncsc = sc && !is_cospectral(c2j, twice);
        t.check(sc && ncsc == (j % 2 == 1), [&] {
            return "j=" + std::to_string(j) + ": C_2j vs 2C_j singularly cospectral=" + (sc ? "yes" : "no") +
                   ", cospectral=" + (sc && !ncsc ? "yes" : "no") + "; expected SC with NCSC exactly for odd j";
        });
        return t;
    });
}

Tally suite_chains(const SuiteOptions& o, SuiteReport& report) {
    const std::size_t n_min = std::max<std::size_t>(3, o.n_min);
    const std::size_t n_max = or_default(o.n_max, 4);
    const std::size_t k_max = or_default(o.trials, 3);
    report.parameters.emplace_back("n_min", std::to_string(n_min));
    report.parameters.emplace_back("n_max", std::to_string(n_max));
    report.parameters.emplace_back("k_max", std::to_string(k_max));
    struct Case {
        std::size_t n, j, k;
    };
    std::vector<Case> cases;
    for (std::size_t n = n_min; n <= n_max; ++n)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= k_max; ++k)
                cases.push_back({n, j, k});
    return sweep(cases.size(), o.workers, [&](std::size_t i) {
        Tally t;
        const auto c = cases[i];
        const auto [g, h] = coalesce_chain(c.n, c.j, c.k);
        const bool sc = is_singularly_cospectral(g.graph, h.graph);
        t.check(sc && !is_cospectral(g.graph, h.graph), [&] {
            return "chain pair not NCSC (n=" + std::to_string(c.n) + ", j=" + std::to_string(c.j) +
                   ", k=" + std::to_string(c.k) + ")";
        });
        return t;
    });
}

using SuiteFn = Tally (*)(const SuiteOptions&, SuiteReport&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"gfhf", suite_gfhf},
        {"gknj", suite_gknj},
        {"rowlinson", suite_rowlinson},
        {"schwenk", suite_schwenk},
        {"walks", suite_walks},
        {"sc-implies-ac", suite_sc_implies_ac},
        {"prop-nec", suite_prop_nec},
        {"regularity", suite_regularity},
        {"cycles", suite_cycles},
        {"chains", suite_chains},
    };
    return r;
}

} // namespace

std::vector<Graph> corpus_graphs(std::size_t n_min, std::size_t n_max) {
    std::vector<Graph> out;
    for (auto& g : all_graphs_up_to(n_max))
        if (g.order() >= n_min)
            out.push_back(std::move(g));
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry())
            v.push_back(name);
        return v;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
    const auto& r = registry();
    const auto it = std::find_if(r.begin(), r.end(), [&](const auto& e) { return e.first == name; });
    if (it == r.end())
        throw std::invalid_argument("unknown suite '" + name + "'");
    const auto started = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = name;
    Tally t = it->second(options, report);
    report.checked = t.checked;
    report.passed = t.passed;
    report.worst_residual = t.worst;
    report.failures = std::move(t.failures);
    report.counters.assign(t.counters.begin(), t.counters.end());
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

} // namespace cospec

// Command-line front end for the cospec library.
//
// Exit status: 0 on success, 1 on invalid input, 2 when a theorem check fails.
#include "cospec/classify.hpp"
#include "cospec/constructions.hpp"
#include "cospec/exact.hpp"
#include "cospec/json_io.hpp"
#include "cospec/search.hpp"
#include "cospec/spectrum.hpp"
#include "cospec/verify.hpp"
#include "cospec/walks.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace cospec;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    bool json = false;
    double tol = 0; // 0 means the per-graph default
    std::size_t workers = 0;
    bool one_based = false;
};

std::size_t default_workers() {
    if (const char* env = std::getenv("COSPEC_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v > 0)
                return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid COSPEC_WORKERS='" << env << "'\n";
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::optional<double> tolerance(const GlobalOptions& g) {
    return g.tol > 0 ? std::optional<double>(g.tol) : std::nullopt;
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Graph parse_input_graph(const std::string& text, const std::string& what) {
    try {
        return parse_graph6(text);
    } catch (const Graph6Error& e) {
        throw InputError(what + ": " + e.what());
    }
}

// Inline graph6 strings followed by every graph in the listed files.
std::vector<Graph> collect_graphs(const std::vector<std::string>& inline_graphs,
                                  const std::vector<std::string>& files) {
    std::vector<Graph> out;
    for (const auto& s : inline_graphs)
        out.push_back(parse_input_graph(s, "--graph '" + s + "'"));
    for (const auto& f : files) {
        try {
            for (auto& g : read_graph6_lines(read_file(f)))
                out.push_back(std::move(g));
        } catch (const Graph6Error& e) {
            throw InputError(f + ": " + e.what());
        }
    }
    if (out.empty())
        throw InputError("no input graphs; pass --graph or --input");
    return out;
}

Vertex vertex_in(std::size_t v, const GlobalOptions& g, const char* what) {
    if (!g.one_based)
        return v;
    if (v == 0)
        throw InputError(std::string(what) + ": vertex 0 is invalid with --one-based");
    return v - 1;
}

std::string vertex_out(Vertex v) { return std::to_string(v) + " (1-based " + std::to_string(v + 1) + ")"; }

std::string fmt(double v, int precision = 10) {
    if (std::abs(v) < 0.5 * std::pow(10.0, -precision))
        v = 0.0;
    std::ostringstream s;
    s << std::fixed << std::setprecision(precision) << v;
    return s.str();
}

std::string inertia_text(const Inertia& in) {
    return "(" + std::to_string(in.positive) + ", " + std::to_string(in.zero) + ", " + std::to_string(in.negative) +
           ")";
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json spectrum_json(const Graph& g, const GlobalOptions& opts) {
    const SpectrumNumeric s = eigenvalues(g, tolerance(opts));
    const Inertia in = inertia(g);
    return Json{
        {"graph", write_graph6(g)},
        {"order", g.order()},
        {"edges", g.edge_count()},
        {"spectrum", to_json(s)},
        {"energy", energy_of(s.eigenvalues)},
        {"spectral_radius", s.eigenvalues.empty() ? 0.0 : std::max(std::abs(s.eigenvalues.front()),
                                                                      std::abs(s.eigenvalues.back()))},
        {"inertia", to_json(in)},
    };
}

void print_spectrum_text(const Graph& g, const GlobalOptions& opts) {
    const SpectrumNumeric s = eigenvalues(g, tolerance(opts));
    std::cout << "graph " << write_graph6(g) << "  n=" << g.order() << " m=" << g.edge_count() << '\n';
    std::cout << std::setw(18) << "eigenvalue" << std::setw(14) << "multiplicity" << '\n';
    for (const auto& grp : s.groups)
        std::cout << std::setw(18) << fmt(grp.value) << std::setw(14) << grp.multiplicity << '\n';
    std::cout << "energy   " << fmt(energy_of(s.eigenvalues)) << '\n';
    std::cout << "inertia  " << inertia_text(inertia(g)) << '\n';
    std::cout << "tol      " << s.tol << '\n';
}

int run_spectrum(const std::vector<Graph>& graphs, const GlobalOptions& opts) {
    if (opts.json) {
        if (graphs.size() == 1) {
            print_json(spectrum_json(graphs.front(), opts));
        } else {
            Json arr = Json::array();
            for (const auto& g : graphs)
                arr.push_back(spectrum_json(g, opts));
            print_json(arr);
        }
        return kExitOk;
    }
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (i)
            std::cout << '\n';
        print_spectrum_text(graphs[i], opts);
    }
    return kExitOk;
}

int run_charpoly(const std::vector<Graph>& graphs, const GlobalOptions& opts) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        const IntPolynomial p = char_poly(g);
        const IntPolynomial q = squared_char_poly(p);
        const Inertia in = inertia_from_char_poly(p);
        if (opts.json) {
            arr.push_back(Json{{"graph", write_graph6(g)},
                               {"char_poly", to_json(p)},
                               {"squared_char_poly", to_json(q)},
                               {"inertia", to_json(in)},
                               {"rank", in.rank()}});
            continue;
        }
        if (i)
            std::cout << '\n';
        std::cout << "graph             " << write_graph6(g) << '\n';
        std::cout << "char_poly         " << p.to_string() << '\n';
        std::cout << "squared_char_poly " << q.to_string() << '\n';
        std::cout << "inertia           " << inertia_text(in) << "  rank " << in.rank() << '\n';
    }
    if (opts.json)
        print_json(arr.size() == 1 ? arr.front() : arr);
    return kExitOk;
}

int run_classify(const Graph& left, const Graph& right, const GlobalOptions& opts) {
    const PairReport r = classify_profiles(spectral_profile(left), spectral_profile(right),
                                           opts.tol > 0 ? opts.tol : 1e-9);
    if (opts.json) {
        Json j = to_json(r);
        j["left_graph"] = write_graph6(left);
        j["right_graph"] = write_graph6(right);
        print_json(j);
        return kExitOk;
    }
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "left   " << write_graph6(left) << "  n=" << left.order() << " m=" << left.edge_count() << '\n';
    std::cout << "right  " << write_graph6(right) << "  n=" << right.order() << " m=" << right.edge_count() << '\n';
    std::cout << "cospectral              " << yes(r.cospectral) << '\n';
    std::cout << "singularly cospectral   " << yes(r.singularly_cospectral) << '\n';
    std::cout << "almost cospectral       " << yes(r.almost_cospectral) << '\n';
    std::cout << "NCSC                    " << yes(r.ncsc) << '\n';
    std::cout << "equienergetic           " << yes(r.equienergetic.equal)
              << (r.equienergetic.exact ? " (exact)" : " (numeric)") << "  E = " << fmt(r.left.energy) << " vs "
              << fmt(r.right.energy) << '\n';
    std::cout << "filters                 edges " << yes(r.filters.edges) << ", rank " << yes(r.filters.rank)
              << ", nullity gap " << yes(r.filters.nullity_gap) << ", inertia balance "
              << yes(r.filters.inertia_balance) << '\n';
    std::cout << "inertia                 " << inertia_text(r.left.inertia) << " vs " << inertia_text(r.right.inertia)
              << '\n';
    return kExitOk;
}

struct ConstructArgs {
    std::string kind;
    std::string left;
    std::string right;
    std::vector<std::size_t> set;
    std::size_t lv = 0;
    std::size_t rv = 0;
    std::size_t n = 0;
    std::size_t j = 0;
    std::size_t k = 1;
    std::vector<std::string> edges;
    bool spectrum = false;
};

// "u-v" pairs; vertices follow --one-based.
Graph graph_from_edges(const ConstructArgs& a, const GlobalOptions& opts) {
    std::vector<Edge> edges;
    for (const auto& item : a.edges) {
        const auto dash = item.find('-');
        std::size_t u = 0, v = 0;
        try {
            if (dash == std::string::npos)
                throw std::invalid_argument(item);
            std::size_t used = 0;
            u = std::stoul(item.substr(0, dash), &used);
            if (used != dash)
                throw std::invalid_argument(item);
            v = std::stoul(item.substr(dash + 1), &used);
            if (used != item.size() - dash - 1)
                throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw InputError("--edges: expected u-v, got '" + item + "'");
        }
        edges.emplace_back(vertex_in(u, opts, "--edges"), vertex_in(v, opts, "--edges"));
    }
    try {
        return Graph(a.n, edges);
    } catch (const std::exception& e) {
        throw InputError(std::string("--edges: ") + e.what());
    }
}

int run_construct(const ConstructArgs& a, const GlobalOptions& opts) {
    if (a.kind == "edges") {
        const Graph g = graph_from_edges(a, opts);
        if (opts.json) {
            Json j{{"construction", "edges"}, {"graph6", write_graph6(g)}, {"order", g.order()}, {"edges", g.edge_count()}};
            if (a.spectrum)
                j["spectrum"] = spectrum_json(g, opts)["spectrum"];
            print_json(j);
        } else {
            std::cout << write_graph6(g) << '\n';
            if (a.spectrum)
                print_spectrum_text(g, opts);
        }
        return kExitOk;
    }
    const auto kind = parse_construction_kind(a.kind);
    if (!kind) {
        std::string known;
        for (const auto& n : construction_kind_names())
            known += " " + n;
        throw InputError("unknown construction '" + a.kind + "'; known: edges" + known);
    }
    ConstructionSpec spec;
    spec.kind = *kind;
    if (!a.left.empty())
        spec.left = parse_input_graph(a.left, "--left");
    if (!a.right.empty())
        spec.right = parse_input_graph(a.right, "--right");
    std::vector<Vertex> set;
    for (auto v : a.set)
        set.push_back(vertex_in(v, opts, "--set"));
    spec.set = VertexSet(set);
    if (*kind == ConstructionKind::coalesce) {
        spec.left_vertex = vertex_in(a.lv, opts, "--lv");
        spec.right_vertex = vertex_in(a.rv, opts, "--rv");
    }
    spec.n = a.n;
    spec.j = a.j;
    spec.k = a.k;

    Graph g;
    try {
        g = build(spec);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    } catch (const std::out_of_range& e) {
        throw InputError(e.what());
    }
    std::optional<Vertex> root;
    switch (*kind) {
    case ConstructionKind::family_gknj:
    case ConstructionKind::family_hknj:
    case ConstructionKind::coalesce_chain_g:
    case ConstructionKind::coalesce_chain_h:
        root = 2 * a.n;
        break;
    case ConstructionKind::add_vertex:
        root = g.order() - 1;
        break;
    default:
        break;
    }
    if (opts.json) {
        Json j{{"construction", construction_kind_name(*kind)},
               {"graph6", write_graph6(g)},
               {"order", g.order()},
               {"edges", g.edge_count()}};
        if (root)
            j["root"] = Json{{"zero_based", *root}, {"one_based", *root + 1}};
        if (a.spectrum)
            j["spectrum"] = spectrum_json(g, opts)["spectrum"];
        print_json(j);
        return kExitOk;
    }
    std::cout << write_graph6(g) << '\n';
    std::cerr << construction_kind_name(*kind) << ": n=" << g.order() << " m=" << g.edge_count();
    if (root)
        std::cerr << " root=" << vertex_out(*root);
    std::cerr << '\n';
    if (a.spectrum)
        print_spectrum_text(g, opts);
    return kExitOk;
}

int run_walks(const std::vector<Graph>& graphs, std::size_t max_k, bool beyond_cap, const GlobalOptions& opts) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        WalkProfile w;
        try {
            w = walk_profile(g, max_k, beyond_cap);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        if (opts.json) {
            Json j = to_json(w);
            j["graph"] = write_graph6(g);
            arr.push_back(j);
            continue;
        }
        if (i)
            std::cout << '\n';
        std::cout << "graph " << write_graph6(g) << '\n';
        std::cout << std::setw(6) << "k" << "  closed walks of length 2k\n";
        for (std::size_t k = 1; k <= w.horizon; ++k)
            std::cout << std::setw(6) << k << "  " << w.at(k) << '\n';
    }
    if (opts.json)
        print_json(arr.size() == 1 ? arr.front() : arr);
    return kExitOk;
}

int run_search(const std::string& input, const std::string& report_path, bool timing, const GlobalOptions& opts) {
    const auto lines = split_lines(read_file(input));
    const SearchResult r = scan(lines, ScanOptions{opts.workers});
    for (const auto& e : r.errors)
        std::cerr << input << ":" << e.line << ": " << e.message << '\n';
    const Json j = to_json(r, timing);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out)
            throw InputError("cannot write '" + report_path + "'");
        out << j.dump(2) << '\n';
    }
    if (opts.json) {
        print_json(j);
    } else {
        const ScanStats& s = r.stats;
        std::cout << "graphs scanned     " << s.graphs_scanned << " (" << s.unique_graphs << " unique, "
                  << s.duplicates << " duplicates)\n";
        std::cout << "buckets            " << s.buckets << " (" << s.shared_buckets << " shared)\n";
        std::cout << "NCSC pairs         " << s.ncsc_pairs << '\n';
        std::cout << "cospectral mates   " << s.cospectral_pairs << '\n';
        std::cout << "AC, not cospectral " << s.almost_cospectral_pairs << '\n';
        std::cout << "parse errors       " << s.parse_errors << '\n';
        if (timing)
            std::cout << "wall time          " << fmt(s.wall_seconds, 3) << " s on " << s.workers << " workers\n";
        for (const auto& b : r.buckets)
            for (const auto& [i, k] : b.ncsc_pairs)
                std::cout << "ncsc  " << b.members[i] << "  " << b.members[k] << '\n';
    }
    return r.errors.empty() ? kExitOk : kExitInput;
}

struct VerifyArgs {
    std::string suite;
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 7;
    std::vector<std::string> corpus;
    bool timing = false;
};

int run_verify(const VerifyArgs& a, const GlobalOptions& opts) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), a.suite) == names.end()) {
        std::string known;
        for (const auto& n : names)
            known += " " + n;
        throw InputError("unknown suite '" + a.suite + "'; known:" + known);
    }
    SuiteOptions o;
    o.n_min = a.n_min;
    o.n_max = a.n_max;
    o.trials = a.trials;
    o.seed = a.seed;
    o.workers = opts.workers;
    if (!a.corpus.empty())
        o.corpus = collect_graphs({}, a.corpus);
    const SuiteReport r = run_suite(a.suite, o);
    if (opts.json) {
        print_json(to_json(r, a.timing));
    } else {
        std::cout << "suite " << r.suite << ": " << r.passed << "/" << r.checked << " checks passed";
        if (r.worst_residual > 0)
            std::cout << ", worst residual " << std::scientific << std::setprecision(3) << r.worst_residual
                      << std::defaultfloat;
        std::cout << '\n';
        for (const auto& [k, v] : r.parameters)
            std::cout << "  " << k << " = " << v << '\n';
        for (const auto& [k, v] : r.counters)
            std::cout << "  " << k << ": " << v << '\n';
        if (a.timing)
            std::cout << "  wall time " << fmt(r.wall_seconds, 3) << " s\n";
    }
    for (const auto& f : r.failures)
        std::cerr << "FAILED " << f << '\n';
    if (!r.ok()) {
        std::cerr << "theorem check failed in suite " << r.suite << '\n';
        return kExitViolation;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numeric tools for adjacency spectra and singular cospectrality"};
    app.require_subcommand(1);
    GlobalOptions opts;
    opts.workers = default_workers();
    app.add_flag("--json", opts.json, "Machine-readable output");
    app.add_option("--tol", opts.tol, "Numeric tolerance override (> 0)")->check(CLI::PositiveNumber);
    app.add_option("--workers", opts.workers, "Worker threads for search and verify (default: $COSPEC_WORKERS)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1024}));
    app.add_flag("--one-based", opts.one_based, "Read vertex arguments as 1-based");

    std::vector<std::string> graphs_inline;
    std::vector<std::string> graph_files;
    auto add_graph_inputs = [&](CLI::App* sub) {
        sub->add_option("--graph,-g", graphs_inline, "Graph in graph6");
        sub->add_option("--input,-i", graph_files, "File with one graph6 per line ('-' for stdin)");
    };

    auto* spectrum = app.add_subcommand("spectrum", "Numeric spectrum, energy and exact inertia");
    add_graph_inputs(spectrum);
    auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomials");
    add_graph_inputs(charpoly);

    std::string left, right;
    auto* classify = app.add_subcommand("classify", "Classify a pair of graphs");
    classify->add_option("--left", left, "Left graph (graph6)")->required();
    classify->add_option("--right", right, "Right graph (graph6)")->required();

    ConstructArgs cargs;
    auto* construct = app.add_subcommand("construct", "Build a graph from a named construction");
    construct->add_option("kind", cargs.kind, "Construction name")->required();
    construct->add_option("--left,--base", cargs.left, "Left or base graph (graph6)");
    construct->add_option("--right", cargs.right, "Right graph (graph6)");
    construct->add_option("--set", cargs.set, "Neighbour set for add-vertex")->delimiter(',');
    construct->add_option("--lv", cargs.lv, "Left coalescence vertex");
    construct->add_option("--rv", cargs.rv, "Right coalescence vertex");
    construct->add_option("--n", cargs.n, "Family parameter n");
    construct->add_option("--j", cargs.j, "Family parameter j");
    construct->add_option("--k", cargs.k, "Chain length k");
    construct->add_option("--edges", cargs.edges, "Edge list u-v,u-v for the 'edges' kind (order from --n)")
        ->delimiter(',');
    construct->add_flag("--spectrum", cargs.spectrum, "Also print the spectrum");

    std::size_t max_k = 0;
    bool beyond_cap = false;
    auto* walks = app.add_subcommand("walks", "Closed walks of even length");
    add_graph_inputs(walks);
    walks->add_option("--max-k", max_k, "Horizon K (counts lengths 2..2K)")->required()->check(CLI::PositiveNumber);
    walks->add_flag("--beyond-cap", beyond_cap, "Allow K > 2n");

    std::string search_input, report_path;
    bool search_timing = false;
    auto* search = app.add_subcommand("search", "Bucket a graph6 stream by singular spectrum");
    search->add_option("--input,-i", search_input, "graph6 file ('-' for stdin)")->required();
    search->add_option("--report", report_path, "Write the JSON report here");
    search->add_flag("--timing", search_timing, "Include wall time and worker count");

    VerifyArgs vargs;
    auto* verify = app.add_subcommand("verify", "Run a named theorem sweep");
    verify->add_option("--suite,--family", vargs.suite, "Suite name")->required();
    verify->add_option("--n-min", vargs.n_min, "Smallest size parameter");
    verify->add_option("--n-max", vargs.n_max, "Largest size parameter");
    verify->add_option("--trials", vargs.trials, "Random trials (or chain length for chains)");
    verify->add_option("--seed", vargs.seed, "Seed for randomized suites");
    verify->add_option("--corpus", vargs.corpus, "graph6 corpus files replacing the built-in enumeration");
    verify->add_flag("--timing", vargs.timing, "Report wall time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cerr, std::cerr);
        return kExitInput;
    }

    try {
        if (*spectrum)
            return run_spectrum(collect_graphs(graphs_inline, graph_files), opts);
        if (*charpoly)
            return run_charpoly(collect_graphs(graphs_inline, graph_files), opts);
        if (*classify)
            return run_classify(parse_input_graph(left, "--left"), parse_input_graph(right, "--right"), opts);
        if (*construct)
            return run_construct(cargs, opts);
        if (*walks)
            return run_walks(collect_graphs(graphs_inline, graph_files), max_k, beyond_cap, opts);
        if (*search)
            return run_search(search_input, report_path, search_timing, opts);
        if (*verify)
            return run_verify(vargs, opts);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << '\n';
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

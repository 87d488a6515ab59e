#ifndef COSPEC_VERIFY_HPP
#define COSPEC_VERIFY_HPP

#include "cospec/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cospec {

// Zero in a size field means "use the suite's default".
struct SuiteOptions {
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 7;
    std::size_t workers = 1;
    std::optional<std::vector<Graph>> corpus;
};

struct SuiteReport {
    std::string suite;
    std::size_t checked = 0;
    std::size_t passed = 0;
    double worst_residual = 0;
    std::vector<std::string> failures; // first failures in sweep order
    std::vector<std::pair<std::string, std::size_t>> counters;
    std::vector<std::pair<std::string, std::string>> parameters;
    double wall_seconds = 0;

    bool ok() const noexcept { return checked == passed; }
};

/// Suites: gfhf, gknj, rowlinson, schwenk, walks, sc-implies-ac,
/// prop-nec, regularity, cycles, chains. Sweeps run over `workers`
/// threads; the report does not depend on the worker count.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

const std::vector<std::string>& suite_names();

// Every graph with n_min <= n <= n_max vertices, one per isomorphism class.
std::vector<Graph> corpus_graphs(std::size_t n_min, std::size_t n_max);

} // namespace cospec

#endif // COSPEC_VERIFY_HPP

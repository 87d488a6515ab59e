#ifndef COSPEC_SPECTRUM_HPP
#define COSPEC_SPECTRUM_HPP

#include "cospec/graph.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cospec {

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense symmetric matrix, row-major.
struct SymmetricMatrix {
    std::size_t n = 0;
    std::vector<double> data;

    double& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
};

SymmetricMatrix adjacency_as_real(const Graph& g);

struct EigenDecomposition {
    std::vector<double> values;               // descending
    std::vector<std::vector<double>> vectors; // vectors[i] is the unit eigenvector of values[i]
    std::size_t sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal mass drops below
/// machine precision relative to the Frobenius norm.
/// Throws ConvergenceError once max_sweeps is exhausted.
EigenDecomposition jacobi_eigen(SymmetricMatrix m, bool want_vectors = true, std::size_t max_sweeps = 100);

struct SpectrumGroup {
    double value = 0;
    std::size_t multiplicity = 0;
};

struct SpectrumNumeric {
    std::vector<double> eigenvalues; // descending
    std::vector<SpectrumGroup> groups;
    double tol = 0;
};

// 1e-9 * max(1, rho)
double default_tolerance(double spectral_radius);
// 1e-7 * max(1, rho); singular values at or below it count as zero.
double zero_threshold(double spectral_radius);

// Single-linkage clustering of descending values: a gap larger than 10*tol starts a new group.
std::vector<SpectrumGroup> cluster_values(const std::vector<double>& descending, double tol);

SpectrumNumeric eigenvalues(const Graph& g, std::optional<double> tol = std::nullopt);

struct SingularValues {
    std::vector<double> values; // descending
    std::size_t nonzero = 0;    // leading entries above the zero threshold
    double threshold = 0;
};

SingularValues singular_values(const Graph& g, std::optional<double> tol = std::nullopt);

double energy(const Graph& g);
double energy_of(const std::vector<double>& eigenvalues);

// p-Schatten norm of the adjacency matrix; p < 1 is rejected.
double schatten(const Graph& g, double p);
double schatten_of(const std::vector<double>& eigenvalues, double p);

double spectral_radius(const Graph& g);

} // namespace cospec

#endif // COSPEC_SPECTRUM_HPP

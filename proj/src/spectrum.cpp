#include "cospec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace cospec {

SymmetricMatrix adjacency_as_real(const Graph& g) {
    SymmetricMatrix m{g.order(), std::vector<double>(g.order() * g.order(), 0.0)};
    for (const auto& [u, v] : g.edges()) {
        m(u, v) = 1.0;
        m(v, u) = 1.0;
    }
    return m;
}

EigenDecomposition jacobi_eigen(SymmetricMatrix a, bool want_vectors, std::size_t max_sweeps) {
    const std::size_t n = a.n;
    std::vector<double> v;
    if (want_vectors) {
        v.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            v[i * n + i] = 1.0;
    }
    double frob2 = 0.0;
    for (double x : a.data)
        frob2 += x * x;
    const double eps = std::numeric_limits<double>::epsilon();

    EigenDecomposition out;
    bool converged = false;
    for (std::size_t sweep = 0; sweep <= max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off += a(p, q) * a(p, q);
        if (off <= eps * eps * frob2 * 1e-2 || off == 0.0) {
            converged = true;
            out.sweeps = sweep;
            break;
        }
        if (sweep == max_sweeps)
            break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) < std::numeric_limits<double>::min())
                    continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q)
                        continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    a(r, p) = c * arp - s * arq;
                    a(p, r) = a(r, p);
                    a(r, q) = s * arp + c * arq;
                    a(q, r) = a(r, q);
                }
                if (want_vectors) {
                    for (std::size_t r = 0; r < n; ++r) {
                        const double vrp = v[r * n + p];
                        const double vrq = v[r * n + q];
                        v[r * n + p] = c * vrp - s * vrq;
                        v[r * n + q] = s * vrp + c * vrq;
                    }
                }
            }
        }
    }
    if (!converged)
        throw ConvergenceError("Jacobi eigensolver did not converge within " + std::to_string(max_sweeps) +
                               " sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
    out.values.reserve(n);
    for (auto i : order) {
        out.values.push_back(a(i, i));
        if (want_vectors) {
            std::vector<double> col(n);
            for (std::size_t r = 0; r < n; ++r)
                col[r] = v[r * n + i];
            out.vectors.push_back(std::move(col));
        }
    }
    return out;
}

double default_tolerance(double rho) { return 1e-9 * std::max(1.0, rho); }
double zero_threshold(double rho) { return 1e-7 * std::max(1.0, rho); }

std::vector<SpectrumGroup> cluster_values(const std::vector<double>& desc, double tol) {
    std::vector<SpectrumGroup> groups;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= desc.size(); ++i) {
        if (i == desc.size() || desc[i - 1] - desc[i] > 10.0 * tol) {
            double sum = 0.0;
            for (std::size_t k = start; k < i; ++k)
                sum += desc[k];
            if (i > start)
                groups.push_back({sum / static_cast<double>(i - start), i - start});
            start = i;
        }
    }
    return groups;
}

namespace {

std::vector<double> plain_eigenvalues(const Graph& g) {
    return jacobi_eigen(adjacency_as_real(g), false).values;
}

double radius_of(const std::vector<double>& values) {
    double r = 0.0;
    for (double x : values)
        r = std::max(r, std::abs(x));
    return r;
}

} // namespace

SpectrumNumeric eigenvalues(const Graph& g, std::optional<double> tol) {
    if (tol && !(*tol > 0.0))
        throw std::invalid_argument("tolerance must be positive");
    SpectrumNumeric s;
    s.eigenvalues = plain_eigenvalues(g);
    s.tol = tol ? *tol : default_tolerance(radius_of(s.eigenvalues));
    s.groups = cluster_values(s.eigenvalues, s.tol);
    return s;
}

SingularValues singular_values(const Graph& g, std::optional<double> tol) {
    if (tol && !(*tol > 0.0))
        throw std::invalid_argument("tolerance must be positive");
    const auto ev = plain_eigenvalues(g);
    SingularValues out;
    for (double x : ev)
        out.values.push_back(std::abs(x));
    std::sort(out.values.begin(), out.values.end(), std::greater<>());
    out.threshold = tol ? *tol : zero_threshold(radius_of(ev));
    out.nonzero = static_cast<std::size_t>(
        std::count_if(out.values.begin(), out.values.end(), [&](double s) { return s > out.threshold; }));
    return out;
}

double energy_of(const std::vector<double>& values) {
    double e = 0.0;
    for (double x : values)
        e += std::abs(x);
    return e;
}

double energy(const Graph& g) { return energy_of(plain_eigenvalues(g)); }

double schatten_of(const std::vector<double>& values, double p) {
    if (!(p >= 1.0))
        throw std::invalid_argument("Schatten norm needs p >= 1");
    const double s1 = radius_of(values);
    if (s1 == 0.0)
        return 0.0;
    double acc = 0.0;
    for (double x : values)
        acc += std::pow(std::abs(x) / s1, p);
    return s1 * std::pow(acc, 1.0 / p);
}

double schatten(const Graph& g, double p) {
    if (!(p >= 1.0))
        throw std::invalid_argument("Schatten norm needs p >= 1");
    return schatten_of(plain_eigenvalues(g), p);
}

double spectral_radius(const Graph& g) { return radius_of(plain_eigenvalues(g)); }

} // namespace cospec

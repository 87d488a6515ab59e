#ifndef COSPEC_EXACT_HPP
#define COSPEC_EXACT_HPP

#include "cospec/graph.hpp"
#include "cospec/poly.hpp"

#include <cstddef>
#include <vector>

namespace cospec {

// Square big-integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

    static IntMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    BigInt trace() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> data_;
};

IntMatrix adjacency_matrix(const Graph& g);

// det(xI - M) by the Faddeev-LeVerrier recurrence; every division is exact.
IntPolynomial char_poly(const IntMatrix& m);
IntPolynomial char_poly(const Graph& g);

// Characteristic polynomial of A^2, obtained from p(x)p(-x) = (-1)^n q(x^2).
IntPolynomial squared_char_poly(const Graph& g);
IntPolynomial squared_char_poly(const IntPolynomial& char_poly_of_a);

struct Inertia {
    std::size_t positive = 0;
    std::size_t zero = 0;
    std::size_t negative = 0;

    std::size_t rank() const noexcept { return positive + negative; }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Exact for real-rooted polynomials (Descartes' rule of signs is tight there).
Inertia inertia_from_char_poly(const IntPolynomial& p);
Inertia inertia(const Graph& g);

struct RankNullity {
    std::size_t rank = 0;
    std::size_t nullity = 0;
    friend bool operator==(const RankNullity&, const RankNullity&) = default;
};

RankNullity rank_nullity(const Graph& g);

// trace(A^k), the number of closed walks of length k.
BigInt trace_power(const Graph& g, std::size_t k);

} // namespace cospec

#endif // COSPEC_EXACT_HPP

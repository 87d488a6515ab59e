#include "cospec/exact.hpp"

#include <stdexcept>

namespace cospec {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

BigInt IntMatrix::trace() const {
    BigInt t = 0;
    for (std::size_t i = 0; i < n_; ++i)
        t += (*this)(i, i);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_)
        throw std::invalid_argument("matrix size mismatch");
    const std::size_t n = a.n_;
    IntMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const BigInt& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b(k, j) != 0)
                    c(i, j) += aik * b(k, j);
        }
    return c;
}

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(g.order());
    for (const auto& [u, v] : g.edges()) {
        a(u, v) = 1;
        a(v, u) = 1;
    }
    return a;
}

// M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
IntPolynomial char_poly(const IntMatrix& a) {
    const std::size_t n = a.size();
    std::vector<BigInt> c(n + 1, 0);
    c[n] = 1;
    IntMatrix am(n); // A * M_{k-1}
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            am(i, i) += c[n - k + 1];
        am = a * am;
        const BigInt t = am.trace();
        BigInt q;
        BigInt r;
        divide_qr(t, BigInt(k), q, r);
        if (r != 0)
            throw std::logic_error("Faddeev-LeVerrier step is not integral");
        c[n - k] = -q;
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial char_poly(const Graph& g) { return char_poly(adjacency_matrix(g)); }

IntPolynomial squared_char_poly(const IntPolynomial& p) {
    IntPolynomial prod = p * p.reflected();
    if (p.degree() % 2 == 1)
        prod = -prod;
    return even_part_in_square(prod);
}

IntPolynomial squared_char_poly(const Graph& g) { return squared_char_poly(char_poly(g)); }

Inertia inertia_from_char_poly(const IntPolynomial& p) {
    const auto split = strip_zero_roots(p);
    Inertia in;
    in.zero = split.zero_multiplicity;
    in.positive = split.reduced.sign_changes();
    in.negative = split.reduced.reflected().sign_changes();
    if (in.positive + in.negative + in.zero != static_cast<std::size_t>(p.degree()))
        throw std::domain_error("polynomial is not real-rooted; Descartes count incomplete");
    return in;
}

Inertia inertia(const Graph& g) { return inertia_from_char_poly(char_poly(g)); }

RankNullity rank_nullity(const Graph& g) {
    const Inertia in = inertia(g);
    return {in.rank(), in.zero};
}

BigInt trace_power(const Graph& g, std::size_t k) {
    if (k == 0)
        throw std::invalid_argument("trace_power needs k >= 1");
    const IntMatrix a = adjacency_matrix(g);
    IntMatrix p = a;
    for (std::size_t i = 1; i < k; ++i)
        p = p * a;
    return p.trace();
}

} // namespace cospec

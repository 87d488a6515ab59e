#include "cospec/poly.hpp"

#include <algorithm>
#include <sstream>

namespace cospec {

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs)
        coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

IntPolynomial IntPolynomial::monomial(std::size_t power, BigInt c) {
    std::vector<BigInt> v(power + 1, 0);
    v[power] = std::move(c);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(BigInt root) { return IntPolynomial(std::vector<BigInt>{-root, 1}); }

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const BigInt& IntPolynomial::leading() const {
    if (coeffs_.empty())
        throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

int IntPolynomial::sign_at(const BigInt& x) const {
    const BigInt v = evaluate(x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

IntPolynomial IntPolynomial::reflected() const {
    auto c = coeffs_;
    for (std::size_t i = 1; i < c.size(); i += 2)
        c[i] = -c[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1)
        return {};
    std::vector<BigInt> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        c[i - 1] = coeffs_[i] * static_cast<unsigned long long>(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::pow(std::size_t e) const {
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (e) {
        if (e & 1u)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

std::size_t IntPolynomial::sign_changes() const {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& c : coeffs_) {
        if (c == 0)
            continue;
        const int s = c > 0 ? 1 : -1;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

std::string IntPolynomial::to_string(char var) const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0)
            continue;
        const BigInt mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        if (mag != 1 || k == 0)
            out << mag;
        if (k >= 1)
            out << var;
        if (k >= 2)
            out << '^' << k;
        first = false;
    }
    return out.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a) {
    auto c = a.coeffs_;
    for (auto& x : c)
        x = -x;
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

IntPolynomial poly_divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero())
        throw InexactDivision("division by the zero polynomial");
    if (a.is_zero())
        return {};
    if (a.degree() < b.degree())
        throw InexactDivision("divisor degree exceeds dividend degree");
    std::vector<BigInt> rem = a.coeffs();
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    std::vector<BigInt> q(rem.size() - db, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        const BigInt& top = rem[k + db];
        if (top == 0)
            continue;
        BigInt r;
        BigInt quot;
        divide_qr(top, d[db], quot, r);
        if (r != 0)
            throw InexactDivision("coefficient division leaves a remainder");
        q[k] = quot;
        for (std::size_t i = 0; i <= db; ++i)
            rem[k + i] -= quot * d[i];
    }
    for (const auto& r : rem)
        if (r != 0)
            throw InexactDivision("polynomial division leaves a remainder");
    return IntPolynomial(std::move(q));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero())
        throw std::domain_error("pseudo-remainder by zero polynomial");
    std::vector<BigInt> rem = a.coeffs();
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    const BigInt& lc = d[db];
    while (rem.size() > db && !rem.empty()) {
        const BigInt top = rem.back();
        const std::size_t shift = rem.size() - 1 - db;
        for (auto& c : rem)
            c *= lc;
        for (std::size_t i = 0; i <= db; ++i)
            rem[shift + i] -= top * d[i];
        while (!rem.empty() && rem.back() == 0)
            rem.pop_back();
    }
    return IntPolynomial(std::move(rem));
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero())
        return p;
    BigInt g = 0;
    for (const auto& c : p.coeffs())
        g = gcd(g, c);
    if (p.leading() < 0)
        g = -g;
    std::vector<BigInt> c = p.coeffs();
    for (auto& x : c)
        x /= g;
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = primitive_part(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

ZeroRootSplit strip_zero_roots(const IntPolynomial& p) {
    if (p.is_zero())
        throw std::domain_error("strip_zero_roots of the zero polynomial");
    const auto& c = p.coeffs();
    std::size_t k = 0;
    while (c[k] == 0)
        ++k;
    return {IntPolynomial(std::vector<BigInt>(c.begin() + static_cast<long>(k), c.end())), k};
}

IntPolynomial even_part_in_square(const IntPolynomial& p) {
    const auto& c = p.coeffs();
    std::vector<BigInt> q;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i % 2 == 1) {
            if (c[i] != 0)
                throw std::invalid_argument("polynomial has an odd-degree term");
        } else {
            q.push_back(c[i]);
        }
    }
    return IntPolynomial(std::move(q));
}

std::size_t distinct_root_count(const IntPolynomial& p) {
    if (p.degree() <= 0)
        return 0;
    const IntPolynomial g = poly_gcd(p, p.derivative());
    return static_cast<std::size_t>(p.degree() - g.degree());
}

// Newton: for monic p = x^n + a_{n-1}x^{n-1} + ... + a_0 with e-coefficients
// c_k = a_{n-k}, s_k = -k c_k - sum_{i=1}^{k-1} c_i s_{k-i}, where c_k = 0 for k > n.
std::vector<BigInt> power_sums(const IntPolynomial& monic, std::size_t K) {
    if (!monic.is_monic())
        throw std::invalid_argument("power_sums requires a monic polynomial");
    const auto n = static_cast<std::size_t>(monic.degree());
    auto c = [&](std::size_t k) -> BigInt { return k <= n ? monic.coeff(n - k) : BigInt(0); };
    std::vector<BigInt> s(K + 1, 0);
    for (std::size_t k = 1; k <= K; ++k) {
        BigInt acc = -c(k) * static_cast<unsigned long long>(k);
        for (std::size_t i = 1; i < k; ++i)
            acc -= c(i) * s[k - i];
        s[k] = acc;
    }
    s.erase(s.begin());
    return s;
}

} // namespace cospec

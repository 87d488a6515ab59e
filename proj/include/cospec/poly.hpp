#ifndef COSPEC_POLY_HPP
#define COSPEC_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cospec {

using BigInt = boost::multiprecision::cpp_int;

class InexactDivision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Dense polynomial with big-integer coefficients; coeffs()[i] multiplies x^i.
///
/// Always normalized: the highest stored coefficient is nonzero, and the zero
/// polynomial has no coefficients at all (degree -1).
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long long> coeffs);
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial constant(BigInt c);
    static IntPolynomial monomial(std::size_t power, BigInt c = 1);
    // x - root
    static IntPolynomial linear(BigInt root);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    const BigInt& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    BigInt evaluate(const BigInt& x) const;
    int sign_at(const BigInt& x) const;

    // p(-x)
    IntPolynomial reflected() const;
    IntPolynomial derivative() const;
    IntPolynomial pow(std::size_t e) const;

    // Number of sign changes in the coefficient sequence, zeros skipped.
    std::size_t sign_changes() const;

    std::string to_string(char var = 'x') const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

// Quotient a / b; throws InexactDivision unless b divides a over the integers.
IntPolynomial poly_divide_exact(const IntPolynomial& a, const IntPolynomial& b);

// Remainder of a divided by b after scaling a by lc(b)^(deg a - deg b + 1).
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// Divide out the gcd of the coefficients, sign normalized so the leading coefficient is positive.
IntPolynomial primitive_part(const IntPolynomial& p);

// Greatest common divisor over Q, returned primitive with positive leading coefficient.
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);

struct ZeroRootSplit {
    IntPolynomial reduced;
    std::size_t zero_multiplicity = 0;
};

ZeroRootSplit strip_zero_roots(const IntPolynomial& p);

// For p(x) = q(x^2), returns q. Throws std::invalid_argument when p has an odd-degree term.
IntPolynomial even_part_in_square(const IntPolynomial& p);

// Number of distinct complex roots (degree of the squarefree part).
std::size_t distinct_root_count(const IntPolynomial& p);

// Power sums s_1..s_K of the roots of a monic polynomial, via Newton's identities.
std::vector<BigInt> power_sums(const IntPolynomial& monic, std::size_t K);

} // namespace cospec

#endif // COSPEC_POLY_HPP

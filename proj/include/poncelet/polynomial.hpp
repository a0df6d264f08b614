#pragma once

// Dense univariate polynomials with unbounded integer coefficients, and
// quotients of them.

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poncelet/field.hpp"

namespace poncelet::algebra {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class IntPolynomial {
public:
    IntPolynomial() = default;
    /// Ascending coefficients; trailing zeros are dropped.
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long long> coeffs);

    static IntPolynomial constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }
    static IntPolynomial x() { return IntPolynomial{0, 1}; }
    static IntPolynomial monomial(const Integer& c, std::size_t degree);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Integer>& coeffs() const noexcept { return c_; }
    Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    /// Throws DomainError for the zero polynomial.
    const Integer& leading() const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Integer& s) const;
    IntPolynomial operator-() const;
    IntPolynomial pow(unsigned e) const;

    /// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
    Integer content() const;
    /// Divided by its content, with positive leading coefficient.
    IntPolynomial primitive() const;
    /// Divides every coefficient by s. Throws InexactDivision.
    IntPolynomial divide_scalar(const Integer& s) const;

    Integer evaluate(const Integer& x) const;
    Rational evaluate(const Rational& x) const;
    field::Fp evaluate(const field::Fp& x) const;
    /// f(g(x)).
    IntPolynomial compose(const IntPolynomial& g) const;
    /// x^d f(1/x); d defaults to the degree.
    IntPolynomial reverse(std::optional<std::size_t> d = std::nullopt) const;

    /// Ascending distinct roots in GF(p) by exhaustive evaluation.
    std::vector<field::Fp> roots_mod(const field::Prime& p) const;

    /// "k^2 - 12*k + 16" style rendering, highest degree first.
    std::string to_string(const std::string& var = "k") const;
    /// Decimal strings, ascending degree.
    std::vector<std::string> to_strings() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<Integer> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& f);

/// lc(b)^(deg a - deg b + 1) a = q b + r with deg r < deg b.
/// Throws DivisionByZero for b = 0.
std::pair<IntPolynomial, IntPolynomial> pseudo_divide(const IntPolynomial& a, const IntPolynomial& b);

/// a / b when b divides a in Z[x], nothing otherwise.
std::optional<IntPolynomial> try_divide(const IntPolynomial& a, const IntPolynomial& b);
/// a / b; throws InexactDivision when b does not divide a in Z[x].
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Greatest common divisor in Z[x], nonnegative leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Same polynomial up to a nonzero integer factor.
bool equal_up_to_sign(const IntPolynomial& a, const IntPolynomial& b);

/// num/den with gcd(num, den) = 1, den having positive leading coefficient,
/// and no integer common to all coefficients of both.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(IntPolynomial{1}) {}
    explicit RationalFunction(IntPolynomial num) : RationalFunction(std::move(num), IntPolynomial{1}) {}
    /// Throws DivisionByZero for den = 0.
    RationalFunction(IntPolynomial num, IntPolynomial den);
    static RationalFunction constant(const Rational& q);

    const IntPolynomial& numerator() const noexcept { return num_; }
    const IntPolynomial& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator-() const;

    /// Nothing when the denominator vanishes at x.
    std::optional<field::Fp> evaluate(const field::Fp& x) const;

    std::string to_string(const std::string& var = "k") const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    IntPolynomial num_;
    IntPolynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace poncelet::algebra

#pragma once

// Cayley's closure criterion for the pair (O_k, O_1), in exact arithmetic
// over Q(k).

#include <map>
#include <vector>

#include "poncelet/polynomial.hpp"

namespace poncelet::cayley {

using algebra::IntPolynomial;
using algebra::Rational;
using algebra::RationalFunction;

/// Coefficients A_0..A_order of sqrt(det(tC + D)) divided by sqrt(c k^2),
/// i.e. of sqrt(1+t) (t+k)/k.
struct CayleySeries {
    unsigned order = 0;
    std::vector<RationalFunction> coeffs;
};

/// binom(1/2, m) as an exact rational.
Rational half_binomial(unsigned m);

/// Throws DomainError for order < 2.
CayleySeries expand_series(unsigned order);

/// Highest series coefficient the criterion for n reads.
unsigned required_order(unsigned n);

/// Hankel determinant det(A_{i+j+2}) of size m for n = 2m+1, det(A_{i+j+3})
/// of size m-1 for n = 2m. Throws DomainError for n < 3 and
/// InsufficientOrder when the series is too short.
RationalFunction cayley_condition(unsigned n, const CayleySeries& series);

/// Primitive numerator of the condition for n, after dividing out the
/// criterion polynomials of every proper divisor d >= 3 of n.
IntPolynomial criterion_polynomial(unsigned n);

/// criterion_polynomial(n) equals P_n up to sign.
bool cross_check(unsigned n);

/// Multiplicity of criterion_polynomial(d) in the numerator of the condition
/// for n, for each proper divisor d >= 3.
std::map<unsigned, unsigned> divisor_multiplicities(unsigned n);

}  // namespace poncelet::cayley

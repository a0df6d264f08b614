#pragma once

// Cyclotomic and Poncelet polynomials, the t-iteration and the coefficient
// sets k for which (O_k, O_1) carries an n-gon.

#include <map>
#include <vector>

#include "poncelet/pencil.hpp"
#include "poncelet/polynomial.hpp"

namespace poncelet::algebra {

using field::Fp;
using field::Prime;

unsigned totient(unsigned n);
/// Ascending divisors of n.
std::vector<unsigned> divisors(unsigned n);
/// Divisors d of p+1 with d >= 3, ascending.
std::vector<unsigned> polygon_lengths(const Prime& p);

/// Least s >= 1 with 2^s = +-1 (mod n). Throws DomainError unless n is odd
/// and n >= 3.
unsigned iteration_length(unsigned n);

/// Phi_n by exact division of x^n - 1. Throws DomainError for n = 0.
IntPolynomial cyclotomic(unsigned n);

/// P_n of degree phi(n)/2, primitive with positive leading coefficient,
/// obtained from Phi_n through y = x + 1/x, x -> 2x, x -> 2x - 1 and reversal.
/// Throws DomainError for n < 3.
IntPolynomial poncelet_polynomial(unsigned n);

/// (k-2)^(2 deg P) P(k^2/(k-2)^2), divided by P when that division is exact.
/// Throws InexactDivision unless the result has degree phi(2n)/2.
IntPolynomial double_polynomial(const IntPolynomial& pn, unsigned n);

/// t_0 = k, t_{i+1} = t_i^2/(t_i-2)^2 as rational functions of k; returns
/// t_0..t_steps.
std::vector<RationalFunction> t_iterate(unsigned steps);
/// The same sequence evaluated in GF(p). Throws DivisionByZero when some
/// t_i = 2 with i < steps.
std::vector<Fp> t_iterate(const Fp& k, unsigned steps);

/// k in [1, p-1] with t_s = k and t_i != k for 0 < i < s, s the iteration
/// length of n, restricted to O_k inside O_1. Values whose iteration hits
/// t_i = 2 are skipped. Throws DomainError unless n is odd, n >= 3 and
/// n | p+1; throws AmbiguousIteration when another odd length with the same
/// iteration length also divides p+1.
std::vector<Fp> coefficients_by_iteration(unsigned n, const Prime& p);

/// Roots of P_n mod p. Throws DomainError unless n >= 3 and n | p+1, and
/// InvariantViolation if the root count is not phi(n)/2.
std::vector<Fp> coefficients_by_polynomial(unsigned n, const Prime& p);

/// Every polygon length n | p+1 with its coefficients.
std::map<unsigned, std::vector<Fp>> coefficient_census(const Prime& p);

/// Relation table of the pencil: (alpha, beta) gets the n whose coefficient
/// set contains alpha/beta. Throws InvariantViolation if a diamond pair is
/// left without a length.
pencil::RelationTable relation_table_by_polynomials(const pencil::Pencil& pencil);

/// The values 2/(1 -+ k^(-1/2)) different from k, ascending. Throws
/// DomainError if k is a nonsquare, zero or 1.
std::vector<Fp> double_coefficient(const Fp& k);

/// h != k and (h-1)(k-1) = (r+1)^2 for a square root r of k.
bool existence_transfer_check(const Fp& h, const Fp& k);

/// Primitive numerator of t_s - k with the factor k and every factor of
/// shorter periods s' | s removed.
IntPolynomial period_polynomial(unsigned s);

/// The factor of period_polynomial(iteration_length(n)) belonging to odd n,
/// separated from the other lengths of equal period by gcd with P_n and
/// confirmed by tracing at the smallest prime where n is the only such length
/// dividing p+1. Throws InvariantViolation when either check fails.
IntPolynomial iteration_polynomial(unsigned n);

}  // namespace poncelet::algebra

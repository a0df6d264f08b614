#include "poncelet/cayley.hpp"

#include <mutex>
#include <string>

#include "poncelet/algebra.hpp"
#include "poncelet/errors.hpp"

namespace poncelet::cayley {

using algebra::Integer;

Rational half_binomial(unsigned m) {
    Rational r = 1;
    for (unsigned i = 0; i < m; ++i) r = r * (Rational(1, 2) - Rational(i)) / Rational(i + 1);
    return r;
}

CayleySeries expand_series(unsigned order) {
    if (order < 2) throw DomainError("series order must be at least 2");
    CayleySeries s{order, {}};
    s.coeffs.reserve(order + 1);
    // (1 + t/k) sum_m b_m t^m, so A_m = b_m + b_{m-1}/k = (b_m k + b_{m-1}) / k.
    Rational prev = 0;
    for (unsigned m = 0; m <= order; ++m) {
        const Rational b = half_binomial(m);
        s.coeffs.push_back(RationalFunction::constant(b) + RationalFunction::constant(prev) /
                                                               RationalFunction(IntPolynomial::x()));
        prev = b;
    }
    return s;
}

unsigned required_order(unsigned n) {
    if (n < 3) throw DomainError("Cayley criterion needs n >= 3");
    return n - 1;
}

namespace {

// Determinant of a square matrix over Z[k] by fraction-free elimination.
IntPolynomial bareiss(std::vector<std::vector<IntPolynomial>> a) {
    const std::size_t n = a.size();
    if (n == 0) return IntPolynomial{1};
    IntPolynomial prev{1};
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].is_zero()) ++r;
            if (r == n) return {};
            std::swap(a[k], a[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = algebra::divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            }
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace

RationalFunction cayley_condition(unsigned n, const CayleySeries& series) {
    const unsigned need = required_order(n);
    if (series.order < need || series.coeffs.size() < need + 1) {
        throw InsufficientOrder("criterion for n = " + std::to_string(n) + " needs order " + std::to_string(need));
    }
    const unsigned m = n / 2;
    const unsigned size = n % 2 == 1 ? m : m - 1;
    const unsigned offset = n % 2 == 1 ? 2 : 3;

    // Every A_j is N_j/(d_j k); scaling by L k with L = lcm(d_j) lands in Z[k].
    Integer L = 1;
    for (unsigned j = offset; j <= offset + 2 * (size - 1); ++j) {
        const IntPolynomial& den = series.coeffs[j].denominator();
        L = boost::multiprecision::lcm(L, den.content());
    }
    const RationalFunction scale(IntPolynomial::monomial(L, 1));
    std::vector<std::vector<IntPolynomial>> hankel(size, std::vector<IntPolynomial>(size));
    for (unsigned i = 0; i < size; ++i) {
        for (unsigned j = 0; j < size; ++j) {
            const RationalFunction e = series.coeffs[i + j + offset] * scale;
            if (e.denominator() != IntPolynomial{1}) throw InvariantViolation("Hankel entry not integral after scaling");
            hankel[i][j] = e.numerator();
        }
    }
    return RationalFunction(bareiss(std::move(hankel)), IntPolynomial::monomial(L, 1).pow(size));
}

IntPolynomial criterion_polynomial(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, IntPolynomial> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    IntPolynomial f = cayley_condition(n, expand_series(required_order(n))).numerator().primitive();
    for (unsigned d : algebra::divisors(n)) {
        if (d < 3 || d == n) continue;
        const IntPolynomial g = criterion_polynomial(d);
        while (auto q = algebra::try_divide(f, g)) f = *q;
    }
    f = f.primitive();
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, f);
    return f;
}

bool cross_check(unsigned n) { return algebra::equal_up_to_sign(criterion_polynomial(n), algebra::poncelet_polynomial(n)); }

std::map<unsigned, unsigned> divisor_multiplicities(unsigned n) {
    const IntPolynomial hankel = cayley_condition(n, expand_series(required_order(n))).numerator().primitive();
    std::map<unsigned, unsigned> out;
    for (unsigned d : algebra::divisors(n)) {
        if (d < 3 || d == n) continue;
        const IntPolynomial g = criterion_polynomial(d);
        unsigned mult = 0;
        IntPolynomial f = hankel;
        while (auto q = algebra::try_divide(f, g)) {
            f = *q;
            ++mult;
        }
        out[d] = mult;
    }
    return out;
}

}  // namespace poncelet::cayley

#include <doctest.h>

#include <algorithm>

#include "poncelet/algebra.hpp"
#include "poncelet/errors.hpp"
#include "poncelet/tracer.hpp"

using namespace poncelet;
using namespace poncelet::algebra;
using field::Fp;
using field::Prime;
using pencil::Pencil;

namespace {

std::vector<std::uint64_t> odd_primes_upto(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 3; p <= n; p += 2)
        if (field::is_prime(p)) out.push_back(p);
    return out;
}

std::vector<std::uint64_t> values(const std::vector<Fp>& xs) {
    std::vector<std::uint64_t> out;
    for (const auto& x : xs) out.push_back(x.value());
    return out;
}

bool contains(const std::vector<Fp>& xs, const Fp& x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

}  // namespace

TEST_CASE("number theory helpers") {
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(17) == 16);
    CHECK(divisors(12) == std::vector<unsigned>{1, 2, 3, 4, 6, 12});
    CHECK(polygon_lengths(Prime(11)) == std::vector<unsigned>{3, 4, 6, 12});
    CHECK(polygon_lengths(Prime(3)) == std::vector<unsigned>{4});
    CHECK(iteration_length(17) == 4);
    CHECK(iteration_length(9) == 3);
    CHECK(iteration_length(3) == 1);
    CHECK_THROWS_AS(iteration_length(8), DomainError);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPolynomial{-1, 1});
    CHECK(cyclotomic(5) == IntPolynomial{1, 1, 1, 1, 1});
    CHECK(cyclotomic(12) == IntPolynomial{1, 0, -1, 0, 1});
    CHECK(cyclotomic(105).coeff(7) == -2);
    CHECK_THROWS_AS(cyclotomic(0), DomainError);
    for (unsigned n = 1; n <= 60; ++n) CHECK(static_cast<unsigned>(cyclotomic(n).degree()) == totient(n));
}

TEST_CASE("Poncelet polynomial goldens") {
    CHECK(poncelet_polynomial(3) == IntPolynomial{-4, 1});
    CHECK(poncelet_polynomial(4) == IntPolynomial{-2, 1});
    CHECK(poncelet_polynomial(5) == IntPolynomial{16, -12, 1});
    CHECK(equal_up_to_sign(poncelet_polynomial(6), IntPolynomial{4, -3}));
    CHECK(poncelet_polynomial(7) == IntPolynomial{-64, 80, -24, 1});
    CHECK(poncelet_polynomial(8) == IntPolynomial{8, -8, 1});
    CHECK(poncelet_polynomial(9) == IntPolynomial{-64, 96, -36, 1});
    CHECK(poncelet_polynomial(10) == IntPolynomial{16, -20, 5});
    CHECK(equal_up_to_sign(poncelet_polynomial(12), IntPolynomial{-16, 16, -1}));
    CHECK(poncelet_polynomial(11) == IntPolynomial{-1024, 2304, -1792, 560, -60, 1});
    CHECK_THROWS_AS(poncelet_polynomial(2), DomainError);
}

TEST_CASE("Poncelet polynomial structure") {
    for (unsigned n = 3; n <= 60; ++n) {
        const auto pn = poncelet_polynomial(n);
        CHECK(static_cast<unsigned>(pn.degree()) == totient(n) / 2);
        CHECK(pn.content() == 1);
        CHECK(pn.leading() > 0);
    }
}

TEST_CASE("doubling agrees with the cyclotomic route") {
    CHECK(double_polynomial(poncelet_polynomial(3), 3) == poncelet_polynomial(6));
    CHECK(double_polynomial(poncelet_polynomial(4), 4) == IntPolynomial{8, -8, 1});
    for (unsigned n = 3; n <= 30; ++n)
        CHECK(equal_up_to_sign(double_polynomial(poncelet_polynomial(n), n), poncelet_polynomial(2 * n)));
}

TEST_CASE("t iteration") {
    const Prime p53(53), p11(11);
    CHECK(values(t_iterate(Fp(4, p11), 3)) == std::vector<std::uint64_t>{4, 4, 4, 4});
    CHECK(values(t_iterate(Fp(1, p11), 2)) == std::vector<std::uint64_t>{1, 1, 1});
    const auto t = t_iterate(Fp(13, p53), 3);
    CHECK(t[3].value() == 13);
    CHECK(t[1].value() != 13);
    CHECK(t[2].value() != 13);
    CHECK_THROWS_AS(t_iterate(Fp(2, p11), 1), DivisionByZero);
    CHECK_NOTHROW(t_iterate(Fp(2, p11), 0));

    const auto sym = t_iterate(2);
    CHECK(sym[1].numerator() == IntPolynomial{0, 0, 1});
    CHECK(sym[1].denominator() == IntPolynomial{4, -4, 1});
    for (std::uint64_t k = 3; k < 53; ++k) {
        const auto num = t_iterate(Fp(k, p53), 2);
        if (auto v = sym[2].evaluate(Fp(k, p53))) CHECK(*v == num[2]);
    }
}

TEST_CASE("coefficients by iteration") {
    CHECK(values(coefficients_by_iteration(9, Prime(53))) == std::vector<std::uint64_t>{13, 36, 40});
    CHECK(values(coefficients_by_iteration(3, Prime(11))) == std::vector<std::uint64_t>{4});
    CHECK(values(coefficients_by_iteration(17, Prime(67))) == values(coefficients_by_polynomial(17, Prime(67))));
    CHECK_THROWS_AS(coefficients_by_iteration(4, Prime(11)), DomainError);
    CHECK_THROWS_AS(coefficients_by_iteration(5, Prime(11)), DomainError);
}

TEST_CASE("coefficients by polynomial") {
    CHECK(values(coefficients_by_polynomial(12, Prime(11))) == std::vector<std::uint64_t>{6, 10});
    CHECK(values(coefficients_by_polynomial(6, Prime(11))) == std::vector<std::uint64_t>{5});
    CHECK(values(coefficients_by_polynomial(8, Prime(7))) == std::vector<std::uint64_t>{3, 5});
    CHECK_THROWS_AS(coefficients_by_polynomial(5, Prime(11)), DomainError);
}

TEST_CASE("iteration and polynomial routes agree") {
    for (auto pv : odd_primes_upto(100)) {
        const Prime p(pv);
        for (unsigned n = 3; n <= 15; n += 2) {
            if ((pv + 1) % n != 0) continue;
            const auto poly = coefficients_by_polynomial(n, p);
            CHECK(poly.size() == totient(n) / 2);
            CHECK(coefficients_by_iteration(n, p) == poly);
        }
    }
}

TEST_CASE("polynomial roots agree with the tracer") {
    for (auto pv : odd_primes_upto(31)) {
        const Prime p(pv);
        const Pencil pen(p);
        const auto traced = tracer::census(pen, Fp(1, p));
        CHECK(coefficient_census(p) == traced);
        CHECK(relation_table_by_polynomials(pen) == tracer::relation_table_by_tracing(pen));
    }
}

TEST_CASE("next polygon closure") {
    for (auto pv : odd_primes_upto(200)) {
        const Prime p(pv);
        for (unsigned n = 3; n <= pv + 1; n += 2) {
            if ((pv + 1) % n != 0) continue;
            const auto roots = coefficients_by_polynomial(n, p);
            for (const auto& k : roots) {
                const Fp u = k / (k - Fp(2, p));
                CHECK(contains(roots, u * u));
            }
        }
    }
}

TEST_CASE("inverse relation") {
    for (auto pv : odd_primes_upto(19)) {
        const Prime p(pv);
        const Pencil pen(p);
        const Fp one(1, p);
        for (std::uint64_t b = 1; b < pv; ++b) {
            const Fp b2 = Fp(b, p) * Fp(b, p);
            if (b2 == one || !pen.diamond(one, b2)) continue;
            CHECK(tracer::verify_porism(pen, one, b2) == tracer::verify_porism(pen, field::inv(b2), one));
        }
    }
}

TEST_CASE("double coefficient examples") {
    const Prime p7(7), p11(11);
    CHECK(values(double_coefficient(Fp(2, p7))) == std::vector<std::uint64_t>{3, 5});
    CHECK(values(double_coefficient(Fp(4, p11))) == std::vector<std::uint64_t>{5});
    CHECK_THROWS_AS(double_coefficient(Fp(1, p7)), DomainError);
    CHECK_THROWS_AS(double_coefficient(Fp(3, p7)), DomainError);
    CHECK_THROWS_AS(double_coefficient(Fp(0, p7)), DomainError);
}

TEST_CASE("doubling carries n-gons to 2n-gons") {
    for (auto pv : odd_primes_upto(200)) {
        const Prime p(pv);
        for (unsigned n = 3; 2 * n <= pv + 1; ++n) {
            if ((pv + 1) % (2 * n) != 0) continue;
            const auto target = coefficients_by_polynomial(2 * n, p);
            for (const auto& k : coefficients_by_polynomial(n, p)) {
                if (!field::is_nonzero_square(k)) continue;
                const auto hs = double_coefficient(k);
                CHECK(std::any_of(hs.begin(), hs.end(), [&](const Fp& h) { return contains(target, h); }));
                for (const auto& h : hs) {
                    CHECK(existence_transfer_check(h, k));
                    // A value off the 2n-gon list falls back onto the n-gon list.
                    if (!contains(target, h)) CHECK(contains(coefficients_by_polynomial(n, p), h));
                }
            }
        }
    }
}

TEST_CASE("existence transfer") {
    const Prime p7(7);
    const Fp two(2, p7);
    for (const auto& h : double_coefficient(two)) CHECK(existence_transfer_check(h, two));
    CHECK_FALSE(existence_transfer_check(two, two));
    CHECK_FALSE(existence_transfer_check(Fp(1, p7), Fp(3, p7)));
    for (auto pv : odd_primes_upto(31)) {
        const Prime p(pv);
        for (std::uint64_t k = 2; k < pv; ++k) {
            const Fp kk(k, p);
            if (!field::is_nonzero_square(kk)) continue;
            for (const auto& h : double_coefficient(kk)) {
                CHECK(existence_transfer_check(h, kk));
                CHECK(field::is_square((h - Fp(1, p)) * (kk - Fp(1, p))));
            }
        }
    }
}

TEST_CASE("period polynomials") {
    CHECK(period_polynomial(1) == IntPolynomial{4, -5, 1});
    CHECK(period_polynomial(2) == poncelet_polynomial(5));
    CHECK(period_polynomial(3) == poncelet_polynomial(7) * poncelet_polynomial(9));
    CHECK_THROWS_AS(period_polynomial(0), DomainError);
}

TEST_CASE("iteration polynomials") {
    for (unsigned n = 3; n <= 15; n += 2) CHECK(iteration_polynomial(n) == poncelet_polynomial(n));
    CHECK_THROWS_AS(iteration_polynomial(6), DomainError);
}

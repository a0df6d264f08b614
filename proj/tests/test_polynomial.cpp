#include <doctest.h>

#include <random>

#include "poncelet/errors.hpp"
#include "poncelet/polynomial.hpp"

using namespace poncelet;
using namespace poncelet::algebra;
using field::Fp;
using field::Prime;

namespace {

IntPolynomial random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-20, 20);
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("construction and degree") {
    CHECK(IntPolynomial().degree() == -1);
    CHECK(IntPolynomial{0, 0, 0}.is_zero());
    CHECK(IntPolynomial{1, 2, 0}.degree() == 1);
    CHECK(IntPolynomial::monomial(3, 4).coeff(4) == 3);
    CHECK(IntPolynomial::monomial(3, 4).coeff(9) == 0);
    CHECK_THROWS_AS(IntPolynomial().leading(), DomainError);
}

TEST_CASE("arithmetic") {
    const IntPolynomial a{1, 1}, b{-1, 1};
    CHECK(a * b == IntPolynomial{-1, 0, 1});
    CHECK(a + b == IntPolynomial{0, 2});
    CHECK(a - a == IntPolynomial());
    CHECK(a.pow(3) == IntPolynomial{1, 3, 3, 1});
    CHECK(a.pow(0) == IntPolynomial{1});
    CHECK(-a == IntPolynomial{-1, -1});
    CHECK(a * Integer(4) == IntPolynomial{4, 4});
}

TEST_CASE("content and primitive part") {
    const IntPolynomial f{6, -4, -2};
    CHECK(f.content() == 2);
    CHECK(f.primitive() == IntPolynomial{-3, 2, 1});
    CHECK(f.divide_scalar(2) == IntPolynomial{3, -2, -1});
    CHECK_THROWS_AS(f.divide_scalar(4), InexactDivision);
    CHECK(IntPolynomial().content() == 0);
}

TEST_CASE("evaluation and composition") {
    const IntPolynomial f{16, -12, 1};
    CHECK(f.evaluate(Integer(2)) == -4);
    CHECK(f.evaluate(Rational(1, 2)) == Rational(41, 4));
    const Prime p(11);
    CHECK(f.evaluate(Fp(3, p)).is_zero());
    CHECK(f.compose(IntPolynomial{1, 1}) == IntPolynomial{5, -10, 1});
    CHECK(IntPolynomial{1, 2, 3}.reverse() == IntPolynomial{3, 2, 1});
    CHECK(IntPolynomial{1, 2}.reverse(3) == IntPolynomial{0, 0, 2, 1});
}

TEST_CASE("roots mod p") {
    const IntPolynomial f{16, -12, 1};
    std::vector<Fp> roots = f.roots_mod(Prime(11));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].value() == 3);
    CHECK(roots[1].value() == 9);
    CHECK(IntPolynomial{1, 0, 1}.roots_mod(Prime(7)).empty());
}

TEST_CASE("division") {
    const IntPolynomial a{-1, 0, 0, 1}, b{-1, 1};
    CHECK(divide_exact(a, b) == IntPolynomial{1, 1, 1});
    CHECK_FALSE(try_divide(a, IntPolynomial{1, 2}));
    CHECK_THROWS_AS(divide_exact(a, IntPolynomial{0, 2}), InexactDivision);
    CHECK_THROWS_AS(pseudo_divide(a, IntPolynomial()), DivisionByZero);
    const auto [q, r] = pseudo_divide(IntPolynomial{1, 0, 1}, IntPolynomial{1, 2});
    CHECK(q * IntPolynomial{1, 2} + r == IntPolynomial{4, 0, 4});
    CHECK(r.degree() < 1);
}

TEST_CASE("random division and gcd properties") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_poly(rng, 6), b = random_poly(rng, 4), g = random_poly(rng, 3);
        if (b.is_zero() || g.is_zero()) continue;
        CHECK(divide_exact(a * b, b) == a);
        const auto [q, r] = pseudo_divide(a, b);
        const int e = std::max(a.degree() - b.degree() + 1, 0);
        const Integer scale = boost::multiprecision::pow(b.leading(), static_cast<unsigned>(e));
        CHECK(q * b + r == a * scale);
        CHECK(r.degree() < b.degree());
        const auto d = gcd(a * g, b * g);
        CHECK(try_divide(d, g.primitive()));
        CHECK(try_divide(a * g, d));
        CHECK(try_divide(b * g, d));
    }
}

TEST_CASE("equal up to sign") {
    CHECK(equal_up_to_sign(IntPolynomial{4, -3}, IntPolynomial{-4, 3}));
    CHECK(equal_up_to_sign(IntPolynomial{4, -3}, IntPolynomial{8, -6}));
    CHECK_FALSE(equal_up_to_sign(IntPolynomial{4, -3}, IntPolynomial{4, 3}));
}

TEST_CASE("rendering") {
    CHECK(IntPolynomial{16, -12, 1}.to_string() == "k^2 - 12*k + 16");
    CHECK(IntPolynomial{-4, 3}.to_string() == "3*k - 4");
    CHECK(IntPolynomial().to_string() == "0");
    CHECK(IntPolynomial{-64, 96, -36, 1}.to_strings() == std::vector<std::string>{"-64", "96", "-36", "1"});
}

TEST_CASE("rational functions") {
    const RationalFunction k(IntPolynomial::x());
    const RationalFunction half = RationalFunction::constant(Rational(1, 2));
    const auto a1 = half + RationalFunction::constant(1) / k;
    CHECK(a1.numerator() == IntPolynomial{2, 1});
    CHECK(a1.denominator() == IntPolynomial{0, 2});
    CHECK(a1 - a1 == RationalFunction());
    CHECK((a1 / a1) == RationalFunction::constant(1));
    CHECK(RationalFunction(IntPolynomial{-2, 0, 2}, IntPolynomial{-2, 2}) == RationalFunction(IntPolynomial{1, 1}));
    CHECK(RationalFunction(IntPolynomial{1}, IntPolynomial{0, -3}).denominator() == IntPolynomial{0, 3});
    CHECK_THROWS_AS(RationalFunction(IntPolynomial{1}, IntPolynomial()), DivisionByZero);

    const Prime p(7);
    CHECK(a1.evaluate(Fp(1, p))->value() == 5);
    CHECK_FALSE(a1.evaluate(Fp(0, p)));
}

#include "poncelet/field.hpp"

#include <array>
#include <ostream>
#include <string>

#include "poncelet/errors.hpp"

namespace poncelet::field {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 e, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (e != 0) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::array<u64, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 b : bases) {
        if (n % b == 0) return n == b;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is exact below 3.3e24, so for all 64-bit n.
    for (u64 a : bases) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

Prime::Prime(std::uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
        throw NotPrime(std::to_string(p) + " is not an odd prime");
    }
}

Fp::Fp(std::uint64_t value, const Prime& p) : v_(value % p.value()), p_(p.value()) {}

Fp Fp::from_signed(std::int64_t value, const Prime& p) {
    const auto m = static_cast<std::int64_t>(p.value());
    std::int64_t r = value % m;
    if (r < 0) r += m;
    return Fp(static_cast<u64>(r), p.value(), raw_tag{});
}

Fp Fp::make(std::int64_t n) const {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = n % m;
    if (r < 0) r += m;
    return Fp(static_cast<u64>(r), p_, raw_tag{});
}

void Fp::check_same(const Fp& o) const {
    if (p_ != o.p_) {
        throw ModulusMismatch("mixing GF(" + std::to_string(p_) + ") with GF(" + std::to_string(o.p_) + ")");
    }
}

Fp Fp::operator+(const Fp& o) const {
    check_same(o);
    u64 s = v_ + o.v_;
    if (s >= p_ || s < v_) s -= p_;
    return Fp(s, p_, raw_tag{});
}

Fp Fp::operator-(const Fp& o) const {
    check_same(o);
    return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_), p_, raw_tag{});
}

Fp Fp::operator*(const Fp& o) const {
    check_same(o);
    return Fp(mul_mod(v_, o.v_, p_), p_, raw_tag{});
}

Fp Fp::operator/(const Fp& o) const {
    check_same(o);
    return *this * inv(o);
}

Fp Fp::operator-() const noexcept { return Fp(v_ == 0 ? 0 : p_ - v_, p_, raw_tag{}); }

Fp Fp::pow(std::uint64_t e) const noexcept { return Fp(pow_mod(v_, e, p_), p_, raw_tag{}); }

bool Fp::operator==(const Fp& o) const {
    check_same(o);
    return v_ == o.v_;
}

std::strong_ordering Fp::operator<=>(const Fp& o) const {
    check_same(o);
    return v_ <=> o.v_;
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

QuadraticCharacter legendre(const Fp& x) {
    if (x.is_zero()) return QuadraticCharacter::zero;
    return x.pow((x.modulus() - 1) / 2).value() == 1 ? QuadraticCharacter::square
                                                      : QuadraticCharacter::nonsquare;
}

Fp inv(const Fp& x) {
    if (x.is_zero()) throw DivisionByZero("inverse of zero in GF(" + std::to_string(x.modulus()) + ")");
    return x.pow(x.modulus() - 2);
}

std::optional<std::pair<Fp, Fp>> sqrt(const Fp& x) {
    const u64 p = x.modulus();
    const auto ordered = [](Fp r) {
        Fp s = -r;
        return s < r ? std::pair{s, r} : std::pair{r, s};
    };
    switch (legendre(x)) {
        case QuadraticCharacter::zero:
            return std::pair{x, x};
        case QuadraticCharacter::nonsquare:
            return std::nullopt;
        case QuadraticCharacter::square:
            break;
    }
    if (p % 4 == 3) return ordered(x.pow((p + 1) / 4));

    // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
    u64 q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    Fp z = x.make(2);
    while (legendre(z) != QuadraticCharacter::nonsquare) z += x.one();

    unsigned m = s;
    Fp c = z.pow(q);
    Fp t = x.pow(q);
    Fp r = x.pow((q + 1) / 2);
    while (t != x.one()) {
        unsigned i = 0;
        Fp t2 = t;
        while (t2 != x.one()) {
            t2 *= t2;
            ++i;
        }
        Fp b = c;
        for (unsigned j = 0; j + 1 < m - i; ++j) b *= b;
        m = i;
        c = b * b;
        t *= c;
        r *= b;
    }
    return ordered(r);
}

Fp2::Fp2(Fp a, Fp b, Fp c) : a_(a), b_(b), c_(c) {
    if (a.modulus() != b.modulus() || a.modulus() != c.modulus()) {
        throw ModulusMismatch("Fp2 components from different prime fields");
    }
    if (legendre(c) != QuadraticCharacter::nonsquare) {
        throw DomainError("Fp2 requires a nonsquare c, got " + std::to_string(c.value()));
    }
}

void Fp2::check_same(const Fp2& o) const {
    if (c_ != o.c_) throw ModulusMismatch("mixing quadratic extensions with different c");
}

Fp2 Fp2::operator+(const Fp2& o) const {
    check_same(o);
    return Fp2(a_ + o.a_, b_ + o.b_, c_, trusted{});
}

Fp2 Fp2::operator-(const Fp2& o) const {
    check_same(o);
    return Fp2(a_ - o.a_, b_ - o.b_, c_, trusted{});
}

Fp2 Fp2::operator*(const Fp2& o) const {
    check_same(o);
    return Fp2(a_ * o.a_ + b_ * o.b_ * c_, b_ * o.a_ + a_ * o.b_, c_, trusted{});
}

Fp2 Fp2::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in GF(p^2)");
    // The norm of a nonzero element is nonzero because c is a nonsquare.
    const Fp n = inv(norm());
    return Fp2(a_ * n, -b_ * n, c_, trusted{});
}

bool Fp2::operator==(const Fp2& o) const {
    check_same(o);
    return a_ == o.a_ && b_ == o.b_;
}

std::ostream& operator<<(std::ostream& os, const Fp2& x) {
    return os << x.a() << "+" << x.b() << "*sqrt(" << x.c() << ")";
}

Fp2 fp2_add(const Fp2& x, const Fp2& y) { return x + y; }
Fp2 fp2_mul(const Fp2& x, const Fp2& y) { return x * y; }
Fp2 fp2_inv(const Fp2& x) { return x.inverse(); }

}  // namespace poncelet::field

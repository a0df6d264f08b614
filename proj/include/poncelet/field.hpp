#pragma once

// Exact arithmetic in GF(p), p an odd prime, and in the quadratic extension
// GF(p)(sqrt(c)) for a fixed nonsquare c.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>

namespace poncelet::field {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// An odd prime modulus. Construction verifies primality.
class Prime {
public:
    explicit Prime(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }
    /// p mod 4, either 1 or 3.
    unsigned mod4() const noexcept { return static_cast<unsigned>(p_ % 4); }

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    std::uint64_t p_;
};

/// Residue class modulo p. Carries its modulus so that mixing elements of
/// different fields is reported instead of silently producing garbage.
class Fp {
public:
    Fp(std::uint64_t value, const Prime& p);
    /// Reduces a signed integer into [0, p).
    static Fp from_signed(std::int64_t value, const Prime& p);

    std::uint64_t value() const noexcept { return v_; }
    std::uint64_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    Fp zero() const noexcept { return Fp(0, p_, raw_tag{}); }
    Fp one() const noexcept { return Fp(1 % p_, p_, raw_tag{}); }
    /// Element of the same field with value n mod p.
    Fp make(std::int64_t n) const;

    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    /// Throws DivisionByZero when o is zero.
    Fp operator/(const Fp& o) const;
    Fp operator-() const noexcept;

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp pow(std::uint64_t e) const noexcept;

    bool operator==(const Fp& o) const;
    std::strong_ordering operator<=>(const Fp& o) const;

private:
    struct raw_tag {};
    Fp(std::uint64_t v, std::uint64_t p, raw_tag) noexcept : v_(v), p_(p) {}
    void check_same(const Fp& o) const;

    std::uint64_t v_;
    std::uint64_t p_;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

enum class QuadraticCharacter { zero, square, nonsquare };

/// Euler's criterion x^((p-1)/2).
QuadraticCharacter legendre(const Fp& x);

inline bool is_square(const Fp& x) { return legendre(x) != QuadraticCharacter::nonsquare; }
inline bool is_nonzero_square(const Fp& x) { return legendre(x) == QuadraticCharacter::square; }

/// Both square roots of x, the one with the smaller representative first,
/// or nothing when x is a nonsquare.
std::optional<std::pair<Fp, Fp>> sqrt(const Fp& x);

/// Multiplicative inverse; throws DivisionByZero on zero.
Fp inv(const Fp& x);

/// a + b*sqrt(c) with c a fixed nonsquare of GF(p). Together with the
/// multiplication (x+y√c)(z+w√c) = (xz+ywc) + (yz+xw)√c this is GF(p^2).
class Fp2 {
public:
    /// Throws DomainError unless c is a nonsquare.
    Fp2(Fp a, Fp b, Fp c);
    /// Embeds a base-field element.
    static Fp2 embed(const Fp& a, const Fp& c) { return Fp2(a, a.zero(), c); }
    /// The element sqrt(c) itself.
    static Fp2 root(const Fp& c) { return Fp2(c.zero(), c.one(), c); }

    const Fp& a() const noexcept { return a_; }
    const Fp& b() const noexcept { return b_; }
    const Fp& c() const noexcept { return c_; }
    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }

    Fp2 operator+(const Fp2& o) const;
    Fp2 operator-(const Fp2& o) const;
    Fp2 operator*(const Fp2& o) const;
    Fp2 operator/(const Fp2& o) const { return *this * o.inverse(); }
    Fp2 operator-() const { return Fp2(-a_, -b_, c_, trusted{}); }

    Fp2 conjugate() const { return Fp2(a_, -b_, c_, trusted{}); }
    /// a^2 - c b^2, multiplicative.
    Fp norm() const { return a_ * a_ - c_ * b_ * b_; }
    Fp2 inverse() const;

    bool operator==(const Fp2& o) const;

private:
    struct trusted {};
    Fp2(Fp a, Fp b, Fp c, trusted) : a_(a), b_(b), c_(c) {}
    void check_same(const Fp2& o) const;

    Fp a_, b_, c_;
};

std::ostream& operator<<(std::ostream& os, const Fp2& x);

/// Overloads used by generic matrix code.
inline Fp reciprocal(const Fp& x) { return inv(x); }
inline Fp2 reciprocal(const Fp2& x) { return x.inverse(); }

Fp2 fp2_add(const Fp2& x, const Fp2& y);
Fp2 fp2_mul(const Fp2& x, const Fp2& y);
Fp2 fp2_inv(const Fp2& x);

}  // namespace poncelet::field

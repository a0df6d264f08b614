#include "poncelet/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "poncelet/errors.hpp"

namespace poncelet::algebra {

namespace {

Integer abs_gcd(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return boost::multiprecision::gcd(a, b);
}

std::uint64_t reduce(const Integer& v, std::uint64_t p) {
    Integer r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
    c_.reserve(coeffs.size());
    for (long long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& IntPolynomial::leading() const {
    if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Integer> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const Integer& s) const {
    std::vector<Integer> r = c_;
    for (auto& v : r) v *= s;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const { return *this * Integer(-1); }

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial result{1}, base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

Integer IntPolynomial::content() const {
    Integer g = 0;
    for (const auto& v : c_) g = abs_gcd(g, v);
    return g;
}

IntPolynomial IntPolynomial::primitive() const {
    if (is_zero()) return {};
    Integer g = content();
    if (leading() < 0) g = -g;
    return divide_scalar(g);
}

IntPolynomial IntPolynomial::divide_scalar(const Integer& s) const {
    if (s == 0) throw DivisionByZero("polynomial divided by zero");
    std::vector<Integer> r = c_;
    for (auto& v : r) {
        if (v % s != 0) throw InexactDivision("coefficient not divisible by " + s.str());
        v /= s;
    }
    return IntPolynomial(std::move(r));
}

Integer IntPolynomial::evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

field::Fp IntPolynomial::evaluate(const field::Fp& x) const {
    const std::uint64_t p = x.modulus();
    field::Fp acc = x.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + x.make(static_cast<std::int64_t>(reduce(*it, p)));
    return acc;
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& g) const {
    IntPolynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
    return acc;
}

IntPolynomial IntPolynomial::reverse(std::optional<std::size_t> d) const {
    const std::size_t n = d.value_or(is_zero() ? 0 : static_cast<std::size_t>(degree()));
    if (!is_zero() && static_cast<std::size_t>(degree()) > n) throw DomainError("reversal degree below polynomial degree");
    std::vector<Integer> r(n + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) r[n - i] = c_[i];
    return IntPolynomial(std::move(r));
}

std::vector<field::Fp> IntPolynomial::roots_mod(const field::Prime& p) const {
    std::vector<field::Fp> reduced;
    reduced.reserve(c_.size());
    for (const auto& v : c_) reduced.emplace_back(reduce(v, p.value()), p);
    std::vector<field::Fp> out;
    for (std::uint64_t xv = 0; xv < p.value(); ++xv) {
        const field::Fp x(xv, p);
        field::Fp acc(0, p);
        for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) acc = acc * x + *it;
        if (acc.is_zero()) out.push_back(x);
    }
    return out;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& v = c_[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        const Integer mag = v < 0 ? Integer(-v) : v;
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::vector<std::string> IntPolynomial::to_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(v.str());
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& f) { return os << f.to_string(); }

std::pair<IntPolynomial, IntPolynomial> pseudo_divide(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw DivisionByZero("pseudo-division by the zero polynomial");
    if (a.degree() < b.degree()) return {IntPolynomial{}, a};
    const Integer& lb = b.leading();
    const int db = b.degree();
    std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
    IntPolynomial r = a;
    int steps = a.degree() - db + 1;
    while (!r.is_zero() && r.degree() >= db) {
        const int shift = r.degree() - db;
        const Integer lr = r.leading();
        for (auto& v : q) v *= lb;
        q[static_cast<std::size_t>(shift)] += lr;
        r = r * lb - IntPolynomial::monomial(lr, static_cast<std::size_t>(shift)) * b;
        --steps;
    }
    Integer scale = 1;
    for (int i = 0; i < steps; ++i) scale *= lb;
    return {IntPolynomial(std::move(q)) * scale, r * scale};
}

std::optional<IntPolynomial> try_divide(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero polynomial");
    if (a.is_zero()) return IntPolynomial{};
    if (a.degree() < b.degree()) return std::nullopt;
    const Integer& lb = b.leading();
    std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    IntPolynomial r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const Integer& lr = r.leading();
        if (lr % lb != 0) return std::nullopt;
        const Integer t = lr / lb;
        const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
        q[shift] = t;
        r = r - IntPolynomial::monomial(t, shift) * b;
    }
    if (!r.is_zero()) return std::nullopt;
    return IntPolynomial(std::move(q));
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (auto q = try_divide(a, b)) return *q;
    throw InexactDivision("(" + b.to_string() + ") does not divide (" + a.to_string() + ")");
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return b.primitive() * b.content();
    if (b.is_zero()) return a.primitive() * a.content();
    const Integer cg = abs_gcd(a.content(), b.content());
    IntPolynomial u = a.primitive(), v = b.primitive();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPolynomial r = pseudo_divide(u, v).second;
        u = v;
        v = r.primitive();
    }
    return u.primitive() * cg;
}

bool equal_up_to_sign(const IntPolynomial& a, const IntPolynomial& b) { return a.primitive() == b.primitive(); }

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = IntPolynomial{1};
        return;
    }
    const IntPolynomial g = gcd(num_, den_);
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunction RationalFunction::constant(const Rational& q) {
    return RationalFunction(IntPolynomial::constant(boost::multiprecision::numerator(q)),
                            IntPolynomial::constant(boost::multiprecision::denominator(q)));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZero("rational function divided by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

std::optional<field::Fp> RationalFunction::evaluate(const field::Fp& x) const {
    const field::Fp d = den_.evaluate(x);
    if (d.is_zero()) return std::nullopt;
    return num_.evaluate(x) / d;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (den_ == IntPolynomial{1}) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

}  // namespace poncelet::algebra

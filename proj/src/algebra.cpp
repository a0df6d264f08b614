#include "poncelet/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "poncelet/errors.hpp"
#include "poncelet/tracer.hpp"

namespace poncelet::algebra {

unsigned totient(unsigned n) {
    unsigned result = n;
    for (unsigned q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        while (n % q == 0) n /= q;
        result -= result / q;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

std::vector<unsigned> polygon_lengths(const Prime& p) {
    std::vector<unsigned> out;
    for (unsigned d : divisors(static_cast<unsigned>(p.value() + 1)))
        if (d >= 3) out.push_back(d);
    return out;
}

unsigned iteration_length(unsigned n) {
    if (n < 3 || n % 2 == 0) throw DomainError("iteration length needs an odd n >= 3, got " + std::to_string(n));
    std::uint64_t r = 1;
    for (unsigned s = 1;; ++s) {
        r = (2 * r) % n;
        if (r == 1 || r == n - 1) return s;
    }
}

IntPolynomial cyclotomic(unsigned n) {
    if (n == 0) throw DomainError("cyclotomic polynomial of index 0");
    static std::mutex mu;
    static std::map<unsigned, IntPolynomial> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    IntPolynomial f = IntPolynomial::monomial(1, n) - IntPolynomial{1};
    for (unsigned d : divisors(n))
        if (d < n) f = divide_exact(f, cyclotomic(d));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, f);
    return f;
}

IntPolynomial poncelet_polynomial(unsigned n) {
    if (n < 3) throw DomainError("Poncelet polynomials start at n = 3");
    const IntPolynomial phi = cyclotomic(n);
    const auto m = static_cast<std::size_t>(phi.degree() / 2);

    // phi(x)/x^m = c_m + sum_j c_{m+j} (x^j + x^-j), and x^j + x^-j = V_j(x + 1/x).
    const IntPolynomial y = IntPolynomial::x();
    IntPolynomial v_prev{2}, v_cur = y;
    IntPolynomial q = IntPolynomial::constant(phi.coeff(m));
    for (std::size_t j = 1; j <= m; ++j) {
        q = q + v_cur * phi.coeff(m + j);
        IntPolynomial v_next = y * v_cur - v_prev;
        v_prev = std::move(v_cur);
        v_cur = std::move(v_next);
    }
    const IntPolynomial r = q.compose(IntPolynomial{0, 2});
    const IntPolynomial s = r.compose(IntPolynomial{-1, 2});
    IntPolynomial pn = s.reverse(m).primitive();
    if (static_cast<unsigned>(pn.degree()) != totient(n) / 2) {
        throw InvariantViolation("P_" + std::to_string(n) + " has unexpected degree");
    }
    return pn;
}

IntPolynomial double_polynomial(const IntPolynomial& pn, unsigned n) {
    const auto d = static_cast<unsigned>(pn.degree());
    const IntPolynomial k2 = IntPolynomial::monomial(1, 2);
    const IntPolynomial km2{-2, 1};
    IntPolynomial cleared;
    for (unsigned i = 0; i <= d; ++i) cleared = cleared + k2.pow(i) * km2.pow(2 * (d - i)) * pn.coeff(i);
    if (auto q = try_divide(cleared, pn)) cleared = *q;
    IntPolynomial out = cleared.primitive();
    if (static_cast<unsigned>(out.degree()) != totient(2 * n) / 2) {
        throw InexactDivision("doubling of P_" + std::to_string(n) + " gave degree " + std::to_string(out.degree()));
    }
    return out;
}

std::vector<RationalFunction> t_iterate(unsigned steps) {
    std::vector<RationalFunction> out{RationalFunction(IntPolynomial::x())};
    for (unsigned i = 0; i < steps; ++i) {
        const RationalFunction& t = out.back();
        const IntPolynomial& N = t.numerator();
        const IntPolynomial& D = t.denominator();
        const IntPolynomial shifted = N - D * Integer(2);
        out.emplace_back(N * N, shifted * shifted);
    }
    return out;
}

std::vector<Fp> t_iterate(const Fp& k, unsigned steps) {
    std::vector<Fp> out{k};
    const Fp two = k.make(2);
    for (unsigned i = 0; i < steps; ++i) {
        const Fp t = out.back();
        if (t == two) throw DivisionByZero("iterate t_" + std::to_string(i) + " = 2");
        const Fp u = t / (t - two);
        out.push_back(u * u);
    }
    return out;
}

std::vector<Fp> coefficients_by_iteration(unsigned n, const Prime& p) {
    if (n < 3 || n % 2 == 0) throw DomainError("iteration route needs an odd n >= 3, got " + std::to_string(n));
    if ((p.value() + 1) % n != 0) {
        throw DomainError(std::to_string(n) + " does not divide p+1 = " + std::to_string(p.value() + 1));
    }
    const unsigned s = iteration_length(n);
    for (unsigned m : polygon_lengths(p)) {
        if (m != n && m % 2 == 1 && iteration_length(m) == s) {
            throw AmbiguousIteration("lengths " + std::to_string(n) + " and " + std::to_string(m) +
                                     " share iteration length " + std::to_string(s));
        }
    }

    const pencil::Pencil pencil(p);
    const Fp one(1, p), two(2, p);
    std::vector<Fp> out;
    for (std::uint64_t kv = 1; kv < p.value(); ++kv) {
        const Fp k(kv, p);
        if (k == one || !pencil.diamond(k, one)) continue;
        Fp t = k;
        bool hit = false, singular = false;
        for (unsigned i = 1; i <= s; ++i) {
            if (t == two) {
                singular = true;
                break;
            }
            const Fp u = t / (t - two);
            t = u * u;
            if (t == k) {
                hit = (i == s);
                break;
            }
        }
        if (hit && !singular) out.push_back(k);
    }
    return out;
}

std::vector<Fp> coefficients_by_polynomial(unsigned n, const Prime& p) {
    if (n < 3) throw DomainError("polygon length must be at least 3");
    if ((p.value() + 1) % n != 0) {
        throw DomainError(std::to_string(n) + " does not divide p+1 = " + std::to_string(p.value() + 1));
    }
    std::vector<Fp> roots = poncelet_polynomial(n).roots_mod(p);
    if (roots.size() != totient(n) / 2) {
        throw InvariantViolation("P_" + std::to_string(n) + " has " + std::to_string(roots.size()) + " roots mod " +
                                 std::to_string(p.value()));
    }
    return roots;
}

std::map<unsigned, std::vector<Fp>> coefficient_census(const Prime& p) {
    std::map<unsigned, std::vector<Fp>> out;
    for (unsigned n : polygon_lengths(p)) out.emplace(n, coefficients_by_polynomial(n, p));
    return out;
}

pencil::RelationTable relation_table_by_polynomials(const pencil::Pencil& pencil) {
    const std::uint64_t p = pencil.order();
    std::vector<unsigned> length_of(p, 0);
    for (const auto& [n, ks] : coefficient_census(pencil.prime()))
        for (const auto& k : ks) length_of[k.value()] = n;

    pencil::RelationTable table(p);
    for (std::uint64_t a = 1; a < p; ++a) {
        const Fp alpha = pencil.element(static_cast<std::int64_t>(a));
        for (std::uint64_t b = 1; b < p; ++b) {
            if (a == b) continue;
            const Fp beta = pencil.element(static_cast<std::int64_t>(b));
            if (!pencil.diamond(alpha, beta)) continue;
            const unsigned n = length_of[(alpha / beta).value()];
            if (n == 0) {
                throw InvariantViolation("no polygon length for O_" + std::to_string(a) + " inside O_" +
                                         std::to_string(b));
            }
            table.set(a, b, n);
        }
    }
    return table;
}

std::vector<Fp> double_coefficient(const Fp& k) {
    if (k.is_zero() || k == k.one()) throw DomainError("doubling needs k different from 0 and 1");
    const auto roots = field::sqrt(k);
    if (!roots) throw DomainError("doubling needs a square k, got " + std::to_string(k.value()));
    std::vector<Fp> out;
    for (const Fp& r : {roots->first, roots->second}) {
        const Fp h = k.make(2) / (k.one() - field::inv(r));
        if (h != k && std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool existence_transfer_check(const Fp& h, const Fp& k) {
    if (h == k) return false;
    const auto roots = field::sqrt(k);
    if (!roots) return false;
    const Fp lhs = (h - h.one()) * (k - k.one());
    for (const Fp& r : {roots->first, roots->second}) {
        const Fp rp = r + r.one();
        if (lhs == rp * rp) return true;
    }
    return false;
}

namespace {

// Numerator of t_s - k with every factor k removed, all periods dividing s.
IntPolynomial raw_period_polynomial(unsigned s) {
    const RationalFunction t = t_iterate(s).back();
    IntPolynomial f = t.numerator() - t.denominator() * IntPolynomial::x();
    while (!f.is_zero() && f.coeff(0) == 0) f = divide_exact(f, IntPolynomial::x());
    return f.primitive();
}

}  // namespace

IntPolynomial period_polynomial(unsigned s) {
    if (s == 0) throw DomainError("period must be positive");
    IntPolynomial f = raw_period_polynomial(s);
    for (unsigned d : divisors(s)) {
        if (d == s) continue;
        const IntPolynomial lower = raw_period_polynomial(d);
        for (IntPolynomial g = gcd(f, lower); g.degree() > 0; g = gcd(f, lower)) f = divide_exact(f, g);
    }
    return f.primitive();
}

IntPolynomial iteration_polynomial(unsigned n) {
    const unsigned s = iteration_length(n);
    const IntPolynomial factor = gcd(period_polynomial(s), poncelet_polynomial(n)).primitive();
    if (static_cast<unsigned>(factor.degree()) != totient(n) / 2) {
        throw InvariantViolation("period polynomial does not contain P_" + std::to_string(n));
    }

    // Odd lengths sharing the period s all divide 2^s - 1 or 2^s + 1.
    std::vector<unsigned> rivals;
    for (unsigned m = 3; m <= (1u << s) + 1; m += 2)
        if (m != n && iteration_length(m) == s) rivals.push_back(m);

    for (std::uint64_t q = n - 1;; q += n) {
        if (q < 3 || !field::is_prime(q)) continue;
        if (std::any_of(rivals.begin(), rivals.end(), [&](unsigned m) { return (q + 1) % m == 0; })) continue;
        const Prime witness(q);
        const pencil::Pencil pencil(witness);
        const Fp one(1, witness);
        const auto roots = factor.roots_mod(witness);
        if (roots.size() != totient(n) / 2) break;
        for (const auto& k : roots) {
            if (k == one || !pencil.diamond(k, one)) {
                throw InvariantViolation("factor root outside O_1 at witness prime " + std::to_string(q));
            }
            const auto start = pencil.conic_points(one).front();
            if (tracer::trace(pencil, k, one, start).n != n) {
                throw InvariantViolation("factor root traces a different length at witness prime " +
                                         std::to_string(q));
            }
        }
        return factor;
    }
    throw InvariantViolation("factor for n = " + std::to_string(n) + " has the wrong root count at its witness prime");
}

}  // namespace poncelet::algebra

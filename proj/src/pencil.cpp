#include "poncelet/pencil.hpp"

#include <set>
#include <string>

#include "poncelet/errors.hpp"

namespace poncelet::pencil {

using field::legendre;
using field::QuadraticCharacter;

bool is_valid_parameter(const Fp& c) { return legendre(-c) == QuadraticCharacter::nonsquare; }

Fp select_c(const Prime& p) {
    for (std::uint64_t c = 1; c < p.value(); ++c) {
        const Fp candidate(c, p);
        if (is_valid_parameter(candidate)) return candidate;
    }
    throw DomainError("no admissible pencil parameter");  // unreachable for odd p
}

Pencil::Pencil(const Prime& p) : p_(p), c_(select_c(p)) {}

Pencil::Pencil(const Prime& p, const Fp& c) : p_(p), c_(c) {
    if (c.modulus() != p.value()) throw ModulusMismatch("pencil parameter from a different field");
    if (c.is_zero()) throw DomainError("pencil parameter must be nonzero");
}

Pencil Pencil::with_parameter(const Prime& p, const Fp& c) {
    Pencil pencil(p, c);
    if (!is_valid_parameter(pencil.c_)) {
        throw DomainError("c = " + std::to_string(c.value()) + " is not admissible for p = " +
                          std::to_string(p.value()) + " (p - c must be a nonsquare)");
    }
    return pencil;
}

void Pencil::require_index(const Fp& k) const {
    if (k.modulus() != p_.value()) throw ModulusMismatch("conic index from a different field");
    if (k.is_zero()) throw DomainError("conic index must lie in [1, p-1]");
}

ConicMatrix Pencil::conic(const Fp& k) const {
    require_index(k);
    return ConicMatrix(Mat3<Fp>::diagonal(c_.one(), k, c_ * k));
}

ProjPoint Pencil::base_point() const { return ProjPoint(c_.one(), c_.zero(), c_.zero()); }

ProjLine Pencil::base_line() const { return ProjLine(c_.one(), c_.zero(), c_.zero()); }

std::optional<Fp> Pencil::conic_index(const ProjPoint& P) const {
    if (P[0].is_zero()) return std::nullopt;
    const Fp s = P[1] * P[1] + c_ * P[2] * P[2];
    if (s.is_zero()) return std::nullopt;
    return -field::inv(s);
}

std::vector<ProjPoint> Pencil::conic_points(const Fp& k) const {
    require_index(k);
    std::vector<ProjPoint> out;
    out.reserve(p_.value() + 1);
    const Fp ck = c_ * k;
    for (std::uint64_t yv = 0; yv < p_.value(); ++yv) {
        const Fp y(yv, p_);
        // 1 + k y^2 + c k z^2 = 0
        if (auto roots = field::sqrt((-c_.one() - k * y * y) / ck)) {
            out.emplace_back(c_.one(), y, roots->first);
            if (roots->first != roots->second) out.emplace_back(c_.one(), y, roots->second);
        }
    }
    return out;
}

bool Pencil::diamond(const Fp& alpha, const Fp& beta) const {
    require_index(alpha);
    require_index(beta);
    if (alpha == beta) throw DomainError("diamond is only defined for distinct conics");
    const QuadraticCharacter q = legendre(-beta * (beta - alpha));
    return p_.mod4() == 1 ? q == QuadraticCharacter::nonsquare : q == QuadraticCharacter::square;
}

std::vector<Fp> Pencil::chain(const Fp& alpha, const Fp& beta) const {
    if (!diamond(alpha, beta)) {
        throw PreconditionViolation("chain requires O_" + std::to_string(alpha.value()) + " inside O_" +
                                    std::to_string(beta.value()));
    }
    std::vector<Fp> out{alpha, beta};
    Fp a = alpha, b = beta;
    while (true) {
        const Fp next = b * b / a;
        a = b;
        b = next;
        if (a == alpha && b == beta) break;
        out.push_back(b);
    }
    return out;
}

Collineation Pencil::transport(const Fp& k, const Fp& beta) const {
    require_index(k);
    return transport(beta);
}

Collineation Pencil::transport(const Fp& beta) const {
    require_index(beta);
    const Fp zero = c_.zero(), one = c_.one();

    if (legendre(beta) == QuadraticCharacter::square) {
        const Fp r = field::inv(field::sqrt(beta)->first);
        return Collineation(Mat3<Fp>::diagonal(one, r, r));
    }

    // The explicit constructions below are written for a reference parameter
    // c_ref; D = diag(1,1,sqrt(c/c_ref)) carries them to this pencil's c.
    std::optional<Mat3<Fp>> inverse_map;
    Fp c_ref = one;
    if (p_.mod4() == 3) {
        // Smallest nonzero square s with beta - s a nonzero square.
        for (std::uint64_t sv = 1; sv < p_.value(); ++sv) {
            const Fp s(sv, p_);
            if (!field::is_nonzero_square(s) || !field::is_nonzero_square(beta - s)) continue;
            const Fp rs = field::sqrt(s)->first;
            const Fp rt = field::sqrt(beta - s)->first;
            inverse_map = Mat3<Fp>{{{{one, zero, zero}, {zero, rs, -rt}, {zero, rt, rs}}}};
            c_ref = one;
            break;
        }
    } else {
        // Smallest nonsquare c_ref with beta - c_ref a nonzero square.
        for (std::uint64_t cv = 1; cv < p_.value(); ++cv) {
            const Fp cr(cv, p_);
            if (legendre(cr) != QuadraticCharacter::nonsquare || !field::is_nonzero_square(beta - cr)) continue;
            const Fp u = field::sqrt(beta - cr)->first;
            inverse_map = Mat3<Fp>{{{{one, zero, zero}, {zero, u, cr}, {zero, one, -u}}}};
            c_ref = cr;
            break;
        }
    }
    if (!inverse_map) {
        throw DomainError("no auxiliary parameter for transport by " + std::to_string(beta.value()));
    }

    const auto d = field::sqrt(c_ / c_ref);
    if (!d) throw DomainError("pencil parameter is not admissible; cannot transport");
    const Mat3<Fp> D = Mat3<Fp>::diagonal(one, one, d->first);
    const Mat3<Fp> D_inv = Mat3<Fp>::diagonal(one, one, field::inv(d->first));
    return Collineation((D_inv * *inverse_map * D).inverse());
}

Rotation Pencil::rotation_collineation(const Fp& beta, const ProjPoint& P, const ProjPoint& Q) const {
    const ConicMatrix outer = conic(beta);
    if (!outer.contains(P) || !outer.contains(Q)) {
        throw PreconditionViolation("rotation endpoints must lie on O_" + std::to_string(beta.value()));
    }
    const Fp& k = beta;
    const Fp p2 = P[1], p3 = P[2], q2 = Q[1], q3 = Q[2];
    const Fp a = -k * p2 * q2 + k * c_ * q3 * p3;
    const Fp b = -k * q2 * p3 - k * q3 * p2;
    const Fp zero = c_.zero(), one = c_.one();

    Rotation r{a, b, Collineation(Mat3<Fp>{{{{one, zero, zero}, {zero, a, c_ * b}, {zero, b, -a}}}}), std::nullopt};
    if (legendre(c_) == QuadraticCharacter::nonsquare) {
        const Fp2 z = Fp2::embed(zero, c_), e = Fp2::embed(one, c_);
        const Fp2 A = Fp2::embed(a, c_);
        const Fp2 B = Fp2::root(c_) * Fp2::embed(b, c_);
        r.embedded = Mat3<Fp2>{{{{e, z, z}, {z, A, B}, {z, B, -A}}}};
    }
    return r;
}

bool verify_partition(const Pencil& pencil) {
    const Fp c = pencil.c();
    const std::uint64_t p = pencil.order();
    for (const auto& P : projective::all_points(pencil.prime())) {
        const Fp x = P[0], y = P[1], z = P[2];
        const Fp yz = y * y + c * z * z;
        unsigned hits = 0;
        if (yz.is_zero()) ++hits;           // point equation
        if ((x * x).is_zero()) ++hits;      // line x = 0
        for (std::uint64_t kv = 1; kv < p; ++kv) {
            if ((x * x + Fp(kv, pencil.prime()) * yz).is_zero()) ++hits;
        }
        if (hits != 1) return false;
    }
    return true;
}

bool tangents_disjoint(const Pencil& pencil) {
    std::set<ProjLine> seen;
    for (std::uint64_t kv = 1; kv < pencil.order(); ++kv) {
        const Fp k = pencil.element(static_cast<std::int64_t>(kv));
        const ConicMatrix C = pencil.conic(k);
        for (const auto& R : pencil.conic_points(k)) {
            if (!seen.insert(projective::tangent_at(C, R)).second) return false;
        }
    }
    return true;
}

std::vector<LineSplit> secant_split(const Pencil& pencil) {
    std::vector<LineSplit> out;
    const ProjPoint origin = pencil.base_point();
    for (const auto& l : projective::all_lines(pencil.prime())) {
        if (!projective::incident(origin, l)) continue;
        bool on_squares = true, on_nonsquares = true;
        for (std::uint64_t kv = 1; kv < pencil.order(); ++kv) {
            const Fp k = pencil.element(static_cast<std::int64_t>(kv));
            const auto kind = projective::classify_line(pencil.conic(k), l);
            const bool square = field::is_nonzero_square(k);
            if (kind == projective::LineKind::tangent) {
                on_squares = on_nonsquares = false;
                break;
            }
            const bool secant = kind == projective::LineKind::secant;
            on_squares = on_squares && secant == square;
            on_nonsquares = on_nonsquares && secant != square;
        }
        out.push_back({l, on_squares ? SecantClass::squares
                                     : on_nonsquares ? SecantClass::nonsquares : SecantClass::mixed});
    }
    return out;
}

}  // namespace poncelet::pencil

#include "poncelet/projective.hpp"

#include <algorithm>
#include <ostream>

namespace poncelet::projective {

namespace {

template <class Tag>
std::ostream& print_triple(std::ostream& os, const Homogeneous<Tag>& h) {
    return os << "(" << h[0] << "," << h[1] << "," << h[2] << ")";
}

void require_regular(const ConicMatrix& C) {
    if (!C.is_regular()) throw SingularMatrix("degenerate conic (det = 0)");
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const ProjPoint& P) { return print_triple(os, P); }
std::ostream& operator<<(std::ostream& os, const ProjLine& l) { return print_triple(os, l); }

ConicMatrix::ConicMatrix(const Mat3<Fp>& m) : m_(m) {
    if (!(m == m.transpose())) throw DomainError("conic matrix must be symmetric");
}

Fp ConicMatrix::value(const Vec3<Fp>& v) const { return dot(v, m_ * v); }

Fp ConicMatrix::bilinear(const Vec3<Fp>& u, const Vec3<Fp>& v) const { return dot(u, m_ * v); }

Collineation::Collineation(const Mat3<Fp>& s) : s_(s) {
    if (s.det().is_zero()) throw SingularMatrix("collineation matrix must be regular");
}

bool incident(const ProjPoint& P, const ProjLine& l) { return dot(P.coords(), l.coords()).is_zero(); }

ProjLine line_through(const ProjPoint& P, const ProjPoint& Q) {
    if (P == Q) throw DomainError("line through a single point is not determined");
    return ProjLine(cross(P.coords(), Q.coords()));
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
    if (l == m) throw DomainError("meet of a line with itself is not a point");
    return ProjPoint(cross(l.coords(), m.coords()));
}

std::pair<ProjPoint, ProjPoint> points_spanning(const ProjLine& l) {
    // l x e_i lies on l; the two largest-index nonzero ones are independent.
    const Fp zero = l[0].zero(), one = l[0].one();
    const std::array<Vec3<Fp>, 3> basis = {{{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}};
    std::vector<ProjPoint> found;
    for (const auto& e : basis) {
        auto P = ProjPoint::try_from(cross(l.coords(), e));
        if (P && std::find(found.begin(), found.end(), *P) == found.end()) found.push_back(*P);
        if (found.size() == 2) return {found[0], found[1]};
    }
    throw DomainError("line does not span two points");  // unreachable for a nonzero line
}

LineKind classify_line(const ConicMatrix& C, const ProjLine& l) {
    require_regular(C);
    const auto [U, V] = points_spanning(l);
    const Fp b = C.bilinear(U.coords(), V.coords());
    const Fp disc = b * b - C.value(U.coords()) * C.value(V.coords());
    switch (field::legendre(disc)) {
        case field::QuadraticCharacter::zero:
            return LineKind::tangent;
        case field::QuadraticCharacter::square:
            return LineKind::secant;
        case field::QuadraticCharacter::nonsquare:
            break;
    }
    return LineKind::external;
}

std::vector<ProjPoint> intersect(const ConicMatrix& C, const ProjLine& l) {
    require_regular(C);
    const auto [U, V] = points_spanning(l);
    const Fp qu = C.value(U.coords());
    const Fp qv = C.value(V.coords());
    const Fp b = C.bilinear(U.coords(), V.coords());
    const auto at = [&](const Fp& t) {
        const auto& u = U.coords();
        const auto& v = V.coords();
        return ProjPoint(u[0] + t * v[0], u[1] + t * v[1], u[2] + t * v[2]);
    };

    std::vector<ProjPoint> out;
    if (qv.is_zero()) {
        // Points U + tV satisfy qu + 2tb = 0; V itself is on the conic.
        out.push_back(V);
        if (!b.is_zero()) out.push_back(at(-qu / (b + b)));
    } else if (auto r = field::sqrt(b * b - qu * qv)) {
        out.push_back(at((-b + r->first) / qv));
        if (r->first != r->second) out.push_back(at((-b + r->second) / qv));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ProjLine polar(const ConicMatrix& C, const ProjPoint& P) { return ProjLine(C.matrix() * P.coords()); }

PointKind classify_point(const ConicMatrix& C, const ProjPoint& P) {
    switch (classify_line(C, polar(C, P))) {
        case LineKind::tangent:
            return PointKind::on;
        case LineKind::secant:
            return PointKind::exterior;
        case LineKind::external:
            break;
    }
    return PointKind::inner;
}

ProjLine tangent_at(const ConicMatrix& C, const ProjPoint& P) {
    require_regular(C);
    if (!C.contains(P)) throw NotOnConic("tangent requested at a point off the conic");
    return polar(C, P);
}

ProjPoint apply(const Collineation& S, const ProjPoint& P) { return ProjPoint(S.matrix() * P.coords()); }

ProjLine apply(const Collineation& S, const ProjLine& l) {
    return ProjLine(S.matrix().transpose().inverse() * l.coords());
}

ConicMatrix conic_pushforward(const Collineation& S, const ConicMatrix& C) {
    const Mat3<Fp> inv = S.matrix().inverse();
    return ConicMatrix(inv.transpose() * C.matrix() * inv);
}

std::optional<ProjPoint> add_points(const ProjPoint& P, const ProjPoint& Q) {
    const auto& a = P.coords();
    const auto& b = Q.coords();
    return ProjPoint::try_from({a[0] + b[0], a[1] + b[1], a[2] + b[2]});
}

std::optional<ProjPoint> sum_points(const std::vector<ProjPoint>& pts) {
    if (pts.empty()) return std::nullopt;
    Vec3<Fp> acc = pts.front().coords();
    for (std::size_t i = 1; i < pts.size(); ++i) {
        for (int j = 0; j < 3; ++j) acc[j] += pts[i][j];
    }
    return ProjPoint::try_from(acc);
}

namespace {

template <class H>
std::vector<H> all_triples(const Prime& p) {
    const std::uint64_t q = p.value();
    std::vector<H> out;
    out.reserve(q * q + q + 1);
    const Fp zero(0, p), one(1, p);
    out.emplace_back(zero, zero, one);
    for (std::uint64_t z = 0; z < q; ++z) out.emplace_back(zero, one, Fp(z, p));
    for (std::uint64_t y = 0; y < q; ++y)
        for (std::uint64_t z = 0; z < q; ++z) out.emplace_back(one, Fp(y, p), Fp(z, p));
    return out;
}

}  // namespace

std::vector<ProjPoint> all_points(const Prime& p) { return all_triples<ProjPoint>(p); }
std::vector<ProjLine> all_lines(const Prime& p) { return all_triples<ProjLine>(p); }

}  // namespace poncelet::projective

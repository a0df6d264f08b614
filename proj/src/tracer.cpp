#include "poncelet/tracer.hpp"

#include <string>

#include "poncelet/errors.hpp"

namespace poncelet::tracer {

using projective::ConicMatrix;

namespace {

void require_diamond(const Pencil& pencil, const Fp& alpha, const Fp& beta) {
    if (!pencil.diamond(alpha, beta)) {
        throw PreconditionViolation("O_" + std::to_string(alpha.value()) + " does not lie inside O_" +
                                    std::to_string(beta.value()));
    }
}

// Second intersection of the tangent through B and A with O_beta.
ProjPoint next_vertex(const ConicMatrix& outer, const ProjPoint& B, const ProjPoint& A) {
    const Fp bilinear = outer.bilinear(B.coords(), A.coords());
    if (bilinear.is_zero()) throw PorismViolation("side is tangent to the outer conic");
    const Fp t = -(bilinear + bilinear) / outer.value(A.coords());
    const auto& b = B.coords();
    const auto& a = A.coords();
    return ProjPoint(b[0] + t * a[0], b[1] + t * a[1], b[2] + t * a[2]);
}

}  // namespace

std::pair<ProjPoint, ProjPoint> contact_points(const Pencil& pencil, const Fp& alpha, const Fp& beta,
                                               const ProjPoint& P) {
    require_diamond(pencil, alpha, beta);
    if (!pencil.conic(beta).contains(P)) throw NotOnConic("point is not on O_" + std::to_string(beta.value()));

    const Fp& c = pencil.c();
    const Fp one = c.one();
    const Fp ai = field::inv(alpha);
    const Fp p2 = P[1], p3 = P[2];  // P has x = 1 since it is on a pencil conic

    const auto root = field::sqrt(ai * ai * (-beta / c) * (beta - alpha));
    if (!root) throw PreconditionViolation("contact radicand is a nonsquare");

    std::vector<ProjPoint> found;
    if (!p2.is_zero()) {
        for (const Fp& r : {root->first, root->second}) {
            const Fp z = ai * beta * p3 + p2 * r;
            const Fp y = (-ai - c * p3 * z) / p2;
            found.emplace_back(one, y, z);
        }
    } else {
        const Fp z = ai * beta * p3;
        const auto y = field::sqrt(-ai - c * z * z);
        if (!y) throw PreconditionViolation("contact ordinate is a nonsquare");
        found.emplace_back(one, y->first, z);
        found.emplace_back(one, y->second, z);
    }

    const ConicMatrix inner = pencil.conic(alpha);
    for (const auto& A : found) {
        if (!inner.contains(A) || !projective::incident(P, projective::tangent_at(inner, A))) {
            throw PorismViolation("contact point fails the tangency check");
        }
    }
    if (found[0] == found[1]) throw PorismViolation("tangents through an exterior point coincide");
    if (found[1] < found[0]) std::swap(found[0], found[1]);
    return {found[0], found[1]};
}

Polygon trace(const Pencil& pencil, const Fp& alpha, const Fp& beta, const ProjPoint& start) {
    require_diamond(pencil, alpha, beta);
    const ConicMatrix outer = pencil.conic(beta);
    if (!outer.contains(start)) throw NotOnConic("start point is not on O_" + std::to_string(beta.value()));

    Polygon poly{0, alpha, beta, {}, {}};
    ProjPoint B = start;
    std::optional<ProjPoint> previous;
    const std::uint64_t cap = pencil.order() + 2;
    for (std::uint64_t step = 0; step < cap; ++step) {
        const auto [lo, hi] = contact_points(pencil, alpha, beta, B);
        const ProjPoint A = !previous ? lo : (lo == *previous ? hi : lo);
        poly.vertices.push_back(B);
        poly.contacts.push_back(A);
        B = next_vertex(outer, B, A);
        previous = A;
        if (B == start) {
            poly.n = static_cast<unsigned>(poly.vertices.size());
            return poly;
        }
    }
    throw PorismViolation("polygon did not close within p+2 steps");
}

unsigned verify_porism(const Pencil& pencil, const Fp& alpha, const Fp& beta) {
    std::optional<unsigned> common;
    for (const auto& start : pencil.conic_points(beta)) {
        const unsigned n = trace(pencil, alpha, beta, start).n;
        if (common && *common != n) {
            throw PorismViolation("lengths " + std::to_string(*common) + " and " + std::to_string(n) + " for O_" +
                                  std::to_string(alpha.value()) + " inside O_" + std::to_string(beta.value()));
        }
        common = n;
    }
    return *common;
}

SumReport sum_report(const Polygon& poly) {
    SumReport r;
    const std::size_t n = poly.vertices.size();
    if (n == 0 || poly.contacts.size() != n) return r;
    const Fp one = poly.alpha.one(), zero = poly.alpha.zero();
    const ProjPoint origin(one, zero, zero);
    const auto at_origin = [&](const std::optional<ProjPoint>& P) { return P && *P == origin; };

    r.vertex_sum = at_origin(projective::sum_points(poly.vertices));
    r.contact_sum = at_origin(projective::sum_points(poly.contacts));

    if (n % 2 == 0) {
        std::vector<ProjPoint> odd, even;
        for (std::size_t i = 0; i < n; ++i) (i % 2 == 0 ? odd : even).push_back(poly.contacts[i]);
        r.alternating_contacts = at_origin(projective::sum_points(odd)) && at_origin(projective::sum_points(even));
        bool opposite = true;
        for (std::size_t i = 0; i < n / 2; ++i) {
            opposite = opposite && at_origin(projective::add_points(poly.vertices[i], poly.vertices[i + n / 2]));
        }
        r.opposite_vertices = opposite;
    }

    bool plus = true;
    for (std::size_t i = 0; i < n; ++i) {
        const auto sum = projective::add_points(poly.vertices[i], poly.vertices[(i + 1) % n]);
        plus = plus && sum && *sum == poly.contacts[i];
    }
    r.plus_on_a = plus;
    return r;
}

bool check_sum_identities(const Polygon& poly) {
    const SumReport r = sum_report(poly);
    return r.vertex_sum && r.contact_sum && r.alternating_contacts.value_or(true) && r.opposite_vertices.value_or(true);
}

std::map<unsigned, std::vector<Fp>> census(const Pencil& pencil, const Fp& beta) {
    std::map<unsigned, std::vector<Fp>> out;
    for (std::uint64_t a = 1; a < pencil.order(); ++a) {
        const Fp alpha = pencil.element(static_cast<std::int64_t>(a));
        if (alpha == beta || !pencil.diamond(alpha, beta)) continue;
        out[verify_porism(pencil, alpha, beta)].push_back(alpha);
    }
    return out;
}

pencil::RelationTable relation_table_by_tracing(const Pencil& pencil) {
    const std::uint64_t p = pencil.order();
    pencil::RelationTable table(p);
    for (std::uint64_t b = 1; b < p; ++b) {
        const Fp beta = pencil.element(static_cast<std::int64_t>(b));
        const ProjPoint start = pencil.conic_points(beta).front();
        for (std::uint64_t a = 1; a < p; ++a) {
            const Fp alpha = pencil.element(static_cast<std::int64_t>(a));
            if (a == b || !pencil.diamond(alpha, beta)) continue;
            table.set(a, b, trace(pencil, alpha, beta, start).n);
        }
    }
    return table;
}

}  // namespace poncelet::tracer

#pragma once

// Geometric construction of Poncelet polygons inside the pencil.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "poncelet/pencil.hpp"

namespace poncelet::tracer {

using field::Fp;
using pencil::Pencil;
using projective::ProjPoint;

/// Vertices B_1..B_n on O_beta and contacts A_1..A_n on O_alpha, where A_i is
/// the point where side B_i B_{i+1} touches O_alpha.
struct Polygon {
    unsigned n = 0;
    Fp alpha;
    Fp beta;
    std::vector<ProjPoint> vertices;
    std::vector<ProjPoint> contacts;
};

/// Contact points on O_alpha of the two tangents through P on O_beta,
/// ascending. Throws PreconditionViolation unless diamond(alpha, beta), and
/// NotOnConic if P is not on O_beta.
std::pair<ProjPoint, ProjPoint> contact_points(const Pencil& pencil, const Fp& alpha, const Fp& beta,
                                               const ProjPoint& P);

/// Traces the polygon from start, first along the tangent with the smaller
/// contact point. Throws PreconditionViolation (non-diamond), NotOnConic (bad
/// start) or PorismViolation (no closure within p+2 steps).
Polygon trace(const Pencil& pencil, const Fp& alpha, const Fp& beta, const ProjPoint& start);

/// Traces from every point of O_beta and returns the common length.
/// Throws PorismViolation if two starts disagree.
unsigned verify_porism(const Pencil& pencil, const Fp& alpha, const Fp& beta);

struct SumReport {
    bool vertex_sum = false;   ///< sum of B_i is (1,0,0)
    bool contact_sum = false;  ///< sum of A_i is (1,0,0)
    /// Even n only: sums of odd- and even-indexed contacts are both (1,0,0).
    std::optional<bool> alternating_contacts;
    /// Even n only: B_i + B_{i+n/2} is (1,0,0) for every i.
    std::optional<bool> opposite_vertices;
    /// A_i = B_i + B_{i+1} for every i.
    bool plus_on_a = false;

    bool all() const {
        return vertex_sum && contact_sum && alternating_contacts.value_or(true) && opposite_vertices.value_or(true) &&
               plus_on_a;
    }
};

SumReport sum_report(const Polygon& poly);

/// Vertex, contact, alternating and opposite-vertex sums all equal (1,0,0).
bool check_sum_identities(const Polygon& poly);

/// Polygon length -> inner indices alpha carrying it around O_beta, found by
/// verify_porism over every alpha inside O_beta.
std::map<unsigned, std::vector<Fp>> census(const Pencil& pencil, const Fp& beta);

/// Relation table from one trace per diamond pair.
pencil::RelationTable relation_table_by_tracing(const Pencil& pencil);

}  // namespace poncelet::tracer

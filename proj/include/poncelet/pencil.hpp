#pragma once

// The pencil O_k: x^2 + k y^2 + c k z^2 = 0, k = 1..p-1, which together with
// the point (1,0,0) and the line x = 0 partitions PG(2,p).

#include <cstdint>
#include <optional>
#include <vector>

#include "poncelet/field.hpp"
#include "poncelet/projective.hpp"

namespace poncelet::pencil {

using field::Fp;
using field::Fp2;
using field::Prime;
using projective::Collineation;
using projective::ConicMatrix;
using projective::Mat3;
using projective::ProjLine;
using projective::ProjPoint;

/// c is admissible iff p - c is a nonsquare, so that y^2 + c z^2 = 0 has
/// only the trivial solution.
bool is_valid_parameter(const Fp& c);

/// Smallest admissible c: 1 when p = 3 (mod 4), the least nonsquare otherwise.
Fp select_c(const Prime& p);

/// Rotation fixing O_beta and carrying P to Q.
struct Rotation {
    Fp a;
    Fp b;
    /// [[1,0,0],[0,a,cb],[0,b,-a]] acting on PG(2,p).
    Collineation on_plane;
    /// [[1,0,0],[0,a,√c b],[0,√c b,-a]] acting on the image of PG(2,p) in
    /// PG(2,p^2) under diag(1,1,√c). Present only when c is a nonsquare.
    std::optional<Mat3<Fp2>> embedded;
};

class Pencil {
public:
    /// Canonical pencil with c = select_c(p).
    explicit Pencil(const Prime& p);
    /// Pencil with an explicit parameter. Not validated, so a wrong c can be
    /// studied; use with_parameter for checked construction.
    Pencil(const Prime& p, const Fp& c);
    /// Throws DomainError unless is_valid_parameter(c).
    static Pencil with_parameter(const Prime& p, const Fp& c);

    const Prime& prime() const noexcept { return p_; }
    const Fp& c() const noexcept { return c_; }
    std::uint64_t order() const noexcept { return p_.value(); }
    /// Field element n mod p.
    Fp element(std::int64_t n) const { return c_.make(n); }

    /// diag(1, k, c k). Throws DomainError for k = 0.
    ConicMatrix conic(const Fp& k) const;
    ProjPoint base_point() const;
    /// The line x = 0.
    ProjLine base_line() const;

    /// Index k with P on O_k, or nothing for points of x = 0 and (1,0,0).
    std::optional<Fp> conic_index(const ProjPoint& P) const;

    /// All p+1 points of O_k as (1,y,z), ascending.
    std::vector<ProjPoint> conic_points(const Fp& k) const;

    /// O_alpha lies inside O_beta, decided by the quadratic character of
    /// (-beta)(beta - alpha). Throws DomainError if alpha = beta or either is 0.
    bool diamond(const Fp& alpha, const Fp& beta) const;

    /// Closed chain alpha -> beta -> beta^2/alpha -> ... back to alpha,
    /// including the closing index. Throws PreconditionViolation unless
    /// diamond(alpha, beta).
    std::vector<Fp> chain(const Fp& alpha, const Fp& beta) const;

    /// A collineation mapping O_k to O_{beta k} for every k (in particular
    /// O_1 to O_beta). Throws DomainError for beta = 0.
    Collineation transport(const Fp& beta) const;
    /// Same matrix; k is only checked for being a valid index.
    Collineation transport(const Fp& k, const Fp& beta) const;

    /// Throws PreconditionViolation unless P and Q lie on O_beta.
    Rotation rotation_collineation(const Fp& beta, const ProjPoint& P, const ProjPoint& Q) const;

private:
    void require_index(const Fp& k) const;

    Prime p_;
    Fp c_;
};

/// True iff the point equation y^2+cz^2=0, the line x=0 and the p-1 conics
/// cover every point of the plane exactly once.
bool verify_partition(const Pencil& pencil);

/// True iff no line is tangent to two different conics of the pencil.
bool tangents_disjoint(const Pencil& pencil);

enum class SecantClass { squares, nonsquares, mixed };

/// A line through (1,0,0) and the indices k for which it is a secant of O_k:
/// all squares, all nonsquares, or neither.
struct LineSplit {
    ProjLine line;
    SecantClass secant_on;
};

/// One entry per line through (1,0,0). Every such line must be a secant or
/// external line of each O_k; a tangent makes the entry mixed.
std::vector<LineSplit> secant_split(const Pencil& pencil);

/// Relation table of a plane: entry (alpha, beta) holds the Poncelet length
/// n if O_alpha lies inside O_beta, nothing otherwise. Rows are the inner
/// conic alpha, columns the outer conic beta, both 1-based.
class RelationTable {
public:
    explicit RelationTable(std::uint64_t p) : p_(p), cells_((p - 1) * (p - 1)) {}

    std::uint64_t order() const noexcept { return p_; }
    const std::optional<unsigned>& at(std::uint64_t alpha, std::uint64_t beta) const {
        return cells_[index(alpha, beta)];
    }
    void set(std::uint64_t alpha, std::uint64_t beta, std::optional<unsigned> n) { cells_[index(alpha, beta)] = n; }

    friend bool operator==(const RelationTable&, const RelationTable&) = default;

private:
    std::size_t index(std::uint64_t alpha, std::uint64_t beta) const { return (alpha - 1) * (p_ - 1) + (beta - 1); }

    std::uint64_t p_;
    std::vector<std::optional<unsigned>> cells_;
};

}  // namespace poncelet::pencil

#pragma once

// Points, lines, conics and collineations of the coordinate plane PG(2,p).

#include <array>
#include <compare>
#include <iosfwd>
#include <optional>
#include <vector>

#include "poncelet/errors.hpp"
#include "poncelet/field.hpp"

namespace poncelet::projective {

using field::Fp;
using field::Prime;

template <class T>
using Vec3 = std::array<T, 3>;

template <class T>
T dot(const Vec3<T>& u, const Vec3<T>& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

template <class T>
Vec3<T> cross(const Vec3<T>& u, const Vec3<T>& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

/// Dense 3x3 matrix over any field type with the usual arithmetic operators.
template <class T>
struct Mat3 {
    std::array<Vec3<T>, 3> rows;

    const T& operator()(int i, int j) const { return rows[i][j]; }
    T& operator()(int i, int j) { return rows[i][j]; }

    static Mat3 diagonal(const T& a, const T& b, const T& c) {
        const T z = a - a;
        return Mat3{{{{a, z, z}, {z, b, z}, {z, z, c}}}};
    }

    Mat3 transpose() const {
        Mat3 r = *this;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
        return r;
    }

    T det() const {
        const auto& m = rows;
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    /// Adjugate over determinant; throws SingularMatrix.
    Mat3 inverse() const {
        const T d = det();
        if (d.is_zero()) throw SingularMatrix("matrix is not invertible");
        const T di = reciprocal(d);
        Mat3 r = *this;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const int a0 = (j + 1) % 3, a1 = (j + 2) % 3;
                const int b0 = (i + 1) % 3, b1 = (i + 2) % 3;
                r(i, j) = (rows[a0][b0] * rows[a1][b1] - rows[a0][b1] * rows[a1][b0]) * di;
            }
        }
        return r;
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r = *this;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r(i, j) = rows[i][0] * o(0, j) + rows[i][1] * o(1, j) + rows[i][2] * o(2, j);
        return r;
    }

    Vec3<T> operator*(const Vec3<T>& v) const { return {dot(rows[0], v), dot(rows[1], v), dot(rows[2], v)}; }

    Mat3 scaled(const T& s) const {
        Mat3 r = *this;
        for (auto& row : r.rows)
            for (auto& x : row) x = x * s;
        return r;
    }

    bool operator==(const Mat3& o) const { return rows == o.rows; }
};

/// True when a = lambda * b for some nonzero lambda.
template <class T>
bool equal_up_to_scalar(const Mat3<T>& a, const Mat3<T>& b) {
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (b(i, j).is_zero()) continue;
            if (a(i, j).is_zero()) return false;
            const T lambda = a(i, j) / b(i, j);
            return a == b.scaled(lambda);
        }
    }
    return false;
}

namespace detail {
struct PointTag {};
struct LineTag {};
}  // namespace detail

/// A homogeneous triple up to nonzero scalars, stored with its first nonzero
/// coordinate scaled to 1. Two triples are equal iff they are the same
/// projective object.
template <class Tag>
class Homogeneous {
public:
    /// Throws DomainError for the zero triple.
    Homogeneous(const Fp& x, const Fp& y, const Fp& z) : c_{x, y, z} { normalize(); }
    explicit Homogeneous(const Vec3<Fp>& v) : c_(v) { normalize(); }
    /// Normalizes v, or returns nothing when v is the zero vector.
    static std::optional<Homogeneous> try_from(const Vec3<Fp>& v) {
        if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) return std::nullopt;
        return Homogeneous(v);
    }

    const Vec3<Fp>& coords() const noexcept { return c_; }
    const Fp& operator[](int i) const { return c_[i]; }

    friend bool operator==(const Homogeneous& a, const Homogeneous& b) { return a.c_ == b.c_; }
    friend std::strong_ordering operator<=>(const Homogeneous& a, const Homogeneous& b) {
        for (int i = 0; i < 3; ++i) {
            if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

private:
    void normalize() {
        for (int i = 0; i < 3; ++i) {
            if (!c_[i].is_zero()) {
                const Fp s = field::inv(c_[i]);
                for (auto& x : c_) x *= s;
                return;
            }
        }
        throw DomainError("(0,0,0) is not a projective point or line");
    }

    Vec3<Fp> c_;
};

using ProjPoint = Homogeneous<detail::PointTag>;
using ProjLine = Homogeneous<detail::LineTag>;

std::ostream& operator<<(std::ostream& os, const ProjPoint& P);
std::ostream& operator<<(std::ostream& os, const ProjLine& l);

/// Symmetric 3x3 matrix of a quadratic form; a conic when regular.
class ConicMatrix {
public:
    /// Throws DomainError when m is not symmetric.
    explicit ConicMatrix(const Mat3<Fp>& m);

    const Mat3<Fp>& matrix() const noexcept { return m_; }
    bool is_regular() const { return !m_.det().is_zero(); }

    /// v^T M v
    Fp value(const Vec3<Fp>& v) const;
    /// u^T M v
    Fp bilinear(const Vec3<Fp>& u, const Vec3<Fp>& v) const;
    bool contains(const ProjPoint& P) const { return value(P.coords()).is_zero(); }

    friend bool operator==(const ConicMatrix&, const ConicMatrix&) = default;

private:
    Mat3<Fp> m_;
};

/// Regular matrix acting on points by P -> S P.
class Collineation {
public:
    /// Throws SingularMatrix when det(s) = 0.
    explicit Collineation(const Mat3<Fp>& s);

    const Mat3<Fp>& matrix() const noexcept { return s_; }
    Collineation inverse() const { return Collineation(s_.inverse()); }
    Collineation operator*(const Collineation& o) const { return Collineation(s_ * o.s_); }

private:
    Mat3<Fp> s_;
};

enum class LineKind { tangent, secant, external };
enum class PointKind { on, exterior, inner };

bool incident(const ProjPoint& P, const ProjLine& l);
ProjLine line_through(const ProjPoint& P, const ProjPoint& Q);
ProjPoint meet(const ProjLine& l, const ProjLine& m);

/// Two distinct points spanning the line.
std::pair<ProjPoint, ProjPoint> points_spanning(const ProjLine& l);

/// Number of common points decided from the discriminant of the form restricted
/// to the line. Throws SingularMatrix for a degenerate conic.
LineKind classify_line(const ConicMatrix& C, const ProjLine& l);

/// Polar of P with respect to C, i.e. the line C P.
ProjLine polar(const ConicMatrix& C, const ProjPoint& P);

/// Position of P relative to C via the classification of its polar.
PointKind classify_point(const ConicMatrix& C, const ProjPoint& P);

/// Tangent line at a point of the conic. Throws NotOnConic.
ProjLine tangent_at(const ConicMatrix& C, const ProjPoint& P);

/// The conic points on l (zero, one or two of them), ascending.
std::vector<ProjPoint> intersect(const ConicMatrix& C, const ProjLine& l);

ProjPoint apply(const Collineation& S, const ProjPoint& P);
/// Image of a line: (S^T)^{-1} l.
ProjLine apply(const Collineation& S, const ProjLine& l);
/// Matrix of the image conic, (S^{-1})^T C S^{-1}.
ConicMatrix conic_pushforward(const Collineation& S, const ConicMatrix& C);

/// Sum of the canonical representatives, renormalized; nothing if the sum is
/// the zero vector.
std::optional<ProjPoint> add_points(const ProjPoint& P, const ProjPoint& Q);
std::optional<ProjPoint> sum_points(const std::vector<ProjPoint>& pts);

/// All p^2+p+1 points in ascending canonical order.
std::vector<ProjPoint> all_points(const Prime& p);
/// All p^2+p+1 lines in ascending canonical order.
std::vector<ProjLine> all_lines(const Prime& p);

}  // namespace poncelet::projective

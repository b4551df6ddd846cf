#pragma once

#include <stdexcept>
#include <string>

#include "ultraspec/valuation.hpp"

namespace ultraspec {

enum class BallKind { Open, Closed };

/**
 * A ball in (Q, |.|_p) with radius in the value group.
 *
 * Radii are restricted to {p^k}: over Q_p every ball with an arbitrary
 * positive real radius equals one whose radius lies in the value
 * group, and restricting keeps every comparison exact.
 */
struct Ball {
    Rational center;
    AbsValue radius;
    BallKind kind;

    Ball(Rational c, AbsValue r, BallKind k) : center(std::move(c)), radius(r), kind(k) {
        if (radius.is_zero()) throw std::invalid_argument("ball radius must be nonzero");
    }
};

inline bool ball_contains(const PAdicContext& ctx, const Ball& b, const Rational& y) {
    const AbsValue d = dist_p(ctx, b.center, y);
    return b.kind == BallKind::Open ? d < b.radius : d <= b.radius;
}

/**
 * True iff y lies in b. When true, the ball of the same radius and
 * kind centered at y has exactly the same members as b: every point of
 * an ultrametric ball is a center.
 */
inline bool recenter_equivalent(const PAdicContext& ctx, const Ball& b, const Rational& y) {
    return ball_contains(ctx, b, y);
}

enum class BallRelation { Disjoint, LeftInsideRight, RightInsideLeft, Equal };

inline std::string to_string(BallRelation r) {
    switch (r) {
        case BallRelation::Disjoint: return "Disjoint";
        case BallRelation::LeftInsideRight: return "LeftInsideRight";
        case BallRelation::RightInsideLeft: return "RightInsideLeft";
        case BallRelation::Equal: return "Equal";
    }
    throw std::logic_error("unreachable");
}

// Since |.|_p only attains values p^j, the open ball of radius p^k has
// exactly the members of the closed ball of radius p^(k-1). This maps
// any ball to the exponent of its equivalent closed radius.
inline long long closed_radius_exponent(const Ball& b) {
    const long long k = b.radius.exponent();
    return b.kind == BallKind::Closed ? k : k - 1;
}

/**
 * Exact dichotomy between two balls, compared as membership sets:
 * disjoint, or the smaller one sits inside the other, or equal.
 */
inline BallRelation balls_relation(const PAdicContext& ctx, const Ball& a, const Ball& b) {
    const long long ka = closed_radius_exponent(a);
    const long long kb = closed_radius_exponent(b);
    const AbsValue d = dist_p(ctx, a.center, b.center);

    const bool meet = d <= AbsValue::ppow(std::max(ka, kb));
    if (!meet) return BallRelation::Disjoint;
    if (ka == kb) return BallRelation::Equal;
    return ka < kb ? BallRelation::LeftInsideRight : BallRelation::RightInsideLeft;
}

inline bool sphere_contains(const PAdicContext& ctx, const Rational& center,
                            const AbsValue& r, const Rational& y) {
    if (r.is_zero()) throw std::invalid_argument("sphere radius must be nonzero");
    return dist_p(ctx, center, y) == r;
}

enum class EqualSidePair { XY_YZ, YZ_XZ, XY_XZ, Equilateral };

/**
 * The three pairwise distances of a nondegenerate triple, with the
 * equal pair identified. In an ultrametric space at least two sides
 * are always equal and the third is no larger.
 */
struct TriangleReport {
    AbsValue d_xy;
    AbsValue d_yz;
    AbsValue d_xz;
    EqualSidePair equal_pair;
    AbsValue equal_length;
    AbsValue third_length;
};

inline TriangleReport isosceles_witness(const PAdicContext& ctx, const Rational& x,
                                        const Rational& y, const Rational& z) {
    if (x == y || y == z || x == z) throw std::domain_error("not a triangle");
    const AbsValue dxy = dist_p(ctx, x, y);
    const AbsValue dyz = dist_p(ctx, y, z);
    const AbsValue dxz = dist_p(ctx, x, z);

    TriangleReport rep{dxy, dyz, dxz, EqualSidePair::Equilateral, dxy, dxy};
    if (dxy == dyz && dyz == dxz) {
        rep.equal_pair = EqualSidePair::Equilateral;
        rep.equal_length = dxy;
        rep.third_length = dxy;
    } else if (dxy == dyz) {
        rep.equal_pair = EqualSidePair::XY_YZ;
        rep.equal_length = dxy;
        rep.third_length = dxz;
    } else if (dyz == dxz) {
        rep.equal_pair = EqualSidePair::YZ_XZ;
        rep.equal_length = dyz;
        rep.third_length = dxy;
    } else if (dxy == dxz) {
        rep.equal_pair = EqualSidePair::XY_XZ;
        rep.equal_length = dxy;
        rep.third_length = dyz;
    } else {
        // Impossible in an ultrametric space.
        throw std::logic_error("scalene triangle under an ultrametric");
    }
    if (rep.third_length > rep.equal_length)
        throw std::logic_error("third side exceeds the equal pair");
    return rep;
}

} // namespace ultraspec

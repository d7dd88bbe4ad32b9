#pragma once

#include <optional>
#include <utility>

#include "diskcolor/geometry.hpp"

namespace diskcolor {

// Chord-slope parametrization of the rational points of a circle: the line
// through the base point B with slope t meets the circle again at a rational
// point P(t); t = infinity is the vertical chord, and the tangent slope at B
// maps to B itself. Increasing t traverses the circle counterclockwise,
// wrapping through infinity (projective line).
struct ArcParam {
    bool infinite = false;
    Rational value = 0;

    static ArcParam inf() { return {true, 0}; }
    static ArcParam of(Rational v) { return {false, std::move(v)}; }

    friend bool operator==(const ArcParam& a, const ArcParam& b) {
        if (a.infinite || b.infinite) return a.infinite == b.infinite;
        return a.value == b.value;
    }
};

inline Point point_at(const Circle& c, const ArcParam& t) {
    const Point& b = c.base_point;
    if (t.infinite) {
        // Second intersection of the vertical line through B.
        return Point(b.x, 2 * c.center.y - b.y);
    }
    const Point u(1, t.value);
    const Rational s = -2 * dot(b - c.center, u) / norm_sq(u);
    return b + s * u;
}

inline ArcParam param_of(const Circle& c, const Point& p) {
    if (side_of_circle(p, c) != Side::On)
        throw PointNotOnCircle("param_of: point is not on the circle");
    const Point& b = c.base_point;
    if (p == b) {
        // Tangent slope at the base point.
        if (c.center.y == b.y) return ArcParam::inf();
        return ArcParam::of((b.x - c.center.x) / (c.center.y - b.y));
    }
    if (p.x == b.x) return ArcParam::inf();
    return ArcParam::of((p.y - b.y) / (p.x - b.x));
}

// A parameter strictly inside the CCW param interval from s to e, at Moebius
// fraction lambda in (0,1); lambda = 1/2 picks the projective midpoint.
inline ArcParam param_between(const ArcParam& s, const ArcParam& e, const Rational& lambda) {
    if (lambda <= 0 || lambda >= 1) throw Error("param_between: lambda must be in (0,1)");
    if (s == e) throw DegenerateArc("param_between: empty interval");
    if (s.infinite) return ArcParam::of(e.value - (1 - lambda) / lambda);
    if (e.infinite) return ArcParam::of(s.value + lambda / (1 - lambda));
    if (s.value < e.value) {
        const Rational psi = lambda / (1 - lambda);
        return ArcParam::of((s.value + psi * e.value) / (1 + psi));
    }
    // Interval wraps through infinity.
    const Rational psi = -lambda / (1 - lambda);
    if (psi == -1) return ArcParam::inf();
    return ArcParam::of((s.value + psi * e.value) / (1 + psi));
}

// Rational point strictly inside the CCW arc from p to q (p != q, both on c).
// The result is certified by arc_order before returning.
inline Point point_in_arc(const Circle& c, const Point& p, const Point& q, const Rational& lambda) {
    const Point x = point_at(c, param_between(param_of(c, p), param_of(c, q), lambda));
    if (!strictly_between_on_arc(c, p, x, q))
        throw Error("point_in_arc: certification failed");
    return x;
}

// Rational point exactly on c within eps of target, found by a coarse-to-fine
// chord-slope sweep anchored at the slope of the chord through the target.
// Candidates with few bits are tried first.
inline Point rational_point_on_circle_near(const Circle& c, const Point& target,
                                           const Rational& eps, unsigned budget = 256) {
    if (eps <= 0) throw Error("rational_point_on_circle_near: eps must be positive");
    const Rational eps_sq = eps * eps;
    if (dist_sq(c.base_point, target) < eps_sq) return c.base_point;

    std::optional<Rational> that; // slope of chord base -> target, if not vertical
    if (target.x != c.base_point.x)
        that = (target.y - c.base_point.y) / (target.x - c.base_point.x);

    auto ok = [&](const Point& p) { return dist_sq(p, target) < eps_sq; };

    if (!that) {
        const Point p = point_at(c, ArcParam::inf());
        if (ok(p)) return p;
    }
    auto try_level = [&](unsigned j) -> std::optional<Point> {
        if (that) {
            // Dyadic roundings of the anchor slope at step 2^-j.
            const BigInt scaled_num = numerator(*that) * (BigInt(1) << j);
            const BigInt f = scaled_num / denominator(*that); // truncation
            for (int off = -1; off <= 2; ++off) {
                const Rational t(f + off, BigInt(1) << j);
                const Point p = point_at(c, ArcParam::of(t));
                if (ok(p)) return p;
            }
        } else {
            // Vertical anchor chord: sweep steep slopes of both signs.
            const Rational big(BigInt(1) << j, 1);
            for (const Rational& t : {big, -big}) {
                const Point p = point_at(c, ArcParam::of(t));
                if (ok(p)) return p;
            }
        }
        return std::nullopt;
    };
    // The slope step needed is about eps / |dP/dt|; start the sweep a little
    // coarser than that and fall back to a full coarse-to-fine pass.
    unsigned j_start = 0;
    if (eps < 1) {
        const Rational f = pow2_floor(eps);
        const long e = static_cast<long>(bit_size(denominator(f))) - 1;
        j_start = e > 8 ? static_cast<unsigned>(e - 8) : 0;
    }
    for (unsigned j = j_start; j <= budget; ++j)
        if (auto p = try_level(j)) return *p;
    for (unsigned j = 0; j < j_start; ++j)
        if (auto p = try_level(j)) return *p;
    throw NoRationalPointFound("rational_point_on_circle_near: budget exhausted");
}

} // namespace diskcolor

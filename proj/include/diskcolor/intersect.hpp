#pragma once

#include <vector>

#include "diskcolor/geometry.hpp"

namespace diskcolor {

// Intersection points of two boundary circles. Coordinates live in the field
// extension by one square root; `radicand` is that shared radicand (0 when
// the points are rational, e.g. tangency).
struct CircleIntersections {
    std::vector<QuadPoint> points; // 0, 1, or 2 entries
    Rational radicand = 0;
};

inline CircleIntersections circle_circle_intersections(const Circle& c1, const Circle& c2) {
    if (c1 == c2) throw IdenticalCircles("circle_circle_intersections");
    CircleIntersections out;

    const Point dvec = c2.center - c1.center;
    const Rational d2 = norm_sq(dvec);
    if (d2 == 0) return out; // concentric, distinct radii

    // Foot of the radical line along the center line: p0 = c1 + t * dvec.
    const Rational t = (d2 + c1.radius_sq - c2.radius_sq) / (2 * d2);
    const Point p0 = c1.center + t * dvec;
    const Rational h2 = c1.radius_sq - t * t * d2;
    if (h2 < 0) return out;

    if (h2 == 0) {
        out.points.push_back(QuadPoint{Quadratic(p0.x), Quadratic(p0.y)});
        return out;
    }
    // p0 +- sqrt(h2/d2) * rot90(dvec)
    const Rational u2 = h2 / d2;
    out.radicand = u2;
    const Point w = rot90(dvec);
    out.points.push_back(QuadPoint{Quadratic(p0.x, w.x, u2), Quadratic(p0.y, w.y, u2)});
    out.points.push_back(QuadPoint{Quadratic(p0.x, -w.x, u2), Quadratic(p0.y, -w.y, u2)});
    if (auto s = rational_sqrt(u2)) out.radicand = 0; // coordinates normalized to rationals
    return out;
}

} // namespace diskcolor

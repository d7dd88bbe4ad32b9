#pragma once

#include <vector>

#include "diskcolor/geometry.hpp"

namespace diskcolor {

// Rational lower bound on ||p - center| - radius|, via integer-square-root
// bounding of the squared quantities. Requires p not on the circle.
inline Rational boundary_gap_lower_bound(const Point& p, const Circle& c) {
    const Rational a = dist_sq(p, c.center);
    if (a == c.radius_sq) throw PointOnBoundary("boundary_gap_lower_bound");
    const Rational num = boost::multiprecision::abs(Rational(a - c.radius_sq));
    const Rational den = sqrt_upper_bound(a, 2) + sqrt_upper_bound(c.radius_sq, 2);
    return num / den;
}

// Observation-style perturbation radius: a rational eps > 0 such that moving
// each point by < eps, each center by < eps and each radius by < eps keeps
// every Inside/Outside classification. Result is (1/4) of the smallest gap
// bound, rounded down to a power of 1/2. With no point/circle pairs any eps
// works; 1 is returned.
inline Rational perturbation_radius(const std::vector<Point>& points,
                                    const std::vector<Circle>& circles) {
    Rational best = 0;
    bool have = false;
    for (const Point& p : points) {
        for (const Circle& c : circles) {
            if (side_of_circle(p, c) == Side::On)
                throw PointOnBoundary("perturbation_radius: point on circle boundary");
            const Rational g = boundary_gap_lower_bound(p, c);
            if (!have || g < best) { best = g; have = true; }
        }
    }
    if (!have) return Rational(1);
    return pow2_floor(best / 4);
}

} // namespace diskcolor

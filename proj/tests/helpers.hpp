#pragma once

#include <random>
#include <vector>

#include "diskcolor/circle_param.hpp"
#include "diskcolor/geometry.hpp"

namespace testutil {

using diskcolor::Circle;
using diskcolor::Point;
using diskcolor::Rational;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline Point pt(long x, long y) { return Point(Rational(x), Rational(y)); }

inline Circle unit_circle() { return Circle(pt(0, 0), rat(1), pt(1, 0)); }

// Uniform rational in [-range, range] with a power-of-two denominator.
inline Rational random_dyadic(std::mt19937_64& rng, long range = 4, int den_bits = 6) {
    const long den = 1L << den_bits;
    std::uniform_int_distribution<long> dist(-range * den, range * den);
    return Rational(dist(rng), den);
}

inline Point random_point(std::mt19937_64& rng, long range = 4, int den_bits = 6) {
    return Point(random_dyadic(rng, range, den_bits), random_dyadic(rng, range, den_bits));
}

// Random circle with rational data: center and base point drawn from the
// dyadic lattice, radius_sq derived.
inline Circle random_circle(std::mt19937_64& rng, long range = 4, int den_bits = 6) {
    for (;;) {
        const Point center = random_point(rng, range, den_bits);
        const Point base = random_point(rng, range, den_bits);
        if (base != center) return Circle::through(center, base);
    }
}

// n distinct points on c in CCW order, starting from the point at parameter
// `first` and advancing by unit parameter steps.
inline std::vector<Point> points_on_circle(const Circle& c, int n, long first = 0) {
    std::vector<Point> out;
    for (int i = 0; i < n; ++i)
        out.push_back(point_at(c, diskcolor::ArcParam::of(Rational(first + i))));
    return out;
}

} // namespace testutil

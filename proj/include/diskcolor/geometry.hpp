#pragma once

#include <utility>
#include <vector>

#include "diskcolor/quadratic.hpp"
#include "diskcolor/rational.hpp"

namespace diskcolor {

struct Point {
    Rational x, y;

    Point() : x(0), y(0) {}
    Point(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}

    friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
    friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
    friend Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }
    friend bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }
    friend bool operator!=(const Point& p, const Point& q) { return !(p == q); }
};

inline Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Rational norm_sq(const Point& u) { return dot(u, u); }
inline Rational dist_sq(const Point& p, const Point& q) { return norm_sq(p - q); }
inline Point rot90(const Point& u) { return {-u.y, u.x}; }

inline std::size_t bit_size(const Point& p) { return std::max(bit_size(p.x), bit_size(p.y)); }

// A circle always carries a rational point of its boundary so that rational
// points are dense on it (see circle_param.hpp). radius_sq > 0 and
// |base_point - center|^2 == radius_sq hold exactly.
struct Circle {
    Point center;
    Rational radius_sq;
    Point base_point;

    Circle(Point center_, Rational radius_sq_, Point base_)
        : center(std::move(center_)), radius_sq(std::move(radius_sq_)), base_point(std::move(base_)) {
        if (radius_sq <= 0) throw Error("Circle: radius_sq must be positive");
        if (dist_sq(base_point, center) != radius_sq)
            throw Error("Circle: base point is not on the circle");
    }

    static Circle through(Point center, Point base) {
        Rational r2 = dist_sq(base, center);
        return Circle(std::move(center), std::move(r2), std::move(base));
    }

    friend bool operator==(const Circle& a, const Circle& b) {
        return a.center == b.center && a.radius_sq == b.radius_sq;
    }
    friend bool operator!=(const Circle& a, const Circle& b) { return !(a == b); }
};

inline std::size_t bit_size(const Circle& c) {
    return std::max({bit_size(c.center), bit_size(c.radius_sq), bit_size(c.base_point)});
}

enum class Side { Inside, On, Outside };

inline Side side_of_circle(const Point& p, const Circle& c) {
    const Rational q = dist_sq(p, c.center) - c.radius_sq;
    if (q == 0) return Side::On;
    return q < 0 ? Side::Inside : Side::Outside;
}

// Point with coordinates in one quadratic field (circle-circle intersections).
struct QuadPoint {
    Quadratic x, y;

    Point as_rational() const {
        if (!x.is_rational() || !y.is_rational()) throw Error("QuadPoint: irrational coordinates");
        return Point(x.a, y.a);
    }
    bool is_rational() const { return x.is_rational() && y.is_rational(); }
};

inline Side side_of_circle(const QuadPoint& p, const Circle& c) {
    const Quadratic dx = p.x - Quadratic(c.center.x);
    const Quadratic dy = p.y - Quadratic(c.center.y);
    const Sign s = quadratic_sign(dx * dx + dy * dy - Quadratic(c.radius_sq));
    if (s == Sign::Zero) return Side::On;
    return s == Sign::Negative ? Side::Inside : Side::Outside;
}

// |sqrt(x) - sqrt(y)| < e, decided in rational arithmetic (x, y >= 0, e > 0).
inline bool sqrt_diff_less(const Rational& x, const Rational& y, const Rational& e) {
    if (e <= 0) return false;
    const Rational& lo = x <= y ? x : y;
    const Rational& hi = x <= y ? y : x;
    // sqrt(hi) - sqrt(lo) < e  <=>  hi - lo - e^2 < 2 e sqrt(lo)
    const Rational lhs = hi - lo - e * e;
    if (lhs < 0) return true;
    return lhs * lhs < 4 * e * e * lo;
}

// |p - q| < e.
inline bool points_close(const Point& p, const Point& q, const Rational& e) {
    return dist_sq(p, q) < e * e;
}

// Centers e-close and radii differing by less than e.
inline bool circles_close(const Circle& a, const Circle& b, const Rational& e) {
    return points_close(a.center, b.center, e) && sqrt_diff_less(a.radius_sq, b.radius_sq, e);
}

enum class ArcOrder { PBeforeQ, QBeforeP, Equal };

namespace detail {

// Rank of the CCW angle of w measured from the ray r (both relative to the
// circle center): 0 on the ray, 1 in (0, pi), 2 at pi, 3 in (pi, 2 pi).
inline int angle_rank(const Point& r, const Point& w) {
    const Rational c = cross(r, w);
    if (c > 0) return 1;
    if (c < 0) return 3;
    return dot(r, w) > 0 ? 0 : 2;
}

} // namespace detail

// Counterclockwise order of p and q along c, starting at reference.
// All three points must lie exactly on c.
inline ArcOrder arc_order(const Circle& c, const Point& reference, const Point& p, const Point& q) {
    for (const Point* pt : {&reference, &p, &q})
        if (side_of_circle(*pt, c) != Side::On)
            throw PointNotOnCircle("arc_order: input point is not on the circle");
    if (p == q) return ArcOrder::Equal;
    const Point r = reference - c.center;
    const int rp = detail::angle_rank(r, p - c.center);
    const int rq = detail::angle_rank(r, q - c.center);
    if (rp != rq) return rp < rq ? ArcOrder::PBeforeQ : ArcOrder::QBeforeP;
    // Same open half-turn; equal ranks 0 or 2 would force p == q on a circle.
    const Rational s = cross(p - c.center, q - c.center);
    if (s == 0) return ArcOrder::Equal;
    return s > 0 ? ArcOrder::PBeforeQ : ArcOrder::QBeforeP;
}

// True if x lies strictly inside the CCW arc from p to q (all on c, p != q).
inline bool strictly_between_on_arc(const Circle& c, const Point& p, const Point& x, const Point& q) {
    if (x == p || x == q) return false;
    return arc_order(c, p, x, q) == ArcOrder::PBeforeQ;
}

} // namespace diskcolor

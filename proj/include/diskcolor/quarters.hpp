#pragma once

#include <array>
#include <vector>

#include "diskcolor/intersect.hpp"
#include "diskcolor/ranges.hpp"

namespace diskcolor {

// Partition of the plane into four quarters by two perpendicular lines
// through o. Quarter q covers angles [q*90, (q+1)*90) degrees measured from
// `axis`: a point on a boundary ray belongs to the counterclockwise-next
// quarter, so the positive axis ray itself lies in quarter 0.
struct QuarterDecomposition {
    Point origin;
    Point axis; // rational direction of the first line; the second is its rot90
    std::array<std::vector<int>, 4> parts;
};

inline int quarter_index_of(const Point& origin, const Point& axis, const Point& p) {
    const Point v = p - origin;
    const Rational a = dot(axis, v);
    const Rational b = dot(rot90(axis), v);
    if (a == 0 && b == 0) throw OriginInPointSet("quarter_index_of: point equals origin");
    if (a > 0 && b >= 0) return 0;
    if (a <= 0 && b > 0) return 1;
    if (a < 0 && b <= 0) return 2;
    return 3;
}

// Same rule for points with quadratic coordinates, decided by exact signs.
inline int quarter_index_of(const Point& origin, const Point& axis, const QuadPoint& p) {
    const Quadratic vx = p.x - Quadratic(origin.x);
    const Quadratic vy = p.y - Quadratic(origin.y);
    const Sign a = quadratic_sign(Quadratic(axis.x) * vx + Quadratic(axis.y) * vy);
    const Sign b = quadratic_sign(Quadratic(-axis.y) * vx + Quadratic(axis.x) * vy);
    if (a == Sign::Zero && b == Sign::Zero)
        throw OriginInPointSet("quarter_index_of: point equals origin");
    if (a == Sign::Positive && b != Sign::Negative) return 0;
    if (a != Sign::Positive && b == Sign::Positive) return 1;
    if (a == Sign::Negative && b != Sign::Positive) return 2;
    return 3;
}

inline QuarterDecomposition quarter_partition(const std::vector<Point>& points, const Point& o,
                                              const Point& axis_direction = Point(1, 0)) {
    if (axis_direction == Point(0, 0)) throw Error("quarter_partition: zero axis direction");
    QuarterDecomposition q{o, axis_direction, {}};
    for (std::size_t i = 0; i < points.size(); ++i)
        q.parts[quarter_index_of(o, axis_direction, points[i])].push_back(static_cast<int>(i));
    return q;
}

// Per-quarter traces of a range family: system i = { R intersect P_i },
// deduplicated.
inline std::array<std::vector<std::vector<int>>, 4> quarter_traces(
    const QuarterDecomposition& decomp, const RangeFamily& family) {
    std::array<std::vector<std::vector<int>>, 4> out;
    for (int qi = 0; qi < 4; ++qi) {
        std::set<std::vector<int>> traces;
        for (const auto& r : family.ranges) {
            std::vector<int> t;
            std::set_intersection(r.begin(), r.end(), decomp.parts[qi].begin(),
                                  decomp.parts[qi].end(), std::back_inserter(t));
            traces.insert(std::move(t));
        }
        out[qi].assign(traces.begin(), traces.end());
    }
    return out;
}

// Boundary intersections of two stabbed unit disks, counted per quarter.
// Tangency counts once. Both circles must have radius 1 and contain o.
inline std::array<int, 4> quarter_crossing_count(const Circle& c1, const Circle& c2,
                                                 const QuarterDecomposition& decomp) {
    if (c1 == c2) throw IdenticalCircles("quarter_crossing_count");
    for (const Circle* c : {&c1, &c2}) {
        if (c->radius_sq != 1) throw Error("quarter_crossing_count: not a unit circle");
        if (side_of_circle(decomp.origin, *c) != Side::Inside)
            throw Error("quarter_crossing_count: circle is not stabbed");
    }
    std::array<int, 4> counts{0, 0, 0, 0};
    for (const auto& v : circle_circle_intersections(c1, c2).points)
        ++counts[quarter_index_of(decomp.origin, decomp.axis, v)];
    return counts;
}

} // namespace diskcolor

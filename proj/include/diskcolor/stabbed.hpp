#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "diskcolor/circle_param.hpp"
#include "diskcolor/intersect.hpp"
#include "diskcolor/ranges.hpp"

namespace diskcolor {

namespace detail {

// Parameter of a point on a circle, with coordinates in one quadratic field.
struct AlgebraicParam {
    bool infinite = false;
    Quadratic value;
};

inline AlgebraicParam algebraic_param_of(const Circle& c, const QuadPoint& p) {
    const Quadratic dx = p.x - Quadratic(c.base_point.x);
    const Quadratic dy = p.y - Quadratic(c.base_point.y);
    if (quadratic_sign(dx) == Sign::Zero) {
        if (quadratic_sign(dy) == Sign::Zero) {
            // The vertex is the base point: tangent slope there.
            if (c.center.y == c.base_point.y) return {true, Quadratic(0)};
            return {false, Quadratic((c.base_point.x - c.center.x) / (c.center.y - c.base_point.y))};
        }
        return {true, Quadratic(0)};
    }
    return {false, dy / dx};
}

// Strictly increasing rational value with a < r (a algebraic).
inline Rational rational_above(const Quadratic& a) {
    return quadratic_bounds(a, Rational(1)).second + 1;
}

inline Rational rational_below(const Quadratic& a) {
    return quadratic_bounds(a, Rational(1)).first - 1;
}

// Rational strictly between two algebraic numbers a < b.
inline Rational rational_between(const Quadratic& a, const Quadratic& b) {
    for (Rational width = 1;; width /= 16) {
        const auto [alo, ahi] = quadratic_bounds(a, width);
        const auto [blo, bhi] = quadratic_bounds(b, width);
        (void)alo;
        (void)bhi;
        if (ahi < blo) return (ahi + blo) / 2;
    }
}

} // namespace detail

// All subsets {points inside D} over unit disks D whose interior contains o.
// Witness centers are sampled one per face of the arrangement of unit
// circles centered at the points and at o, restricted to the open unit disk
// around o: certified radial nudges on both sides of every arc between
// consecutive arrangement vertices, diagonal nudges around each vertex, and
// the circle centers themselves; candidates are deduplicated by range.
inline RangeFamily stabbed_unit_disk_ranges(const std::vector<Point>& points, const Point& o) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] == o) throw DegenerateInput("stabbed_unit_disk_ranges: o among the points");
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw DegenerateInput("stabbed_unit_disk_ranges: coincident points");
    }

    // Arrangement circles: unit circles about o and about every point close
    // enough to matter (centers of stabbed disks stay within 1 of o).
    std::vector<Circle> circles;
    circles.emplace_back(o, Rational(1), o + Point(1, 0));
    for (const auto& p : points)
        if (dist_sq(p, o) < 4) circles.emplace_back(p, Rational(1), p + Point(1, 0));

    detail::RangeCollector col{points, {}};
    const Rational one(1);
    auto consider = [&](const Point& c) {
        if (dist_sq(c, o) < one) col.try_insert(c, one);
    };

    // Circle centers.
    for (const auto& c : circles) consider(c.center);

    // Arrangement vertices, their parameters per circle, and diagonal nudges.
    std::vector<std::vector<detail::AlgebraicParam>> params(circles.size());
    std::vector<QuadPoint> vertices;
    for (std::size_t i = 0; i < circles.size(); ++i)
        for (std::size_t j = i + 1; j < circles.size(); ++j) {
            if (circles[i] == circles[j]) continue;
            const auto inter = circle_circle_intersections(circles[i], circles[j]);
            for (const auto& v : inter.points) {
                params[i].push_back(detail::algebraic_param_of(circles[i], v));
                params[j].push_back(detail::algebraic_param_of(circles[j], v));
                vertices.push_back(v);
            }
        }

    if (!vertices.empty()) {
        // Nudge magnitude: below the minimal nonzero feature size over all
        // vertex/circle pairs, by rational bounding of the quadratic gaps.
        Rational min_gap = 1;
        for (const auto& v : vertices)
            for (const auto& c : circles) {
                const Quadratic dx = v.x - Quadratic(c.center.x);
                const Quadratic dy = v.y - Quadratic(c.center.y);
                const Quadratic gap = dx * dx + dy * dy - Quadratic(1);
                if (quadratic_sign(gap) == Sign::Zero) continue;
                min_gap = std::min(min_gap, quadratic_abs_lower_bound(gap));
            }
        const Rational delta_f = pow2_floor(min_gap / 4) / 4;
        for (const auto& v : vertices) {
            const unsigned prec = static_cast<unsigned>(bit_size(Rational(4 / delta_f))) + 4;
            const Point approx(quadratic_approx(v.x, prec), quadratic_approx(v.y, prec));
            for (int sx : {-1, 1})
                for (int sy : {-1, 1})
                    consider(Point(approx.x + sx * delta_f, approx.y + sy * delta_f));
        }
    }

    // Arc samples: rational parameter points strictly between consecutive
    // vertices on each circle, nudged radially to both adjacent faces.
    for (std::size_t i = 0; i < circles.size(); ++i) {
        const Circle& ci = circles[i];
        auto& ps = params[i];
        std::sort(ps.begin(), ps.end(), [](const auto& a, const auto& b) {
            if (a.infinite || b.infinite) return !a.infinite && b.infinite;
            return quadratic_compare(a.value, b.value) == Sign::Negative;
        });
        ps.erase(std::unique(ps.begin(), ps.end(),
                             [](const auto& a, const auto& b) {
                                 if (a.infinite || b.infinite) return a.infinite == b.infinite;
                                 return quadratic_compare(a.value, b.value) == Sign::Zero;
                             }),
                 ps.end());

        std::vector<ArcParam> samples;
        if (ps.empty()) {
            for (long v : {0L, 1L, -1L, 2L}) samples.push_back(ArcParam::of(Rational(v)));
            samples.push_back(ArcParam::inf());
        } else {
            const bool has_inf = ps.back().infinite;
            const std::size_t nfin = ps.size() - (has_inf ? 1 : 0);
            for (std::size_t k = 0; k + 1 < nfin; ++k)
                samples.push_back(
                    ArcParam::of(detail::rational_between(ps[k].value, ps[k + 1].value)));
            if (nfin > 0) {
                samples.push_back(ArcParam::of(detail::rational_above(ps[nfin - 1].value)));
                samples.push_back(ArcParam::of(detail::rational_below(ps[0].value)));
            }
            if (!has_inf) samples.push_back(ArcParam::inf());
            if (samples.empty()) // only vertex is the vertical-chord point
                for (long v : {0L, 1L, -1L, 2L}) samples.push_back(ArcParam::of(Rational(v)));
        }

        for (const ArcParam& sp : samples) {
            const Point w = point_at(ci, sp);
            // Clearance of the sample against the other circles.
            Rational m = 1;
            Rational dmax = 1;
            bool on_other = false;
            for (std::size_t j = 0; j < circles.size(); ++j) {
                if (j == i) continue;
                const Rational d = dist_sq(w, circles[j].center);
                dmax = std::max(dmax, d);
                const Rational g = boost::multiprecision::abs(Rational(d - 1));
                if (g == 0) {
                    on_other = true;
                    break;
                }
                m = std::min(m, g);
            }
            if (on_other) continue; // sample collided with a vertex
            Rational step = pow2_floor(
                std::min(Rational(1, 4), m / (2 * sqrt_upper_bound(dmax, 2) + 1)));
            for (int attempt = 0; attempt < 8; ++attempt, step /= 2) {
                bool certified = true;
                Point cands[2] = {ci.center + (1 + step) * (w - ci.center),
                                  ci.center + (1 - step) * (w - ci.center)};
                for (int s = 0; s < 2 && certified; ++s)
                    for (std::size_t j = 0; j < circles.size() && certified; ++j) {
                        if (j == i) continue;
                        if (sign_int(dist_sq(cands[s], circles[j].center) - 1) !=
                            sign_int(dist_sq(w, circles[j].center) - 1))
                            certified = false;
                    }
                if (!certified) continue;
                consider(cands[0]);
                consider(cands[1]);
                break;
            }
        }
    }
    return std::move(col).family();
}

// Ranges induced by unit disks centered at grid points within distance 1 of
// o: a sound under-approximation of stabbed_unit_disk_ranges that converges
// as the resolution shrinks. Exact integer arithmetic on the scaled lattice.
inline RangeFamily grid_oracle_ranges(const std::vector<Point>& points, const Point& o,
                                      const Rational& resolution) {
    if (resolution <= 0) throw Error("grid_oracle_ranges: resolution must be positive");
    {
        const BigInt den = denominator(resolution);
        if ((den & (den - 1)) != 0) throw Error("grid_oracle_ranges: resolution must be dyadic");
    }

    // Common denominator for an all-integer lattice.
    BigInt d = denominator(resolution);
    auto fold = [&](const Rational& q) { d = boost::multiprecision::lcm(d, denominator(q)); };
    fold(o.x);
    fold(o.y);
    for (const auto& p : points) {
        fold(p.x);
        fold(p.y);
    }
    const BigInt r = numerator(resolution) * (d / denominator(resolution)); // scaled step
    const BigInt ox = numerator(o.x) * (d / denominator(o.x));
    const BigInt oy = numerator(o.y) * (d / denominator(o.y));
    std::vector<std::pair<BigInt, BigInt>> sp;
    for (const auto& p : points)
        sp.emplace_back(numerator(p.x) * (d / denominator(p.x)),
                        numerator(p.y) * (d / denominator(p.y)));

    const BigInt d2 = d * d;
    const long steps = static_cast<long>(d / r) + 1;

    // int64 fast path when every squared quantity fits comfortably.
    bool small = true;
    BigInt maxc = boost::multiprecision::abs(ox) + d;
    for (const auto& [x, y] : sp)
        maxc = std::max({maxc, boost::multiprecision::abs(x) + d + boost::multiprecision::abs(oy),
                         boost::multiprecision::abs(y) + d + boost::multiprecision::abs(oy)});
    if (maxc > BigInt(1) << 30) small = false;

    std::map<std::vector<int>, RangeWitness> found;
    auto record = [&](std::vector<int> range, const BigInt& cx, const BigInt& cy) {
        if (found.count(range)) return;
        found.emplace(std::move(range),
                      RangeWitness{Point(make_rational(cx, d), make_rational(cy, d)), Rational(1)});
    };

    if (small) {
        const long lr = static_cast<long>(r), lox = static_cast<long>(ox),
                   loy = static_cast<long>(oy);
        const long ld = static_cast<long>(d);
        const long long ld2 = static_cast<long long>(ld) * ld;
        std::vector<std::pair<long, long>> ip;
        for (const auto& [x, y] : sp)
            ip.emplace_back(static_cast<long>(x), static_cast<long>(y));
        std::vector<int> range;
        for (long a = -steps; a <= steps; ++a) {
            const long long axr = static_cast<long long>(a) * lr;
            if (axr * axr >= ld2) continue;
            for (long b = -steps; b <= steps; ++b) {
                const long long byr = static_cast<long long>(b) * lr;
                if (axr * axr + byr * byr >= ld2) continue;
                const long cx = lox + static_cast<long>(axr), cy = loy + static_cast<long>(byr);
                range.clear();
                for (std::size_t i = 0; i < ip.size(); ++i) {
                    const long long dx = ip[i].first - cx, dy = ip[i].second - cy;
                    if (dx * dx + dy * dy < ld2) range.push_back(static_cast<int>(i));
                }
                record(range, BigInt(cx), BigInt(cy));
            }
        }
    } else {
        for (long a = -steps; a <= steps; ++a) {
            for (long b = -steps; b <= steps; ++b) {
                const BigInt axr = BigInt(a) * r, byr = BigInt(b) * r;
                if (axr * axr + byr * byr >= d2) continue;
                const BigInt cx = ox + axr, cy = oy + byr;
                std::vector<int> range;
                for (std::size_t i = 0; i < sp.size(); ++i) {
                    const BigInt dx = sp[i].first - cx, dy = sp[i].second - cy;
                    if (dx * dx + dy * dy < d2) range.push_back(static_cast<int>(i));
                }
                record(std::move(range), cx, cy);
            }
        }
    }

    RangeFamily f;
    f.ground = points;
    for (auto& [range, witness] : found) {
        f.ranges.push_back(range);
        f.witnesses.push_back(witness);
    }
    return f;
}

} // namespace diskcolor

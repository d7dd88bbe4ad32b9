#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "diskcolor/coloring.hpp"
#include "diskcolor/geometry.hpp"
#include "diskcolor/realization.hpp"

namespace diskcolor {

// Witness disks are raw (center, radius_sq) pairs: unlike Circle they carry
// no rational base point, which arbitrary witness disks need not have.
struct RangeWitness {
    Point center;
    Rational radius_sq;
};

struct RangeFamily {
    std::vector<Point> ground;
    std::vector<std::vector<int>> ranges;   // sorted index vectors, lexicographic order
    std::vector<RangeWitness> witnesses;    // parallel to ranges

    bool contains(const std::vector<int>& r) const {
        return std::binary_search(ranges.begin(), ranges.end(), r);
    }
};

inline std::vector<int> points_inside_disk(const std::vector<Point>& points, const Point& center,
                                           const Rational& radius_sq, bool* any_on = nullptr) {
    std::vector<int> in;
    if (any_on) *any_on = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Rational d = dist_sq(points[i], center);
        if (d < radius_sq) in.push_back(static_cast<int>(i));
        else if (d == radius_sq && any_on) *any_on = true;
    }
    return in;
}

// One edge per circle: the points strictly inside it.
inline Hypergraph induced_hypergraph(const std::vector<Point>& points,
                                     const std::vector<Circle>& circles) {
    Hypergraph h;
    h.n = static_cast<int>(points.size());
    for (const Circle& c : circles) {
        std::vector<int> edge;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const Side s = side_of_circle(points[i], c);
            if (s == Side::On) throw PointOnBoundary("induced_hypergraph: point on circle");
            if (s == Side::Inside) edge.push_back(static_cast<int>(i));
        }
        h.add_edge(std::move(edge)); // throws on an empty intersection
    }
    return h;
}

struct VerifyReport {
    bool ok = true;
    std::string message;
    int disk_index = -1;
    std::vector<int> missing, extra; // tag minus inside-set, inside-set minus tag
};

// Certifies that the induced hypergraph of a realization equals its target
// under the index correspondence: every disk must contain exactly its tagged
// edge, no point may sit on a boundary, and the tag multiset must equal the
// target's edge multiset.
inline VerifyReport verify_realization(const Realization& r) {
    VerifyReport rep;
    if (static_cast<int>(r.points.size()) != r.target.n) {
        rep.ok = false;
        rep.message = "point count differs from target vertex count";
        return rep;
    }
    const auto disks = r.all_disks();
    for (std::size_t di = 0; di < disks.size(); ++di) {
        std::vector<int> inside;
        for (std::size_t i = 0; i < r.points.size(); ++i) {
            const Side s = side_of_circle(r.points[i], disks[di]->circle);
            if (s == Side::On) {
                rep.ok = false;
                rep.disk_index = static_cast<int>(di);
                rep.message = "point " + std::to_string(i) + " lies on the boundary of disk " +
                              std::to_string(di);
                return rep;
            }
            if (s == Side::Inside) inside.push_back(static_cast<int>(i));
        }
        if (inside != disks[di]->edge) {
            rep.ok = false;
            rep.disk_index = static_cast<int>(di);
            std::set_difference(disks[di]->edge.begin(), disks[di]->edge.end(), inside.begin(),
                                inside.end(), std::back_inserter(rep.missing));
            std::set_difference(inside.begin(), inside.end(), disks[di]->edge.begin(),
                                disks[di]->edge.end(), std::back_inserter(rep.extra));
            rep.message = "disk " + std::to_string(di) + " does not contain exactly its edge";
            return rep;
        }
    }
    std::vector<std::vector<int>> tags;
    for (const auto* d : disks) tags.push_back(d->edge);
    std::sort(tags.begin(), tags.end());
    if (tags != r.target.sorted_edges()) {
        rep.ok = false;
        rep.message = "disk tag multiset differs from the target edge multiset";
        return rep;
    }
    return rep;
}

namespace detail {

// Strict circular order around `center`, starting from direction ref.
inline bool circular_less(const Point& center, const Point& ref_dir, const Point& a,
                          const Point& b) {
    const Point u = a - center, v = b - center;
    const int ra = angle_rank(ref_dir, u), rb = angle_rank(ref_dir, v);
    if (ra != rb) return ra < rb;
    return cross(u, v) > 0;
}

struct RangeCollector {
    const std::vector<Point>& points;
    std::map<std::vector<int>, RangeWitness> found;

    // Inserts the range realized by the disk, provided no point lies on its
    // boundary; the witness is stored with the first occurrence.
    bool try_insert(const Point& center, const Rational& radius_sq) {
        if (radius_sq <= 0) return false;
        bool any_on = false;
        std::vector<int> in = points_inside_disk(points, center, radius_sq, &any_on);
        if (any_on) return false;
        found.emplace(std::move(in), RangeWitness{center, radius_sq});
        return true;
    }

    // Expects the disk to realize exactly `expected`; inserts and reports.
    bool try_insert_expected(const Point& center, const Rational& radius_sq,
                             const std::vector<int>& expected) {
        if (radius_sq <= 0) return false;
        bool any_on = false;
        const std::vector<int> in = points_inside_disk(points, center, radius_sq, &any_on);
        if (any_on || in != expected) return false;
        found.emplace(in, RangeWitness{center, radius_sq});
        return true;
    }

    RangeFamily family() && {
        RangeFamily f;
        f.ground = points;
        for (auto& [range, witness] : found) {
            f.ranges.push_back(range);
            f.witnesses.push_back(witness);
        }
        return f;
    }
};

// Witness for "inside points plus a contiguous cap of boundary points":
// translate the canonical disk across the separating chord. The chord runs
// through the midpoints q1, q2 of the two boundary gaps, so it crosses the
// circle once inside each gap and the cap ends up strictly on its positive
// side. With center' = center + mu*n and radius_sq' chosen so that the
// membership change of a boundary point b is -2*mu*(n . (b - q1)), boundary
// membership is decided by the chord side alone, for every mu > 0.
inline bool emit_cap(RangeCollector& col, const Point& center, const Rational& radius_sq,
                     const Point& q1, const Point& q2, const std::vector<int>& cap_in,
                     const std::vector<int>& cap_out, const std::vector<int>& inside) {
    const auto& points = col.points;
    Point n = rot90(q2 - q1);
    if (n == Point(0, 0)) return false;
    {
        const Rational g0 = dot(n, points[cap_in.front()] - q1);
        if (g0 == 0) return false;
        if (g0 < 0) n = Point(0, 0) - n;
    }
    for (int b : cap_in)
        if (dot(n, points[b] - q1) <= 0) return false;
    for (int b : cap_out)
        if (dot(n, points[b] - q1) >= 0) return false;

    std::vector<int> expected = inside;
    expected.insert(expected.end(), cap_in.begin(), cap_in.end());
    std::sort(expected.begin(), expected.end());

    const Rational t = dot(n, center - q1);
    Rational mu(1, 16);
    for (int i = 0; i < 128; ++i, mu /= 2) {
        const Point c2 = center + mu * n;
        const Rational r2 = radius_sq + 2 * mu * t + mu * mu * norm_sq(n);
        if (col.try_insert_expected(c2, r2, expected)) return true;
    }
    return false;
}

// Emits every range obtainable from the canonical circle (center, radius_sq)
// by deciding each boundary point In or Out. Only circularly contiguous
// include-sets are realizable by nearby disks.
inline void emit_boundary_splits(RangeCollector& col, const Point& center,
                                 const Rational& radius_sq) {
    const auto& points = col.points;
    std::vector<int> boundary, inside;
    Rational min_off_gap;
    bool have_gap = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Rational d = dist_sq(points[i], center);
        if (d == radius_sq) {
            boundary.push_back(static_cast<int>(i));
        } else {
            if (d < radius_sq) inside.push_back(static_cast<int>(i));
            const Rational g = boost::multiprecision::abs(Rational(d - radius_sq));
            if (!have_gap || g < min_off_gap) {
                min_off_gap = g;
                have_gap = true;
            }
        }
    }
    const Rational eps_r =
        have_gap ? std::min(Rational(min_off_gap / 4), Rational(radius_sq / 2))
                 : Rational(radius_sq / 2);

    // All boundary points out (shrink) or in (grow).
    col.try_insert_expected(center, radius_sq - eps_r, inside);
    {
        std::vector<int> all = inside;
        all.insert(all.end(), boundary.begin(), boundary.end());
        std::sort(all.begin(), all.end());
        col.try_insert_expected(center, radius_sq + eps_r, all);
    }

    const int nb = static_cast<int>(boundary.size());
    if (nb < 2) return; // single boundary point: both splits covered above

    const Point ref = points[boundary.front()] - center;
    std::sort(boundary.begin(), boundary.end(),
              [&](int a, int b) { return circular_less(center, ref, points[a], points[b]); });

    for (int start = 0; start < nb; ++start) {
        for (int len = 1; len < nb; ++len) {
            std::vector<int> cap_in, cap_out;
            for (int k = 0; k < len; ++k) cap_in.push_back(boundary[(start + k) % nb]);
            for (int k = len; k < nb; ++k) cap_out.push_back(boundary[(start + k) % nb]);
            // Gap chord midpoints: between the last excluded and first
            // included point, and between the last included and first
            // excluded point.
            const Point& a0 = points[cap_out.back()];
            const Point& a1 = points[cap_in.front()];
            const Point& b0 = points[cap_in.back()];
            const Point& b1 = points[cap_out.front()];
            const Point q1 = Rational(1, 2) * (a0 + a1);
            const Point q2 = Rational(1, 2) * (b0 + b1);
            if (emit_cap(col, center, radius_sq, q1, q2, cap_in, cap_out, inside)) continue;
            // Degenerate chord (e.g. two diameters sharing their midpoint):
            // retry with midpoints pulled toward a gap endpoint.
            bool done = false;
            for (const Point& qa :
                 {Rational(1, 2) * (q1 + a0), Rational(1, 2) * (q1 + a1)}) {
                for (const Point& qb :
                     {Rational(1, 2) * (q2 + b0), Rational(1, 2) * (q2 + b1)}) {
                    if (emit_cap(col, center, radius_sq, qa, qb, cap_in, cap_out, inside)) {
                        done = true;
                        break;
                    }
                }
                if (done) break;
            }
        }
    }
}

} // namespace detail

// All subsets realizable as {points inside D} over arbitrary open disks,
// with a certified witness per range. Canonical circles: for every pair, the
// circles through the pair centered at perpendicular-bisector face samples
// and at the cocircularity events (these are the circumcircles), plus
// explicit empty/singleton/full witnesses; each canonical circle spawns one
// range per contiguous boundary split.
inline RangeFamily disk_ranges(const std::vector<Point>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw DegenerateInput("disk_ranges: coincident points");

    detail::RangeCollector col{points, {}};

    // Empty range: a unit disk beyond the configuration.
    Rational span = 1;
    for (const auto& p : points)
        span = std::max({span, boost::multiprecision::abs(p.x), boost::multiprecision::abs(p.y)});
    col.try_insert_expected(Point(4 * span, 0), 1, {});

    if (points.empty()) return std::move(col).family();

    // Singletons and the full set.
    for (std::size_t i = 0; i < points.size(); ++i) {
        Rational gap = 0;
        bool have = false;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            const Rational d = dist_sq(points[i], points[j]);
            if (!have || d < gap) {
                gap = d;
                have = true;
            }
        }
        col.try_insert_expected(points[i], have ? Rational(gap / 4) : Rational(1),
                                {static_cast<int>(i)});
    }
    {
        Rational maxd = 1;
        for (const auto& p : points) maxd = std::max(maxd, dist_sq(points[0], p));
        std::vector<int> all(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) all[i] = static_cast<int>(i);
        col.try_insert_expected(points[0], 4 * maxd + 1, all);
    }

    // Pair families along perpendicular bisectors.
    std::set<std::pair<std::pair<Rational, Rational>, Rational>> seen;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const Point mid = Rational(1, 2) * (points[i] + points[j]);
            const Point w = rot90(points[j] - points[i]);
            std::vector<Rational> events;
            for (std::size_t k = 0; k < points.size(); ++k) {
                if (k == i || k == j) continue;
                // |c - p_i|^2 = |c - p_k|^2 for c = mid + s w.
                const Rational denom = 2 * dot(w, points[k] - points[i]);
                if (denom == 0) continue; // p_k never becomes cocircular in this family
                events.push_back((dist_sq(mid, points[k]) - dist_sq(mid, points[i])) / denom);
            }
            std::sort(events.begin(), events.end());
            events.erase(std::unique(events.begin(), events.end()), events.end());
            std::vector<Rational> samples;
            if (events.empty()) {
                samples.push_back(0);
            } else {
                samples.push_back(events.front() - 1);
                for (std::size_t k = 0; k + 1 < events.size(); ++k)
                    samples.push_back((events[k] + events[k + 1]) / 2);
                samples.push_back(events.back() + 1);
                for (const Rational& e : events) samples.push_back(e);
            }
            for (const Rational& s : samples) {
                const Point c = mid + s * w;
                const Rational r2 = dist_sq(c, points[i]);
                if (!seen.insert({{c.x, c.y}, r2}).second) continue;
                detail::emit_boundary_splits(col, c, r2);
            }
        }
    }
    if (points.size() == 1) detail::emit_boundary_splits(col, points[0], 1);
    return std::move(col).family();
}

// Edges {p,q} such that some open disk contains exactly {p,q}. Requires
// general position: no two coincident, no four cocircular.
inline std::vector<std::pair<int, int>> delaunay_graph(const std::vector<Point>& points) {
    const int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points[i] == points[j])
                throw DegeneratePosition("delaunay_graph: coincident points");
    // Exact four-cocircular test via circumcircles of all triples.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const Point u = points[j] - points[i], v = points[k] - points[i];
                const Rational det = 2 * cross(u, v);
                if (det == 0) continue; // collinear triple: no circumcircle
                const Rational uu = norm_sq(u), vv = norm_sq(v);
                const Point cc = points[i] + (Rational(1) / det) * Point(v.y * uu - u.y * vv,
                                                                         u.x * vv - v.x * uu);
                const Rational r2 = dist_sq(cc, points[i]);
                for (int l = 0; l < n; ++l)
                    if (l != i && l != j && l != k && dist_sq(points[l], cc) == r2)
                        throw DegeneratePosition("delaunay_graph: four cocircular points");
            }

    const RangeFamily fam = disk_ranges(points);
    std::vector<std::pair<int, int>> edges;
    for (const auto& r : fam.ranges)
        if (r.size() == 2) edges.emplace_back(r[0], r[1]);
    return edges;
}

// Searches the size-m disk ranges for one that is monochromatic under the
// coloring; returns the range and its witness disk. A precomputed family
// for the same points may be supplied when testing many colorings.
inline std::optional<std::pair<std::vector<int>, RangeWitness>> monochromatic_disk_witness(
    const std::vector<Point>& points, const Coloring& coloring, int m,
    const RangeFamily* precomputed = nullptr) {
    if (m < 1 || m > static_cast<int>(points.size())) return std::nullopt;
    RangeFamily owned;
    const RangeFamily* fam = precomputed;
    if (!fam) {
        owned = disk_ranges(points);
        fam = &owned;
    }
    for (std::size_t i = 0; i < fam->ranges.size(); ++i) {
        const auto& r = fam->ranges[i];
        if (static_cast<int>(r.size()) != m) continue;
        const int c0 = coloring.colors.at(r.front());
        if (std::all_of(r.begin(), r.end(), [&](int v) { return coloring.colors[v] == c0; }))
            return std::make_pair(r, fam->witnesses[i]);
    }
    return std::nullopt;
}

} // namespace diskcolor

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diskcolor/construction.hpp"

namespace diskcolor {

namespace detail {

// Exact test that two circles' closed disks are disjoint:
// |centers|^2 > (r1 + r2)^2, decided by squaring once more.
inline bool disks_disjoint(const Circle& a, const Circle& b) {
    const Rational d2 = dist_sq(a.center, b.center);
    const Rational lhs = d2 - a.radius_sq - b.radius_sq;
    if (lhs <= 0) return false;
    return lhs * lhs > 4 * a.radius_sq * b.radius_sq;
}

// Rational lower bound on |centers| - r1 - r2 for certified-disjoint disks.
inline Rational disjoint_gap_lower_bound(const Circle& a, const Circle& b) {
    const Rational d2 = dist_sq(a.center, b.center);
    for (unsigned k = 4;; k *= 2) {
        const Rational num =
            d2 - a.radius_sq - b.radius_sq -
            2 * sqrt_upper_bound(a.radius_sq, k) * sqrt_upper_bound(b.radius_sq, k);
        if (num > 0)
            return num / (sqrt_upper_bound(d2, 2) + sqrt_upper_bound(a.radius_sq, 2) +
                          sqrt_upper_bound(b.radius_sq, 2));
        if (k > (1u << 16))
            throw Error("disjoint_gap_lower_bound: circles too close");
    }
}

// Rational rotation around `center` by the angle with tan(theta/2) = t.
struct RationalRotation {
    Point center;
    Rational cos_v, sin_v;

    RationalRotation(Point c, const Rational& t)
        : center(std::move(c)),
          cos_v((1 - t * t) / (1 + t * t)),
          sin_v(2 * t / (1 + t * t)) {}

    Point operator()(const Point& p) const {
        const Point v = p - center;
        return center + Point(cos_v * v.x - sin_v * v.y, sin_v * v.x + cos_v * v.y);
    }
};

} // namespace detail

// Realizes "r.target extended by Hc(T) through the edge of disk_index": the
// chosen disk is replaced by |V(T)| slightly rotated and enlarged copies
// around a small circle tangent at the disk's exposed boundary point, each
// containing one new point; the new points host a recursive tree
// realization on the tangent circle. Every copy keeps a private exposed
// boundary point so the result can be extended again.
inline Realization realize_extension(const Realization& r, std::size_t disk_index,
                                     const RootedTree& t, const Rational& gamma,
                                     const ConstructionOptions& opts = {},
                                     ConstructionReport* report = nullptr) {
    const auto disks = r.all_disks();
    if (disk_index >= disks.size()) throw Error("realize_extension: disk index out of range");
    const TaggedDisk& f = *disks[disk_index];
    if (!f.exposed) throw NoExposedPoint("realize_extension: disk has no tracked witness");
    const Point p = *f.exposed;
    if (side_of_circle(p, f.circle) != Side::On)
        throw NoExposedPoint("realize_extension: witness is not on the disk boundary");
    for (std::size_t di = 0; di < disks.size(); ++di)
        if (di != disk_index && side_of_circle(p, disks[di]->circle) != Side::Outside)
            throw NoExposedPoint("realize_extension: witness is covered by another disk");
    if (gamma <= 0) throw Error("realize_extension: gamma must be positive");

    const int n = t.n;
    const int old_n = static_cast<int>(r.points.size());
    const std::vector<int> order = siblings_first_order(t);
    const Hypergraph new_target = extend(r.target, tree_hypergraph(t), f.edge);

    std::string why = "no attempt";
    Rational sigma(1, 4);
    for (int s_try = 0; s_try < 24; ++s_try, sigma /= 2) {
        // Tangent circle at p, outside the extended disk.
        const Circle tangent = Circle(p + sigma * (p - f.circle.center),
                                      sigma * sigma * f.circle.radius_sq, p);
        bool clear = true;
        for (std::size_t di = 0; di < disks.size() && clear; ++di) {
            if (di == disk_index) continue;
            if (!detail::disks_disjoint(tangent, disks[di]->circle)) clear = false;
        }
        for (int i = 0; i < old_n && clear; ++i)
            if (side_of_circle(r.points[i], tangent) != Side::Outside) clear = false;
        if (!clear) {
            why = "tangent circle not clear of the configuration";
            continue;
        }

        Rational tau = Rational(1, 64) / n;
        for (int t_try = 0; t_try < 12; ++t_try, tau /= 2) {
            // Rotated copies of the extended disk; copy j is tangent to the
            // tangent circle at the rotated image of p.
            std::vector<Point> centers, touch;
            for (int j = 0; j < n; ++j) {
                const detail::RationalRotation rot(tangent.center, tau * (j + 1));
                centers.push_back(rot(f.circle.center));
                touch.push_back(rot(p));
            }
            bool rot_ok = true;
            for (int j = 1; j < n && rot_ok; ++j)
                if (!strictly_between_on_arc(tangent, p, touch[j - 1], touch[j])) rot_ok = false;
            if (!rot_ok) {
                why = "rotated touch points out of order";
                continue;
            }

            Rational eta = tau * tau / 4;
            for (int e_try = 0; e_try < 12; ++e_try, eta /= 2) {
                const Rational enlarged_sq = f.circle.radius_sq * (1 + eta) * (1 + eta);
                std::vector<Circle> copies;
                std::vector<Point> exposed;
                for (int j = 0; j < n; ++j) {
                    copies.emplace_back(centers[j], enlarged_sq,
                                        centers[j] + (1 + eta) * (touch[j] - centers[j]));
                    exposed.push_back(centers[j] + ((1 + eta) / (1 + sigma)) *
                                                       (centers[j] - tangent.center));
                }
                const std::vector<Point>& qs = touch; // new points sit at the touch points

                bool ok = true;
                for (int j = 0; j < n && ok; ++j) {
                    if (side_of_circle(exposed[j], copies[j]) != Side::On)
                        throw InvariantViolation("realize_extension: exposed point not on copy");
                    if (side_of_circle(qs[j], copies[j]) != Side::Inside) {
                        ok = false;
                        why = "touch point not inside its enlarged copy";
                    }
                    for (int i = 0; i < n && ok; ++i) {
                        if (i == j) continue;
                        if (side_of_circle(qs[j], copies[i]) != Side::Outside ||
                            side_of_circle(exposed[j], copies[i]) != Side::Outside) {
                            ok = false;
                            why = "copies overlap at touch or witness points";
                        }
                    }
                }
                // Copies keep exactly the old points of f; everything else
                // stays outside them; witnesses clear the old disks.
                for (int i = 0; i < old_n && ok; ++i) {
                    const bool in_f =
                        std::binary_search(f.edge.begin(), f.edge.end(), i);
                    for (int j = 0; j < n && ok; ++j)
                        if (side_of_circle(r.points[i], copies[j]) !=
                            (in_f ? Side::Inside : Side::Outside)) {
                            ok = false;
                            why = "copy misclassifies an old point";
                        }
                }
                for (std::size_t di = 0; di < disks.size() && ok; ++di) {
                    if (di == disk_index) continue;
                    for (int j = 0; j < n && ok; ++j)
                        if (side_of_circle(exposed[j], disks[di]->circle) != Side::Outside ||
                            side_of_circle(qs[j], disks[di]->circle) != Side::Outside) {
                            ok = false;
                            why = "copy witness or touch point inside an old disk";
                        }
                }
                if (!ok) continue;

                // Tree realization scale: preserve every certified
                // classification and keep the swarm clear of the old
                // configuration.
                std::vector<Point> all_pts = r.points;
                all_pts.insert(all_pts.end(), qs.begin(), qs.end());
                std::vector<Circle> all_circles;
                for (std::size_t di = 0; di < disks.size(); ++di)
                    if (di != disk_index) all_circles.push_back(disks[di]->circle);
                all_circles.insert(all_circles.end(), copies.begin(), copies.end());
                Rational gamma_c = std::min(gamma, perturbation_radius(all_pts, all_circles) / 2);
                for (std::size_t di = 0; di < disks.size(); ++di)
                    if (di != disk_index)
                        gamma_c = std::min(gamma_c, detail::disjoint_gap_lower_bound(
                                                        tangent, disks[di]->circle) /
                                                        4);
                for (int i = 0; i < old_n; ++i)
                    gamma_c = std::min(gamma_c,
                                       boundary_gap_lower_bound(r.points[i], tangent) / 4);
                gamma_c = std::min(gamma_c, pow2_sqrt_floor(tangent.radius_sq / 32));
                gamma_c = pow2_floor(gamma_c);

                Realization sub = realize_tree(t, tangent, qs, gamma_c, opts, report);

                // Assemble the extended realization.
                Realization out(r.anchor_circle, r.gamma, new_target);
                out.points = r.points;
                for (int v = 0; v < n; ++v) out.points.push_back(sub.points[v]);
                for (std::size_t di = 0; di < disks.size(); ++di) {
                    if (di == disk_index) continue;
                    auto& dst = di < r.sibling_disks.size() ? out.sibling_disks
                                                            : out.descendent_disks;
                    dst.push_back(*disks[di]);
                }
                for (int j = 0; j < n; ++j) {
                    std::vector<int> edge = f.edge;
                    edge.push_back(old_n + order[j]);
                    out.descendent_disks.emplace_back(copies[j], std::move(edge), exposed[j]);
                }
                auto shift_edge = [&](const std::vector<int>& e) {
                    std::vector<int> out_e;
                    for (int v : e) out_e.push_back(old_n + v);
                    return out_e;
                };
                for (const auto& d : sub.sibling_disks)
                    out.sibling_disks.emplace_back(d.circle, shift_edge(d.edge));
                for (const auto& d : sub.descendent_disks)
                    out.descendent_disks.emplace_back(d.circle, shift_edge(d.edge));

                const auto verdict = verify_realization(out);
                if (!verdict.ok) {
                    why = "final verification: " + verdict.message;
                    break; // shrink eta and rebuild
                }
                // Remaining tracked witnesses must still be exposed.
                bool witnesses_ok = true;
                const auto new_disks = out.all_disks();
                for (std::size_t a = 0; a < new_disks.size() && witnesses_ok; ++a) {
                    if (!new_disks[a]->exposed) continue;
                    for (std::size_t b = 0; b < new_disks.size() && witnesses_ok; ++b)
                        if (a != b && side_of_circle(*new_disks[a]->exposed,
                                                     new_disks[b]->circle) != Side::Outside)
                            witnesses_ok = false;
                }
                if (!witnesses_ok) {
                    why = "a tracked witness lost its exposure";
                    break;
                }
                return out;
            }
        }
    }
    throw PrecisionBudgetExceeded("realize_extension: no certified scale found (" + why + ")");
}

// Pipeline report for the non-three-colorable realization.
struct H3Report {
    Hypergraph target;                       // always equals build_h3(m)
    std::optional<Realization> realization;  // present on success
    bool budget_exceeded = false;
    std::string failure;
    std::size_t max_bits = 0;
};

// Realization of Hc^3(m) = F_m(m): start from the one-point one-disk
// realization of G_1 and geometrically extend every star edge by Hc^2(m),
// m-1 times. The target hypergraph is always produced; the geometric side
// reports its budget status.
inline H3Report realize_h3_report(int m, const Rational& gamma = Rational(1, 16),
                                  const ConstructionOptions& opts = {}) {
    if (m < 1) throw Error("realize_h3: m must be positive");
    H3Report rep;
    rep.target = build_h3(m);

    Hypergraph g1 = single_edge_hypergraph(1);
    g1.star = 0;
    const Circle base(Point(0, 0), 1, Point(1, 0));
    Realization real(base, gamma, g1);
    real.points = {Point(0, 0)};
    real.descendent_disks.emplace_back(base, std::vector<int>{0}, Point(1, 0));

    const RootedTree tree = complete_mary_tree(m);
    try {
        ConstructionReport creport;
        for (int round = 2; round <= m; ++round) {
            // Disks of the star edges, identified before this round mutates
            // the disk set.
            std::vector<std::vector<int>> star_edges;
            for (const auto& e : real.target.edges)
                if (real.target.star &&
                    std::binary_search(e.begin(), e.end(), *real.target.star))
                    star_edges.push_back(e);
            for (const auto& edge : star_edges) {
                const auto disks = real.all_disks();
                std::size_t di = disks.size();
                for (std::size_t i = 0; i < disks.size(); ++i)
                    if (disks[i]->edge == edge && disks[i]->exposed) {
                        di = i;
                        break;
                    }
                if (di == disks.size())
                    throw NoExposedPoint("realize_h3: no extendable disk for a star edge");
                real = realize_extension(real, di, tree, gamma, opts, &creport);
                rep.max_bits = std::max(rep.max_bits, creport.max_bits);
            }
        }
        rep.max_bits = std::max(rep.max_bits, real.max_coordinate_bits());
        if (!(real.target == rep.target))
            throw InvariantViolation("realize_h3: pipeline target mismatch");
        rep.realization = std::move(real);
    } catch (const PrecisionBudgetExceeded& e) {
        rep.budget_exceeded = true;
        rep.failure = e.what();
    }
    return rep;
}

inline Realization realize_h3(int m, const Rational& gamma = Rational(1, 16),
                              const ConstructionOptions& opts = {}) {
    H3Report rep = realize_h3_report(m, gamma, opts);
    if (!rep.realization)
        throw PrecisionBudgetExceeded("realize_h3: " + rep.failure);
    return std::move(*rep.realization);
}

} // namespace diskcolor

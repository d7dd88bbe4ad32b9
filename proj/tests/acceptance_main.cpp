// Acceptance suite: one criterion per case, each printing a PASS/FAIL line.
// Run with no arguments for all criteria or with a list of criterion numbers.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "diskcolor/cli.hpp"
#include "diskcolor/extension.hpp"
#include "diskcolor/polychromatic.hpp"

using namespace diskcolor;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::vector<Point> seeded_lattice_points(std::mt19937_64& rng, const Point& o, int n,
                                         long spread) {
    std::set<std::pair<long, long>> used{{0, 0}};
    std::vector<Point> pts;
    std::uniform_int_distribution<long> d(-spread, spread);
    while (static_cast<int>(pts.size()) < n) {
        const long a = d(rng), b = d(rng);
        if (!used.insert({a, b}).second) continue;
        pts.push_back(Point(o.x + Rational(a, 8), o.y + Rational(b, 8)));
    }
    return pts;
}

// 1. Combinatorial core: Hc^3(2) = K_4, not 3-colorable over all 81
//    colorings; Hc^2(3) is 3-uniform on 13 vertices and not 2-colorable
//    over all 2^13 colorings.
Check criterion1() {
    Check c;
    const Hypergraph k4 = build_h3(2);
    c.require(k4.n == 4 && k4.edges.size() == 6 && k4.is_uniform(2), "Hc^3(2) is not K_4");
    std::set<std::vector<int>> distinct(k4.edges.begin(), k4.edges.end());
    c.require(distinct.size() == 6, "K_4 edges not distinct");
    c.require(!find_coloring(k4, 3).has_value(), "search says K_4 is 3-colorable");
    int bad3 = 0;
    for (int code = 0; code < 81; ++code) {
        std::vector<int> col(4);
        int x = code;
        for (int i = 0; i < 4; ++i) {
            col[i] = x % 3;
            x /= 3;
        }
        if (!find_monochromatic_edge(k4, Coloring{3, col}).has_value()) ++bad3;
    }
    c.require(bad3 == 0, "a 3-coloring of K_4 avoided monochromatic edges");

    const Hypergraph h23 = build_h2(3);
    c.require(h23.n == 13 && h23.is_uniform(3), "Hc^2(3) shape wrong");
    c.require(!find_coloring(h23, 2).has_value(), "search says Hc^2(3) is 2-colorable");
    int bad2 = 0;
    for (int code = 0; code < (1 << 13); ++code) {
        std::vector<int> col(13);
        for (int i = 0; i < 13; ++i) col[i] = (code >> i) & 1;
        if (!find_monochromatic_edge(h23, Coloring{2, col}).has_value()) ++bad2;
    }
    c.require(bad2 == 0, "a 2-coloring of Hc^2(3) avoided monochromatic edges");
    return c;
}

// 2. realize_tree on the complete 3-ary tree (13 vertices), gamma = 1/16 on
//    the unit circle: verified, points gamma-close, disks gamma-close,
//    anchor center inside every disk, invariants asserted at every step.
Check criterion2() {
    Check c;
    const Circle unit(Point(0, 0), 1, Point(1, 0));
    const RootedTree t = complete_mary_tree(3);
    std::vector<Point> qs;
    for (int i = 0; i < 13; ++i) qs.push_back(point_at(unit, ArcParam::of(Rational(i - 6))));
    ConstructionReport rep;
    const Rational gamma(1, 16);
    const Realization r = realize_tree(t, unit, qs, gamma, {}, &rep);
    c.require(verify_realization(r).ok, "verify_realization not Ok");
    c.require(r.target == build_h2(3), "induced hypergraph differs from Hc^2(3)");
    for (int v = 0; v < 13; ++v)
        c.require(points_close(r.points[v], r.prescribed[v], gamma),
                  "a point is not gamma-close to its prescribed position");
    for (const auto* d : r.all_disks()) {
        c.require(circles_close(d->circle, unit, gamma), "a disk is not gamma-close to the anchor");
        c.require(side_of_circle(unit.center, d->circle) == Side::Inside,
                  "anchor center not inside a disk (stabbedness)");
    }
    c.require(rep.invariant_checks >= 5, "(P1)-(P3) not asserted at every step");
    std::printf("    [info] bit growth: start %zu, max %zu bits over %zu audited operations\n",
                rep.bit_growth.empty() ? 0 : rep.bit_growth.front().max_bits, rep.max_bits,
                rep.audit_operations);
    return c;
}

// 3. realize_h3(2) verifies and every 3-coloring has a monochromatic
//    2-point disk; the m = 3 pipeline produces the Hc^3(3) target and
//    reports budget status (a reduced budget keeps the run short; full-size
//    m >= 3 geometry is not claimed).
Check criterion3() {
    Check c;
    const H3Report rep2 = realize_h3_report(2);
    c.require(rep2.realization.has_value(), "realize_h3(2) did not produce a realization");
    if (rep2.realization) {
        const Realization& r = *rep2.realization;
        c.require(verify_realization(r).ok, "realize_h3(2) does not verify");
        c.require(r.target == build_h3(2), "realize_h3(2) target is not K_4");
        const RangeFamily fam = disk_ranges(r.points);
        for (int code = 0; code < 81; ++code) {
            std::vector<int> col(4);
            int x = code;
            for (int i = 0; i < 4; ++i) {
                col[i] = x % 3;
                x /= 3;
            }
            if (!monochromatic_disk_witness(r.points, Coloring{3, col}, 2, &fam).has_value()) {
                c.require(false, "a 3-coloring has no monochromatic 2-point disk");
                break;
            }
        }
    }
    ConstructionOptions small;
    small.budget_bits = 1024;
    const H3Report rep3 = realize_h3_report(3, Rational(1, 16), small);
    c.require(rep3.target == build_h3(3), "m=3 pipeline target differs from build_h3(3)");
    c.require(rep3.target.n == 183, "Hc^3(3) vertex count");
    std::printf("    [info] m=3 pipeline budget status: %s\n",
                rep3.budget_exceeded ? ("exceeded (" + rep3.failure + ")").c_str()
                                     : "within budget");
    return c;
}

// 4. Positive theorem, property-based: 50 seeded instances (n <= 100),
//    k in {2,3,4}, zero violations at threshold 8k-7.
Check criterion4() {
    Check c;
    std::mt19937_64 rng(20250811);
    for (int inst = 0; inst < 50 && c.ok; ++inst) {
        const Point o(Rational(1, 8), Rational(-1, 8));
        const int n = 10 + (inst * 90) / 49;
        const auto pts = seeded_lattice_points(rng, o, n, 12);
        const RangeFamily fam = stabbed_unit_disk_ranges(pts, o);
        const int k = 2 + inst % 3;
        const Coloring col = color_stabbed_unit_disks(pts, o, k, Point(1, 0), &fam);
        const auto violations = verify_polychromatic(pts, o, k, col, 8 * k - 7, Point(1, 0), &fam);
        c.require(violations.empty(), "instance " + std::to_string(inst) + " (n=" +
                                          std::to_string(n) + ", k=" + std::to_string(k) +
                                          ") has violations");
    }
    return c;
}

// 5. Oracle equivalence: exact stabbed ranges equal the 1/512 grid oracle on
//    20 seeded instances with n <= 10; disk_ranges on 3 points has all 8
//    subsets.
Check criterion5() {
    Check c;
    std::mt19937_64 rng(424242);
    for (int inst = 0; inst < 20 && c.ok; ++inst) {
        const Point o(Rational(-1, 8), Rational(1, 8));
        const int n = 3 + inst % 8;
        const auto pts = seeded_lattice_points(rng, o, n, 10);
        const RangeFamily exact = stabbed_unit_disk_ranges(pts, o);
        const RangeFamily grid = grid_oracle_ranges(pts, o, Rational(1, 512));
        c.require(exact.ranges == grid.ranges,
                  "instance " + std::to_string(inst) + ": exact and grid families differ");
    }
    const auto f = disk_ranges({Point(0, 0), Point(2, 0), Point(1, 2)});
    c.require(f.ranges.size() == 8, "disk_ranges on 3 points must give all 8 subsets");
    return c;
}

// 6. Quarter lemma: 1000 random stabbed unit-disk pairs cross at most once
//    per quarter, decided by exact quadratic signs.
Check criterion6() {
    Check c;
    std::mt19937_64 rng(606060);
    const Point o(0, 0);
    const auto decomp = quarter_partition(std::vector<Point>{}, o);
    std::uniform_int_distribution<long> d(-63, 63);
    int done = 0;
    while (done < 1000 && c.ok) {
        const Point z1(Rational(d(rng), 64), Rational(d(rng), 64));
        const Point z2(Rational(d(rng), 64), Rational(d(rng), 64));
        if (z1 == z2) continue;
        const Circle c1(z1, 1, z1 + Point(1, 0));
        const Circle c2(z2, 1, z2 + Point(1, 0));
        if (side_of_circle(o, c1) != Side::Inside || side_of_circle(o, c2) != Side::Inside)
            continue;
        const auto counts = quarter_crossing_count(c1, c2, decomp);
        for (int qi = 0; qi < 4; ++qi)
            c.require(counts[qi] <= 1, "two crossings in one quarter");
        ++done;
    }
    return c;
}

// 7. Clustering demo: every one of the 81 3-colorings of the perturbed
//    Hc^3(2) points has a monochromatic Delaunay component of size >= 2,
//    and the Delaunay graph passes the planarity edge bound.
Check criterion7() {
    Check c;
    std::ostringstream out, err;
    const int code = cli::cmd_cluster_demo(2, 1, out, err);
    c.require(code == 0, "cluster demo exit code " + std::to_string(code) + ": " + err.str());
    c.require(out.str().find("colorings checked: 81, with monochromatic component >= 2: 81") !=
                  std::string::npos,
              "not all 81 colorings reported a component");
    c.require(out.str().find("planarity bound e <= 3v-6: ok") != std::string::npos,
              "planarity bound violated");
    return c;
}

// 8. lemma_step certification: 200 randomized invocations, all four
//    properties re-certified independently, zero silent failures.
Check criterion8() {
    Check c;
    std::mt19937_64 rng(808080);
    for (int trial = 0; trial < 200 && c.ok; ++trial) {
        std::uniform_int_distribution<long> coord(-256, 256);
        Point center(Rational(coord(rng), 64), Rational(coord(rng), 64));
        Point base(Rational(coord(rng), 64), Rational(coord(rng), 64));
        if (base == center) continue;
        const Circle circ = Circle::through(center, base);
        const int t = 1 + static_cast<int>(rng() % 4);
        std::vector<Point> all;
        long param = -6;
        for (int i = 0; i < t + 2; ++i) {
            param += 1 + static_cast<long>(rng() % 3);
            all.push_back(point_at(circ, ArcParam::of(Rational(param, 2))));
        }
        const Point a = all.front(), cc = all.back();
        const std::vector<Point> bs(all.begin() + 1, all.end() - 1);
        const Rational eps = pow2(-1 - static_cast<int>(rng() % 12));
        LemmaStepResult r = lemma_step(circ, a, bs, cc, eps);

        c.require(points_close(r.new_circle.center, circ.center, eps) &&
                      sqrt_diff_less(r.new_circle.radius_sq, circ.radius_sq, eps),
                  "(1) new circle not eps-close");
        c.require(r.moved.size() == bs.size(), "moved point count");
        for (std::size_t i = 0; i < bs.size(); ++i)
            c.require(points_close(r.moved[i], bs[i], eps), "(2) moved point not eps-close");
        c.require(side_of_circle(r.crossing_a, circ) == Side::On &&
                      side_of_circle(r.crossing_a, r.new_circle) == Side::On &&
                      side_of_circle(r.crossing_b, circ) == Side::On &&
                      side_of_circle(r.crossing_b, r.new_circle) == Side::On,
                  "(3) crossings not on both circles");
        c.require(strictly_between_on_arc(circ, a, r.crossing_a, bs.front()) &&
                      strictly_between_on_arc(circ, bs.back(), r.crossing_b, cc),
                  "(3) crossings not in the required arcs");
        for (const Point& m : r.moved)
            c.require(side_of_circle(m, circ) == Side::Outside &&
                          side_of_circle(m, r.new_circle) == Side::On,
                      "(4) moved point not outside / not on the new circle");
        for (std::size_t i = 0; i + 1 < r.moved.size(); ++i)
            c.require(arc_order(r.new_circle, r.crossing_a, r.moved[i], r.moved[i + 1]) ==
                          ArcOrder::PBeforeQ,
                      "(4) order not preserved");
    }
    return c;
}

struct Criterion {
    int number;
    const char* title;
    double time_limit_s;
    std::function<Check()> run;
};

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "combinatorial core (K_4 and Hc^2(3) colorability)", 1.0, criterion1},
        {2, "realize_tree on the 13-vertex complete 3-ary tree", 300.0, criterion2},
        {3, "non-3-colorable realization at desk scale", 10.0, criterion3},
        {4, "polychromatic coloring, 50 seeded instances", 120.0, criterion4},
        {5, "oracle equivalence at resolution 1/512", 60.0, criterion5},
        {6, "quarter lemma property suite", 10.0, criterion6},
        {7, "clustering demo", 5.0, criterion7},
        {8, "lemma_step certification, 200 invocations", 30.0, criterion8},
    };

    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

    bool all_ok = true;
    for (const auto& cr : criteria) {
        if (!wanted.empty() && !wanted.count(cr.number)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Check result;
        try {
            result = cr.run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (dt > cr.time_limit_s) {
            result.ok = false;
            result.detail = "time limit " + std::to_string(cr.time_limit_s) + "s exceeded";
        }
        std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", result.ok ? "PASS" : "FAIL", cr.number,
                    cr.title, dt, result.ok ? "" : " -- ", result.detail.c_str());
        all_ok = all_ok && result.ok;
    }
    return all_ok ? 0 : 1;
}

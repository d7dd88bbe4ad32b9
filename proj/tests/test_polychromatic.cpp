#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "diskcolor/polychromatic.hpp"
#include "helpers.hpp"

using namespace diskcolor;
using namespace testutil;

namespace {

std::vector<Point> random_lattice_points(std::mt19937_64& rng, const Point& o, int n,
                                         long spread = 12) {
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

} // namespace

TEST_CASE("polychromatic_color basics") {
    SECTION("k=1 is vacuous") {
        const Coloring c = polychromatic_color({0, 1, 2}, {{0, 1, 2}}, 1);
        CHECK(c.colors == std::vector<int>{0, 0, 0});
    }
    SECTION("single triple, k=2, threshold 3") {
        const Coloring c = polychromatic_color({0, 1, 2}, {{0, 1, 2}}, 2, 3);
        std::set<int> used(c.colors.begin(), c.colors.end());
        CHECK(used.size() == 2);
        for (int v : c.colors) CHECK((v == 0 || v == 1));
    }
    SECTION("small sets below the threshold are unconstrained") {
        const Coloring c = polychromatic_color({0, 1}, {{0, 1}}, 2, 3);
        CHECK(c.colors.size() == 2);
    }
    SECTION("impossible system reports NoColoringFound") {
        // Two disjoint pairs plus threshold 2 and k = 3 cannot work.
        CHECK_THROWS_AS(polychromatic_color({0, 1}, {{0, 1}}, 3, 2), NoColoringFound);
    }
}

TEST_CASE("polychromatic_color covers the ground set with at most k colors") {
    std::mt19937_64 rng(79);
    const Point o = pt(0, 0);
    const auto pts = random_lattice_points(rng, o, 20);
    const auto fam = stabbed_unit_disk_ranges(pts, o);
    const auto decomp = quarter_partition(pts, o);
    const auto traces = quarter_traces(decomp, fam);
    for (int qi = 0; qi < 4; ++qi) {
        if (decomp.parts[qi].empty()) continue;
        const int k = 3;
        const Coloring c = polychromatic_color(decomp.parts[qi], traces[qi], k, 5);
        for (int v : decomp.parts[qi]) {
            CHECK(c.colors[v] >= 0);
            CHECK(c.colors[v] < k);
        }
        // Every trace with >= 5 points sees all 3 colors.
        for (const auto& t : traces[qi]) {
            if (t.size() < 5) continue;
            std::set<int> seen;
            for (int v : t) seen.insert(c.colors[v]);
            CHECK(seen.size() == 3);
        }
    }
}

TEST_CASE("color_stabbed_unit_disks end-to-end with verifier") {
    std::mt19937_64 rng(83);
    const Point o(rat(1, 8), rat(1, 8));
    for (int k : {1, 2, 3}) {
        const auto pts = random_lattice_points(rng, o, 25);
        const auto fam = stabbed_unit_disk_ranges(pts, o);
        const Coloring col = color_stabbed_unit_disks(pts, o, k, pt(1, 0), &fam);
        const auto violations = verify_polychromatic(pts, o, k, col, 8 * k - 7, pt(1, 0), &fam);
        CHECK(violations.empty());
    }
}

TEST_CASE("verify_polychromatic flags constructed faults") {
    std::mt19937_64 rng(89);
    const Point o = pt(0, 0);
    // Cluster 9+ points inside a single stabbed unit disk.
    std::vector<Point> pts;
    for (long i = -5; i <= 5; ++i) pts.push_back(Point(Rational(i, 8), rat(1, 8)));
    const Coloring all_one{2, std::vector<int>(pts.size(), 0)};
    const auto violations = verify_polychromatic(pts, o, 2, all_one, 9);
    CHECK(!violations.empty());
    for (const auto& v : violations) CHECK(v.range.size() >= 9);

    // Threshold above n: nothing to check.
    CHECK(verify_polychromatic(pts, o, 2, all_one, static_cast<int>(pts.size()) + 1).empty());
}

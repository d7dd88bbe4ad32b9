#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "diskcolor/stabbed.hpp"
#include "helpers.hpp"

using namespace diskcolor;
using namespace testutil;

namespace {

std::set<std::vector<int>> range_set(const RangeFamily& f) {
    return std::set<std::vector<int>>(f.ranges.begin(), f.ranges.end());
}

// Random distinct lattice points (denominator 8) within max-norm 3/2 of o.
std::vector<Point> random_lattice_points(std::mt19937_64& rng, const Point& o, int n) {
    std::set<std::pair<long, long>> used{{0, 0}};
    std::vector<Point> pts;
    std::uniform_int_distribution<long> d(-12, 12);
    while (static_cast<int>(pts.size()) < n) {
        const long a = d(rng), b = d(rng);
        if (!used.insert({a, b}).second) continue;
        pts.push_back(Point(o.x + Rational(a, 8), o.y + Rational(b, 8)));
    }
    return pts;
}

} // namespace

TEST_CASE("stabbed ranges for a single far point") {
    const auto f = stabbed_unit_disk_ranges({pt(3, 0)}, pt(0, 0));
    CHECK(range_set(f) == std::set<std::vector<int>>{{}});
}

TEST_CASE("stabbed ranges for a single close point") {
    const auto f = stabbed_unit_disk_ranges({Point(rat(1, 2), rat(0))}, pt(0, 0));
    CHECK(range_set(f) == std::set<std::vector<int>>{{}, {0}});
}

TEST_CASE("stabbed witnesses are stabbed and reproduce their ranges") {
    std::mt19937_64 rng(61);
    const Point o = pt(0, 0);
    const auto pts = random_lattice_points(rng, o, 8);
    const auto f = stabbed_unit_disk_ranges(pts, o);
    for (std::size_t i = 0; i < f.ranges.size(); ++i) {
        CHECK(dist_sq(f.witnesses[i].center, o) < 1);
        CHECK(f.witnesses[i].radius_sq == 1);
        bool any_on = false;
        CHECK(points_inside_disk(pts, f.witnesses[i].center, 1, &any_on) == f.ranges[i]);
        CHECK_FALSE(any_on);
    }
}

TEST_CASE("grid oracle is a sound under-approximation, equal at fine resolution") {
    std::mt19937_64 rng(67);
    const Point o(rat(1, 8), rat(-3, 8));
    for (int trial = 0; trial < 4; ++trial) {
        const auto pts = random_lattice_points(rng, o, 3 + trial * 2);
        const auto exact = stabbed_unit_disk_ranges(pts, o);
        const auto exact_set = range_set(exact);
        for (int res_bits : {2, 5, 9}) {
            const auto grid = grid_oracle_ranges(pts, o, pow2(-res_bits));
            for (const auto& r : grid.ranges) CHECK(exact_set.count(r) == 1);
            if (res_bits == 9) CHECK(range_set(grid) == exact_set);
        }
    }
}

TEST_CASE("grid oracle basics") {
    CHECK(grid_oracle_ranges({}, pt(0, 0), rat(1, 4)).ranges ==
          std::vector<std::vector<int>>{{}});
    CHECK_THROWS_AS(grid_oracle_ranges({pt(1, 1)}, pt(0, 0), rat(1, 3)), Error);
    CHECK_THROWS_AS(grid_oracle_ranges({pt(1, 1)}, pt(0, 0), rat(0)), Error);
    // Coarse grids under-approximate.
    const auto coarse = grid_oracle_ranges({Point(rat(1, 2), rat(0))}, pt(0, 0), rat(1, 2));
    const auto fine = grid_oracle_ranges({Point(rat(1, 2), rat(0))}, pt(0, 0), rat(1, 64));
    CHECK(coarse.ranges.size() <= fine.ranges.size());
}

TEST_CASE("stabbed input validation") {
    CHECK_THROWS_AS(stabbed_unit_disk_ranges({pt(0, 0)}, pt(0, 0)), DegenerateInput);
    CHECK_THROWS_AS(stabbed_unit_disk_ranges({pt(1, 1), pt(1, 1)}, pt(0, 0)), DegenerateInput);
}

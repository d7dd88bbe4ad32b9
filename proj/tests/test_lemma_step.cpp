#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "diskcolor/lemma_step.hpp"
#include "helpers.hpp"

using namespace diskcolor;
using namespace testutil;

namespace {

// Re-certify all four Lemma properties independently of lemma_step's own
// certification.
void check_lemma_properties(const Circle& c, const Point& a, const std::vector<Point>& bs,
                            const Point& cc, const Rational& eps, const LemmaStepResult& r) {
    // (1) C' is eps-close to C.
    CHECK(points_close(r.new_circle.center, c.center, eps));
    CHECK(sqrt_diff_less(r.new_circle.radius_sq, c.radius_sq, eps));
    // (2) each b'_i is eps-close to b_i.
    REQUIRE(r.moved.size() == bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) CHECK(points_close(r.moved[i], bs[i], eps));
    // (3) the circles intersect exactly at A and B, placed in the right arcs.
    CHECK(side_of_circle(r.crossing_a, c) == Side::On);
    CHECK(side_of_circle(r.crossing_a, r.new_circle) == Side::On);
    CHECK(side_of_circle(r.crossing_b, c) == Side::On);
    CHECK(side_of_circle(r.crossing_b, r.new_circle) == Side::On);
    CHECK(strictly_between_on_arc(c, a, r.crossing_a, bs.front()));
    CHECK(strictly_between_on_arc(c, bs.back(), r.crossing_b, cc));
    // (4) each b'_i lies outside of C, exactly on C', order preserved.
    for (const Point& m : r.moved) {
        CHECK(side_of_circle(m, c) == Side::Outside);
        CHECK(side_of_circle(m, r.new_circle) == Side::On);
    }
    for (std::size_t i = 0; i + 1 < r.moved.size(); ++i)
        CHECK(arc_order(r.new_circle, r.crossing_a, r.moved[i], r.moved[i + 1]) ==
              ArcOrder::PBeforeQ);
    for (const Point& m : r.moved)
        CHECK(strictly_between_on_arc(r.new_circle, r.crossing_a, m, r.crossing_b));
}

} // namespace

TEST_CASE("lemma_step on the unit circle, single point") {
    const Circle c = unit_circle();
    const Point a = pt(1, 0), b1 = pt(0, 1), cc = pt(-1, 0);
    const Rational eps = rat(1, 10);
    const auto r = lemma_step(c, a, {b1}, cc, eps);
    check_lemma_properties(c, a, {b1}, cc, eps, r);
}

TEST_CASE("lemma_step with three points on the upper arc") {
    const Circle c = unit_circle();
    const Point a = pt(1, 0), cc = pt(-1, 0);
    const std::vector<Point> bs{
        Point(rat(4, 5), rat(3, 5)),
        Point(rat(0), rat(1)),
        Point(rat(-3, 5), rat(4, 5)),
    };
    const Rational eps = rat(1, 10);
    const auto r = lemma_step(c, a, bs, cc, eps);
    check_lemma_properties(c, a, bs, cc, eps, r);
}

TEST_CASE("lemma_step group spanning more than half the circle") {
    const Circle c = unit_circle();
    // a just after the base point, group wrapping far around.
    const Point a = point_at(c, ArcParam::of(rat(-8)));
    const std::vector<Point> bs{
        point_at(c, ArcParam::of(rat(-2))),
        point_at(c, ArcParam::of(rat(0))),   // antipode of base
        point_at(c, ArcParam::of(rat(2))),
    };
    const Point cc = point_at(c, ArcParam::of(rat(8)));
    const Rational eps = rat(1, 16);
    const auto r = lemma_step(c, a, bs, cc, eps);
    check_lemma_properties(c, a, bs, cc, eps, r);
}

TEST_CASE("lemma_step rejects bad inputs") {
    const Circle c = unit_circle();
    CHECK_THROWS_AS(lemma_step(c, pt(1, 0), {pt(0, 1)}, pt(-1, 0), rat(0)), Error);
    // Wrong order: cc before the group.
    CHECK_THROWS_AS(lemma_step(c, pt(1, 0), {pt(-1, 0)}, pt(0, 1), rat(1, 10)), DegenerateArc);
    // Coincident points.
    CHECK_THROWS_AS(lemma_step(c, pt(1, 0), {pt(0, 1), pt(0, 1)}, pt(-1, 0), rat(1, 10)),
                    DegenerateArc);
    // Point not on circle.
    CHECK_THROWS_AS(lemma_step(c, pt(1, 0), {pt(0, 2)}, pt(-1, 0), rat(1, 10)), DegenerateArc);
}

TEST_CASE("lemma_step randomized certification") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const Circle c = random_circle(rng, 3, 4);
        const int t = 1 + static_cast<int>(rng() % 4);
        // a, b_1..b_t, cc at increasing parameters.
        std::vector<Point> all;
        long param = -6;
        for (int i = 0; i < t + 2; ++i) {
            param += 1 + static_cast<long>(rng() % 3);
            all.push_back(point_at(c, ArcParam::of(Rational(param, 2))));
        }
        const Point a = all.front(), cc = all.back();
        const std::vector<Point> bs(all.begin() + 1, all.end() - 1);
        const Rational eps = pow2(-1 - static_cast<int>(rng() % 10));
        const auto r = lemma_step(c, a, bs, cc, eps);
        check_lemma_properties(c, a, bs, cc, eps, r);
    }
}

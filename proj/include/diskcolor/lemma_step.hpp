#pragma once

#include <vector>

#include "diskcolor/circle_param.hpp"
#include "diskcolor/geometry.hpp"

namespace diskcolor {

struct LemmaStepResult {
    Circle new_circle;         // C'
    std::vector<Point> moved;  // b'_i, exactly on C', outside c, order preserved
    Point crossing_a;          // A = first intersection of C' and c, in arc (a, b_1)
    Point crossing_b;          // B = second intersection, in arc (b_t, cc)
};

namespace detail {

inline void check_lemma_step_order(const Circle& c, const Point& a,
                                   const std::vector<Point>& bs, const Point& cc) {
    std::vector<const Point*> seq;
    for (const Point& b : bs) seq.push_back(&b);
    seq.push_back(&cc);
    const Point* prev = &a;
    for (const Point* cur : seq) {
        if (*cur == a || *cur == *prev)
            throw DegenerateArc("lemma_step: coincident input points");
        if (prev != &a && arc_order(c, a, *prev, *cur) != ArcOrder::PBeforeQ)
            throw DegenerateArc("lemma_step: points are not in counterclockwise order");
        prev = cur;
    }
}

} // namespace detail

// Given a, b_1..b_t, cc in CCW order on c, produces a circle C' eps-close to
// c that crosses c at rational points A (between a and b_1) and B (between
// b_t and cc), together with points b'_i on C', eps-close to b_i, all outside
// c and in the same CCW order. Every property is certified by exact
// predicates; the center displacement is halved and retried until all
// certificates hold.
inline LemmaStepResult lemma_step(const Circle& c, const Point& a, const std::vector<Point>& bs,
                                  const Point& cc, const Rational& eps) {
    if (eps <= 0) throw Error("lemma_step: eps must be positive");
    if (bs.empty()) throw DegenerateArc("lemma_step: no points to move");
    for (const Point* p : {&a, &cc})
        if (side_of_circle(*p, c) != Side::On)
            throw DegenerateArc("lemma_step: anchor not on the circle");
    for (const Point& b : bs)
        if (side_of_circle(b, c) != Side::On)
            throw DegenerateArc("lemma_step: moved point not on the circle");
    detail::check_lemma_step_order(c, a, bs, cc);

    const Point A = point_in_arc(c, a, bs.front(), Rational(1, 2));
    const Point B = point_in_arc(c, bs.back(), cc, Rational(1, 2));

    // Normal of chord AB pointing into the halfplane holding the b_i.
    Point w = rot90(B - A);
    {
        const Rational side0 = cross(B - A, bs.front() - A);
        if (side0 == 0) throw Error("lemma_step: moved point collinear with chord");
        if (side0 < 0) w = Point(0, 0) - w;
        for (const Point& b : bs)
            if (sign_int(cross(B - A, b - A)) != (side0 < 0 ? -1 : 1))
                throw Error("lemma_step: moved points straddle the chord");
    }

    // Projection tolerance: below eps and well below every gap along the arc.
    Rational min_gap_sq = dist_sq(A, bs.front());
    {
        for (std::size_t i = 0; i + 1 < bs.size(); ++i)
            min_gap_sq = std::min(min_gap_sq, dist_sq(bs[i], bs[i + 1]));
        min_gap_sq = std::min(min_gap_sq, dist_sq(bs.back(), B));
    }
    const Rational eta = pow2_sqrt_floor(std::min(eps * eps, min_gap_sq) / 64);
    // Center displacement lambda * |w| starts at eta/16 and halves on retry.
    Rational lambda = pow2_sqrt_floor(eta * eta / (256 * norm_sq(w)));

    std::string why = "no attempt";
    const unsigned near_budget = 192 + 4 * static_cast<unsigned>(bit_size(eta));
    for (int attempt = 0; attempt < 96; ++attempt, lambda /= 2) {
        const Point center = c.center + lambda * w;
        const Circle cp = Circle::through(center, A);
        if (dist_sq(B, cp.center) != cp.radius_sq) throw Error("lemma_step: B not on C'");

        if (!circles_close(cp, c, eps)) {
            why = "new circle not eps-close";
            continue;
        }

        LemmaStepResult out{cp, {}, A, B};
        bool ok = true;
        for (const Point& b : bs) {
            Point bp;
            try {
                bp = rational_point_on_circle_near(cp, b, eta, near_budget);
            } catch (const NoRationalPointFound&) {
                ok = false;
                why = "no rational point near a moved point";
                break;
            }
            if (side_of_circle(bp, c) != Side::Outside) {
                ok = false;
                why = "moved point not outside the old circle";
                break;
            }
            if (!points_close(bp, b, eps)) {
                ok = false;
                why = "moved point not eps-close";
                break;
            }
            out.moved.push_back(bp);
        }
        if (!ok) continue;

        // CCW order on C': A, b'_1, ..., b'_t, B.
        const Point* prev = &A;
        for (const Point& bp : out.moved) {
            if (bp == *prev || bp == B ||
                (prev != &A && arc_order(cp, A, *prev, bp) != ArcOrder::PBeforeQ) ||
                !strictly_between_on_arc(cp, A, bp, B)) {
                ok = false;
                why = "moved points out of order on the new circle";
                break;
            }
            prev = &bp;
        }
        if (!ok) continue;
        return out;
    }
    throw PrecisionBudgetExceeded("lemma_step: certification did not converge (" + why + ")");
}

} // namespace diskcolor

#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "diskcolor/coloring.hpp"
#include "diskcolor/quarters.hpp"
#include "diskcolor/stabbed.hpp"

namespace diskcolor {

// k-colors `ground` so that every member of `system` with at least
// `threshold` elements receives all k colors. Complete backtracking with
// forward checking; on pseudohalfplane traces a solution exists at
// threshold 2k-1, so failure there signals a caller bug.
using PolychromeSolver = std::function<std::optional<std::vector<int>>(
    const std::vector<int>& ground, const std::vector<std::vector<int>>& system, int k,
    int threshold)>;

inline std::optional<std::vector<int>> polychromatic_backtracking(
    const std::vector<int>& ground, const std::vector<std::vector<int>>& system, int k,
    int threshold) {
    // Constraints: sets of local indices that must see all k colors.
    std::vector<int> local(ground.size());
    std::vector<std::vector<int>> cons;
    {
        std::map<int, int> to_local;
        for (std::size_t i = 0; i < ground.size(); ++i) to_local[ground[i]] = static_cast<int>(i);
        std::set<std::vector<int>> dedup;
        for (const auto& s : system) {
            if (static_cast<int>(s.size()) < threshold) continue;
            std::vector<int> c;
            for (int v : s) c.push_back(to_local.at(v));
            std::sort(c.begin(), c.end());
            if (dedup.insert(c).second) cons.push_back(std::move(c));
        }
    }
    const int n = static_cast<int>(ground.size());
    std::vector<int> color(n, -1);
    // Per constraint: how many vertices of each color, and how many free.
    std::vector<std::vector<int>> count(cons.size(), std::vector<int>(k, 0));
    std::vector<int> free_count(cons.size());
    std::vector<std::vector<int>> member_of(n);
    for (std::size_t ci = 0; ci < cons.size(); ++ci) {
        free_count[ci] = static_cast<int>(cons[ci].size());
        for (int v : cons[ci]) member_of[v].push_back(static_cast<int>(ci));
    }

    auto missing_colors = [&](std::size_t ci) {
        int miss = 0;
        for (int c = 0; c < k; ++c)
            if (count[ci][c] == 0) ++miss;
        return miss;
    };

    std::function<bool(int)> solve = [&](int v) -> bool {
        if (v == n) return true;
        for (int c = 0; c < k; ++c) {
            color[v] = c;
            bool ok = true;
            for (int ci : member_of[v]) {
                ++count[ci][c];
                --free_count[ci];
            }
            for (int ci : member_of[v])
                if (missing_colors(ci) > free_count[ci]) {
                    ok = false;
                    break;
                }
            if (ok && solve(v + 1)) return true;
            for (int ci : member_of[v]) {
                --count[ci][c];
                ++free_count[ci];
            }
            color[v] = -1;
        }
        return false;
    };
    if (!solve(0)) return std::nullopt;
    return color;
}

// Coloring of `ground` (vertex ids) such that every system member of size
// >= threshold (default 2k-1) contains all k colors.
inline Coloring polychromatic_color(const std::vector<int>& ground,
                                    const std::vector<std::vector<int>>& system, int k,
                                    int threshold = -1,
                                    const PolychromeSolver& solver = polychromatic_backtracking) {
    if (k < 1) throw Error("polychromatic_color: k must be positive");
    if (threshold < 0) threshold = 2 * k - 1;
    const auto local = solver(ground, system, k, threshold);
    if (!local) throw NoColoringFound("polychromatic_color: no valid coloring found");
    int maxv = -1;
    for (int v : ground) maxv = std::max(maxv, v);
    Coloring col{k, std::vector<int>(maxv + 1, 0)};
    for (std::size_t i = 0; i < ground.size(); ++i) col.colors[ground[i]] = (*local)[i];
    return col;
}

// Positive theorem pipeline: partition by quarters, color each part so that
// every pseudohalfplane trace with 2k-1 points is polychromatic. Every
// stabbed unit disk with at least 8k-7 points then has 2k-1 points in some
// quarter, hence all k colors.
inline Coloring color_stabbed_unit_disks(const std::vector<Point>& points, const Point& o, int k,
                                         const Point& axis = Point(1, 0),
                                         const RangeFamily* precomputed = nullptr,
                                         const PolychromeSolver& solver = polychromatic_backtracking) {
    RangeFamily owned;
    const RangeFamily* fam = precomputed;
    if (!fam) {
        owned = stabbed_unit_disk_ranges(points, o);
        fam = &owned;
    }
    const QuarterDecomposition decomp = quarter_partition(points, o, axis);
    const auto traces = quarter_traces(decomp, *fam);

    Coloring out{k, std::vector<int>(points.size(), 0)};
    for (int qi = 0; qi < 4; ++qi) {
        if (decomp.parts[qi].empty()) continue;
        const Coloring part = polychromatic_color(decomp.parts[qi], traces[qi], k, 2 * k - 1, solver);
        for (int v : decomp.parts[qi]) out.colors[v] = part.colors[v];
    }
    return out;
}

struct PolychromeViolation {
    std::vector<int> range;
    RangeWitness witness;
};

// Exhaustive certification: every stabbed unit-disk range with at least
// `threshold` points must contain all k colors. Also asserts the pigeonhole
// bound: a range of size >= 8k-7 has a quarter trace of size >= 2k-1.
inline std::vector<PolychromeViolation> verify_polychromatic(
    const std::vector<Point>& points, const Point& o, int k, const Coloring& coloring,
    int threshold, const Point& axis = Point(1, 0), const RangeFamily* precomputed = nullptr) {
    RangeFamily owned;
    const RangeFamily* fam = precomputed;
    if (!fam) {
        owned = stabbed_unit_disk_ranges(points, o);
        fam = &owned;
    }
    const QuarterDecomposition decomp = quarter_partition(points, o, axis);

    std::vector<PolychromeViolation> violations;
    for (std::size_t ri = 0; ri < fam->ranges.size(); ++ri) {
        const auto& r = fam->ranges[ri];
        if (static_cast<int>(r.size()) < threshold) continue;
        if (static_cast<int>(r.size()) >= 8 * k - 7) {
            // 4(2k-2)+1 = 8k-7 points force 2k-1 into one quarter.
            std::array<int, 4> qsize{0, 0, 0, 0};
            for (int v : r) ++qsize[quarter_index_of(o, decomp.axis, points[v])];
            if (*std::max_element(qsize.begin(), qsize.end()) < 2 * k - 1)
                throw InvariantViolation("verify_polychromatic: pigeonhole bound failed");
        }
        std::set<int> seen;
        for (int v : r) seen.insert(coloring.colors.at(v));
        if (static_cast<int>(seen.size()) < k)
            violations.push_back({r, fam->witnesses[ri]});
    }
    return violations;
}

} // namespace diskcolor

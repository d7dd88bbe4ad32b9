#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "diskcolor/lemma_step.hpp"
#include "diskcolor/perturb.hpp"
#include "diskcolor/ranges.hpp"
#include "diskcolor/realization.hpp"
#include "diskcolor/tree.hpp"

namespace diskcolor {

struct ConstructionOptions {
    std::size_t budget_bits = std::size_t(1) << 20; // per coordinate numerator/denominator
    int max_retries = 64;
};

struct AuditEntry {
    enum class Kind { AddInitialDisk, AddDisk, MovePoint, DecreaseDelta };
    Kind kind;
    int point = -1;     // MovePoint: vertex id
    int disk = -1;      // AddDisk: disk index
    int near_disk = -1; // AddDisk: the disk the new one is delta-close to
};

struct BitGrowthSample {
    std::string label;
    std::size_t max_bits;
};

// Mutable state of the descendent-disk algorithm. After the initial
// adjustment and after every step k the three properties hold:
//  (P1) every unfixed point lies on the boundary of B(w) for its lowest
//       ancestor w with B(w) defined, and strictly outside every other disk;
//  (P2) a vertex is fixed and owns a disk exactly when its parent's step
//       (or the initial adjustment, for the root) has run;
//  (P3) every disk B(v) contains exactly the points of the path Q(v) that
//       are already fixed.
// assert_invariants certifies all three with exact predicates and throws
// InvariantViolation naming the step otherwise.
class ConstructionState {
public:
    ConstructionState(const RootedTree& tree, Circle anchor, std::vector<Point> initial,
                      Rational delta0, ConstructionOptions opts)
        : tree_(tree),
          anchor_(std::move(anchor)),
          pos_(std::move(initial)),
          fixed_(tree.n, 0),
          disk_of_vertex_(tree.n, -1),
          delta_(std::move(delta0)),
          opts_(opts) {
        note_bits("init");
    }

    const RootedTree& tree() const { return tree_; }
    const Circle& anchor() const { return anchor_; }
    const Rational& delta() const { return delta_; }
    const Point& position(int v) const { return pos_.at(v); }
    bool is_fixed(int v) const { return fixed_.at(v) != 0; }
    int disk_of(int v) const { return disk_of_vertex_.at(v); }
    int disk_count() const { return static_cast<int>(disks_.size()); }
    const Circle& disk_circle(int i) const { return disks_.at(i).circle; }
    int disk_vertex(int i) const { return disks_.at(i).vertex; }
    const std::vector<AuditEntry>& audit_log() const { return log_; }
    const std::vector<BitGrowthSample>& bit_growth() const { return growth_; }
    std::size_t max_bits_seen() const { return max_bits_; }
    int invariant_checks_passed() const { return invariant_checks_; }

    // Disk of the anchor circle itself, owned by the root.
    void add_initial_disk() {
        if (!disks_.empty()) throw InvariantViolation("initial disk added twice");
        disks_.push_back({anchor_, tree_.root});
        disk_of_vertex_[tree_.root] = 0;
        log_.push_back({AuditEntry::Kind::AddInitialDisk, -1, 0, -1});
    }

    // Audited operation (b): a new disk delta-close to an existing one.
    int add_disk(const Circle& c, int vertex, int near_disk) {
        if (!circles_close(c, disks_.at(near_disk).circle, delta_))
            throw InvariantViolation("audit: new disk is not delta-close to its reference");
        check_budget(bit_size(c), "disk");
        disks_.push_back({c, vertex});
        disk_of_vertex_[vertex] = static_cast<int>(disks_.size()) - 1;
        log_.push_back({AuditEntry::Kind::AddDisk, -1, static_cast<int>(disks_.size()) - 1,
                        near_disk});
        return static_cast<int>(disks_.size()) - 1;
    }

    // Audited operation (a): move a point by less than delta.
    void move_point(int v, const Point& to) {
        if (fixed_[v]) throw InvariantViolation("audit: attempt to move a fixed point");
        if (!points_close(pos_[v], to, delta_))
            throw InvariantViolation("audit: move is not shorter than delta");
        check_budget(bit_size(to), "point");
        pos_[v] = to;
        log_.push_back({AuditEntry::Kind::MovePoint, v, -1, -1});
    }

    // Audited operation (c): decrease delta (no-op when not smaller).
    void decrease_delta(const Rational& to) {
        if (to >= delta_) return;
        if (to <= 0) throw InvariantViolation("audit: delta must stay positive");
        delta_ = to;
        log_.push_back({AuditEntry::Kind::DecreaseDelta, -1, -1, -1});
    }

    void fix_point(int v) { fixed_[v] = 1; }

    // Smallest boundary gap over all point/disk pairs not on each other,
    // quartered and rounded down to a power of 1/2: a safe delta for any
    // single audited operation.
    Rational global_gap_bound() const {
        Rational best = 0;
        bool have = false;
        for (int v = 0; v < tree_.n; ++v)
            for (const auto& d : disks_) {
                if (side_of_circle(pos_[v], d.circle) == Side::On) continue;
                const Rational g = boundary_gap_lower_bound(pos_[v], d.circle);
                if (!have || g < best) {
                    best = g;
                    have = true;
                }
            }
        if (!have) return delta_;
        return pow2_floor(best / 4);
    }

    void note_bits(const std::string& label) {
        std::size_t bits = 0;
        for (const auto& p : pos_) bits = std::max(bits, bit_size(p));
        for (const auto& d : disks_) bits = std::max(bits, bit_size(d.circle));
        max_bits_ = std::max(max_bits_, bits);
        growth_.push_back({label, bits});
    }

    void check_budget(std::size_t bits, const char* what) const {
        max_bits_ = std::max(max_bits_, bits);
        if (bits > opts_.budget_bits)
            throw PrecisionBudgetExceeded(std::string(what) + " needs " + std::to_string(bits) +
                                          " bits, budget is " + std::to_string(opts_.budget_bits));
    }

    void assert_invariants(const std::string& context) {
        // (P2) bookkeeping.
        for (int v = 0; v < tree_.n; ++v) {
            if ((disk_of_vertex_[v] >= 0) != (fixed_[v] != 0))
                throw InvariantViolation(context + ": (P2) fixed/disk bookkeeping for vertex " +
                                         std::to_string(v));
            if (fixed_[v] && v != tree_.root && !fixed_[tree_.parent[v]])
                throw InvariantViolation(context + ": (P2) vertex fixed before its parent");
        }
        // (P1) unfixed points sit on their lowest defined ancestor disk.
        for (int v = 0; v < tree_.n; ++v) {
            if (fixed_[v]) continue;
            int w = tree_.parent[v];
            while (w >= 0 && disk_of_vertex_[w] < 0) w = tree_.parent[w];
            if (w < 0)
                throw InvariantViolation(context + ": (P1) no ancestor disk for vertex " +
                                         std::to_string(v));
            const int home = disk_of_vertex_[w];
            for (int di = 0; di < disk_count(); ++di) {
                const Side s = side_of_circle(pos_[v], disks_[di].circle);
                const Side want = di == home ? Side::On : Side::Outside;
                if (s != want)
                    throw InvariantViolation(context + ": (P1) vertex " + std::to_string(v) +
                                             " misplaced relative to disk " + std::to_string(di));
            }
        }
        // (P3) every disk contains exactly the fixed part of its path.
        for (int di = 0; di < disk_count(); ++di) {
            std::vector<int> want = tree_.root_path(disks_[di].vertex);
            std::sort(want.begin(), want.end());
            std::vector<int> got;
            for (int v = 0; v < tree_.n; ++v)
                if (side_of_circle(pos_[v], disks_[di].circle) == Side::Inside) got.push_back(v);
            if (got != want)
                throw InvariantViolation(context + ": (P3) disk " + std::to_string(di) +
                                         " does not contain exactly its path");
        }
        ++invariant_checks_;
    }

private:
    struct DescDisk {
        Circle circle;
        int vertex; // B(vertex)
    };

    RootedTree tree_;
    Circle anchor_;
    std::vector<Point> pos_;
    std::vector<char> fixed_;
    std::vector<DescDisk> disks_;
    std::vector<int> disk_of_vertex_;
    Rational delta_;
    ConstructionOptions opts_;
    std::vector<AuditEntry> log_;
    std::vector<BitGrowthSample> growth_;
    mutable std::size_t max_bits_ = 0;
    int invariant_checks_ = 0;
};

// Construction-time statistics, for the bit-growth log and audit reporting.
struct ConstructionReport {
    std::size_t max_bits = 0;
    std::vector<BitGrowthSample> bit_growth;
    std::size_t audit_operations = 0;
    int invariant_checks = 0;
};

// Rational points a, cc on the host disk's boundary strictly flanking the
// group in arc order and outside every other descendent disk. `group` lists
// vertex ids in their arc order on the host boundary. Flanks are pulled
// toward the group until they certify; NoFreeArc after the retry budget.
inline std::pair<Point, Point> choose_arc_anchors(const ConstructionState& st, int host_disk,
                                                  const std::vector<int>& group,
                                                  int prev_vertex = -1, int next_vertex = -1) {
    const Circle& host = st.disk_circle(host_disk);
    const Point& first = st.position(group.front());
    const Point& last = st.position(group.back());

    auto outside_others = [&](const Point& p) {
        for (int di = 0; di < st.disk_count(); ++di) {
            if (di == host_disk) continue;
            if (side_of_circle(p, st.disk_circle(di)) != Side::Outside) return false;
        }
        return true;
    };

    Point from_a = prev_vertex >= 0 ? st.position(prev_vertex) : last;
    Point to_c = next_vertex >= 0 ? st.position(next_vertex) : first;
    if (from_a == first || to_c == last) {
        // Single resident on the whole boundary: anchor the arcs at any
        // other rational point of the host circle.
        const ArcParam tp = param_of(host, first);
        ArcParam other = tp.infinite ? ArcParam::of(Rational(0))
                                     : ArcParam::of(tp.value + 1);
        const Point z = point_at(host, other);
        if (from_a == first) from_a = z;
        if (to_c == last) to_c = z;
    }

    std::optional<Point> a, cc;
    Rational lam(1, 2);
    for (int i = 0; i < 40 && !a; ++i, lam = (1 + lam) / 2) {
        const Point cand = point_in_arc(host, from_a, first, lam); // toward the group start
        if (outside_others(cand)) a = cand;
    }
    lam = Rational(1, 2);
    for (int i = 0; i < 40 && !cc; ++i, lam = lam / 2) {
        const Point cand = point_in_arc(host, last, to_c, lam); // toward the group end
        if (outside_others(cand) && (!a || (cand != *a))) cc = cand;
    }
    if (!a || !cc) throw NoFreeArc("choose_arc_anchors: no uncovered flanking points found");
    return {*a, *cc};
}

// Realization of Hc(T) with points gamma-close to the prescribed concyclic
// positions and all disks gamma-close to the anchor circle. qs[i] is the
// position of the i-th vertex in siblings-first order and must be listed in
// counterclockwise cyclic order.
inline Realization realize_tree(const RootedTree& tree, const Circle& c,
                                const std::vector<Point>& qs, const Rational& gamma,
                                const ConstructionOptions& opts = {},
                                ConstructionReport* report = nullptr) {
    const int n = tree.n;
    if (static_cast<int>(qs.size()) != n)
        throw InvalidOrder("realize_tree: expected one point per vertex");
    if (gamma <= 0 || 16 * gamma * gamma >= c.radius_sq)
        throw Error("realize_tree: need 0 < gamma < radius/4");
    for (const Point& q : qs)
        if (side_of_circle(q, c) != Side::On)
            throw InvalidOrder("realize_tree: prescribed point not on the anchor circle");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (qs[i] == qs[j]) throw InvalidOrder("realize_tree: coincident prescribed points");
    for (int i = 2; i < n; ++i)
        if (arc_order(c, qs[0], qs[i - 1], qs[i]) != ArcOrder::PBeforeQ)
            throw InvalidOrder("realize_tree: points are not in counterclockwise cyclic order");

    const std::vector<int> order = siblings_first_order(tree);
    std::vector<int> pos_of(n); // vertex -> order position
    for (int i = 0; i < n; ++i) pos_of[order[i]] = i;
    std::vector<Point> q_of(n); // vertex -> prescribed point
    for (int i = 0; i < n; ++i) q_of[order[i]] = qs[i];

    // --- Sibling disks on the pristine circle -----------------------------
    const Rational eps_sib_step = pow2_floor(gamma);
    std::vector<TaggedDisk> sibling_disks;
    for (int v = 0; v < n; ++v) {
        if (tree.is_leaf(v)) continue;
        const auto& ch = tree.children[v];
        const int p_first = pos_of[ch.front()], p_last = pos_of[ch.back()];
        std::vector<Point> group;
        for (int p = p_first; p <= p_last; ++p) group.push_back(qs[p]);
        if (static_cast<int>(group.size()) != static_cast<int>(ch.size()))
            throw InvariantViolation("realize_tree: sibling group is not consecutive");
        const Point& prev = qs[p_first - 1]; // the order starts with the root
        const Point& next = qs[(p_last + 1) % n];
        const Point a = point_in_arc(c, prev, group.front(), Rational(1, 2));
        const Point cc = point_in_arc(c, group.back(), next, Rational(1, 2));
        const auto step = lemma_step(c, a, group, cc, eps_sib_step);
        // The disk bounded by C' contains exactly the arc between the two
        // crossings, hence exactly the sibling group.
        for (int i = 0; i < n; ++i) {
            const bool in_group = pos_of[i] >= p_first && pos_of[i] <= p_last;
            if ((side_of_circle(qs[pos_of[i]], step.new_circle) == Side::Inside) != in_group)
                throw InvariantViolation("realize_tree: sibling disk certification failed");
        }
        sibling_disks.emplace_back(step.new_circle, ch);
    }

    // Movement budget small enough to keep every sibling classification.
    Rational gamma_eff = pow2_floor(gamma);
    if (!sibling_disks.empty()) {
        std::vector<Circle> sib_circles;
        for (const auto& d : sibling_disks) sib_circles.push_back(d.circle);
        gamma_eff = std::min(gamma_eff, perturbation_radius(qs, sib_circles));
    }

    // --- Descendent phase --------------------------------------------------
    const Rational delta0 = pow2_floor(gamma_eff / (Rational(n) * Rational(n)));
    std::vector<Point> initial(n);
    for (int v = 0; v < n; ++v) initial[v] = q_of[v];
    ConstructionState st(tree, c, initial, delta0, opts);

    auto cumulative_ok = [&](int v, const Point& to) {
        return points_close(to, q_of[v], gamma_eff);
    };

    // Moves a point from the boundary of its current disk strictly inside
    // `target`, keeping it outside every other disk.
    auto move_inside = [&](int v, int target_disk) {
        const Circle& tc = st.disk_circle(target_disk);
        const Point from = st.position(v);
        Rational mu = pow2_sqrt_floor(st.delta() * st.delta() /
                                      (4 * std::max(Rational(1), dist_sq(from, tc.center))));
        for (int i = 0; i < opts.max_retries; ++i, mu /= 2) {
            const Point to = from + mu * (tc.center - from);
            if (!points_close(to, from, st.delta()) || !cumulative_ok(v, to)) continue;
            if (side_of_circle(to, tc) != Side::Inside) continue;
            bool ok = true;
            for (int di = 0; di < st.disk_count() && ok; ++di)
                if (di != target_disk && side_of_circle(to, st.disk_circle(di)) != Side::Outside)
                    ok = false;
            if (!ok) continue;
            st.move_point(v, to);
            return;
        }
        throw PrecisionBudgetExceeded("realize_tree: could not move a point inside its disk");
    };

    // Initial adjustment.
    st.add_initial_disk();
    move_inside(tree.root, 0);
    st.fix_point(tree.root);
    st.decrease_delta(st.global_gap_bound());
    st.note_bits("initial adjustment");
    st.assert_invariants("initial adjustment");

    // Step k for each vertex in siblings-first order.
    for (int k = 0; k < n; ++k) {
        const int vk = order[k];
        if (tree.is_leaf(vk)) continue;
        const auto& ch = tree.children[vk];
        const int l = static_cast<int>(ch.size());

        for (int i = 0; i < l; ++i) {
            // Group: r_i..r_l and the descendant blocks of r_l..r_i; by the
            // siblings-first order these occupy consecutive order positions.
            std::vector<int> group{ch.begin() + i, ch.end()};
            for (int j = i; j < l; ++j) {
                const auto des = tree.descendants(ch[j]);
                group.insert(group.end(), des.begin(), des.end());
            }
            std::sort(group.begin(), group.end(),
                      [&](int x, int y) { return pos_of[x] < pos_of[y]; });
            for (std::size_t g = 0; g + 1 < group.size(); ++g)
                if (pos_of[group[g + 1]] != pos_of[group[g]] + 1)
                    throw InvariantViolation("realize_tree: group not consecutive in order");

            const int host = i == 0 ? st.disk_of(vk) : st.disk_of(ch[i - 1]);
            const int prev_vertex = i == 0 ? -1 : ch[i - 1];
            int next_vertex = -1;
            if (i > 0) {
                const auto prev_des = tree.descendants(ch[i - 1]);
                if (!prev_des.empty()) {
                    next_vertex = *std::min_element(
                        prev_des.begin(), prev_des.end(),
                        [&](int x, int y) { return pos_of[x] < pos_of[y]; });
                }
            }

            bool done = false;
            std::string why = "no attempt";
            for (int attempt = 0; attempt < opts.max_retries && !done; ++attempt) {
                st.decrease_delta(st.global_gap_bound());
                const auto [a, cc] = choose_arc_anchors(st, host, group, prev_vertex, next_vertex);
                std::vector<Point> bs;
                for (int v : group) bs.push_back(st.position(v));
                LemmaStepResult step = lemma_step(st.disk_circle(host), a, bs, cc, st.delta());

                // Certify the step against the full state before committing.
                bool ok = true;
                for (std::size_t g = 0; g < group.size() && ok; ++g) {
                    if (!cumulative_ok(group[g], step.moved[g])) {
                        ok = false;
                        why = "cumulative movement bound";
                    }
                    for (int di = 0; di < st.disk_count() && ok; ++di)
                        if (di != host &&
                            side_of_circle(step.moved[g], st.disk_circle(di)) != Side::Outside) {
                            ok = false;
                            why = "moved point entered another disk";
                        }
                }
                for (int v = 0; v < n && ok; ++v) {
                    if (std::find(group.begin(), group.end(), v) != group.end()) continue;
                    const Side want = st.is_fixed(v)
                                          ? side_of_circle(st.position(v), st.disk_circle(host))
                                          : Side::Outside;
                    if (side_of_circle(st.position(v), step.new_circle) != want) {
                        ok = false;
                        why = "new disk misclassifies vertex " + std::to_string(v);
                    }
                }
                if (!ok) {
                    st.decrease_delta(st.delta() / 2);
                    continue;
                }
                const int newd = st.add_disk(step.new_circle, ch[i], host);
                for (std::size_t g = 0; g < group.size(); ++g)
                    st.move_point(group[g], step.moved[g]);
                st.note_bits("step " + std::to_string(k) + " child " + std::to_string(i));
                (void)newd;
                done = true;
            }
            if (!done)
                throw PrecisionBudgetExceeded("realize_tree: step " + std::to_string(k) +
                                              " child " + std::to_string(i) +
                                              " did not certify (" + why + ")");
        }

        // Move each child inside its own disk and fix it.
        for (int i = 0; i < l; ++i) {
            st.decrease_delta(st.global_gap_bound());
            move_inside(ch[i], st.disk_of(ch[i]));
            st.fix_point(ch[i]);
        }
        st.decrease_delta(st.global_gap_bound());
        st.assert_invariants("step " + std::to_string(k));
    }

    // --- Assemble and certify the final realization ------------------------
    Realization out(c, gamma, tree_hypergraph(tree, false));
    out.stabbed = true;
    out.points.resize(n);
    for (int v = 0; v < n; ++v) out.points[v] = st.position(v);
    out.prescribed.resize(n);
    for (int v = 0; v < n; ++v) out.prescribed[v] = q_of[v];
    out.sibling_disks = sibling_disks;
    for (int di = 0; di < st.disk_count(); ++di) {
        const int v = st.disk_vertex(di);
        if (tree.is_leaf(v)) out.descendent_disks.emplace_back(st.disk_circle(di), tree.root_path(v));
    }

    const auto verdict = verify_realization(out);
    if (!verdict.ok) throw InvariantViolation("realize_tree: " + verdict.message);
    for (int v = 0; v < n; ++v)
        if (!points_close(out.points[v], q_of[v], gamma))
            throw InvariantViolation("realize_tree: point drifted farther than gamma");
    for (const auto* d : out.all_disks()) {
        if (!circles_close(d->circle, c, gamma))
            throw InvariantViolation("realize_tree: disk not gamma-close to the anchor");
        if (side_of_circle(c.center, d->circle) != Side::Inside)
            throw InvariantViolation("realize_tree: anchor center not inside every disk");
    }
    if (report) {
        report->max_bits = std::max(st.max_bits_seen(), out.max_coordinate_bits());
        report->bit_growth = st.bit_growth();
        report->audit_operations = st.audit_log().size();
        report->invariant_checks = st.invariant_checks_passed();
    }
    return out;
}

} // namespace diskcolor

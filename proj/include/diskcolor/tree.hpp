#pragma once

#include <algorithm>
#include <vector>

#include "diskcolor/errors.hpp"

namespace diskcolor {

struct RootedTree {
    int n = 0;
    int root = 0;
    std::vector<int> parent;                 // -1 for the root
    std::vector<std::vector<int>> children;  // fixed order

    static RootedTree from_parents(const std::vector<int>& parent) {
        RootedTree t;
        t.n = static_cast<int>(parent.size());
        t.parent = parent;
        t.children.assign(t.n, {});
        int roots = 0;
        for (int v = 0; v < t.n; ++v) {
            if (parent[v] < 0) {
                t.root = v;
                ++roots;
            } else {
                if (parent[v] >= t.n) throw Error("RootedTree: parent out of range");
                t.children[parent[v]].push_back(v);
            }
        }
        if (roots != 1) throw Error("RootedTree: exactly one root required");
        // Reachability from the root doubles as the acyclicity check.
        std::vector<char> seen(t.n, 0);
        std::vector<int> stack{t.root};
        int count = 0;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            if (seen[v]) throw Error("RootedTree: cycle detected");
            seen[v] = 1;
            ++count;
            for (int c : t.children[v]) stack.push_back(c);
        }
        if (count != t.n) throw Error("RootedTree: disconnected vertex");
        return t;
    }

    bool is_leaf(int v) const { return children[v].empty(); }

    // Path from the root to v, inclusive.
    std::vector<int> root_path(int v) const {
        std::vector<int> q;
        for (int u = v; u >= 0; u = parent[u]) q.push_back(u);
        std::reverse(q.begin(), q.end());
        return q;
    }

    // Proper descendants of v, in preorder.
    std::vector<int> descendants(int v) const {
        std::vector<int> out, stack(children[v].rbegin(), children[v].rend());
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            out.push_back(u);
            for (auto it = children[u].rbegin(); it != children[u].rend(); ++it)
                stack.push_back(*it);
        }
        return out;
    }

    int depth(int v) const {
        int d = 0;
        for (int u = v; parent[u] >= 0; u = parent[u]) ++d;
        return d;
    }
};

// Complete m-ary tree in which every root-to-leaf path has exactly m
// vertices; vertex count (m^m - 1)/(m - 1), BFS-indexed from the root.
inline RootedTree complete_mary_tree(int m) {
    if (m < 1) throw Error("complete_mary_tree: m must be >= 1");
    std::vector<int> parent{-1};
    int level_start = 0, level_size = 1;
    for (int level = 1; level < m; ++level) {
        const int next_start = static_cast<int>(parent.size());
        for (int p = level_start; p < level_start + level_size; ++p)
            for (int j = 0; j < m; ++j) parent.push_back(p);
        level_start = next_start;
        level_size *= m;
    }
    return RootedTree::from_parents(parent);
}

// Siblings-first order: every sibling group S(v) is consecutive and appears
// after v, and the segment starting at S(v) = {r_1..r_k} reads
// r_1,...,r_k, Des(r_k), ..., Des(r_1) with no outside vertices. Descendant
// blocks are ordered by the same rule, recursively.
inline std::vector<int> siblings_first_order(const RootedTree& t) {
    std::vector<int> order{t.root};
    // block(v) = children of v, then block(last child), ..., block(first child)
    std::vector<int> stack{t.root};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int c : t.children[v]) order.push_back(c);
        for (int c : t.children[v]) stack.push_back(c);
        // children pushed first-to-last, so their blocks pop last-to-first
    }
    return order;
}

// Checks both defining properties of a siblings-first order.
inline bool is_siblings_first_order(const RootedTree& t, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != t.n) return false;
    std::vector<int> pos(t.n, -1);
    for (int i = 0; i < t.n; ++i) {
        if (order[i] < 0 || order[i] >= t.n || pos[order[i]] >= 0) return false;
        pos[order[i]] = i;
    }
    for (int v = 0; v < t.n; ++v) {
        const auto& ch = t.children[v];
        if (ch.empty()) continue;
        std::vector<int> sib(ch);
        std::sort(sib.begin(), sib.end(), [&](int a, int b) { return pos[a] < pos[b]; });
        for (std::size_t i = 0; i + 1 < sib.size(); ++i)
            if (pos[sib[i + 1]] != pos[sib[i]] + 1) return false;
        if (pos[sib.front()] <= pos[v]) return false;
        // Segment: r_1..r_k, Des(r_k), ..., Des(r_1).
        int at = pos[sib.back()] + 1;
        for (auto it = sib.rbegin(); it != sib.rend(); ++it) {
            auto des = t.descendants(*it);
            std::sort(des.begin(), des.end());
            if (at + static_cast<int>(des.size()) > t.n) return false;
            std::vector<int> seg(order.begin() + at, order.begin() + at + des.size());
            std::sort(seg.begin(), seg.end());
            if (seg != des) return false;
            at += static_cast<int>(des.size());
        }
    }
    return true;
}

} // namespace diskcolor

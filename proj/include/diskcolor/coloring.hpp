#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "diskcolor/hypergraph.hpp"

namespace diskcolor {

// Total map vertex -> color index in [0, k).
struct Coloring {
    int k = 0;
    std::vector<int> colors;
};

inline std::optional<std::vector<int>> find_monochromatic_edge(const Hypergraph& h,
                                                               const Coloring& col) {
    for (const auto& e : h.edges) {
        const int c0 = col.colors.at(e.front());
        if (std::all_of(e.begin(), e.end(), [&](int v) { return col.colors[v] == c0; }))
            return e;
    }
    return std::nullopt;
}

namespace detail {

// Backtracking proper-coloring search with forced-move propagation: an edge
// whose assigned part is monochromatic in color X and that has exactly one
// free vertex forbids X on that vertex.
struct ProperColoringSearch {
    const Hypergraph& h;
    int k;
    std::vector<int> color;                     // -1 = unassigned
    std::vector<std::vector<int>> vertex_edges;
    std::vector<int> unassigned_count;          // per edge
    std::vector<int> mono_color;                // per edge: -1 none, -2 mixed
    std::vector<std::uint32_t> forbidden;       // per vertex bitmask
    std::vector<int> order;
    std::uint32_t full_mask;

    ProperColoringSearch(const Hypergraph& h_, int k_) : h(h_), k(k_) {
        color.assign(h.n, -1);
        vertex_edges.assign(h.n, {});
        for (std::size_t i = 0; i < h.edges.size(); ++i)
            for (int v : h.edges[i]) vertex_edges[v].push_back(static_cast<int>(i));
        unassigned_count.resize(h.edges.size());
        for (std::size_t i = 0; i < h.edges.size(); ++i)
            unassigned_count[i] = static_cast<int>(h.edges[i].size());
        mono_color.assign(h.edges.size(), -1);
        forbidden.assign(h.n, 0);
        full_mask = k >= 32 ? ~0u : ((1u << k) - 1);
        order.resize(h.n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return vertex_edges[a].size() > vertex_edges[b].size();
        });
    }

    struct Undo {
        std::vector<int> touched_edges;                     // mono_color to recompute
        std::vector<std::pair<int, std::uint32_t>> masks;   // (vertex, previous mask)
    };

    int free_vertex_of(int ei) const {
        for (int u : h.edges[ei])
            if (color[u] < 0) return u;
        return -1;
    }

    // Applies the assignment in full even when a conflict is found, so that
    // restore() can always undo the complete transition.
    bool assign(int v, int c, Undo& undo) {
        color[v] = c;
        bool ok = true;
        for (int ei : vertex_edges[v]) {
            --unassigned_count[ei];
            const int prev = mono_color[ei];
            if (prev == -1) {
                mono_color[ei] = c;
                undo.touched_edges.push_back(ei);
            } else if (prev >= 0 && prev != c) {
                mono_color[ei] = -2;
                undo.touched_edges.push_back(ei);
            }
            const int mono = mono_color[ei];
            if (mono < 0 || !ok) continue;
            if (unassigned_count[ei] == 0) {
                ok = false; // monochromatic edge completed
            } else if (unassigned_count[ei] == 1) {
                const int u = free_vertex_of(ei);
                const std::uint32_t bit = 1u << mono;
                if (!(forbidden[u] & bit)) {
                    undo.masks.emplace_back(u, forbidden[u]);
                    forbidden[u] |= bit;
                    if (forbidden[u] == full_mask) ok = false;
                }
            }
        }
        return ok;
    }

    void restore(int v, const Undo& undo) {
        for (auto it = undo.masks.rbegin(); it != undo.masks.rend(); ++it)
            forbidden[it->first] = it->second;
        for (int ei : undo.touched_edges) mono_color[ei] = recompute_mono(ei, v);
        for (int ei : vertex_edges[v]) ++unassigned_count[ei];
        color[v] = -1;
    }

    int recompute_mono(int ei, int skip) const {
        int m = -1;
        for (int u : h.edges[ei]) {
            if (u == skip || color[u] < 0) continue;
            if (m == -1) m = color[u];
            else if (m != color[u]) return -2;
        }
        return m;
    }

    bool solve(std::size_t idx) {
        while (idx < order.size() && color[order[idx]] >= 0) ++idx;
        if (idx == order.size()) return true;
        const int v = order[idx];
        for (int c = 0; c < k; ++c) {
            if (forbidden[v] & (1u << c)) continue;
            Undo undo;
            if (assign(v, c, undo) && solve(idx + 1)) return true;
            restore(v, undo);
        }
        return false;
    }
};

} // namespace detail

// Complete backtracking search for a proper k-coloring; std::nullopt is an
// exhaustion proof that none exists.
inline std::optional<Coloring> find_coloring(const Hypergraph& h, int k) {
    if (k < 1 || k > 30) throw Error("find_coloring: need 1 <= k <= 30");
    for (const auto& e : h.edges)
        if (e.size() == 1) return std::nullopt; // singleton edges are always monochromatic
    if (h.n == 0) return Coloring{k, {}};

    detail::ProperColoringSearch search(h, k);
    // Color-permutation symmetry: pin the highest-degree vertex to color 0.
    search.forbidden[search.order.front()] = ~1u & search.full_mask;
    if (!search.solve(0)) return std::nullopt;
    return Coloring{k, search.color};
}

} // namespace diskcolor

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "diskcolor/tree.hpp"

namespace diskcolor {

// Vertex set {0..n-1} plus a multiset of edges; edges are kept sorted and
// duplicates are allowed (extensions produce them; they are harmless for
// coloring). `star` is the distinguished vertex of the F_i(m) pipeline.
struct Hypergraph {
    int n = 0;
    std::vector<std::vector<int>> edges;
    std::optional<int> star;

    void add_edge(std::vector<int> e) {
        if (e.empty()) throw Error("Hypergraph: empty edge");
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        for (int v : e)
            if (v < 0 || v >= n) throw Error("Hypergraph: edge vertex out of range");
        edges.push_back(std::move(e));
    }

    bool is_uniform(int m) const {
        return std::all_of(edges.begin(), edges.end(),
                           [m](const auto& e) { return static_cast<int>(e.size()) == m; });
    }

    // Edge multiset in a canonical order, for equality tests.
    std::vector<std::vector<int>> sorted_edges() const {
        auto out = edges;
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n == b.n && a.sorted_edges() == b.sorted_edges();
    }
};

// Hc(T): sibling edges S(v) for internal v, descendent edges Q(v) for leaves.
// The extended variant Hc'(T) adds the descendent edge of every vertex.
inline Hypergraph tree_hypergraph(const RootedTree& t, bool extended = false) {
    Hypergraph h;
    h.n = t.n;
    for (int v = 0; v < t.n; ++v)
        if (!t.is_leaf(v)) h.add_edge(t.children[v]);
    for (int v = 0; v < t.n; ++v)
        if (extended || t.is_leaf(v)) h.add_edge(t.root_path(v));
    return h;
}

// G_i: i vertices and the single edge containing all of them.
inline Hypergraph single_edge_hypergraph(int i) {
    if (i < 1) throw Error("single_edge_hypergraph: need at least one vertex");
    Hypergraph h;
    h.n = i;
    std::vector<int> all(i);
    for (int v = 0; v < i; ++v) all[v] = v;
    h.add_edge(std::move(all));
    return h;
}

// "a extended by b through f": the edge f is removed and replaced by |V(b)|
// copies f + {new vertex}, and a copy of b is imposed on the new vertices.
inline Hypergraph extend(const Hypergraph& a, const Hypergraph& b, const std::vector<int>& f) {
    std::vector<int> fs(f);
    std::sort(fs.begin(), fs.end());
    const auto it = std::find(a.edges.begin(), a.edges.end(), fs);
    if (it == a.edges.end()) throw EdgeNotFound("extend: f is not an edge of a");

    Hypergraph out;
    out.n = a.n + b.n;
    out.star = a.star;
    for (auto jt = a.edges.begin(); jt != a.edges.end(); ++jt)
        if (jt != it) out.edges.push_back(*jt);
    for (int j = 0; j < b.n; ++j) {
        std::vector<int> e(fs);
        e.push_back(a.n + j);
        out.add_edge(std::move(e));
    }
    for (const auto& e : b.edges) {
        std::vector<int> shifted;
        shifted.reserve(e.size());
        for (int v : e) shifted.push_back(a.n + v);
        out.add_edge(std::move(shifted));
    }
    return out;
}

// Hc^2(m) = Hc(T) for the complete m-ary tree: m-uniform, not two-colorable.
inline Hypergraph build_h2(int m) { return tree_hypergraph(complete_mary_tree(m)); }

// F_1(m) = G_1; F_i(m) extends every edge of F_{i-1}(m) containing the
// distinguished vertex by Hc^2(m).
inline Hypergraph build_f(int i, int m) {
    if (i < 1 || m < 1 || i > m) throw Error("build_f: need 1 <= i <= m");
    Hypergraph h = single_edge_hypergraph(1);
    h.star = 0;
    const Hypergraph h2 = build_h2(m);
    for (int round = 2; round <= i; ++round) {
        std::vector<std::vector<int>> star_edges;
        for (const auto& e : h.edges)
            if (std::binary_search(e.begin(), e.end(), *h.star)) star_edges.push_back(e);
        for (const auto& e : star_edges) h = extend(h, h2, e);
    }
    return h;
}

// Hc^3(m) = F_m(m): m-uniform and not three-colorable.
inline Hypergraph build_h3(int m) { return build_f(m, m); }

} // namespace diskcolor

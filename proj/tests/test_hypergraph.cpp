#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "diskcolor/hypergraph.hpp"

using namespace diskcolor;

namespace {

// Definition-unrolling oracle for F_i(m), written naively and independently
// of extend(): returns the edge multiset sizes and vertex count.
struct UnrolledF {
    int n = 1;
    std::vector<std::vector<int>> edges{{0}};
};

UnrolledF unroll_f(int i, int m) {
    UnrolledF f; // F_1 = G_1, star vertex 0
    const Hypergraph h2 = build_h2(m);
    for (int round = 2; round <= i; ++round) {
        UnrolledF next;
        next.n = f.n;
        next.edges.clear();
        std::vector<std::vector<int>> star_edges, other;
        for (const auto& e : f.edges)
            (std::count(e.begin(), e.end(), 0) ? star_edges : other).push_back(e);
        next.edges = other;
        for (const auto& e : star_edges) {
            const int base = next.n;
            next.n += h2.n;
            for (int j = 0; j < h2.n; ++j) {
                auto copy = e;
                copy.push_back(base + j);
                std::sort(copy.begin(), copy.end());
                next.edges.push_back(copy);
            }
            for (const auto& be : h2.edges) {
                std::vector<int> shifted;
                for (int v : be) shifted.push_back(base + v);
                next.edges.push_back(shifted);
            }
        }
        f = next;
    }
    return f;
}

} // namespace

TEST_CASE("tree_hypergraph spec examples") {
    SECTION("m=2 tree gives the triangle") {
        const Hypergraph h = tree_hypergraph(complete_mary_tree(2));
        CHECK(h.n == 3);
        CHECK(h.sorted_edges() ==
              std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
    }
    SECTION("single vertex tree has the one-vertex descendent edge") {
        const Hypergraph h = tree_hypergraph(complete_mary_tree(1));
        CHECK(h.n == 1);
        CHECK(h.edges == std::vector<std::vector<int>>{{0}});
    }
    SECTION("m=3: 4 sibling and 9 descendent edges, 3-uniform") {
        const Hypergraph h = tree_hypergraph(complete_mary_tree(3));
        CHECK(h.n == 13);
        CHECK(h.edges.size() == 13);
        CHECK(h.is_uniform(3));
    }
    SECTION("extended variant adds descendent edges for internal vertices") {
        const Hypergraph h = tree_hypergraph(complete_mary_tree(2), true);
        CHECK(h.edges.size() == 4); // sibling {1,2}; paths {0}, {0,1}, {0,2}
    }
}

TEST_CASE("single_edge_hypergraph") {
    const Hypergraph g1 = single_edge_hypergraph(1);
    CHECK(g1.n == 1);
    CHECK(g1.edges == std::vector<std::vector<int>>{{0}});
    const Hypergraph g3 = single_edge_hypergraph(3);
    CHECK(g3.n == 3);
    CHECK(g3.edges == std::vector<std::vector<int>>{{0, 1, 2}});
}

TEST_CASE("extend spec examples") {
    SECTION("G_1 extended by a triangle is K_4") {
        const Hypergraph k4 = extend(single_edge_hypergraph(1), build_h2(2), {0});
        CHECK(k4.n == 4);
        CHECK(k4.edges.size() == 6);
        CHECK(k4.is_uniform(2));
        std::set<std::vector<int>> want{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        std::set<std::vector<int>> got(k4.edges.begin(), k4.edges.end());
        CHECK(got == want);
    }
    SECTION("G_2 extended by G_1") {
        const Hypergraph g2 = single_edge_hypergraph(2);
        const Hypergraph out = extend(g2, single_edge_hypergraph(1), {0, 1});
        CHECK(out.n == 3);
        CHECK(out.sorted_edges() == std::vector<std::vector<int>>{{0, 1, 2}, {2}});
    }
    SECTION("missing edge") {
        CHECK_THROWS_AS(extend(single_edge_hypergraph(2), single_edge_hypergraph(1), {0}),
                        EdgeNotFound);
    }
    SECTION("uniformity: extending every edge of an m-uniform by an (m+1)-uniform") {
        Hypergraph a = build_h2(2); // 2-uniform
        const Hypergraph b = build_h2(3); // 3-uniform
        const auto edges = a.edges;
        for (const auto& e : edges) a = extend(a, b, e);
        CHECK(a.is_uniform(3));
    }
    SECTION("extend preserves all edges except f") {
        const Hypergraph a = build_h2(2);
        const Hypergraph out = extend(a, single_edge_hypergraph(1), {1, 2});
        int preserved = 0;
        for (const auto& e : a.edges)
            if (e != std::vector<int>{1, 2})
                preserved += static_cast<int>(std::count(out.edges.begin(), out.edges.end(), e));
        CHECK(preserved == 2);
        CHECK(std::count(out.edges.begin(), out.edges.end(), std::vector<int>{1, 2}) == 0);
    }
}

TEST_CASE("build_h2 uniformity for m = 1..4") {
    for (int m = 1; m <= 4; ++m) {
        const Hypergraph h = build_h2(m);
        CHECK(h.is_uniform(m));
    }
}

TEST_CASE("build_h3(2) is K_4") {
    const Hypergraph h = build_h3(2);
    CHECK(h.n == 4);
    CHECK(h.edges.size() == 6);
    CHECK(h.is_uniform(2));
    std::set<std::vector<int>> got(h.edges.begin(), h.edges.end());
    CHECK(got.size() == 6);
}

TEST_CASE("build_f matches the definition-unrolling oracle") {
    SECTION("F_2(3)") {
        const Hypergraph f = build_f(2, 3);
        CHECK(f.n == 14);
        const auto oracle = unroll_f(2, 3);
        CHECK(f.n == oracle.n);
        Hypergraph o;
        o.n = oracle.n;
        for (auto e : oracle.edges) o.add_edge(e);
        CHECK(f == o);
    }
    SECTION("F_3(3) = Hc^3(3)") {
        const Hypergraph f = build_h3(3);
        const auto oracle = unroll_f(3, 3);
        CHECK(f.n == oracle.n);
        CHECK(f.n == 183); // 1 + 13 + 13*13
        CHECK(f.is_uniform(3));
        Hypergraph o;
        o.n = oracle.n;
        for (auto e : oracle.edges) o.add_edge(e);
        CHECK(f == o);
    }
}

TEST_CASE("h3 uniformity") {
    CHECK(build_h3(2).is_uniform(2));
    CHECK(build_h3(3).is_uniform(3));
}

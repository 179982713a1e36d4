#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "ptd/embed.hpp"
#include "ptd/gen.hpp"
#include "ptd/layering.hpp"
#include "ptd/verify.hpp"

using namespace ptd;

namespace {

// every half-edge appears in exactly one face, and face ids agree
bool faces_partition(const EmbeddedGraph& g) {
    std::vector<int> seen(g.halfedges(), 0);
    for (int f = 0; f < (int)g.faces.size(); ++f)
        for (int h : g.faces[f]) {
            if (g.face[h] != f) return false;
            seen[h]++;
        }
    return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

EmbeddedGraph c4() { return gen_grid(2, 2, false); }

}  // namespace

TEST_CASE("triangle is a valid almost triangulation") {
    auto g = gen_triangulation(3, 1);
    auto r = validate_embedding(g);
    CHECK(r.ok());
    CHECK(r.faces == 2);
    CHECK(r.almost_triangulated);
}

TEST_CASE("self-loop is reported as not simple") {
    std::vector<std::vector<int>> rot{{0, 1, 0}, {0}};
    auto r = validate_embedding(rot, {});
    CHECK_FALSE(r.ok());
    REQUIRE_FALSE(r.errors.empty());
    CHECK(r.errors[0].find("not simple") != std::string::npos);
}

TEST_CASE("parallel edge is reported as not simple") {
    std::vector<std::vector<int>> rot{{1, 1}, {0, 0}};
    auto r = validate_embedding(rot, {});
    CHECK_FALSE(r.simple);
}

TEST_CASE("3x3 grid has five faces and quads") {
    auto g = gen_grid(3, 3, false);
    auto r = validate_embedding(g);
    CHECK(r.ok());
    CHECK(r.faces == 5);
    CHECK_FALSE(r.almost_triangulated);
}

TEST_CASE("almost_triangulate on small inputs") {
    SUBCASE("triangle unchanged") {
        auto g = gen_triangulation(3, 1);
        auto t = almost_triangulate(g);
        CHECK(t.g.n == 3);
        CHECK(t.g.rot == g.rot);
        CHECK(std::count(t.added.begin(), t.added.end(), 1) == 0);
    }
    SUBCASE("C4 gets one centre of degree 4") {
        auto t = almost_triangulate(c4());
        REQUIRE(t.g.n == 5);
        CHECK(t.added[4] == 1);
        CHECK(t.g.deg(4) == 4);
        int tri = 0;
        for (int f = 0; f < (int)t.g.faces.size(); ++f)
            if (!t.g.outer[f]) tri += t.g.faces[f].size() == 3;
        CHECK(tri == 4);
        CHECK(validate_embedding(t.g).ok());
    }
    SUBCASE("3x3 grid gets four centres, treewidth within 4tw+1") {
        auto g = gen_grid(3, 3, false);
        auto t = almost_triangulate(g);
        CHECK(t.g.n == 13);
        CHECK(validate_embedding(t.g).almost_triangulated);
        int tw = exact_treewidth(g.n, g.edge_list());
        CHECK(exact_treewidth(t.g.n, t.g.edge_list()) <= 4 * tw + 1);
    }
}

TEST_CASE("almost_triangulate is idempotent") {
    for (uint64_t s = 1; s <= 20; ++s) {
        auto g = oracle::random_planar(30, s, 0.5);
        auto a = almost_triangulate(g);
        auto b = almost_triangulate(a.g);
        CHECK(a.g.rot == b.g.rot);
        CHECK(a.g.outer == b.g.outer);
    }
}

TEST_CASE("triangulation loses at most a factor four in treewidth") {
    int checked = 0;
    for (uint64_t s = 1; checked < 25 && s < 400; ++s) {
        int n = 5 + (int)(s % 6);
        auto g = oracle::random_planar(n, s, 0.6);
        auto t = almost_triangulate(g);
        if (t.g.n > 15) continue;
        ++checked;
        int a = exact_treewidth(g.n, g.edge_list());
        int b = exact_treewidth(t.g.n, t.g.edge_list());
        CHECK(b <= 4 * a + 1);
    }
    CHECK(checked == 25);
}

TEST_CASE("Euler and face partition on generated graphs") {
    std::vector<EmbeddedGraph> gs{gen_grid(7, 5, true), gen_grid(6, 6, false), gen_triangulation(200, 3),
                                  gen_mountain_chain(3, 4, 2), oracle::random_planar(80, 4, 0.4),
                                  gen_rings({8, 6, 5}, true, 0.5, 9)};
    for (const auto& g : gs) {
        auto r = validate_embedding(g);
        CHECK(r.ok());
        CHECK(r.euler);
        CHECK(faces_partition(g));
        for (int h = 0; h < g.halfedges(); ++h) {
            CHECK(g.twin[g.twin[h]] == h);
            CHECK(g.prev(g.next(h)) == h);
        }
    }
}

TEST_CASE("restrict_graph") {
    SUBCASE("K4 minus centre is K3") {
        auto k4 = gen_triangulation(4, 1);
        std::vector<char> keep{1, 1, 1, 0};
        auto r = restrict_graph(k4, keep);
        CHECK(r.g.n == 3);
        CHECK(r.g.num_edges() == 3);
        CHECK(validate_embedding(r.g).ok());
    }
    SUBCASE("all vertices is the identity") {
        auto g = gen_triangulation(40, 2);
        auto r = restrict_graph(g, std::vector<char>(g.n, 1));
        CHECK(r.g.rot == g.rot);
        CHECK(r.g.outer == g.outer);
    }
    SUBCASE("5x5 grid above the coast is a 3x3 grid") {
        for (bool tri : {false, true}) {
            auto g = gen_grid(5, 5, tri);
            auto hm = compute_heights(g);
            std::vector<char> keep(g.n);
            for (int v = 0; v < g.n; ++v) keep[v] = hm.h[v] >= 2;
            auto r = restrict_graph(g, keep);
            auto ref = gen_grid(3, 3, tri);
            CHECK(r.g.n == 9);
            CHECK(r.g.num_edges() == ref.num_edges());
            CHECK(r.g.faces.size() == ref.faces.size());
        }
    }
}

TEST_CASE("biconnected components") {
    SUBCASE("two triangles sharing a vertex") {
        std::vector<std::vector<int>> rot{{1, 2, 3, 4}, {2, 0}, {0, 1}, {4, 0}, {0, 3}};
        auto g = make_embedded(rot, {});
        auto bc = biconnected_components(g);
        CHECK(bc.blocks.size() == 2);
        CHECK(bc.cut_vertices == std::vector<int>{0});
    }
    SUBCASE("K4") {
        auto bc = biconnected_components(gen_triangulation(4, 1));
        CHECK(bc.blocks.size() == 1);
        CHECK(bc.cut_vertices.empty());
    }
    SUBCASE("path on four vertices") {
        auto bc = biconnected_components(gen_grid(1, 4, false));
        CHECK(bc.blocks.size() == 3);
        CHECK(bc.cut_vertices == std::vector<int>{1, 2});
    }
    SUBCASE("blocks match a cut-vertex oracle") {
        for (uint64_t s = 1; s <= 10; ++s) {
            auto g = oracle::random_planar(25, s, 0.8);
            auto bc = biconnected_components(g);
            auto adj = oracle::adjacency(g.n, g.edge_list());
            std::vector<int> cuts;
            for (int v = 0; v < g.n; ++v) {
                std::vector<char> ok(g.n, 1);
                ok[v] = 0;
                int start = v == 0 ? 1 : 0;
                auto d = oracle::bfs(adj, {start}, ok);
                bool split = false;
                for (int u = 0; u < g.n; ++u) split = split || (u != v && d[u] < 0);
                if (split) cuts.push_back(v);
            }
            CHECK(bc.cut_vertices == cuts);
        }
    }
}

TEST_CASE("face flux counts enclosed faces") {
    auto g = gen_grid(4, 4, false);
    auto fl = make_flux(g);
    // the boundary of one inner cell, either way round
    std::vector<int> cyc{0, 1, 5, 4};
    auto a = fl.walk(g, cyc);
    std::reverse(cyc.begin(), cyc.end());
    auto b = fl.walk(g, cyc);
    CHECK(std::llabs(a) == 1);
    CHECK(a == -b);
    std::vector<int> big{0, 1, 2, 3, 7, 11, 15, 14, 13, 12, 8, 4};
    CHECK(std::llabs(fl.walk(g, big)) == 9);
}

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "ptd/gen.hpp"
#include "ptd/mountain.hpp"
#include "ptd/outer_td.hpp"
#include "ptd/shortcuts.hpp"
#include "ptd/verify.hpp"

using namespace ptd;

namespace {

EdgeList edges_of_rot(const std::vector<std::vector<int>>& rot) {
    EdgeList e;
    for (int v = 0; v < (int)rot.size(); ++v)
        for (int u : rot[v])
            if (v < u) e.push_back({v, u});
    return e;
}

// Checks one component decomposition against its extended component.
struct CompCheck {
    bool valid = true;
    int width = -1;
    int ell = 0;
    bool covered = true;
};

CompCheck check_component(const MountainStructure& ms, const SepPartition& P, int c) {
    CompCheck r;
    auto ct = component_td(P, c, true);
    auto ext = extended_component(ms, c);
    std::map<int, int> id;
    for (int v : ext.vertices) id.emplace(v, (int)id.size());
    EdgeList el;
    for (auto [u, v] : ext.edges) el.push_back({id[u], id[v]});
    TreeDecomposition t = ct.td;
    for (auto& b : t.bags)
        for (int& v : b) {
            auto it = id.find(v);
            if (it == id.end()) r.valid = false;
            else v = it->second;
        }
    r.valid = r.valid && oracle::td_valid((int)id.size(), el, t) && ct.up_connected;
    r.width = ct.td.width();
    for (int v : ext.vertices) r.ell = std::max(r.ell, ms.hm.h[v]);
    for (auto [x, node] : ct.designated) {
        auto xv = P.seps[x].vertices();
        if (node < 0 || !std::includes(ct.td.bags[node].begin(), ct.td.bags[node].end(), xv.begin(), xv.end()))
            r.covered = false;
    }
    for (auto [nb, x] : P.mct.adj[c]) {
        (void)nb;
        bool has = false;
        for (auto [y, node] : ct.designated) has = has || (y == x && node >= 0);
        if (!has) r.covered = false;
    }
    return r;
}

}  // namespace

TEST_CASE("degree reduction") {
    SUBCASE("K4 is left alone") {
        auto g = gen_triangulation(4, 1);
        auto d = degree_reduce(g, compute_heights(g));
        CHECK(d.rot.size() == 4);
        for (int v = 0; v < 4; ++v) CHECK(d.orig[v] == v);
    }
    SUBCASE("a vertex of degree d becomes d-2 copies of degree <= 3") {
        for (uint64_t s = 1; s <= 10; ++s) {
            auto g = gen_triangulation(120, s);
            auto hm = compute_heights(g);
            auto d = degree_reduce(g, hm);
            for (const auto& r : d.rot) CHECK(r.size() <= 3);
            std::vector<int> cnt(g.n, 0);
            for (int w = 0; w < (int)d.rot.size(); ++w) cnt[d.orig[w]]++;
            for (int v = 0; v < g.n; ++v) {
                CHECK(cnt[v] == std::max(1, g.deg(v) - 2));
                CHECK(d.orig[v] == v);
            }
            // contracting the copies gives back g
            std::set<std::pair<int, int>> back;
            for (auto [a, b] : edges_of_rot(d.rot))
                if (d.orig[a] != d.orig[b]) back.insert(std::minmax(d.orig[a], d.orig[b]));
            auto el = g.edge_list();
            CHECK(back == std::set<std::pair<int, int>>(el.begin(), el.end()));
            CHECK(validate_embedding(d.rot, {}).euler);
        }
    }
}

TEST_CASE("standard decomposition") {
    SUBCASE("tree gives width 1") {
        EdgeList e{{0, 1}, {1, 2}, {1, 3}, {3, 4}};
        auto sk = up_connected_skeleton(5, e, std::vector<int>(5, 1), {});
        auto st = standard_td(sk);
        CHECK(st.td.width() == 1);
        CHECK(oracle::td_valid(5, e, st.td));
    }
    SUBCASE("triangle gives width at most 2") {
        EdgeList e{{0, 1}, {1, 2}, {0, 2}};
        auto sk = up_connected_skeleton(3, e, {1, 1, 1}, {});
        auto st = standard_td(sk);
        CHECK(st.td.width() <= 2);
        CHECK(oracle::td_valid(3, e, st.td));
    }
    SUBCASE("two-level graphs of degree 3 give width at most 5") {
        for (uint64_t s = 1; s <= 20; ++s) {
            auto g = gen_grid(3 + (int)s % 2, 3 + (int)(s / 2) % 3, s % 3 != 0);
            auto hm = compute_heights(g);
            REQUIRE(hm.max_height == 2);
            auto d = degree_reduce(g, hm);
            std::vector<int> h(d.rot.size());
            for (size_t w = 0; w < h.size(); ++w) h[w] = hm.h[d.orig[w]];
            // height changes first, then copies of one vertex, then edges
            // whose faces both stay at their height, then the rest
            std::vector<int> flev(g.faces.size(), 0);
            for (int f = 0; f < (int)g.faces.size(); ++f) {
                flev[f] = 1 << 20;
                for (int x : g.faces[f]) flev[f] = std::min(flev[f], hm.h[g.tail[x]]);
                if (g.outer[f]) flev[f] = 0;
            }
            auto e = edges_of_rot(d.rot);
            std::vector<int> prio;
            for (auto [a, b] : e) {
                int u = d.orig[a], v = d.orig[b];
                if (hm.h[u] != hm.h[v]) {
                    prio.push_back(0);
                    continue;
                }
                if (u == v) {
                    prio.push_back(1);
                    continue;
                }
                int x = g.he_between(u, v);
                bool inner = flev[g.face[x]] >= hm.h[u] && flev[g.face[g.twin[x]]] >= hm.h[u];
                prio.push_back(inner ? 2 : 3);
            }
            auto sk = up_connected_skeleton((int)h.size(), e, h, prio);
            CHECK(is_up_connected(sk, h));
            auto st = standard_td(sk);
            CHECK(oracle::td_valid((int)h.size(), e, st.td));
            // contracting the copies gives a decomposition of g
            auto td = st.td;
            for (auto& b : td.bags) {
                for (int& v : b) v = d.orig[v];
                std::sort(b.begin(), b.end());
                b.erase(std::unique(b.begin(), b.end()), b.end());
            }
            CHECK(oracle::td_valid(g.n, g.edge_list(), td));
            CHECK(td.width() <= 5);
        }
    }
}

TEST_CASE("skeletons are spanning and up-connected") {
    for (uint64_t s = 1; s <= 20; ++s) {
        auto g = almost_triangulate(oracle::random_planar(90, s, 0.5)).g;
        auto hm = compute_heights(g);
        auto e = g.edge_list();
        auto sk = up_connected_skeleton(g.n, e, hm.h, {});
        int in = (int)std::count(sk.in_tree.begin(), sk.in_tree.end(), 1);
        CHECK(in == g.n - (int)connected_components(g).size());
        CHECK(is_up_connected(sk, hm.h));
    }
}

TEST_CASE("component decompositions") {
    std::vector<EmbeddedGraph> gs{gen_grid(5, 5, true), gen_grid(9, 9, true), gen_grid(12, 7, true)};
    for (int s = 1; s <= 5; ++s) gs.push_back(gen_mountain_chain(s, 2 + s % 4, s));
    for (uint64_t s = 1; s <= 12; ++s) gs.push_back(gen_triangulation(100 + 40 * (int)s, s));
    int comps = 0;
    for (const auto& g : gs) {
        auto ms = good_mountain_structure(g);
        auto P = make_partition(ms);
        for (int c = 0; c < P.components(); ++c) {
            auto r = check_component(ms, P, c);
            ++comps;
            CHECK(r.valid);
            CHECK(r.covered);
            if (r.ell >= 2) CHECK(r.width <= 3 * r.ell - 1);
        }
    }
    CHECK(comps > 50);
}

TEST_CASE("without separators the component is the whole graph") {
    auto g = gen_grid(7, 7, true);
    auto ms = good_mountain_structure(g);
    auto P = make_partition(ms);
    REQUIRE(P.components() == 1);
    auto ct = component_td(P, 0);
    CHECK(validate_td(g, ct.td).ok());
    CHECK(ct.td.width() <= 3 * 4 - 1);
    CHECK(ct.designated.empty());
}

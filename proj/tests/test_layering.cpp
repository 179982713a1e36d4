#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ptd/gen.hpp"
#include "ptd/layering.hpp"

using namespace ptd;

TEST_CASE("heights of small graphs") {
    SUBCASE("K3") {
        auto hm = compute_heights(gen_triangulation(3, 1));
        CHECK(hm.h == std::vector<int>{1, 1, 1});
        CHECK(hm.max_height == 1);
    }
    SUBCASE("K4") {
        auto hm = compute_heights(gen_triangulation(4, 1));
        CHECK(hm.h == std::vector<int>{1, 1, 1, 2});
        CHECK(hm.max_height == 2);
    }
    SUBCASE("5x5 grid is its ring index") {
        for (bool tri : {false, true}) {
            auto hm = compute_heights(gen_grid(5, 5, tri));
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) {
                    int ring = 1 + std::min({i, j, 4 - i, 4 - j});
                    CHECK(hm.h[i * 5 + j] == ring);
                }
            CHECK(hm.max_height == 3);
        }
    }
    SUBCASE("isolated vertex") {
        auto hm = compute_heights(gen_grid(1, 1, false));
        CHECK(hm.h == std::vector<int>{1});
        CHECK(find_crests(gen_grid(1, 1, false), hm).size() == 1);
    }
}

TEST_CASE("crests of small graphs") {
    auto k4 = gen_triangulation(4, 1);
    auto hk = compute_heights(k4);
    auto ck = find_crests(k4, hk);
    REQUIRE(ck.size() == 1);
    CHECK(ck[0].vertices == std::vector<int>{3});
    CHECK(ck[0].height == 2);
    CHECK(is_mountain(k4, hk));

    auto g5 = gen_grid(5, 5, true);
    auto c5 = find_crests(g5, compute_heights(g5));
    REQUIRE(c5.size() == 1);
    CHECK(c5[0].vertices == std::vector<int>{12});
    CHECK(c5[0].height == 3);

    auto k3 = gen_triangulation(3, 1);
    CHECK(is_mountain(k3, compute_heights(k3)));

    auto two = gen_mountain_chain(2, 3, 1);
    auto h2 = compute_heights(two);
    CHECK(find_crests(two, h2).size() == 2);
    CHECK_FALSE(is_mountain(two, h2));
}

TEST_CASE("heights agree with literal peeling") {
    std::vector<EmbeddedGraph> gs{gen_grid(9, 7, true), gen_grid(8, 8, false), gen_mountain_chain(3, 4, 5),
                                  gen_rings({9, 7, 5, 3}, true, 0.5, 3)};
    for (uint64_t s = 1; s <= 15; ++s) gs.push_back(gen_triangulation(60 + 10 * (int)s, s));
    for (uint64_t s = 1; s <= 15; ++s) gs.push_back(oracle::random_planar(60, s, 0.5));
    for (const auto& g : gs) {
        auto hm = compute_heights(g);
        CHECK(hm.h == oracle::peel_heights(g));
        CHECK(hm.max_height == *std::max_element(hm.h.begin(), hm.h.end()));
    }
}

TEST_CASE("adjacent heights differ by at most one when almost triangulated") {
    for (uint64_t s = 1; s <= 20; ++s) {
        auto g = almost_triangulate(oracle::random_planar(80, s, 0.5)).g;
        auto hm = compute_heights(g);
        for (auto [u, v] : g.edge_list()) CHECK(std::abs(hm.h[u] - hm.h[v]) <= 1);
    }
}

TEST_CASE("crests are disjoint, maximal plateaus without higher neighbours") {
    for (uint64_t s = 1; s <= 20; ++s) {
        auto g = s % 2 ? gen_triangulation(150, s) : gen_mountain_chain(1 + (int)s % 4, 3 + (int)s % 3, s);
        auto hm = compute_heights(g);
        auto cr = find_crests(g, hm);
        CHECK(cr.size() >= 1);
        auto idx = crest_index(g.n, cr);
        std::vector<int> seen(g.n, 0);
        for (size_t c = 0; c < cr.size(); ++c)
            for (int v : cr[c].vertices) {
                seen[v]++;
                CHECK(hm.h[v] == cr[c].height);
                CHECK(idx[v] == (int)c);
                for (int u : g.rot[v]) {
                    CHECK(hm.h[u] <= hm.h[v]);
                    if (hm.h[u] == hm.h[v]) CHECK(idx[u] == (int)c);
                }
            }
        for (int v = 0; v < g.n; ++v) CHECK(seen[v] <= 1);
        // a vertex with no higher neighbour inside an equal-height plateau
        // that never climbs is on a crest
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> plateau{v};
            std::set<int> in{v};
            bool climbs = false;
            for (size_t i = 0; i < plateau.size(); ++i)
                for (int u : g.rot[plateau[i]]) {
                    if (hm.h[u] > hm.h[v]) climbs = true;
                    if (hm.h[u] == hm.h[v] && in.insert(u).second) plateau.push_back(u);
                }
            CHECK((idx[v] >= 0) == !climbs);
        }
    }
}

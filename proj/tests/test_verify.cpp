#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "ptd/gen.hpp"
#include "ptd/verify.hpp"

using namespace ptd;

namespace {

EdgeList path(int n) {
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return e;
}

EdgeList cycle(int n) {
    auto e = path(n);
    e.push_back({n - 1, 0});
    return e;
}

EdgeList clique(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return e;
}

}  // namespace

TEST_CASE("validate_td basics") {
    auto g = gen_grid(3, 3, false);
    TreeDecomposition one;
    one.bags.push_back({0, 1, 2, 3, 4, 5, 6, 7, 8});
    auto r = validate_td(g, one);
    CHECK(r.ok());
    CHECK(r.width == 8);

    TreeDecomposition split;
    split.bags = {{0, 1, 3}, {2, 4, 5, 6, 7, 8}};
    split.edges = {{0, 1}};
    auto r2 = validate_td(g, split);
    CHECK_FALSE(r2.edges_ok);
    bool named = false;
    for (const auto& s : r2.issues) named = named || s == "edge 2-3 in no bag";
    CHECK(named);
}

TEST_CASE("validate_td on a layered ring construction") {
    // two rings 0..5 and 6..8 with centre 9; bags are the layers glued along
    // the separating inner ring
    EdgeList e = cycle(6);
    for (int i = 0; i < 3; ++i) e.push_back({6 + i, 6 + (i + 1) % 3});
    for (int i = 0; i < 3; ++i) {
        e.push_back({6 + i, 2 * i});
        e.push_back({6 + i, 2 * i + 1});
        e.push_back({9, 6 + i});
    }
    TreeDecomposition td;
    td.bags = {{0, 1, 2, 3, 4, 5, 6, 7, 8}, {6, 7, 8, 9}};
    td.edges = {{0, 1}};
    CHECK(validate_td(10, e, td).ok());
    CHECK(oracle::td_valid(10, e, td));
}

TEST_CASE("validate_td agrees with the traversal check on random decompositions") {
    std::mt19937_64 rng(12345);
    int agree = 0, valid = 0;
    for (int it = 0; it < 1000; ++it) {
        int n = 3 + (int)(rng() % 8);
        EdgeList e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) e.push_back({i, j});
        int nb = 1 + (int)(rng() % 6);
        TreeDecomposition td;
        td.bags.resize(nb);
        for (auto& b : td.bags) {
            for (int v = 0; v < n; ++v)
                if (rng() % 2) b.push_back(v);
        }
        for (int i = 1; i < nb; ++i) td.edges.push_back({(int)(rng() % i), i});
        if (rng() % 10 == 0 && nb > 2) td.edges.pop_back();
        if (rng() % 10 == 0 && nb > 2) td.edges.push_back({0, nb - 1});
        bool a = validate_td(n, e, td).ok();
        bool b = oracle::td_valid(n, e, td);
        agree += a == b;
        valid += b;
    }
    CHECK(agree == 1000);
    CHECK(valid > 20);
}

TEST_CASE("exact treewidth closed forms") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(exact_treewidth(n, path(n)) == 1);
        CHECK(exact_treewidth(n, clique(n)) == n - 1);
        if (n >= 3) CHECK(exact_treewidth(n, cycle(n)) == 2);
    }
    CHECK(exact_treewidth(4, clique(4)) == 3);
    CHECK(exact_treewidth(1, {}) == 0);
    CHECK_THROWS(exact_treewidth(16, path(16)));
    auto g = gen_grid(3, 3, false);
    CHECK(exact_treewidth(g.n, g.edge_list()) == 3);
    CHECK(oracle::tw_by_orders(g.n, g.edge_list()) == 3);
}

TEST_CASE("exact treewidth matches the order search") {
    for (uint64_t s = 1; s <= 40; ++s) {
        int n = 4 + (int)(s % 5);
        auto g = oracle::random_planar(n, s, 0.4);
        CHECK(exact_treewidth(g.n, g.edge_list()) == oracle::tw_by_orders(g.n, g.edge_list()));
    }
}

TEST_CASE("separators") {
    auto g = gen_grid(4, 4, false);
    auto e = g.edge_list();
    std::vector<int> rest;
    for (int v = 0; v < 16; ++v)
        if (v != 5 && v != 1 && v != 4 && v != 6 && v != 9) rest.push_back(v);
    CHECK(check_separator(16, e, {1, 4, 6, 9}, {5}, rest, SepMode::strong));
    CHECK(check_separator(16, e, {1, 4, 6, 9, 5}, {5}, rest, SepMode::weak));
    CHECK_FALSE(check_separator(16, e, {1, 4, 6, 9, 5}, {5}, rest, SepMode::strong));
    CHECK_FALSE(check_separator(16, e, {1, 4, 6}, {5}, rest, SepMode::weak));
    CHECK(min_vertex_cut(16, e, {0}, {15}) == 2);
    CHECK(min_vertex_cut(16, e, {5}, {6}) == -1);
    for (uint64_t s = 1; s <= 20; ++s) {
        auto r = oracle::random_planar(11, s, 0.3);
        auto el = r.edge_list();
        std::vector<int> pool(r.n);
        std::iota(pool.begin(), pool.end(), 0);
        int a = 0, b = r.n - 1;
        if (r.adjacent(a, b)) continue;
        CHECK(min_vertex_cut(r.n, el, {a}, {b}) == oracle::brute_cut(r.n, el, {a}, {b}, pool, r.n));
    }
}

TEST_CASE("ridge depth") {
    auto g = gen_grid(7, 7, true);
    auto hm = compute_heights(g);
    CHECK(ridge_depth(g, hm, 24, 24) == 4);
    CHECK(ridge_depth(g, hm, 24, 17) == 3);
    // two summits over a pass of height 2: a 7x15 grid pinched in the middle
    auto w = gen_grid(7, 15, true);
    std::vector<char> keep(w.n, 1);
    for (int r : {0, 1, 5, 6})
        for (int c = 6; c <= 8; ++c) keep[r * 15 + c] = 0;
    auto p = restrict_graph(w, keep);
    auto h2 = compute_heights(p.g);
    int left = p.new_of[3 * 15 + 2], right = p.new_of[3 * 15 + 12];
    CHECK(h2.h[left] == 3);
    CHECK(h2.h[right] == 3);
    CHECK(ridge_depth(p.g, h2, left, right) == 2);
    for (uint64_t s = 1; s <= 10; ++s) {
        auto t = gen_triangulation(80, s);
        auto ht = compute_heights(t);
        for (int a = 0; a < t.n; a += 7)
            for (int b = 1; b < t.n; b += 11) CHECK(ridge_depth(t, ht, a, b) == oracle::ridge(t, ht.h, a, b));
    }
}

#pragma once

// Brute-force references shared by the unit and acceptance tests. Nothing in
// here calls into the module it is used to check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "ptd/embed.hpp"
#include "ptd/gen.hpp"
#include "ptd/layering.hpp"
#include "ptd/mountain.hpp"
#include "ptd/td.hpp"
#include "ptd/verify.hpp"

namespace oracle {

using ptd::EdgeList;
using ptd::EmbeddedGraph;

inline std::vector<std::vector<int>> adjacency(int n, const EdgeList& e) {
    std::vector<std::vector<int>> a(n);
    for (auto [u, v] : e) {
        a[u].push_back(v);
        a[v].push_back(u);
    }
    return a;
}

// BFS distances through vertices with ok[v] (all if empty); -1 = unreachable.
inline std::vector<int> bfs(const std::vector<std::vector<int>>& adj, const std::vector<int>& src,
                            const std::vector<char>& ok = {}) {
    std::vector<int> d(adj.size(), -1);
    std::queue<int> q;
    for (int s : src)
        if (d[s] < 0 && (ok.empty() || ok[s])) {
            d[s] = 0;
            q.push(s);
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : adj[v])
            if (d[u] < 0 && (ok.empty() || ok[u])) {
                d[u] = d[v] + 1;
                q.push(u);
            }
    }
    return d;
}

// Definition check by explicit traversal: tree shape, vertex and edge
// coverage, and for every vertex a BFS inside the bags that hold it.
inline bool td_valid(int n, const EdgeList& edges, const ptd::TreeDecomposition& td) {
    int nb = (int)td.bags.size();
    if (nb == 0) return n == 0;
    if ((int)td.edges.size() != nb - 1) return false;
    std::vector<std::vector<int>> tadj(nb);
    for (auto [a, b] : td.edges) {
        if (a < 0 || b < 0 || a >= nb || b >= nb) return false;
        tadj[a].push_back(b);
        tadj[b].push_back(a);
    }
    auto all = bfs(tadj, {0});
    for (int x : all)
        if (x < 0) return false;
    std::vector<std::set<int>> S(nb);
    for (int i = 0; i < nb; ++i) S[i] = std::set<int>(td.bags[i].begin(), td.bags[i].end());
    for (int v = 0; v < n; ++v) {
        std::vector<char> has(nb);
        int first = -1, cnt = 0;
        for (int i = 0; i < nb; ++i)
            if (S[i].count(v)) {
                has[i] = 1;
                ++cnt;
                if (first < 0) first = i;
            }
        if (!cnt) return false;
        auto d = bfs(tadj, {first}, has);
        int reached = 0;
        for (int i = 0; i < nb; ++i) reached += has[i] && d[i] >= 0;
        if (reached != cnt) return false;
    }
    for (auto [u, v] : edges) {
        bool hit = false;
        for (int i = 0; i < nb && !hit; ++i) hit = S[i].count(u) && S[i].count(v);
        if (!hit) return false;
    }
    return true;
}

// Treewidth by trying every elimination order; n <= 8.
inline int tw_by_orders(int n, const EdgeList& edges) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    int best = n - 1;
    do {
        std::vector<std::set<int>> a(n);
        for (auto [u, v] : edges) {
            a[u].insert(v);
            a[v].insert(u);
        }
        int w = 0;
        for (int v : p) {
            w = std::max(w, (int)a[v].size());
            std::vector<int> nb(a[v].begin(), a[v].end());
            for (int x : nb) a[x].erase(v);
            for (int x : nb)
                for (int y : nb)
                    if (x != y) a[x].insert(y);
            a[v].clear();
        }
        best = std::min(best, w);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

// Heights by literal peeling: vertices on an outer face of what is left get
// the current layer, then they are removed.
inline std::vector<int> peel_heights(const EmbeddedGraph& g) {
    std::vector<int> h(g.n, 0);
    std::vector<int> ids(g.n);
    std::iota(ids.begin(), ids.end(), 0);
    EmbeddedGraph cur = g;
    for (int layer = 1;; ++layer) {
        std::vector<char> keep(cur.n, 1);
        int left = 0;
        for (int v = 0; v < cur.n; ++v) {
            bool on = cur.deg(v) == 0;
            for (int i = 0; i < cur.deg(v) && !on; ++i) on = cur.is_outer_he(cur.he(v, i));
            if (on) {
                h[ids[v]] = layer;
                keep[v] = 0;
            } else {
                ++left;
            }
        }
        if (!left) break;
        auto r = ptd::restrict_graph(cur, keep);
        std::vector<int> nids(r.old_of.size());
        for (size_t i = 0; i < r.old_of.size(); ++i) nids[i] = ids[r.old_of[i]];
        ids = nids;
        cur = r.g;
    }
    return h;
}

// Smallest set of vertices from pool (excluding A and B) whose removal
// disconnects A from B, by subset enumeration up to size cap; -1 if none.
inline int brute_cut(int n, const EdgeList& edges, const std::vector<int>& A,
                     const std::vector<int>& B, std::vector<int> pool, int cap) {
    auto adj = adjacency(n, edges);
    std::vector<char> inA(n), inB(n);
    for (int a : A) inA[a] = 1;
    for (int b : B) inB[b] = 1;
    pool.erase(std::remove_if(pool.begin(), pool.end(), [&](int v) { return inA[v] || inB[v]; }),
               pool.end());
    int m = (int)pool.size();
    for (int k = 0; k <= std::min(cap, m); ++k) {
        std::vector<int> sel(m, 0);
        std::fill(sel.end() - k, sel.end(), 1);
        do {
            std::vector<char> ok(n, 1);
            for (int i = 0; i < m; ++i)
                if (sel[i]) ok[pool[i]] = 0;
            auto d = bfs(adj, A, ok);
            bool sep = true;
            for (int b : B) sep = sep && d[b] < 0;
            if (sep) return k;
        } while (std::next_permutation(sel.begin(), sel.end()));
    }
    return -1;
}

// Largest t such that s and t connect through vertices of height >= t.
inline int ridge(const EmbeddedGraph& g, const std::vector<int>& h, int s, int t) {
    auto adj = adjacency(g.n, g.edge_list());
    for (int d = std::min(h[s], h[t]); d >= 1; --d) {
        std::vector<char> ok(g.n);
        for (int v = 0; v < g.n; ++v) ok[v] = h[v] >= d;
        if (bfs(adj, {s}, ok)[t] >= 0) return d;
    }
    return 0;
}

// Components of the connection tree on the side of x that holds ends[x][j].
inline std::vector<char> side_components(const ptd::MountainStructure& ms, int x, int j) {
    std::vector<char> in(ms.components(), 0);
    int r = ms.mct.ends[x][j];
    if (r < 0) return in;
    std::vector<int> st{r};
    in[r] = 1;
    while (!st.empty()) {
        int c = st.back();
        st.pop_back();
        for (auto [nb, y] : ms.mct.adj[c])
            if (y != x && !in[nb]) {
                in[nb] = 1;
                st.push_back(nb);
            }
    }
    return in;
}

// Shortest path lengths from s, using the edges of faces on the given side
// plus the border edges of every separator touching a component there, and
// only vertices of height >= hh.
inline std::vector<int> side_distances(const ptd::MountainStructure& ms, const std::vector<char>& side,
                                       int hh, int s) {
    const auto& g = ms.g;
    std::vector<std::vector<int>> adj(g.n);
    for (int h = 0; h < g.halfedges(); ++h) {
        int f = g.face[h];
        int c = ms.split.face_comp[f];
        if (c < 0 || !side[c]) continue;
        adj[g.tail[h]].push_back(g.head[h]);
        adj[g.head[h]].push_back(g.tail[h]);
    }
    for (int x = 0; x < (int)ms.seps.size(); ++x) {
        bool touch = false;
        for (int c : ms.mct.ends[x]) touch = touch || (c >= 0 && side[c]);
        if (!touch) continue;
        for (auto [u, v] : ms.seps[x].border_edges()) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }
    std::vector<char> ok(g.n);
    for (int v = 0; v < g.n; ++v) ok[v] = ms.hm.h[v] >= hh;
    return bfs(adj, {s}, ok);
}

inline EmbeddedGraph random_planar(int n, uint64_t seed, double drop) {
    auto g = ptd::gen_triangulation(n, seed);
    return ptd::thin_edges(g, drop, seed * 7919 + 1);
}

// Stacked triangulation that, with probability bias, puts the next vertex
// into a face of greatest nesting depth. Small instances then reach height 4
// with two summits, which random stacking almost never does below 13 vertices.
inline EmbeddedGraph deep_stacked(int n, uint64_t seed, double bias) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::vector<std::vector<int>> rot(n);
    rot[0] = {1, 2};
    rot[1] = {2, 0};
    rot[2] = {0, 1};
    std::vector<int> depth(n, 0);
    std::vector<std::array<int, 3>> tris{{0, 1, 2}};
    auto insert_after = [&](int v, int a, int x) {
        auto& r = rot[v];
        r.insert(std::find(r.begin(), r.end(), a) + 1, x);
    };
    auto md = [&](const std::array<int, 3>& t) { return std::min({depth[t[0]], depth[t[1]], depth[t[2]]}); };
    for (int x = 3; x < n; ++x) {
        int best = 0;
        for (const auto& t : tris) best = std::max(best, md(t));
        bool deep = U(rng) < bias;
        std::vector<size_t> cand;
        for (size_t i = 0; i < tris.size(); ++i)
            if (!deep || md(tris[i]) == best) cand.push_back(i);
        size_t k = cand[std::uniform_int_distribution<size_t>(0, cand.size() - 1)(rng)];
        auto [a, b, c] = tris[k];
        insert_after(b, a, x);
        insert_after(c, b, x);
        insert_after(a, c, x);
        rot[x] = {a, c, b};
        depth[x] = md(tris[k]) + 1;
        tris[k] = {a, b, x};
        tris.push_back({b, c, x});
        tris.push_back({c, a, x});
    }
    return ptd::make_embedded(std::move(rot), {{0, 2}});
}

}  // namespace oracle

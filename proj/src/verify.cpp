#include "ptd/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "ptd/flow.hpp"

namespace ptd {

ValidationReport validate_td(int n, const EdgeList& edges, const TreeDecomposition& td) {
    ValidationReport r;
    int nb = (int)td.bags.size();
    r.width = td.width();
    if (nb == 0) {
        r.tree_ok = n == 0;
        r.vertices_ok = n == 0;
        if (n) r.issues.push_back("no bags");
        return r;
    }
    // tree shape
    std::vector<int> p(nb);
    std::iota(p.begin(), p.end(), 0);
    auto find = [&](int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    };
    if ((int)td.edges.size() != nb - 1) {
        r.tree_ok = false;
        r.issues.push_back("bag tree has " + std::to_string(td.edges.size()) + " edges for " +
                           std::to_string(nb) + " bags");
    }
    for (auto [a, b] : td.edges) {
        if (a < 0 || b < 0 || a >= nb || b >= nb) {
            r.tree_ok = false;
            r.issues.push_back("bag tree edge out of range");
            return r;
        }
        if (find(a) == find(b)) {
            r.tree_ok = false;
            r.issues.push_back("bag tree has a cycle at " + std::to_string(a + 1) + "-" +
                               std::to_string(b + 1));
        }
        p[find(a)] = find(b);
    }
    std::vector<std::vector<int>> bags = td.bags;
    std::vector<int> cnt(n, 0);
    for (auto& b : bags) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        for (int v : b) {
            if (v < 0 || v >= n) {
                r.vertices_ok = false;
                r.issues.push_back("bag mentions unknown vertex " + std::to_string(v + 1));
                return r;
            }
            cnt[v]++;
        }
    }
    for (int v = 0; v < n; ++v)
        if (!cnt[v]) {
            r.vertices_ok = false;
            r.issues.push_back("vertex " + std::to_string(v + 1) + " in no bag");
        }
    // subtree property: occurrences of v induce cnt_v - 1 tree edges iff connected
    std::vector<int> e(n, 0);
    for (auto [a, b] : td.edges) {
        const auto& x = bags[a];
        const auto& y = bags[b];
        size_t i = 0, j = 0;
        while (i < x.size() && j < y.size()) {
            if (x[i] < y[j]) ++i;
            else if (y[j] < x[i]) ++j;
            else {
                e[x[i]]++;
                ++i, ++j;
            }
        }
    }
    if (r.tree_ok)
        for (int v = 0; v < n; ++v)
            if (cnt[v] && e[v] != cnt[v] - 1) {
                r.connected_ok = false;
                r.issues.push_back("bags of vertex " + std::to_string(v + 1) + " are not connected");
            }
    // edge coverage: for each vertex, mark the bags holding it
    std::vector<std::vector<int>> where(n);
    for (int b = 0; b < nb; ++b)
        for (int v : bags[b]) where[v].push_back(b);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) continue;
        const auto& a = where[u];
        const auto& b = where[v];
        size_t i = 0, j = 0;
        bool hit = false;
        while (i < a.size() && j < b.size() && !hit) {
            if (a[i] < b[j]) ++i;
            else if (b[j] < a[i]) ++j;
            else hit = true;
        }
        if (!hit) {
            r.edges_ok = false;
            r.issues.push_back("edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
                               " in no bag");
        }
    }
    return r;
}

ValidationReport validate_td(const EmbeddedGraph& g, const TreeDecomposition& td) {
    return validate_td(g.n, g.edge_list(), td);
}

int exact_treewidth(int n, const EdgeList& edges) {
    if (n > 15) throw std::invalid_argument("exact_treewidth supports at most 15 vertices");
    if (n == 0) return -1;
    std::vector<uint32_t> adj(n, 0);
    for (auto [u, v] : edges) {
        if (u == v) continue;
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    // q(S, v): vertices outside S+v reachable from v through S
    auto q = [&](uint32_t S, int v) {
        uint32_t seen = 1u << v, frontier = 1u << v, out = 0;
        while (frontier) {
            int x = __builtin_ctz(frontier);
            frontier &= frontier - 1;
            uint32_t nb = adj[x] & ~seen;
            seen |= nb;
            out |= nb & ~S;
            frontier |= nb & S;
        }
        return __builtin_popcount(out);
    };
    std::vector<int8_t> tw(size_t(1) << n, 127);
    tw[0] = -1;
    for (uint32_t S = 1; S <= full; ++S) {
        int best = 127;
        for (uint32_t rest = S; rest; rest &= rest - 1) {
            int v = __builtin_ctz(rest);
            uint32_t T = S & ~(1u << v);
            int val = std::max<int>(tw[T], q(T, v));
            best = std::min(best, val);
        }
        tw[S] = (int8_t)best;
    }
    return tw[full];
}

bool check_separator(int n, const EdgeList& edges, const std::vector<int>& S,
                     const std::vector<int>& A, const std::vector<int>& B, SepMode mode) {
    std::vector<char> in_s(n, 0), in_b(n, 0);
    for (int v : S) in_s[v] = 1;
    if (mode == SepMode::strong) {
        for (int v : A)
            if (in_s[v]) return false;
        for (int v : B)
            if (in_s[v]) return false;
    }
    for (int v : B)
        if (!in_s[v]) in_b[v] = 1;
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> q;
    for (int v : A)
        if (!in_s[v] && !seen[v]) {
            seen[v] = 1;
            q.push_back(v);
        }
    for (size_t i = 0; i < q.size(); ++i) {
        if (in_b[q[i]]) return false;
        for (int u : adj[q[i]])
            if (!in_s[u] && !seen[u]) {
                seen[u] = 1;
                q.push_back(u);
            }
    }
    return true;
}

int min_vertex_cut(int n, const EdgeList& edges, const std::vector<int>& A,
                   const std::vector<int>& B) {
    std::vector<char> in_a(n, 0), in_b(n, 0);
    for (int v : A) in_a[v] = 1;
    for (int v : B) {
        if (in_a[v]) return -1;
        in_b[v] = 1;
    }
    for (auto [u, v] : edges)
        if ((in_a[u] && in_b[v]) || (in_b[u] && in_a[v])) return -1;
    // node v: in = 2v, out = 2v+1
    FlowNet net(2 * n);
    for (int v = 0; v < n; ++v)
        net.add_edge(2 * v, 2 * v + 1, (in_a[v] || in_b[v]) ? FlowNet::kInf : 1);
    for (auto [u, v] : edges) {
        net.add_edge(2 * u + 1, 2 * v, FlowNet::kInf);
        net.add_edge(2 * v + 1, 2 * u, FlowNet::kInf);
    }
    std::vector<int> src, snk;
    for (int v : A) src.push_back(2 * v);
    for (int v : B) snk.push_back(2 * v);
    return net.maxflow(src, snk, n);
}

int ridge_depth(const EmbeddedGraph& g, const HeightMap& hm, int s, int t) {
    for (int d = std::min(hm.h[s], hm.h[t]); d >= 1; --d) {
        std::vector<char> seen(g.n, 0);
        std::vector<int> q{s};
        seen[s] = 1;
        for (size_t i = 0; i < q.size(); ++i)
            for (int u : g.rot[q[i]])
                if (!seen[u] && hm.h[u] >= d) {
                    seen[u] = 1;
                    q.push_back(u);
                }
        if (seen[t]) return d;
    }
    throw std::invalid_argument("ridge_depth: vertices are not connected");
}

}  // namespace ptd

#include "ptd/shortcuts.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace ptd {

ExtComponent extended_component(const MountainStructure& ms, int c) {
    const auto& g = ms.g;
    ExtComponent e;
    for (int f = 0; f < (int)g.faces.size(); ++f) {
        if (ms.split.face_comp[f] != c) continue;
        for (int h : g.faces[f]) {
            int u = g.tail[h], v = g.head[h];
            e.edges.push_back({std::min(u, v), std::max(u, v)});
        }
    }
    for (auto [nb, x] : ms.mct.adj[c]) {
        (void)nb;
        for (auto uv : ms.seps[x].border_edges()) e.edges.push_back(uv);
    }
    std::sort(e.edges.begin(), e.edges.end());
    e.edges.erase(std::unique(e.edges.begin(), e.edges.end()), e.edges.end());
    for (auto [u, v] : e.edges) {
        e.vertices.push_back(u);
        e.vertices.push_back(v);
    }
    std::sort(e.vertices.begin(), e.vertices.end());
    e.vertices.erase(std::unique(e.vertices.begin(), e.vertices.end()), e.vertices.end());
    return e;
}

int side_of(const MountainStructure& ms, int x, int c) {
    if (ms.mct.ends[x][0] == c) return 0;
    if (ms.mct.ends[x][1] == c) return 1;
    return -1;
}

namespace {

struct AuxEdge {
    int a, b;  // local ids
    int w;
    long long g;  // flux a -> b
    int tag;      // separator whose far side it crosses, -1 for plain edges
    const PseudoShortcut* sc = nullptr;
    bool forward = true;  // sc->path runs a -> b
};

struct Aux {
    std::vector<int> verts;  // local -> global
    std::vector<AuxEdge> edges;
    std::vector<std::vector<int>> adj;
};

class Builder {
public:
    Builder(const MountainStructure& ms, int h_high) : ms_(ms), hh_(h_high), local_(ms.g.n, -1) {}

    Aux build(int c, const ShortcutSet& sc, const std::vector<std::array<char, 2>>& ready) {
        const auto& g = ms_.g;
        Aux a;
        auto ext = extended_component(ms_, c);
        for (int v : ext.vertices)
            if (ms_.hm.h[v] >= hh_) {
                local_[v] = (int)a.verts.size();
                a.verts.push_back(v);
            }
        a.adj.assign(a.verts.size(), {});
        auto add = [&](AuxEdge e) {
            a.adj[e.a].push_back((int)a.edges.size());
            a.adj[e.b].push_back((int)a.edges.size());
            a.edges.push_back(e);
        };
        for (auto [u, v] : ext.edges) {
            if (local_[u] < 0 || local_[v] < 0) continue;
            add({local_[u], local_[v], 1, ms_.flux.g[g.he_between(u, v)], -1});
        }
        for (auto [nb, y] : ms_.mct.adj[c]) {
            (void)nb;
            int far = 1 - side_of(ms_, y, c);
            if (!ready[y][far]) continue;
            for (const auto& p : sc.sets[y][far]) {
                if (local_[p.s] < 0 || local_[p.t] < 0) continue;
                add({local_[p.s], local_[p.t], p.len, p.flux, y, &p, true});
            }
        }
        return a;
    }

    void release(const Aux& a) {
        for (int v : a.verts) local_[v] = -1;
    }

    int local(int v) const { return local_[v]; }

private:
    const MountainStructure& ms_;
    int hh_;
    std::vector<int> local_;
};

struct Run {
    std::vector<int> len;
    std::vector<long long> key;
    std::vector<long long> g;
    std::vector<int> pred;  // aux edge
};

// Lexicographic Dijkstra on (length, sign * flux), skipping edges tagged with
// the excluded separator and stopping beyond the length limit.
void dijkstra(const Aux& a, int src, int exclude, int limit, int sign, Run& r) {
    int n = (int)a.verts.size();
    r.len.assign(n, INT_MAX);
    r.key.assign(n, 0);
    r.g.assign(n, 0);
    r.pred.assign(n, -1);
    using Item = std::tuple<int, long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    r.len[src] = 0;
    pq.push({0, 0, src});
    while (!pq.empty()) {
        auto [d, k, v] = pq.top();
        pq.pop();
        if (d != r.len[v] || k != r.key[v]) continue;
        for (int ei : a.adj[v]) {
            const auto& e = a.edges[ei];
            if (e.tag >= 0 && e.tag == exclude) continue;
            int u = e.a == v ? e.b : e.a;
            long long eg = e.a == v ? e.g : -e.g;
            int nd = d + e.w;
            if (nd > limit) continue;
            long long nk = k + sign * eg;
            if (nd < r.len[u] || (nd == r.len[u] && nk < r.key[u])) {
                r.len[u] = nd;
                r.key[u] = nk;
                r.g[u] = r.g[v] + eg;
                r.pred[u] = ei;
                pq.push({nd, nk, u});
            }
        }
    }
}

std::vector<int> expand(const Aux& a, const Run& r, int src, int dst) {
    std::vector<int> rev{a.verts[dst]};
    int v = dst;
    while (v != src) {
        const auto& e = a.edges[r.pred[v]];
        int u = e.a == v ? e.b : e.a;
        if (e.sc) {
            // append the stored path from v back to u, without v itself
            std::vector<int> p = e.sc->path;
            bool v_is_t = (e.b == v) == e.forward;
            if (!v_is_t) std::reverse(p.begin(), p.end());
            // p now runs from u to v
            for (int i = (int)p.size() - 2; i >= 0; --i) rev.push_back(p[i]);
        } else {
            rev.push_back(a.verts[u]);
        }
        v = u;
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

long long crest_flux(const MountainStructure& ms, const CrestSeparator& x, int from, int to) {
    auto p = x.crest_path(from, to);
    long long s = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i) s += ms.flux.g[ms.g.he_between(p[i], p[i + 1])];
    return s;
}

void shortcuts_for(const MountainStructure& ms, const Aux& a, const Builder& b, int x, int side,
                   int h_high, ShortcutSet& out) {
    const auto& X = ms.seps[x];
    std::vector<int> ess;
    for (int v : X.essential_walk())
        if (ms.hm.h[v] >= h_high && b.local(v) >= 0) ess.push_back(v);
    std::sort(ess.begin(), ess.end());
    ess.erase(std::unique(ess.begin(), ess.end()), ess.end());
    int limit = 2 * X.q();
    auto& dst = out.sets[x][side];
    dst.clear();
    Run lo, hi;
    for (size_t i = 0; i < ess.size(); ++i) {
        int s = ess[i];
        int ls = b.local(s);
        bool ran = false;
        for (size_t j = i + 1; j < ess.size(); ++j) {
            int t = ess[j];
            int cl = X.crest_len(s, t);
            if (cl <= 1) continue;
            if (!ran) {
                dijkstra(a, ls, x, limit, +1, lo);
                dijkstra(a, ls, x, limit, -1, hi);
                ran = true;
            }
            int lt = b.local(t);
            if (lo.len[lt] >= cl) continue;
            long long back = crest_flux(ms, X, t, s);
            long long e1 = std::llabs(lo.g[lt] + back), e2 = std::llabs(hi.g[lt] + back);
            const Run& r = e1 <= e2 ? lo : hi;
            PseudoShortcut p;
            p.sep = x;
            p.side = side;
            p.s = s;
            p.t = t;
            p.len = r.len[lt];
            p.flux = r.g[lt];
            p.path = expand(a, r, ls, lt);
            dst.push_back(std::move(p));
        }
    }
}

}  // namespace

ShortcutSet compute_shortcut_sets(const MountainStructure& ms, int h_high) {
    if (h_high < 2) throw std::invalid_argument("shortcut sets need h >= 2");
    ShortcutSet out;
    out.h_high = h_high;
    int nx = (int)ms.seps.size();
    int nc = ms.components();
    out.sets.assign(nx, {});
    std::vector<std::array<char, 2>> ready(nx, {0, 0});
    if (nx == 0) return out;
    // BFS order of the connection tree
    std::vector<int> order, psep(nc, -1);
    std::vector<char> seen(nc, 0);
    for (int r = 0; r < nc; ++r) {
        if (seen[r]) continue;
        seen[r] = 1;
        size_t start = order.size();
        order.push_back(r);
        for (size_t i = start; i < order.size(); ++i)
            for (auto [nb, x] : ms.mct.adj[order[i]])
                if (!seen[nb]) {
                    seen[nb] = 1;
                    psep[nb] = x;
                    order.push_back(nb);
                }
    }
    Builder b(ms, h_high);
    // bottom-up: the child side of every parent separator
    for (int i = (int)order.size() - 1; i >= 0; --i) {
        int c = order[i];
        int x = psep[c];
        if (x < 0) continue;
        Aux a = b.build(c, out, ready);
        int side = side_of(ms, x, c);
        shortcuts_for(ms, a, b, x, side, h_high, out);
        ready[x][side] = 1;
        b.release(a);
    }
    // top-down: the parent side of every child separator
    for (int c : order) {
        Aux a;
        bool built = false;
        for (auto [nb, x] : ms.mct.adj[c]) {
            if (x == psep[c]) continue;
            (void)nb;
            if (!built) {
                a = b.build(c, out, ready);
                built = true;
            }
            int side = side_of(ms, x, c);
            shortcuts_for(ms, a, b, x, side, h_high, out);
        }
        // mark after the whole component so siblings do not see each other twice
        for (auto [nb, x] : ms.mct.adj[c])
            if (x != psep[c]) ready[x][side_of(ms, x, c)] = 1;
        if (built) b.release(a);
    }
    return out;
}

FreeClass classify_shortcut_free(const MountainStructure& ms, const ShortcutSet& sc, int ell, int h) {
    FreeClass fc;
    int nx = (int)ms.seps.size();
    fc.sep_free.assign(nx, 1);
    fc.comp_free.assign(ms.components(), 1);
    for (int x = 0; x < nx; ++x) {
        const auto& X = ms.seps[x];
        bool tall_low = X.has_lowpoint() && X.lowpoint_height() >= h;
        for (int j = 0; j < 2; ++j) {
            bool has = sc.shortest(x, j) <= ell;
            if (has) {
                fc.sep_free[x] = 0;
                int c = ms.mct.ends[x][j];
                if (c >= 0) fc.comp_free[c] = 0;
            }
        }
        if (tall_low) {
            fc.sep_free[x] = 0;
            int c = ms.encloses[x];
            if (c >= 0) fc.comp_free[c] = 0;
        }
    }
    return fc;
}

std::vector<int> composed_cycle(const CrestSeparator& x, const PseudoShortcut& p) {
    if (p.path.empty() || p.path.front() != p.s || p.path.back() != p.t)
        throw std::invalid_argument("composed_cycle: endpoints do not match the path");
    auto back = x.crest_path(p.t, p.s);
    std::vector<int> cyc = p.path;
    for (size_t i = 1; i + 1 < back.size(); ++i) cyc.push_back(back[i]);
    return cyc;
}

}  // namespace ptd

#include "ptd/embed.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ptd {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        p[b] = a;
        return true;
    }
};

// Everything except the outer flags.
EmbeddedGraph build(std::vector<std::vector<int>> rot) {
    EmbeddedGraph g;
    g.n = (int)rot.size();
    g.rot = std::move(rot);
    g.off.assign(g.n + 1, 0);
    for (int v = 0; v < g.n; ++v) g.off[v + 1] = g.off[v] + (int)g.rot[v].size();
    int m2 = g.off[g.n];
    g.head.resize(m2);
    g.tail.resize(m2);
    g.sorted_.assign(g.n, {});
    for (int v = 0; v < g.n; ++v) {
        auto& s = g.sorted_[v];
        s.reserve(g.rot[v].size());
        for (int i = 0; i < (int)g.rot[v].size(); ++i) {
            int u = g.rot[v][i];
            if (u < 0 || u >= g.n) throw std::invalid_argument("neighbour id out of range");
            g.head[g.off[v] + i] = u;
            g.tail[g.off[v] + i] = v;
            s.push_back({u, i});
        }
        std::sort(s.begin(), s.end());
    }
    g.twin.resize(m2);
    for (int h = 0; h < m2; ++h) {
        int p = g.pos(g.head[h], g.tail[h]);
        if (p < 0) throw std::invalid_argument("rotation system is not symmetric");
        g.twin[h] = g.off[g.head[h]] + p;
    }
    g.face.assign(m2, -1);
    for (int h = 0; h < m2; ++h) {
        if (g.face[h] >= 0) continue;
        int f = (int)g.faces.size();
        g.faces.emplace_back();
        int x = h;
        while (g.face[x] < 0) {
            g.face[x] = f;
            g.faces[f].push_back(x);
            x = g.next(x);
        }
    }
    g.outer.assign(g.faces.size(), 0);
    return g;
}

// Components with no outer face get their longest face.
int fill_missing_outer(EmbeddedGraph& g) {
    Dsu d(g.n);
    for (int h = 0; h < g.halfedges(); ++h) d.unite(g.tail[h], g.head[h]);
    std::vector<char> has(g.n, 0);
    std::vector<int> best(g.n, -1);
    for (int f = 0; f < (int)g.faces.size(); ++f) {
        int r = d.find(g.tail[g.faces[f][0]]);
        if (g.outer[f]) has[r] = 1;
        if (best[r] < 0 || g.faces[f].size() > g.faces[best[r]].size()) best[r] = f;
    }
    int fixed = 0;
    for (int v = 0; v < g.n; ++v)
        if (d.find(v) == v && !has[v] && best[v] >= 0) {
            g.outer[best[v]] = 1;
            ++fixed;
        }
    return fixed;
}

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    int m = (int)a.size();
    if (m == 0) return true;
    for (int s = 0; s < m; ++s) {
        if (a[s] != b[0]) continue;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) ok = a[(s + i) % m] == b[i];
        if (ok) return true;
    }
    return false;
}

}  // namespace

int EmbeddedGraph::next(int h) const {
    int v = head[h];
    int i = twin[h] - off[v];
    return off[v] + (i + 1) % deg(v);
}

int EmbeddedGraph::prev(int h) const {
    int v = tail[h];
    int d = deg(v);
    int i = h - off[v];
    return twin[off[v] + (i - 1 + d) % d];
}

int EmbeddedGraph::pos(int v, int u) const {
    const auto& s = sorted_[v];
    auto it = std::lower_bound(s.begin(), s.end(), std::make_pair(u, -1));
    if (it == s.end() || it->first != u) return -1;
    return it->second;
}

int EmbeddedGraph::he_between(int u, int v) const {
    int p = pos(u, v);
    return p < 0 ? -1 : off[u] + p;
}

std::vector<int> EmbeddedGraph::face_vertices(int f) const {
    std::vector<int> r;
    r.reserve(faces[f].size());
    for (int h : faces[f]) r.push_back(tail[h]);
    return r;
}

std::vector<std::pair<int, int>> EmbeddedGraph::edge_list() const {
    std::vector<std::pair<int, int>> e;
    for (int h = 0; h < halfedges(); ++h)
        if (tail[h] < head[h]) e.push_back({tail[h], head[h]});
    return e;
}

EmbeddedGraph make_embedded(std::vector<std::vector<int>> rot,
                            const std::vector<std::pair<int, int>>& outer_hint) {
    EmbeddedGraph g = build(std::move(rot));
    for (auto [u, v] : outer_hint) {
        int h = g.he_between(u, v);
        if (h < 0) throw std::invalid_argument("outer hint is not an edge");
        g.outer[g.face[h]] = 1;
    }
    fill_missing_outer(g);
    return g;
}

namespace {

void mark_walk(EmbeddedGraph& g, const std::vector<int>& walk) {
    if (walk.size() < 2) return;
    std::vector<int> rev(walk.rbegin(), walk.rend());
    int found = -1;
    for (int dir = 0; dir < 2 && found < 0; ++dir) {
        int h = dir == 0 ? g.he_between(walk[0], walk[1]) : g.he_between(walk[1], walk[0]);
        if (h < 0) continue;
        auto fv = g.face_vertices(g.face[h]);
        if (cyclic_equal(fv, walk) || cyclic_equal(fv, rev)) found = g.face[h];
    }
    if (found < 0) {
        for (int f = 0; f < (int)g.faces.size() && found < 0; ++f) {
            auto fv = g.face_vertices(f);
            if (cyclic_equal(fv, walk) || cyclic_equal(fv, rev)) found = f;
        }
    }
    if (found < 0) throw std::invalid_argument("outer walk is not a face");
    g.outer[found] = 1;
}

}  // namespace

EmbeddedGraph make_embedded_walk(std::vector<std::vector<int>> rot,
                                 const std::vector<int>& walk) {
    return make_embedded_walks(std::move(rot), {walk});
}

EmbeddedGraph make_embedded_walks(std::vector<std::vector<int>> rot,
                                  const std::vector<std::vector<int>>& walks) {
    EmbeddedGraph g = build(std::move(rot));
    for (const auto& w : walks) mark_walk(g, w);
    fill_missing_outer(g);
    return g;
}

std::vector<std::vector<int>> outer_walks(const EmbeddedGraph& g) {
    std::vector<std::vector<int>> out;
    for (int f = 0; f < (int)g.faces.size(); ++f)
        if (g.outer[f]) out.push_back(g.face_vertices(f));
    return out;
}

EmbeddingReport validate_embedding(const std::vector<std::vector<int>>& rot,
                                   const std::vector<int>& walk) {
    EmbeddingReport r;
    int n = (int)rot.size();
    for (int v = 0; v < n; ++v) {
        std::vector<int> s = rot[v];
        std::sort(s.begin(), s.end());
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= n) {
                r.simple = false;
                r.errors.push_back("neighbour out of range at vertex " + std::to_string(v + 1));
                return r;
            }
            if (s[i] == v) {
                r.simple = false;
                r.errors.push_back("not simple: self-loop at vertex " + std::to_string(v + 1));
            }
            if (i > 0 && s[i] == s[i - 1]) {
                r.simple = false;
                r.errors.push_back("not simple: parallel edge " + std::to_string(v + 1) + "-" +
                                   std::to_string(s[i] + 1));
            }
        }
    }
    if (!r.simple) return r;
    EmbeddedGraph g;
    try {
        g = walk.empty() ? make_embedded(rot, {}) : make_embedded_walk(rot, walk);
    } catch (const std::exception& e) {
        r.errors.push_back(e.what());
        r.euler = false;
        return r;
    }
    return validate_embedding(g);
}

EmbeddingReport validate_embedding(const EmbeddedGraph& g) {
    EmbeddingReport r;
    r.faces = (int)g.faces.size();
    for (int h = 0; h < g.halfedges(); ++h)
        if (g.tail[h] == g.head[h]) r.simple = false;
    auto comps = connected_components(g);
    r.connected = comps.size() <= 1;
    std::vector<int> comp_of(g.n, -1);
    for (int c = 0; c < (int)comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = c;
    std::vector<long long> vv(comps.size(), 0), ee(comps.size(), 0), ff(comps.size(), 0);
    std::vector<int> outers(comps.size(), 0);
    for (int v = 0; v < g.n; ++v) vv[comp_of[v]]++;
    for (int h = 0; h < g.halfedges(); ++h) ee[comp_of[g.tail[h]]]++;
    for (int f = 0; f < (int)g.faces.size(); ++f) {
        int c = comp_of[g.tail[g.faces[f][0]]];
        ff[c]++;
        if (g.outer[f]) outers[c]++;
    }
    for (size_t c = 0; c < comps.size(); ++c) {
        long long f = ff[c] == 0 ? 1 : ff[c];
        if (vv[c] - ee[c] / 2 + f != 2) {
            r.euler = false;
            r.errors.push_back("Euler formula fails on a component");
        }
        if (ff[c] > 0 && outers[c] != 1) r.errors.push_back("component without unique outer face");
    }
    for (int f = 0; f < (int)g.faces.size(); ++f)
        if (!g.outer[f] && g.faces[f].size() != 3) r.almost_triangulated = false;
    auto bc = biconnected_components(g);
    r.biconnected = r.connected && bc.cut_vertices.empty() && g.n >= 2;
    return r;
}

Restriction restrict_graph(const EmbeddedGraph& g, const std::vector<char>& keep,
                           const std::vector<char>* edge_keep) {
    Restriction res;
    res.new_of.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v)
        if (keep[v]) {
            res.new_of[v] = (int)res.old_of.size();
            res.old_of.push_back(v);
        }
    if (res.old_of.empty()) throw std::invalid_argument("restriction to an empty vertex set");
    auto alive = [&](int h) {
        if (!keep[g.tail[h]] || !keep[g.head[h]]) return false;
        if (edge_keep && (!(*edge_keep)[h] || !(*edge_keep)[g.twin[h]])) return false;
        return true;
    };
    std::vector<std::vector<int>> rot(res.old_of.size());
    for (int i = 0; i < (int)res.old_of.size(); ++i) {
        int v = res.old_of[i];
        for (int j = 0; j < g.deg(v); ++j)
            if (alive(g.off[v] + j)) rot[i].push_back(res.new_of[g.rot[v][j]]);
    }
    Dsu d((int)g.faces.size());
    for (int h = 0; h < g.halfedges(); ++h)
        if (!alive(h)) d.unite(g.face[h], g.face[g.twin[h]]);
    std::vector<char> outer_group(g.faces.size(), 0);
    for (int f = 0; f < (int)g.faces.size(); ++f)
        if (g.outer[f]) outer_group[d.find(f)] = 1;
    res.g = build(std::move(rot));
    for (int f = 0; f < (int)res.g.faces.size(); ++f) {
        int h = res.g.faces[f][0];
        int oh = g.he_between(res.old_of[res.g.tail[h]], res.old_of[res.g.head[h]]);
        if (outer_group[d.find(g.face[oh])]) res.g.outer[f] = 1;
    }
    res.orphan_components = fill_missing_outer(res.g);
    return res;
}

Triangulated almost_triangulate(const EmbeddedGraph& g0) {
    Triangulated t;
    t.g = g0;
    t.added.assign(g0.n, 0);
    for (int round = 0; round < 16; ++round) {
        const EmbeddedGraph& g = t.g;
        std::vector<int> ins(g.halfedges(), -1);  // angle after rot index -> new vertex
        std::vector<std::vector<int>> extra;
        for (int f = 0; f < (int)g.faces.size(); ++f) {
            if (g.outer[f] || g.faces[f].size() <= 3) continue;
            int x = g.n + (int)extra.size();
            std::vector<int> nb;
            for (int h : g.faces[f]) {
                int v = g.head[h];
                if (std::find(nb.begin(), nb.end(), v) != nb.end()) continue;
                nb.push_back(v);
                ins[g.twin[h]] = x;
            }
            std::reverse(nb.begin(), nb.end());
            extra.push_back(nb);
        }
        if (extra.empty()) break;
        std::vector<std::vector<int>> rot(g.n + extra.size());
        for (int v = 0; v < g.n; ++v)
            for (int i = 0; i < g.deg(v); ++i) {
                rot[v].push_back(g.rot[v][i]);
                int x = ins[g.off[v] + i];
                if (x >= 0) rot[v].push_back(x);
            }
        for (size_t i = 0; i < extra.size(); ++i) rot[g.n + i] = extra[i];
        std::vector<std::pair<int, int>> hint;
        for (int f = 0; f < (int)g.faces.size(); ++f)
            if (g.outer[f]) hint.push_back({g.tail[g.faces[f][0]], g.head[g.faces[f][0]]});
        t.added.resize(rot.size(), 1);
        t.g = make_embedded(std::move(rot), hint);
    }
    return t;
}

BlockCut biconnected_components(const EmbeddedGraph& g) {
    BlockCut bc;
    int n = g.n;
    std::vector<int> disc(n, -1), low(n, 0), it(n, 0), parent(n, -1);
    std::vector<char> is_cut(n, 0);
    std::vector<std::pair<int, int>> estack;
    int timer = 0;
    for (int s = 0; s < n; ++s) {
        if (disc[s] >= 0) continue;
        if (g.deg(s) == 0) {
            bc.blocks.push_back({s});
            disc[s] = timer++;
            continue;
        }
        std::vector<int> st{s};
        disc[s] = low[s] = timer++;
        int root_children = 0;
        while (!st.empty()) {
            int v = st.back();
            if (it[v] < g.deg(v)) {
                int u = g.rot[v][it[v]++];
                if (disc[u] < 0) {
                    parent[u] = v;
                    disc[u] = low[u] = timer++;
                    estack.push_back({v, u});
                    st.push_back(u);
                    if (v == s) ++root_children;
                } else if (u != parent[v] && disc[u] < disc[v]) {
                    low[v] = std::min(low[v], disc[u]);
                    estack.push_back({v, u});
                }
            } else {
                st.pop_back();
                int p = parent[v];
                if (p < 0) continue;
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= disc[p]) {
                    if (p != s) is_cut[p] = 1;
                    std::vector<int> blk;
                    while (!estack.empty()) {
                        auto e = estack.back();
                        estack.pop_back();
                        blk.push_back(e.first);
                        blk.push_back(e.second);
                        if (e.first == p && e.second == v) break;
                    }
                    std::sort(blk.begin(), blk.end());
                    blk.erase(std::unique(blk.begin(), blk.end()), blk.end());
                    bc.blocks.push_back(std::move(blk));
                }
            }
        }
        if (root_children > 1) is_cut[s] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) bc.cut_vertices.push_back(v);
    return bc;
}

std::vector<std::vector<int>> connected_components(const EmbeddedGraph& g) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> c{s};
        seen[s] = 1;
        for (size_t i = 0; i < c.size(); ++i)
            for (int u : g.rot[c[i]])
                if (!seen[u]) {
                    seen[u] = 1;
                    c.push_back(u);
                }
        out.push_back(std::move(c));
    }
    return out;
}

FaceFlux make_flux(const EmbeddedGraph& g) {
    FaceFlux fl;
    fl.g.assign(g.halfedges(), 0);
    int nf = (int)g.faces.size();
    std::vector<int> par_he(nf, -1), order;
    std::vector<char> seen(nf, 0);
    for (int f = 0; f < nf; ++f)
        if (g.outer[f]) {
            seen[f] = 1;
            order.push_back(f);
        }
    for (size_t i = 0; i < order.size(); ++i) {
        int f = order[i];
        for (int h : g.faces[f]) {
            int o = g.face[g.twin[h]];
            if (seen[o]) continue;
            seen[o] = 1;
            par_he[o] = g.twin[h];  // half-edge of the child face on the crossing
            order.push_back(o);
        }
    }
    std::vector<long long> size(nf, 1);
    for (int i = (int)order.size() - 1; i >= 0; --i) {
        int f = order[i];
        int h = par_he[f];
        if (h < 0) continue;
        fl.g[h] = size[f];
        fl.g[g.twin[h]] = -size[f];
        size[g.face[g.twin[h]]] += size[f];
    }
    return fl;
}

long long FaceFlux::walk(const EmbeddedGraph& eg, const std::vector<int>& cyc) const {
    long long s = 0;
    int m = (int)cyc.size();
    for (int i = 0; i < m; ++i) {
        int h = eg.he_between(cyc[i], cyc[(i + 1) % m]);
        if (h < 0) throw std::invalid_argument("flux walk uses a non-edge");
        s += g[h];
    }
    return s;
}

}  // namespace ptd

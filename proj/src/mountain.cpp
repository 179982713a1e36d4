#include "ptd/mountain.hpp"

#include <algorithm>
#include <numeric>

#include "ptd/verify.hpp"

namespace ptd {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
};

}  // namespace

Split split_components(const EmbeddedGraph& g, const std::vector<CrestSeparator>& S) {
    std::vector<char> border(g.halfedges(), 0);
    for (const auto& x : S)
        for (auto [u, v] : x.border_edges()) {
            int h = g.he_between(u, v);
            if (h < 0) continue;
            border[h] = border[g.twin[h]] = 1;
        }
    int nf = (int)g.faces.size();
    Dsu d(nf);
    for (int h = 0; h < g.halfedges(); ++h) {
        if (border[h]) continue;
        int a = g.face[h], b = g.face[g.twin[h]];
        if (g.outer[a] || g.outer[b]) continue;
        d.p[d.find(a)] = d.find(b);
    }
    Split sp;
    sp.face_comp.assign(nf, -1);
    std::vector<int> id(nf, -1);
    for (int f = 0; f < nf; ++f) {
        if (g.outer[f]) continue;
        int r = d.find(f);
        if (id[r] < 0) id[r] = sp.count++;
        sp.face_comp[f] = id[r];
    }
    return sp;
}

std::vector<std::vector<int>> component_vertices(const EmbeddedGraph& g, const Split& sp) {
    std::vector<std::vector<int>> cv(sp.count);
    for (int f = 0; f < (int)g.faces.size(); ++f) {
        int c = sp.face_comp[f];
        if (c < 0) continue;
        for (int h : g.faces[f]) cv[c].push_back(g.tail[h]);
    }
    for (auto& v : cv) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return cv;
}

int top_halfedge(const EmbeddedGraph& g, const CrestSeparator& x) {
    return g.he_between(x.top_u(), x.top_v());
}

int enclosed_top_face(const EmbeddedGraph& g, const FaceFlux& fl, const CrestSeparator& x) {
    if (!x.has_lowpoint()) return -1;
    auto w = x.essential_walk();
    w.pop_back();
    long long s = fl.walk(g, w);
    int th = top_halfedge(g, x);
    return s > 0 ? g.face[th] : g.face[g.twin[th]];
}

MCTree mountain_connection_tree(const EmbeddedGraph& g, const Split& sp,
                                const std::vector<CrestSeparator>& S) {
    MCTree t;
    t.adj.assign(sp.count, {});
    t.ends.resize(S.size());
    std::vector<std::pair<int, int>> seen;
    for (int i = 0; i < (int)S.size(); ++i) {
        int th = top_halfedge(g, S[i]);
        int a = sp.face_comp[g.face[th]], b = sp.face_comp[g.face[g.twin[th]]];
        t.ends[i] = {a, b};
        if (a < 0 || b < 0 || a == b) {
            t.is_tree = false;
            continue;
        }
        t.adj[a].push_back({b, i});
        t.adj[b].push_back({a, i});
        seen.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) t.is_tree = false;
    if ((int)seen.size() != std::max(0, sp.count - 1)) t.is_tree = false;
    if (sp.count > 0) {
        std::vector<char> vis(sp.count, 0);
        std::vector<int> q{0};
        vis[0] = 1;
        for (size_t i = 0; i < q.size(); ++i)
            for (auto [b, s] : t.adj[q[i]])
                if (!vis[b]) {
                    vis[b] = 1;
                    q.push_back(b);
                }
        if ((int)q.size() != sp.count) t.is_tree = false;
    }
    return t;
}

bool larger_sep(const CrestSeparator& a, int ia, const CrestSeparator& b, int ib) {
    if (a.height != b.height) return a.height > b.height;
    int ta = a.one_top ? 1 : 2, tb = b.one_top ? 1 : 2;
    if (ta != tb) return ta > tb;
    auto mt = [](const CrestSeparator& x) {
        return x.one_top ? x.p1[0] : std::min(x.p1[0], x.p2[0]);
    };
    if (mt(a) != mt(b)) return mt(a) < mt(b);
    return ia < ib;
}

MountainStructure good_mountain_structure(const EmbeddedGraph& g) {
    return good_mountain_structure(g, compute_heights(g));
}

MountainStructure good_mountain_structure(const EmbeddedGraph& g, const HeightMap& hm) {
    MountainStructure ms;
    ms.g = g;
    ms.hm = hm;
    ms.di = compute_down_info(g, hm);
    ms.flux = make_flux(g);
    ms.crests = find_crests(g, hm);
    auto cidx = crest_index(g.n, ms.crests);

    std::vector<CrestSeparator> S;
    {
        auto all = enumerate_crest_separators(g, hm, ms.di);
        ms.stats.enumerated = (int)all.size();
        for (auto& x : all) {
            if (x.coast_edge) {
                ms.stats.dropped_coast++;
                continue;
            }
            bool touches = false;
            for (int v : x.top_vertices()) touches |= cidx[v] >= 0;
            if (touches) {
                ms.stats.dropped_crest++;
                continue;
            }
            S.push_back(std::move(x));
        }
    }

    Split sp = split_components(g, S);
    MCTree t = mountain_connection_tree(g, sp, S);
    int nc = sp.count;
    std::vector<char> crest(nc, 0);
    for (int f = 0; f < (int)g.faces.size(); ++f) {
        int c = sp.face_comp[f];
        if (c < 0) continue;
        for (int h : g.faces[f])
            if (cidx[g.tail[h]] >= 0) crest[c] = 1;
    }

    // root the tree at component 0 and record depth / parent separator
    std::vector<int> depth(nc, -1), psep(nc, -1), child_of(S.size(), -1);
    std::vector<std::vector<int>> kids(nc);  // separator ids towards children
    int maxd = 0;
    for (int r = 0; r < nc; ++r) {
        if (depth[r] >= 0) continue;
        depth[r] = 0;
        std::vector<int> q{r};
        for (size_t i = 0; i < q.size(); ++i) {
            int a = q[i];
            for (auto [b, s] : t.adj[a]) {
                if (depth[b] >= 0) continue;
                depth[b] = depth[a] + 1;
                maxd = std::max(maxd, depth[b]);
                psep[b] = s;
                child_of[s] = b;
                kids[a].push_back(s);
                q.push_back(b);
            }
        }
    }
    if (!t.is_tree) ms.stats.non_tree++;

    // kids[w] is a lazy max-heap of separators towards children (dead
    // entries are skipped on access) and open[w] counts those that are alive
    // and lead to an unfinished child, so each step avoids rescanning kids
    Dsu d(std::max(nc, 1));
    std::vector<char> alive(S.size(), 1), finished(nc, 0);
    auto less = [&](int a, int b) { return larger_sep(S[b], b, S[a], a); };
    for (auto& k : kids) std::make_heap(k.begin(), k.end(), less);
    std::vector<int> open(nc, 0);
    for (int c = 0; c < nc; ++c) open[c] = (int)kids[c].size();
    auto parent_of = [&](int w) {
        int s = psep[w];
        if (s < 0) return -1;
        int a = t.ends[s][0], b = t.ends[s][1];
        int other = d.find(a) == w ? b : a;
        return d.find(other);
    };
    auto max_child_sep = [&](int w) {
        auto& k = kids[w];
        while (!k.empty() && !alive[k.front()]) {
            std::pop_heap(k.begin(), k.end(), less);
            k.pop_back();
        }
        return k.empty() ? -1 : k.front();
    };
    auto absorb = [&](int into, int from) {
        if (kids[into].size() < kids[from].size()) std::swap(kids[into], kids[from]);
        for (int s : kids[from]) {
            kids[into].push_back(s);
            std::push_heap(kids[into].begin(), kids[into].end(), less);
        }
        kids[from].clear();
        kids[from].shrink_to_fit();
        open[into] += open[from];
        open[from] = 0;
    };
    auto finish = [&](int w) {
        finished[w] = 1;
        int p = parent_of(w);
        if (p >= 0 && alive[psep[w]]) open[p]--;
    };
    std::vector<std::vector<int>> bucket(maxd + 1);
    for (int c = 0; c < nc; ++c) bucket[depth[c]].push_back(c);
    for (int dd = maxd; dd >= 0; --dd) {
        std::vector<int> q = bucket[dd];
        size_t delays_in_row = 0;
        for (size_t qi = 0; qi < q.size(); ++qi) {
            int w = q[qi];
            if (d.find(w) != w || finished[w]) continue;
            int p = parent_of(w);
            if (p >= 0 && delays_in_row < q.size()) {
                // psep[w] is alive and open here, so another open child exists iff open[p] > 1
                if (open[p] > 1 && max_child_sep(p) == psep[w]) {
                    ms.stats.delays++;
                    delays_in_row++;
                    q.push_back(w);
                    continue;
                }
            }
            delays_in_row = 0;
            if (crest[w]) {
                finish(w);
                continue;
            }
            int best = max_child_sep(w);
            bool via_parent = false;
            if (p >= 0 && (best < 0 || larger_sep(S[psep[w]], psep[w], S[best], best))) {
                best = psep[w];
                via_parent = true;
            }
            if (best < 0) {
                finish(w);  // a crestless tree: nothing to merge with
                continue;
            }
            ms.stats.merges++;
            if (!via_parent) {
                int c = d.find(child_of[best]);
                alive[best] = 0;
                if (!finished[c]) open[w]--;
                absorb(w, c);
                d.p[c] = w;
                crest[w] = 1;
                finish(w);
            } else {
                alive[best] = 0;
                open[p]--;
                absorb(p, w);
                d.p[w] = p;
            }
        }
    }
    // separators not on the spanning tree of a broken MCT are kept as they are
    for (int i = 0; i < (int)S.size(); ++i)
        if (alive[i]) ms.seps.push_back(S[i]);

    ms.split = split_components(g, ms.seps);
    ms.mct = mountain_connection_tree(g, ms.split, ms.seps);
    if (!ms.mct.is_tree) ms.stats.non_tree++;
    ms.comp_vertices = component_vertices(g, ms.split);
    ms.comp_crest.assign(ms.split.count, -1);
    for (int c = 0; c < (int)ms.crests.size(); ++c) {
        int v = ms.crests[c].vertices[0];
        for (int i = 0; i < g.deg(v); ++i) {
            int f = g.face[g.off[v] + i];
            if (ms.split.face_comp[f] >= 0) {
                ms.comp_crest[ms.split.face_comp[f]] = c;
                break;
            }
        }
    }
    ms.enclosed_by.assign(ms.split.count, -1);
    ms.encloses.assign(ms.seps.size(), -1);
    for (int i = 0; i < (int)ms.seps.size(); ++i) {
        int f = enclosed_top_face(g, ms.flux, ms.seps[i]);
        if (f < 0) continue;
        int c = ms.split.face_comp[f];
        ms.encloses[i] = c;
        if (c < 0) continue;
        if (ms.enclosed_by[c] >= 0) ms.stats.enclose_conflicts++;
        else ms.enclosed_by[c] = i;
    }
    return ms;
}

Between goes_between(const EmbeddedGraph& g, const CrestSeparator& x, const std::vector<int>& A,
                     const std::vector<int>& B) {
    auto xs = x.vertices();
    auto e = g.edge_list();
    if (!check_separator(g.n, e, xs, A, B, SepMode::weak)) return Between::no;
    std::vector<int> ra, rb;
    for (int v : A)
        if (!std::binary_search(xs.begin(), xs.end(), v)) ra.push_back(v);
    for (int v : B)
        if (!std::binary_search(xs.begin(), xs.end(), v)) rb.push_back(v);
    if (ra.empty() || rb.empty()) return Between::no;
    if (ra.size() == A.size() && rb.size() == B.size()) return Between::strongly;
    return Between::weakly;
}

}  // namespace ptd

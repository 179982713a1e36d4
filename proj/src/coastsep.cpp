#include "ptd/coastsep.hpp"

#include <algorithm>
#include <climits>
#include <unordered_map>

#include "ptd/flow.hpp"

namespace ptd {

InnerGraph inner_graph(const EmbeddedGraph& g, const std::vector<int>& cycle, int seed) {
    InnerGraph ig;
    int m = (int)cycle.size();
    std::vector<char> on_cycle(g.n, 0);
    for (int v : cycle) on_cycle[v] = 1;
    std::vector<char> wall(g.halfedges(), 0);
    for (int i = 0; i < m; ++i) {
        int h = g.he_between(cycle[i], cycle[(i + 1) % m]);
        if (h < 0) return ig;
        wall[h] = wall[g.twin[h]] = 1;
    }
    if (on_cycle[seed] || g.deg(seed) == 0) return ig;
    std::vector<char> seen(g.faces.size(), 0);
    std::vector<int> q;
    for (int i = 0; i < g.deg(seed); ++i) {
        int f = g.face[g.off[seed] + i];
        if (!seen[f]) {
            seen[f] = 1;
            q.push_back(f);
        }
    }
    bool leak = false;
    for (size_t i = 0; i < q.size(); ++i) {
        int f = q[i];
        if (g.outer[f]) leak = true;
        for (int h : g.faces[f]) {
            if (wall[h]) continue;
            int o = g.face[g.twin[h]];
            if (!seen[o]) {
                seen[o] = 1;
                q.push_back(o);
            }
        }
    }
    ig.enclosed = !leak;
    ig.faces = q;
    std::sort(ig.faces.begin(), ig.faces.end());
    std::vector<char> in(g.n, 0);
    for (int f : q)
        for (int h : g.faces[f]) in[g.tail[h]] = 1;
    for (int v : cycle) in[v] = 1;
    for (int v = 0; v < g.n; ++v)
        if (in[v]) {
            ig.vertices.push_back(v);
            if (!on_cycle[v]) ig.strict.push_back(v);
        }
    return ig;
}

std::optional<std::vector<int>> h_minimal_coast_separator(
    const EmbeddedGraph& g, const HeightMap& hm, const std::vector<int>& sources, int h, int ell,
    const std::vector<char>& region, const std::vector<int>& attach,
    const std::vector<char>& uncuttable) {
    auto inside = [&](int v) { return region.empty() || region[v]; };
    std::vector<char> is_src(g.n, 0);
    for (int v : sources) is_src[v] = 1;
    FlowNet net(2 * g.n);
    int x = net.add_node();
    std::vector<int> sinks{x};
    for (int v = 0; v < g.n; ++v) {
        if (!inside(v)) continue;
        bool low = hm.h[v] <= h - 1;
        int cap = 1;
        if (is_src[v] || (!uncuttable.empty() && uncuttable[v])) cap = FlowNet::kInf;
        net.add_edge(2 * v, 2 * v + 1, cap);
        if (low) sinks.push_back(2 * v);
        for (int u : g.rot[v])
            if (inside(u)) net.add_edge(2 * v + 1, 2 * u, FlowNet::kInf);
    }
    for (int v : attach)
        if (inside(v)) net.add_edge(2 * v + 1, x, FlowNet::kInf);
    std::vector<int> src;
    for (int v : sources) src.push_back(2 * v);
    int f = net.maxflow(src, sinks, ell);
    if (f > ell) return std::nullopt;
    auto reach = net.reachable(src);
    std::vector<char> cut(g.n, 0), side(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        if (!inside(v)) continue;
        if (reach[2 * v] && !reach[2 * v + 1]) cut[v] = 1;
        else if (reach[2 * v + 1]) side[v] = 1;
    }
    // boundary of the faces touching the source side
    std::vector<char> fin(g.faces.size(), 0);
    for (int v = 0; v < g.n; ++v)
        if (side[v])
            for (int i = 0; i < g.deg(v); ++i) fin[g.face[g.off[v] + i]] = 1;
    std::unordered_map<int, int> nxt;
    int count = 0;
    for (int e = 0; e < g.halfedges(); ++e) {
        if (!fin[g.face[e]] || fin[g.face[g.twin[e]]]) continue;
        if (!cut[g.tail[e]] || !cut[g.head[e]]) return std::nullopt;
        if (nxt.count(g.tail[e])) return std::nullopt;
        nxt[g.tail[e]] = g.head[e];
        ++count;
    }
    if (count < 3) return std::nullopt;
    std::vector<int> cyc;
    int s = nxt.begin()->first, v = s;
    do {
        cyc.push_back(v);
        auto it = nxt.find(v);
        if (it == nxt.end() || (int)cyc.size() > count) return std::nullopt;
        v = it->second;
    } while (v != s);
    if ((int)cyc.size() != count) return std::nullopt;
    return cyc;
}

namespace {

struct Candidate {
    std::vector<int> cycle;
    CoastCycle::Kind kind;
};

}  // namespace

CoastResult build_coast_cycles(const MountainStructure& ms, const ShortcutSet& sc, int k) {
    CoastResult res;
    const auto& g = ms.g;
    int h = k + 1;
    int nc = ms.components();
    int nx = (int)ms.seps.size();
    auto fc = classify_shortcut_free(ms, sc, k, h);
    auto cidx = crest_index(g.n, ms.crests);
    // component of each crest
    std::vector<int> crest_comp(ms.crests.size(), -1);
    for (int c = 0; c < nc; ++c)
        if (ms.comp_crest[c] >= 0) crest_comp[ms.comp_crest[c]] = c;
    std::vector<int> XC(nc, -1);
    for (int c = 0; c < nc; ++c) {
        int x = ms.enclosed_by[c];
        if (x >= 0 && ms.seps[x].lowpoint_height() >= h) XC[c] = x;
    }
    int top = 2 * k + 1;
    std::vector<char> enclosed(ms.crests.size(), 0);
    std::vector<char> cycle_of_comp_used(nc, 0);

    auto add_cycle = [&](std::vector<int> cyc, CoastCycle::Kind kind, int owner, int seed) {
        CoastCycle cc;
        cc.kind = kind;
        cc.cycle = std::move(cyc);
        cc.owner = owner;
        cc.inner = inner_graph(g, cc.cycle, seed);
        if (!cc.inner.enclosed) res.stats.leaks++;
        std::vector<char> strict(g.n, 0);
        for (int v : cc.inner.strict) strict[v] = 1;
        for (int c = 0; c < (int)ms.crests.size(); ++c) {
            bool in = false;
            for (int v : ms.crests[c].vertices) in |= strict[v] != 0;
            if (!in) continue;
            enclosed[c] = 1;
            if (crest_comp[c] >= 0) cc.m.push_back(crest_comp[c]);
        }
        std::sort(cc.m.begin(), cc.m.end());
        if ((int)cc.cycle.size() > 3 * k - 1) res.stats.too_long++;
        for (int v : cc.cycle)
            if (ms.hm.h[v] < h) {
                res.stats.too_low++;
                break;
            }
        switch (kind) {
            case CoastCycle::min_cut: res.stats.min_cuts++; break;
            case CoastCycle::composed: res.stats.composed++; break;
            case CoastCycle::essential: res.stats.essential++; break;
        }
        res.cycles.push_back(std::move(cc));
        return (int)res.cycles.size() - 1;
    };
    auto essential_cycle = [&](int x) {
        auto w = ms.seps[x].essential_walk();
        w.pop_back();
        return w;
    };
    // best k-long shortcut of x on the side holding c
    auto best_shortcut = [&](int x, int c) -> const PseudoShortcut* {
        int side = side_of(ms, x, c);
        if (side < 0) return nullptr;
        const PseudoShortcut* best = nullptr;
        for (const auto& p : sc.sets[x][side])
            if (p.len <= k && (!best || p.len < best->len)) best = &p;
        return best;
    };
    auto seed_of = [&](int c) { return ms.crests[ms.comp_crest[c]].vertices[0]; };

    bool tall = false;
    for (const auto& cr : ms.crests) tall |= cr.height >= top;
    if (!tall) {
        for (int x = 0; x < nx; ++x) res.kept.push_back(x);
        return res;
    }

    // (1) minimum cuts for the tall crests of free components
    std::vector<CrestSeparator> free_seps;
    std::vector<int> free_ids;
    for (int x = 0; x < nx; ++x)
        if (fc.sep_free[x]) {
            free_seps.push_back(ms.seps[x]);
            free_ids.push_back(x);
        }
    Split sp2 = split_components(g, free_seps);
    auto cv2 = component_vertices(g, sp2);
    MCTree t2 = mountain_connection_tree(g, sp2, free_seps);
    std::vector<char> in_hplus(ms.crests.size(), 0);
    for (int c = 0; c < nc; ++c)
        if (fc.comp_free[c] && ms.comp_crest[c] >= 0) in_hplus[ms.comp_crest[c]] = 1;
    std::vector<char> uncuttable(g.n, 0);
    for (int v = 0; v < g.n; ++v) uncuttable[v] = ms.hm.h[v] >= top;
    for (int cr = 0; cr < (int)ms.crests.size(); ++cr) {
        if (!in_hplus[cr] || ms.crests[cr].height < top || enclosed[cr]) continue;
        int v0 = ms.crests[cr].vertices[0];
        int c2 = -1;
        for (int i = 0; i < g.deg(v0) && c2 < 0; ++i) c2 = sp2.face_comp[g.face[g.off[v0] + i]];
        if (c2 < 0) {
            res.ok = false;
            res.error = "tall crest on the coast";
            return res;
        }
        std::vector<char> region(g.n, 0);
        for (int v : cv2[c2]) region[v] = 1;
        std::vector<int> attach;
        for (auto [nb, y] : t2.adj[c2]) {
            (void)nb;
            for (int v : free_seps[y].vertices())
                if (region[v]) attach.push_back(v);
        }
        auto cyc = h_minimal_coast_separator(g, ms.hm, ms.crests[cr].vertices, h, k, region, attach,
                                             uncuttable);
        if (!cyc) {
            res.ok = false;
            res.error = "k too small: no coast separator of size <= k";
            return res;
        }
        add_cycle(*cyc, CoastCycle::min_cut, crest_comp[cr], v0);
    }

    // (2) forest of the remaining crests
    std::vector<char> hminus(ms.crests.size(), 0);
    for (int cr = 0; cr < (int)ms.crests.size(); ++cr) hminus[cr] = !enclosed[cr] && !in_hplus[cr];
    std::vector<char> node(nc, 0);
    for (int c = 0; c < nc; ++c) node[c] = ms.comp_crest[c] >= 0 && hminus[ms.comp_crest[c]];
    std::vector<std::vector<std::pair<int, int>>> fadj(nc);
    for (int x = 0; x < nx; ++x) {
        int a = ms.mct.ends[x][0], b = ms.mct.ends[x][1];
        if (a < 0 || b < 0 || !node[a] || !node[b] || fc.sep_free[x]) continue;
        fadj[a].push_back({b, x});
        fadj[b].push_back({a, x});
    }
    // (a)-(c)
    std::vector<char> marked(nc, 0), inW(nc, 0);
    std::vector<int> out(nc, -1), cnt(nc, 0);
    std::vector<std::optional<Candidate>> PH(nc);
    std::vector<int> q;
    for (int c = 0; c < nc; ++c) {
        if (!node[c]) continue;
        inW[c] = 1;
        cnt[c] = (int)fadj[c].size();
        if (cnt[c] == 1) q.push_back(c);
    }
    for (size_t qi = 0; qi < q.size(); ++qi) {
        int c = q[qi];
        if (!inW[c] || cnt[c] != 1 || marked[c]) continue;
        inW[c] = 0;
        int c1 = -1, x = -1;
        for (auto [nb, y] : fadj[c])
            if (!marked[nb]) c1 = nb, x = y;
        if (c1 < 0) continue;
        if (XC[c] >= 0) {
            PH[c] = Candidate{essential_cycle(XC[c]), CoastCycle::essential};
        } else if (auto p = best_shortcut(x, c)) {
            PH[c] = Candidate{composed_cycle(ms.seps[x], *p), CoastCycle::composed};
        } else {
            continue;
        }
        marked[c] = 1;
        out[c] = c1;
        for (auto [nb, y] : fadj[c]) {
            (void)y;
            if (--cnt[nb] == 1 && inW[nb]) q.push_back(nb);
        }
    }
    for (int c = 0; c < nc; ++c) {
        if (!node[c] || marked[c]) continue;
        if (XC[c] >= 0) {
            res.stats.never_case++;
            PH[c] = Candidate{essential_cycle(XC[c]), CoastCycle::essential};
            continue;
        }
        const PseudoShortcut* best = nullptr;
        int bx = -1;
        for (auto [nb, y] : ms.mct.adj[c]) {
            (void)nb;
            auto p = best_shortcut(y, c);
            if (p && (!best || p->len < best->len)) best = p, bx = y;
        }
        if (!best) {
            res.ok = false;
            res.error = "k too small: crest without an enclosing cycle";
            return res;
        }
        PH[c] = Candidate{composed_cycle(ms.seps[bx], *best), CoastCycle::composed};
    }
    // (d)/(e) per intree
    std::vector<std::vector<int>> kids(nc);
    for (int c = 0; c < nc; ++c)
        if (node[c] && out[c] >= 0) kids[out[c]].push_back(c);
    std::vector<char> alive(nc, 0);
    for (int c = 0; c < nc; ++c) alive[c] = node[c];
    auto use = [&](int c) {
        int id = add_cycle(PH[c]->cycle, PH[c]->kind, c, seed_of(c));
        bool self = false;
        for (int m : res.cycles[id].m) {
            if (m == c) self = true;
            alive[m] = 0;
        }
        if (!self) {
            res.stats.forced_deletes++;
            alive[c] = 0;
        }
    };
    for (int r = 0; r < nc; ++r) {
        if (!node[r] || out[r] >= 0) continue;
        // deepest node whose enclosing separator points to one of its children
        int best = r, bestd = -1;
        std::vector<std::pair<int, int>> st{{r, 0}};
        while (!st.empty()) {
            auto [c, d] = st.back();
            st.pop_back();
            if (XC[c] >= 0) {
                int x = XC[c];
                int other = ms.mct.ends[x][0] == c ? ms.mct.ends[x][1] : ms.mct.ends[x][0];
                if (other >= 0 && out[other] == c && d > bestd) best = c, bestd = d;
            }
            for (int ch : kids[c]) st.push_back({ch, d + 1});
        }
        if (alive[r] || alive[best]) use(best);
    }
    // (e): repeatedly take a root of the remaining intrees
    std::vector<int> order;
    for (int c = 0; c < nc; ++c)
        if (node[c] && out[c] < 0) order.push_back(c);
    for (size_t i = 0; i < order.size(); ++i) {
        int c = order[i];
        if (alive[c]) use(c);
        for (int ch : kids[c]) order.push_back(ch);
    }

    // property (ii)
    for (int cr = 0; cr < (int)ms.crests.size(); ++cr)
        if (ms.crests[cr].height >= top && !enclosed[cr]) {
            res.ok = false;
            res.error = "k too small: tall crest not enclosed";
            return res;
        }

    // m-set checks
    std::vector<int> owner(nc, -1);
    for (int i = 0; i < (int)res.cycles.size(); ++i) {
        auto& cc = res.cycles[i];
        for (int c : cc.m) {
            if (owner[c] >= 0) res.stats.overlap++;
            owner[c] = i;
        }
        if (!cc.m.empty()) {
            std::vector<char> inm(nc, 0);
            for (int c : cc.m) inm[c] = 1;
            std::vector<int> bq{cc.m[0]};
            std::vector<char> vis(nc, 0);
            vis[cc.m[0]] = 1;
            for (size_t j = 0; j < bq.size(); ++j)
                for (auto [nb, y] : ms.mct.adj[bq[j]]) {
                    (void)y;
                    if (inm[nb] && !vis[nb]) {
                        vis[nb] = 1;
                        bq.push_back(nb);
                    }
                }
            if (bq.size() != cc.m.size()) res.stats.disconnected_m++;
            for (int f : cc.inner.faces) {
                int c = ms.split.face_comp[f];
                if (c < 0 || !inm[c]) {
                    res.stats.stray_faces++;
                    break;
                }
            }
        }
    }
    for (int x = 0; x < nx; ++x) {
        int a = ms.mct.ends[x][0], b = ms.mct.ends[x][1];
        if (a >= 0 && b >= 0 && owner[a] >= 0 && owner[a] == owner[b]) continue;
        res.kept.push_back(x);
    }
    return res;
}

}  // namespace ptd

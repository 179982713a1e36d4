#include "ptd/outer_td.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

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

int index_of(const std::vector<int>& v, int x) {
    auto it = std::find(v.begin(), v.end(), x);
    return it == v.end() ? -1 : (int)(it - v.begin());
}

// Makes some bag contain all of ys by extending each missing vertex along
// the tree path from its nearest occurrence. Starts from hint, or from the
// bag with the largest overlap. Returns the node, or -1 if a vertex occurs
// nowhere.
int patch_cover(TreeDecomposition& td, const std::vector<int>& ys, int hint) {
    int nb = (int)td.bags.size();
    if (nb == 0) return -1;
    auto overlap = [&](int x) {
        int k = 0;
        for (int y : ys) k += std::binary_search(td.bags[x].begin(), td.bags[x].end(), y);
        return k;
    };
    int start = hint;
    if (start < 0) {
        start = 0;
        for (int x = 1; x < nb; ++x)
            if (overlap(x) > overlap(start)) start = x;
    }
    std::vector<std::vector<int>> adj(nb);
    for (auto [a, b] : td.edges) adj[a].push_back(b), adj[b].push_back(a);
    std::vector<int> par(nb, -1), order{start};
    std::vector<char> seen(nb, 0);
    seen[start] = 1;
    for (size_t i = 0; i < order.size(); ++i)
        for (int y : adj[order[i]])
            if (!seen[y]) seen[y] = 1, par[y] = order[i], order.push_back(y);
    for (int y : ys) {
        int hit = -1;
        for (int x : order)
            if (std::binary_search(td.bags[x].begin(), td.bags[x].end(), y)) {
                hit = x;
                break;
            }
        if (hit < 0) return -1;
        for (int x = hit; x != start;) {
            x = par[x];
            auto& b = td.bags[x];
            auto it = std::lower_bound(b.begin(), b.end(), y);
            if (it == b.end() || *it != y) b.insert(it, y);
        }
    }
    return start;
}

std::vector<std::vector<int>> faces_by_component(const Split& sp) {
    std::vector<std::vector<int>> out(sp.count);
    for (int f = 0; f < (int)sp.face_comp.size(); ++f)
        if (sp.face_comp[f] >= 0) out[sp.face_comp[f]].push_back(f);
    return out;
}

// Subgraph on the tails of the marked half-edges, in time linear in its size.
// A face counts as outer if its walk has negative flux, i.e. the outer face
// of g lies on its left.
struct LocalGraph {
    EmbeddedGraph g;
    std::vector<int> old_of;
    std::vector<int>& new_of;  // global size, reset on destruction
    LocalGraph(std::vector<int>& buf) : new_of(buf) {}
    ~LocalGraph() {
        for (int v : old_of) new_of[v] = -1;
    }
};

void build_local(const EmbeddedGraph& g, const FaceFlux* fl, const std::vector<int>& hes,
                 std::vector<char>& mark, LocalGraph& out) {
    for (int h : hes) {
        int v = g.tail[h];
        if (out.new_of[v] < 0) {
            out.new_of[v] = 0;
            out.old_of.push_back(v);
        }
    }
    std::sort(out.old_of.begin(), out.old_of.end());
    for (int i = 0; i < (int)out.old_of.size(); ++i) out.new_of[out.old_of[i]] = i;
    std::vector<std::vector<int>> rot(out.old_of.size());
    for (int i = 0; i < (int)out.old_of.size(); ++i) {
        int v = out.old_of[i];
        for (int j = 0; j < g.deg(v); ++j)
            if (mark[g.off[v] + j]) rot[i].push_back(out.new_of[g.rot[v][j]]);
    }
    for (int h : hes) mark[h] = 0;
    out.g = make_embedded(std::move(rot), {});
    if (!fl) return;
    std::fill(out.g.outer.begin(), out.g.outer.end(), 0);
    bool any = false;
    for (int f = 0; f < (int)out.g.faces.size(); ++f) {
        long long s = 0;
        for (int h : out.g.faces[f])
            s += fl->g[g.he_between(out.old_of[out.g.tail[h]], out.old_of[out.g.head[h]])];
        if (s < 0) out.g.outer[f] = 1, any = true;
    }
    if (!any) {
        int best = 0;
        for (int f = 1; f < (int)out.g.faces.size(); ++f)
            if (out.g.faces[f].size() > out.g.faces[best].size()) best = f;
        if (!out.g.faces.empty()) out.g.outer[best] = 1;
    }
}

}  // namespace

SepPartition make_partition(const EmbeddedGraph& g, const HeightMap& hm, const FaceFlux& fl,
                            std::vector<CrestSeparator> seps) {
    SepPartition p;
    p.g = &g;
    p.hm = &hm;
    p.seps = std::move(seps);
    p.split = split_components(g, p.seps);
    p.mct = mountain_connection_tree(g, p.split, p.seps);
    p.flux = &fl;
    p.comp_faces = faces_by_component(p.split);
    p.enclosed_by.assign(p.split.count, -1);
    for (int i = 0; i < (int)p.seps.size(); ++i) {
        int f = enclosed_top_face(g, fl, p.seps[i]);
        if (f < 0) continue;
        int c = p.split.face_comp[f];
        if (c < 0) continue;
        if (p.enclosed_by[c] >= 0) p.conflicts++;
        else p.enclosed_by[c] = i;
    }
    return p;
}

SepPartition make_partition(const MountainStructure& ms) {
    SepPartition p;
    p.g = &ms.g;
    p.hm = &ms.hm;
    p.seps = ms.seps;
    p.split = ms.split;
    p.mct = ms.mct;
    p.flux = &ms.flux;
    p.comp_faces = faces_by_component(p.split);
    p.enclosed_by = ms.enclosed_by;
    p.conflicts = ms.stats.enclose_conflicts;
    return p;
}

DegreeReduced degree_reduce(const EmbeddedGraph& g, const HeightMap& hm) {
    int n = g.n;
    const auto& rot = g.rot;
    const auto& height = hm.h;
    DegreeReduced d;
    d.orig.resize(n);
    std::iota(d.orig.begin(), d.orig.end(), 0);
    d.copies.resize(n);
    std::vector<std::vector<int>> assign(n);
    std::vector<int> start(n, 0);
    int next = n;
    for (int v = 0; v < n; ++v) {
        int deg = (int)rot[v].size();
        d.copies[v] = {v};
        if (deg <= 3) {
            assign[v].assign(deg, v);
            continue;
        }
        // the path of copies goes into the outer face for coast vertices and
        // into a face with a lower vertex otherwise
        int best = -1;
        for (int i = 0; i < deg; ++i) {
            int f = g.face[g.he_between(rot[v][(i + deg - 1) % deg], v)];
            int score = 0;
            if (height[v] <= 1) {
                score = g.outer[f] ? 2 : 0;
            } else if (!g.outer[f]) {
                for (int e : g.faces[f])
                    if (height[g.tail[e]] < height[v]) score = 2;
            }
            int a = height[rot[v][(i + deg - 1) % deg]], b = height[rot[v][i]];
            score = score * 2 + (a <= height[v] && b <= height[v]);
            if (score > best) best = score, start[v] = i;
        }
        int k = deg - 2;
        for (int i = 1; i < k; ++i) {
            d.copies[v].push_back(next++);
            d.orig.push_back(v);
        }
        assign[v].resize(deg);
        for (int t = 0; t < deg; ++t) {
            int ci = t < 2 ? 0 : (t >= deg - 2 ? k - 1 : t - 1);
            assign[v][(start[v] + t) % deg] = d.copies[v][ci];
        }
    }
    d.rot.assign(next, {});
    for (int v = 0; v < n; ++v) {
        int deg = (int)rot[v].size();
        const auto& cp = d.copies[v];
        int k = (int)cp.size();
        for (int t = 0; t < deg; ++t) {
            int i = (start[v] + t) % deg;
            int cv = assign[v][i];
            int ci = (int)(std::find(cp.begin(), cp.end(), cv) - cp.begin());
            auto& r = d.rot[cv];
            if (r.empty() && ci > 0) r.push_back(cp[ci - 1]);
            int u = rot[v][i];
            r.push_back(assign[u][g.pos(u, v)]);
            bool last_of_copy = t + 1 == deg || assign[v][(start[v] + t + 1) % deg] != cv;
            if (last_of_copy && ci + 1 < k) r.push_back(cp[ci + 1]);
        }
    }
    return d;
}

Skeleton up_connected_skeleton(int n, std::vector<std::pair<int, int>> edges,
                               const std::vector<int>& height, const std::vector<int>& priority,
                               std::vector<char> is_virtual) {
    Skeleton s;
    s.n = n;
    s.edges = std::move(edges);
    s.is_virtual = is_virtual.empty() ? std::vector<char>(n, 0) : std::move(is_virtual);
    int m = (int)s.edges.size();
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](int e) {
        auto [u, v] = s.edges[e];
        return std::make_tuple(-std::min(height[u], height[v]), priority.empty() ? 0 : priority[e],
                               std::min(u, v), std::max(u, v));
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
    Dsu d(n);
    s.in_tree.assign(m, 0);
    for (int e : order) s.in_tree[e] = d.unite(s.edges[e].first, s.edges[e].second);
    return s;
}

bool is_up_connected(const Skeleton& s, const std::vector<int>& height) {
    int top = 0;
    for (int v = 0; v < s.n; ++v) top = std::max(top, height[v]);
    std::vector<std::vector<int>> vat(top + 1), eat(top + 1);
    for (int v = 0; v < s.n; ++v)
        if (height[v] >= 1) vat[height[v]].push_back(v);
    for (int e = 0; e < (int)s.edges.size(); ++e) {
        int l = std::min(height[s.edges[e].first], height[s.edges[e].second]);
        if (l >= 1) eat[l].push_back(e);
    }
    Dsu all(s.n), tree(s.n);
    int ca = 0, ct = 0;
    for (int i = top; i >= 1; --i) {
        ca += (int)vat[i].size();
        ct += (int)vat[i].size();
        for (int e : eat[i]) {
            auto [u, v] = s.edges[e];
            if (all.unite(u, v)) --ca;
            if (s.in_tree[e] && tree.unite(u, v)) --ct;
        }
        if (ca != ct) return false;
    }
    return true;
}

StandardTD standard_td(const Skeleton& s) {
    int n = s.n;
    int m = (int)s.edges.size();
    StandardTD out;
    out.edge_node.assign(m, -1);
    std::vector<std::vector<std::pair<int, int>>> tadj(n);
    int nt = 0;
    for (int e = 0; e < m; ++e) {
        if (!s.in_tree[e]) continue;
        out.edge_node[e] = n + nt++;
        tadj[s.edges[e].first].push_back({s.edges[e].second, e});
        tadj[s.edges[e].second].push_back({s.edges[e].first, e});
    }
    auto& td = out.td;
    td.bags.assign(n + nt, {});
    std::vector<int> parent(n, -1), pe(n, -1), depth(n, -1), root(n, -1);
    int first_root = -1;
    for (int r = 0; r < n; ++r) {
        if (depth[r] >= 0) continue;
        if (first_root < 0) first_root = r;
        else td.edges.push_back({first_root, r});
        depth[r] = 0;
        root[r] = r;
        std::vector<int> q{r};
        for (size_t i = 0; i < q.size(); ++i) {
            int v = q[i];
            for (auto [u, e] : tadj[v])
                if (depth[u] < 0) {
                    depth[u] = depth[v] + 1;
                    parent[u] = v;
                    pe[u] = e;
                    root[u] = r;
                    q.push_back(u);
                }
        }
    }
    for (int v = 0; v < n; ++v) td.bags[v].push_back(v);
    for (int e = 0; e < m; ++e) {
        int x = out.edge_node[e];
        if (x < 0) continue;
        auto [a, b] = s.edges[e];
        td.bags[x] = {a, b};
        td.edges.push_back({x, a});
        td.edges.push_back({x, b});
    }
    for (int e = 0; e < m; ++e) {
        if (s.in_tree[e]) continue;
        auto [u, v] = s.edges[e];
        if (root[u] != root[v]) throw std::logic_error("standard_td: edge between tree components");
        int c;
        if (s.is_virtual[u] != s.is_virtual[v]) c = s.is_virtual[u] ? v : u;
        else c = std::min(u, v);
        int a = u, b = v;
        while (a != b) {
            if (depth[a] < depth[b]) std::swap(a, b);
            td.bags[a].push_back(c);
            td.bags[out.edge_node[pe[a]]].push_back(c);
            a = parent[a];
        }
        td.bags[a].push_back(c);
    }
    for (auto& b : td.bags) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    return out;
}

ComponentTD component_td(const SepPartition& P, int c, bool check_up) {
    const auto& g = *P.g;
    const auto& hm = *P.hm;
    ComponentTD out;
    thread_local std::vector<char> ek;
    thread_local std::vector<int> nbuf;
    ek.resize(g.halfedges(), 0);
    nbuf.resize(g.n, -1);
    std::vector<int> hes;
    auto mark = [&](int h) {
        if (ek[h]) return;
        ek[h] = ek[g.twin[h]] = 1;
        hes.push_back(h);
        hes.push_back(g.twin[h]);
    };
    for (int f : P.comp_faces[c])
        for (int h : g.faces[f]) mark(h);
    std::vector<int> sep_ids;
    for (auto [nb, x] : P.mct.adj[c]) {
        (void)nb;
        if (index_of(sep_ids, x) < 0) sep_ids.push_back(x);
    }
    for (int x : sep_ids)
        for (auto [u, v] : P.seps[x].border_edges()) {
            int h = g.he_between(u, v);
            if (h >= 0) mark(h);
        }
    LocalGraph R(nbuf);
    build_local(g, P.flux, hes, ek, R);
    const auto& L = R.g;
    int n0 = L.n;
    for (int v = 0; v < n0; ++v) out.ell = std::max(out.ell, hm.h[R.old_of[v]]);

    // a separator enclosing C: peel off its shared lower path
    int ex = P.enclosed_by[c];
    int shift = 0;
    std::vector<char> dead(n0, 0);
    std::vector<int> stripped;
    if (ex >= 0) {
        const auto& X = P.seps[ex];
        shift = X.lowpoint_height();
        for (int j = X.low_index; j < X.q(); ++j) {
            int v = R.new_of[X.p1[j]];
            if (v >= 0) {
                dead[v] = 1;
                stripped.push_back(X.p1[j]);
            }
        }
    }
    std::vector<std::vector<int>> W = L.rot;
    std::vector<int> wh(n0), worig(n0);
    for (int v = 0; v < n0; ++v) {
        wh[v] = hm.h[R.old_of[v]] - shift;
        worig[v] = v;
    }
    for (int v = 0; v < n0; ++v) {
        if (!dead[v]) continue;
        for (int u : W[v]) {
            auto& r = W[u];
            r.erase(std::remove(r.begin(), r.end(), v), r.end());
        }
        W[v].clear();
    }
    std::vector<std::vector<int>> copies(n0);
    for (int v = 0; v < n0; ++v) copies[v] = {v};
    auto add_vertex = [&](std::vector<int> r, int height, int orig) {
        W.push_back(std::move(r));
        wh.push_back(height);
        worig.push_back(orig);
        int id = (int)W.size() - 1;
        if (orig >= 0) copies[orig].push_back(id);
        return id;
    };
    // the copy of o adjacent to v, or -1
    auto nb_copy = [&](int v, int o) {
        for (int u : W[v])
            if (worig[u] == o) return u;
        return -1;
    };
    auto ins_after = [&](int v, int anchor, int x) {
        int i = anchor < 0 ? -1 : index_of(W[v], anchor);
        if (i < 0) {
            W[v].push_back(x);
            out.nonplanar++;
        } else {
            W[v].insert(W[v].begin() + i + 1, x);
        }
    };
    auto ins_before = [&](int v, int anchor, int x) {
        int i = anchor < 0 ? -1 : index_of(W[v], anchor);
        if (i < 0) {
            W[v].push_back(x);
            out.nonplanar++;
        } else {
            W[v].insert(W[v].begin() + i, x);
        }
    };
    auto replace = [&](int v, int from, int to) {
        int i = index_of(W[v], from);
        if (i >= 0) W[v][i] = to;
    };

    std::vector<int> tops;
    // rungs between two halves of a split vertex stand for that vertex in
    // the bags, which keeps its occurrences connected
    std::vector<int> alias;
    for (int x : sep_ids) {
        const auto& Y = P.seps[x];
        int th = top_halfedge(g, Y);
        bool first = P.split.face_comp[g.face[th]] == c;
        std::vector<int> A, B;
        for (int v : first ? Y.p1 : Y.p2) A.push_back(R.new_of[v]);
        for (int v : first ? Y.p2 : Y.p1) B.push_back(R.new_of[v]);
        int m = Y.q();
        if (x == ex) m = Y.low_index;
        for (int j = 0; j < m; ++j)
            if (A[j] < 0 || B[j] < 0 || dead[A[j]] || dead[B[j]]) {
                m = j;
                break;
            }
        // earlier channels may have split path vertices: follow the copies
        // that are still adjacent along the paths
        if (m > 0) {
            int a0 = -1, b0 = -1;
            for (int t : copies[A[0]]) {
                if (Y.one_top) {
                    bool ok = m < 2 || (nb_copy(t, A[1]) >= 0 && nb_copy(t, B[1]) >= 0);
                    if (ok) a0 = b0 = t;
                } else if (int u = nb_copy(t, B[0]); u >= 0) {
                    a0 = t, b0 = u;
                }
                if (a0 >= 0) break;
            }
            if (a0 < 0) {
                out.nonplanar++;
                m = 0;
            } else {
                A[0] = a0, B[0] = b0;
            }
            for (int j = 1; j < m; ++j) {
                int a = nb_copy(A[j - 1], A[j]), b = nb_copy(B[j - 1], B[j]);
                if (a < 0 || b < 0) {
                    out.nonplanar++;
                    m = j;
                    break;
                }
                A[j] = a, B[j] = b;
            }
        }
        int J = m;
        for (int j = 1; j < m; ++j)
            if (A[j] == B[j]) {
                J = j;
                break;
            }
        if (m <= 0) {
            tops.push_back(-1);
            continue;
        }
        if (x != ex && J >= 1 && J < m) {
            // the far side is enclosed: cut a channel along the shared path
            int upa = A[J - 1], upb = B[J - 1];
            {
                const auto& r = W[A[J]];
                int i = index_of(r, upa);
                if (i < 0 || r[(i + 1) % r.size()] != upb) {
                    out.nonplanar++;
                    J = m;
                }
            }
            for (int j = J; j < m; ++j) {
                int w = A[j];
                int d = (int)W[w].size();
                int ib = index_of(W[w], upb);
                if (ib < 0) {
                    out.nonplanar++;
                    break;
                }
                std::vector<int> seq;
                for (int t = 0; t < d; ++t) seq.push_back(W[w][(ib + t) % d]);
                int down = j + 1 < m ? A[j + 1] : -1;
                int cut = -1;  // B copy keeps seq[0..cut]
                if (down >= 0) {
                    cut = index_of(seq, down);
                } else {
                    // first gap of seq that spans an outer (or stripped)
                    // angle of w in L
                    int ow = worig[w];
                    const auto& lr = L.rot[ow];
                    int dl = (int)lr.size();
                    for (int i = 0; i + 1 < d && cut < 0; ++i) {
                        int p = worig[seq[i]];
                        if (p < 0) continue;
                        int i2 = i + 1;
                        while (i2 < d && worig[seq[i2]] < 0) ++i2;
                        if (i2 == d) break;
                        int q = worig[seq[i2]];
                        int t = index_of(lr, p);
                        for (int s = 0; s < dl && cut < 0; ++s) {
                            int a = lr[(t + s) % dl], b = lr[(t + s + 1) % dl];
                            if (!dead[a] && (L.outer[L.face[L.he_between(a, ow)]] || dead[b])) cut = i;
                            if (b == q) break;
                        }
                    }
                }
                if (cut < 0 || cut + 1 >= d) {
                    out.nonplanar++;
                    break;
                }
                std::vector<int> bl(seq.begin(), seq.begin() + cut + 1);
                std::vector<int> al(seq.begin() + cut + (down >= 0 ? 0 : 1), seq.end());
                int wa = add_vertex(al, wh[w], worig[w]);
                W[w] = bl;
                for (int s : al)
                    if (s != down) replace(s, w, wa);
                if (down >= 0) {
                    auto& dl = W[down];
                    dl.insert(dl.begin() + index_of(dl, w), wa);
                }
                A[j] = wa;
                upa = wa;
                upb = w;
            }
        }
        std::vector<int> xs(m);
        for (int j = 0; j < m; ++j) {
            xs[j] = add_vertex({}, wh[A[j]], -1);
            alias.resize(xs[j] + 1, -1);
            if (A[j] != B[j] && worig[A[j]] == worig[B[j]]) alias[xs[j]] = worig[A[j]];
        }
        for (int j = 0; j < m; ++j) {
            int a = A[j], b = B[j];
            int aa = j > 0 ? A[j - 1] : (a != b ? b : (m > 1 ? B[1] : -1));
            ins_after(a, aa, xs[j]);
            if (b != a) ins_before(b, j > 0 ? B[j - 1] : a, xs[j]);
            auto& r = W[xs[j]];
            if (j > 0) r.push_back(xs[j - 1]);
            if (b != a) r.push_back(b);
            if (j + 1 < m) r.push_back(xs[j + 1]);
            r.push_back(a);
        }
        tops.push_back(xs[0]);
    }
    int nw = (int)W.size();
    for (int v = 0; v < nw; ++v)
        for (int u : W[v])
            if (index_of(W[u], v) < 0) throw std::logic_error("component_td: ladder bookkeeping");
    for (int v = 0; v < nw; ++v) out.virtual_vertices += worig[v] < 0;

    // outer face of the working graph: the face with the most coast (or
    // stripped) angles that do not run along a separator
    std::vector<std::pair<int, int>> border;
    for (int x : sep_ids)
        for (auto [u, v] : P.seps[x].border_edges()) {
            int a = R.new_of[u], b = R.new_of[v];
            if (a >= 0 && b >= 0) border.push_back({std::min(a, b), std::max(a, b)});
        }
    std::sort(border.begin(), border.end());
    std::vector<char> ldead(L.faces.size(), 0);
    for (int f = 0; f < (int)L.faces.size(); ++f)
        for (int e : L.faces[f]) ldead[f] |= dead[L.tail[e]];
    EmbeddedGraph WE = make_embedded(W, {});
    {
        int best = -1;
        std::pair<int, int> bestkey{-1, -1};
        for (int f = 0; f < (int)WE.faces.size(); ++f) {
            int score = 0;
            for (int e : WE.faces[f]) {
                int a = worig[WE.tail[e]], b = worig[WE.head[e]];
                if (a < 0 || b < 0 || a == b) continue;
                int lh = L.he_between(a, b);
                if (lh < 0) continue;
                if (std::binary_search(border.begin(), border.end(),
                                       std::make_pair(std::min(a, b), std::max(a, b))))
                    continue;
                if (L.outer[L.face[lh]] || ldead[L.face[lh]]) ++score;
            }
            std::pair<int, int> key{score, (int)WE.faces[f].size()};
            if (key > bestkey) bestkey = key, best = f;
        }
        std::fill(WE.outer.begin(), WE.outer.end(), 0);
        if (best >= 0) WE.outer[best] = 1;
    }
    auto HM = compute_heights(WE);
    out.local_ell = HM.max_height;
    for (int v = 0; v < nw; ++v) wh[v] = HM.h[v];
    std::vector<int> flev(WE.faces.size(), 0);
    for (int f = 0; f < (int)WE.faces.size(); ++f) {
        if (WE.outer[f]) continue;
        int lo = 1 << 29;
        for (int e : WE.faces[f]) lo = std::min(lo, wh[WE.tail[e]]);
        flev[f] = lo;
    }
    auto inner = [&](int a, int b) {
        if (wh[a] != wh[b]) return true;
        int h = WE.he_between(a, b);
        return flev[WE.face[h]] >= wh[a] && flev[WE.face[WE.twin[h]]] >= wh[a];
    };

    auto dr = degree_reduce(WE, HM);
    int nr = (int)dr.rot.size();
    std::vector<int> hr(nr);
    std::vector<char> virt(nr);
    for (int v = 0; v < nr; ++v) {
        hr[v] = wh[dr.orig[v]];
        virt[v] = worig[dr.orig[v]] < 0;
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<int> prio;
    for (int v = 0; v < nr; ++v)
        for (int u : dr.rot[v]) {
            if (u < v) continue;
            edges.push_back({v, u});
            int a = dr.orig[v], b = dr.orig[u];
            // height changes first, then preferred, inner, outer, and the
            // ladder rungs last
            int p;
            if ((worig[a] < 0) != (worig[b] < 0)) p = 4;
            else if (hr[v] != hr[u]) p = 0;
            else if (a == b || worig[a] < 0) p = 1;
            else p = inner(a, b) ? 2 : 3;
            prio.push_back(p);
        }
    auto sk = up_connected_skeleton(nr, edges, hr, prio, virt);
    if (check_up) out.up_connected = is_up_connected(sk, hr);
    auto st = standard_td(sk);
    auto& td = out.td;
    td.edges = std::move(st.td.edges);
    std::sort(stripped.begin(), stripped.end());
    for (auto& bag : st.td.bags) {
        std::vector<int> nb;
        for (int v : bag) {
            int w = dr.orig[v];
            int o = worig[w] >= 0 ? worig[w] : (w < (int)alias.size() ? alias[w] : -1);
            if (o >= 0) nb.push_back(R.old_of[o]);
        }
        nb.insert(nb.end(), stripped.begin(), stripped.end());
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        td.bags.push_back(std::move(nb));
    }

    auto top_node = [&](int i) {
        for (int e = 0; e < (int)sk.edges.size(); ++e) {
            if (!sk.in_tree[e] || prio[e] != 4) continue;
            auto [u, v] = sk.edges[e];
            if (dr.orig[u] == tops[i] || dr.orig[v] == tops[i]) return st.edge_node[e];
        }
        return -1;
    };
    for (int i = 0; i < (int)sep_ids.size(); ++i) {
        auto yv = P.seps[sep_ids[i]].vertices();
        auto covers = [&](int node) {
            const auto& b = td.bags[node];
            return std::includes(b.begin(), b.end(), yv.begin(), yv.end());
        };
        int found = -1;
        if (tops[i] >= 0) {
            for (int e = 0; e < (int)sk.edges.size() && found < 0; ++e) {
                if (!sk.in_tree[e] || prio[e] != 4) continue;
                auto [u, v] = sk.edges[e];
                if ((dr.orig[u] == tops[i] || dr.orig[v] == tops[i]) && covers(st.edge_node[e]))
                    found = st.edge_node[e];
            }
        }
        for (int node = 0; node < (int)td.bags.size() && found < 0; ++node)
            if (covers(node)) found = node;
        if (found < 0) {
            out.missing++;
            found = patch_cover(td, yv, tops[i] >= 0 ? top_node(i) : -1);
            if (found >= 0) out.patched++;
        }
        out.designated.push_back({sep_ids[i], found});
    }
    return out;
}

}  // namespace ptd

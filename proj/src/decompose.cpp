#include "ptd/decompose.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ptd/coastsep.hpp"
#include "ptd/mountain.hpp"
#include "ptd/outer_td.hpp"
#include "ptd/shortcuts.hpp"

namespace ptd {

PhaseTimes& PhaseTimes::operator+=(const PhaseTimes& o) {
    triangulate += o.triangulate;
    merge += o.merge;
    mountain += o.mountain;
    shortcuts += o.shortcuts;
    coast += o.coast;
    components += o.components;
    stitch += o.stitch;
    total += o.total;
    return *this;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

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

void normalize(std::vector<int>& b) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
}

// appends src to dst and returns the node offset
int append_td(TreeDecomposition& dst, TreeDecomposition src) {
    int off = (int)dst.bags.size();
    for (auto& b : src.bags) dst.bags.push_back(std::move(b));
    for (auto [a, b] : src.edges) dst.edges.push_back({a + off, b + off});
    return off;
}

void merge_stats(DecomposeStats& into, const DecomposeStats& s) {
    into.calls += s.calls;
    into.depth = std::max(into.depth, s.depth);
    into.cycles += s.cycles;
    into.patched += s.patched;
    into.t += s.t;
    if (into.failure.empty()) into.failure = s.failure;
}

struct Context {
    const DecomposeConfig* cfg;
    std::atomic<int> spare{0};  // threads that may still be started

    bool take() {
        int s = spare.load();
        while (s > 0)
            if (spare.compare_exchange_weak(s, s - 1)) return true;
        return false;
    }
    void give() { spare.fetch_add(1); }
};

std::optional<TreeDecomposition> run_level(const EmbeddedGraph& g, int k,
                                           const std::vector<int>& extras, int depth,
                                           Context& ctx, DecomposeStats& st);

struct ChildJob {
    EmbeddedGraph g;
    std::vector<int> old_of;
    std::vector<int> extras;
    std::vector<int> cycle;  // in level ids, to find the attachment bag
    int attach_hint = -1;    // a node whose bag holds the cycle, or -1
};

std::optional<TreeDecomposition> run_level(const EmbeddedGraph& g, int k,
                                           const std::vector<int>& extras, int depth,
                                           Context& ctx, DecomposeStats& st) {
    const auto& cfg = *ctx.cfg;
    st.calls++;
    st.depth = std::max(st.depth, depth);
    if (g.num_edges() == 0) {
        TreeDecomposition td;
        std::vector<int> b = extras;
        for (int v = 0; v < g.n; ++v) b.push_back(v);
        normalize(b);
        td.bags.push_back(b);
        return td;
    }
    if (k <= 0) {
        st.failure = "k too small: graph has edges";
        return std::nullopt;
    }
    if (depth > cfg.max_depth) {
        st.failure = "recursion depth limit";
        return std::nullopt;
    }

    auto t0 = Clock::now();
    auto hm = compute_heights(g);
    auto M = merge_high_regions(g, hm, 2 * k + 1);
    st.t.merge += since(t0);

    t0 = Clock::now();
    auto ms = good_mountain_structure(M.g);
    st.t.mountain += since(t0);

    t0 = Clock::now();
    auto sc = compute_shortcut_sets(ms, k + 1);
    st.t.shortcuts += since(t0);

    t0 = Clock::now();
    auto cr = build_coast_cycles(ms, sc, k);
    st.t.coast += since(t0);
    auto reject = [&](std::string why) -> std::optional<TreeDecomposition> {
        if (cfg.observe) cfg.observe(ms, cr, k, false);
        st.failure = std::move(why);
        return std::nullopt;
    };
    if (!cr.ok) return reject(cr.error);
    if (cr.stats.leaks || cr.stats.stray_faces || cr.stats.overlap || cr.stats.disconnected_m)
        return reject("k too small: coast cycles do not isolate the tall crests");
    if (cfg.enforce_bound && (cr.stats.too_long || cr.stats.too_low))
        return reject("k too small: coast cycle exceeds 3k-1 or dips below k+1");
    if (cfg.observe) cfg.observe(ms, cr, k, true);

    t0 = Clock::now();
    auto P = make_partition(ms);
    int nc = P.components();
    std::vector<ComponentTD> cts(nc);
    for (int c = 0; c < nc; ++c) {
        cts[c] = component_td(P, c);
        st.patched += cts[c].patched;
    }
    st.t.components += since(t0);

    t0 = Clock::now();
    TreeDecomposition td;
    std::vector<int> off(nc + 1, 0);
    for (int c = 0; c < nc; ++c) {
        off[c] = append_td(td, std::move(cts[c].td));
        off[c + 1] = (int)td.bags.size();
    }
    if (td.bags.empty()) td.bags.push_back({});
    auto designated = [&](int c, int x) {
        for (auto [y, node] : cts[c].designated)
            if (y == x) return node;
        return -1;
    };
    Dsu comps(std::max(nc, 1));
    for (int x = 0; x < (int)P.seps.size(); ++x) {
        int a = P.mct.ends[x][0], b = P.mct.ends[x][1];
        if (a < 0 || b < 0 || a == b) continue;
        int na = designated(a, x), nb = designated(b, x);
        if (na < 0 || nb < 0) {
            st.failure = "no bag covers a crest separator";
            return std::nullopt;
        }
        if (comps.unite(a, b)) td.edges.push_back({off[a] + na, off[b] + nb});
    }
    for (int c = 1; c < nc; ++c)
        if (comps.unite(0, c)) td.edges.push_back({off[0], off[c]});

    // flat components: drop what lies strictly inside a cycle, then hang the
    // cycle on every bag of the components it was built for
    std::vector<char> strict(M.g.n, 0);
    for (const auto& cc : cr.cycles)
        for (int v : cc.inner.strict) strict[v] = 1;
    for (auto& b : td.bags) b.erase(std::remove_if(b.begin(), b.end(), [&](int v) { return strict[v] != 0; }), b.end());
    for (const auto& cc : cr.cycles)
        for (int c : cc.m)
            for (int node = off[c]; node < off[c + 1]; ++node)
                td.bags[node].insert(td.bags[node].end(), cc.cycle.begin(), cc.cycle.end());
    for (auto& b : td.bags) {
        for (int& v : b) {
            v = M.old_of[v];
            if (v < 0) throw std::logic_error("decompose: merged vertex outside every cycle");
        }
        b.insert(b.end(), extras.begin(), extras.end());
        normalize(b);
    }
    st.cycles += (int)cr.cycles.size();

    // inner graphs of the cycles, in level ids
    std::vector<ChildJob> jobs;
    for (const auto& cc : cr.cycles) {
        ChildJob job;
        for (int v : cc.cycle) job.cycle.push_back(M.old_of[v]);
        int s = cc.inner.strict.empty() ? -1 : cc.inner.strict[0];
        if (s < 0) continue;
        int seed = M.old_of[s] >= 0 ? M.old_of[s] : M.regions[s - M.first_merged][0];
        auto ig = inner_graph(g, job.cycle, seed);
        if (!ig.enclosed) {
            st.failure = "cycle does not bound its inner graph";
            return std::nullopt;
        }
        std::vector<char> keep(g.n, 0), ek(g.halfedges(), 0);
        for (int v : ig.vertices) keep[v] = 1;
        std::vector<char> inner_face(g.faces.size(), 0);
        for (int f : ig.faces) {
            inner_face[f] = 1;
            for (int h : g.faces[f]) ek[h] = ek[g.twin[h]] = 1;
        }
        auto R = restrict_graph(g, keep, &ek);
        int a = job.cycle[0], b = job.cycle[1];
        int h = g.he_between(a, b);
        if (inner_face[g.face[h]]) std::swap(a, b);
        job.g = make_embedded(R.g.rot, {{R.new_of[a], R.new_of[b]}});
        job.old_of = R.old_of;
        for (int v : job.cycle) job.extras.push_back(R.new_of[v]);
        normalize(job.extras);
        if (!cc.m.empty()) job.attach_hint = off[cc.m[0]];
        jobs.push_back(std::move(job));
    }
    st.t.stitch += since(t0);

    std::vector<std::optional<TreeDecomposition>> subs(jobs.size());
    std::vector<DecomposeStats> sst(jobs.size());
    std::vector<std::future<void>> running;
    std::vector<int> took;
    for (size_t i = 0; i < jobs.size(); ++i) {
        auto work = [&, i] { subs[i] = run_level(jobs[i].g, k, jobs[i].extras, depth + 1, ctx, sst[i]); };
        if (i + 1 < jobs.size() && ctx.take()) {
            running.push_back(std::async(std::launch::async, work));
        } else {
            work();
        }
    }
    for (auto& f : running) {
        f.get();
        ctx.give();
    }
    for (size_t i = 0; i < jobs.size(); ++i) {
        merge_stats(st, sst[i]);
        if (!subs[i]) {
            st.failure = sst[i].failure;
            return std::nullopt;
        }
    }

    t0 = Clock::now();
    for (size_t i = 0; i < jobs.size(); ++i) {
        auto& sub = *subs[i];
        for (auto& b : sub.bags) {
            for (int& v : b) v = jobs[i].old_of[v];
            normalize(b);
        }
        auto cyc = jobs[i].cycle;
        normalize(cyc);
        auto covers = [&](int node) {
            const auto& b = td.bags[node];
            return std::includes(b.begin(), b.end(), cyc.begin(), cyc.end());
        };
        int at = jobs[i].attach_hint;
        if (at < 0 || !covers(at)) {
            at = -1;
            for (int node = 0; node < (int)td.bags.size() && at < 0; ++node)
                if (covers(node)) at = node;
        }
        if (at < 0) {
            st.failure = "no bag holds a coast cycle";
            return std::nullopt;
        }
        int so = append_td(td, std::move(sub));
        td.edges.push_back({at, so});
    }
    st.t.stitch += since(t0);
    return td;
}

std::optional<TreeDecomposition> fixed_k(const EmbeddedGraph& g, int k, Context& ctx,
                                         DecomposeStats& st) {
    st.attempts++;
    auto td = run_level(g, k, {}, 0, ctx, st);
    if (!td) return td;
    st.max_bag_fixed = std::max(st.max_bag_fixed, td->max_bag());
    if (ctx.cfg->enforce_bound && td->max_bag() > 12 * k + 1) {
        st.failure = "k too small: bag exceeds 12k+1";
        return std::nullopt;
    }
    return td;
}

struct BlockResult {
    bool ok = false;
    int k = 0;
    TreeDecomposition td;  // in ids of the block graph, added vertices dropped
    DecomposeStats st;
};

BlockResult solve_block(const EmbeddedGraph& b, int k, Context& ctx) {
    BlockResult r;
    auto t0 = Clock::now();
    auto tri = almost_triangulate(b);
    r.st.t.triangulate += since(t0);
    auto attempt = [&](int kk) {
        DecomposeStats s;
        auto td = fixed_k(tri.g, kk, ctx, s);
        int keep_bag = std::max(r.st.max_bag_fixed, s.max_bag_fixed);
        s.max_bag_fixed = 0;
        merge_stats(r.st, s);
        r.st.attempts += s.attempts;
        r.st.max_bag_fixed = keep_bag;
        return td;
    };
    std::optional<TreeDecomposition> best;
    if (k > 0) {
        best = attempt(k);
        r.k = k;
    } else {
        int lo = 0, hi = 1;
        int cap = std::max(1, tri.g.n);
        for (;;) {
            best = attempt(hi);
            if (best || hi >= cap) break;
            lo = hi;
            hi *= 2;
        }
        while (best && hi - lo > 1) {
            int mid = lo + (hi - lo) / 2;
            auto t = attempt(mid);
            if (t) {
                hi = mid;
                best = std::move(t);
            } else {
                lo = mid;
            }
        }
        r.k = hi;
    }
    if (!best) return r;
    r.st.failure.clear();
    r.ok = true;
    for (auto& bag : best->bags)
        bag.erase(std::remove_if(bag.begin(), bag.end(), [&](int v) { return v >= b.n || tri.added[v]; }), bag.end());
    r.td = std::move(*best);
    return r;
}

}  // namespace

MergeResult merge_high_regions(const EmbeddedGraph& g, const HeightMap& hm, int h) {
    MergeResult m;
    int n = g.n;
    std::vector<int> reg(n, -1);
    for (int s = 0; s < n; ++s) {
        if (hm.h[s] < h || reg[s] >= 0) continue;
        int id = (int)m.regions.size();
        std::vector<int> q{s};
        reg[s] = id;
        for (size_t i = 0; i < q.size(); ++i)
            for (int u : g.rot[q[i]])
                if (hm.h[u] >= h && reg[u] < 0) {
                    reg[u] = id;
                    q.push_back(u);
                }
        std::sort(q.begin(), q.end());
        m.regions.push_back(std::move(q));
    }
    m.new_of.assign(n, -1);
    for (int v = 0; v < n; ++v)
        if (reg[v] < 0) {
            m.new_of[v] = (int)m.old_of.size();
            m.old_of.push_back(v);
        }
    m.first_merged = (int)m.old_of.size();
    if (m.regions.empty()) {
        m.g = g;
        return m;
    }
    int nr = (int)m.regions.size();
    for (int v = 0; v < n; ++v)
        if (reg[v] >= 0) m.new_of[v] = m.first_merged + reg[v];
    for (int i = 0; i < nr; ++i) m.old_of.push_back(-1);

    auto dedupe = [](std::vector<int>& r) {
        std::vector<int> out;
        for (int u : r)
            if (out.empty() || out.back() != u) out.push_back(u);
        while (out.size() > 1 && out.back() == out.front()) out.pop_back();
        r = std::move(out);
    };
    std::vector<std::vector<int>> rot(m.old_of.size());
    for (int v = 0; v < n; ++v) {
        if (reg[v] >= 0) continue;
        auto& r = rot[m.new_of[v]];
        for (int u : g.rot[v]) r.push_back(m.new_of[u]);
        dedupe(r);
    }
    // walk around each region: at r take the outside neighbours clockwise and
    // step over to the next region vertex when one comes up
    for (int id = 0; id < nr; ++id) {
        int r0 = -1, i0 = -1;
        for (int v : m.regions[id]) {
            for (int i = 0; i < g.deg(v) && i0 < 0; ++i)
                if (reg[g.rot[v][i]] != id) r0 = v, i0 = i;
            if (i0 >= 0) break;
        }
        auto& out = rot[m.first_merged + id];
        if (i0 < 0) continue;
        int r = r0, i = i0;
        long long guard = 2LL * g.halfedges() + 4;
        do {
            out.push_back(m.new_of[g.rot[r][i]]);
            int j = (i + 1) % g.deg(r);
            while (reg[g.rot[r][j]] == id) {
                int r2 = g.rot[r][j];
                j = (g.pos(r2, r) + 1) % g.deg(r2);
                r = r2;
                if (--guard < 0) throw std::logic_error("merge_high_regions: boundary walk");
            }
            i = j;
            if (--guard < 0) throw std::logic_error("merge_high_regions: boundary walk");
        } while (!(r == r0 && i == i0));
        dedupe(out);
    }
    std::vector<std::pair<int, int>> hint;
    for (int f = 0; f < (int)g.faces.size(); ++f)
        if (g.outer[f]) {
            int hh = g.faces[f][0];
            hint.push_back({m.new_of[g.tail[hh]], m.new_of[g.head[hh]]});
            break;
        }
    m.g = make_embedded(std::move(rot), hint);
    return m;
}

std::optional<TreeDecomposition> decompose_fixed_k(const EmbeddedGraph& g, int k,
                                                   const DecomposeConfig& cfg,
                                                   DecomposeStats* stats) {
    Context ctx;
    ctx.cfg = &cfg;
    ctx.spare = std::max(0, cfg.jobs - 1);
    DecomposeStats local;
    auto t0 = Clock::now();
    auto td = fixed_k(g, k, ctx, local);
    local.t.total = since(t0);
    local.k = k;
    if (td) local.width = td->width();
    if (stats) *stats = local;
    return td;
}

void compress_td(TreeDecomposition& td) {
    int nb = (int)td.bags.size();
    if (nb <= 1) return;
    std::vector<std::set<int>> adj(nb);
    for (auto [a, b] : td.edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::vector<char> alive(nb, 1);
    auto subset = [&](int a, int b) {
        return std::includes(td.bags[b].begin(), td.bags[b].end(), td.bags[a].begin(), td.bags[a].end());
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < nb; ++a) {
            if (!alive[a]) continue;
            int into = -1;
            for (int b : adj[a])
                if (subset(a, b)) {
                    into = b;
                    break;
                }
            if (into < 0) continue;
            for (int c : adj[a]) {
                adj[c].erase(a);
                if (c != into) {
                    adj[c].insert(into);
                    adj[into].insert(c);
                }
            }
            adj[a].clear();
            alive[a] = 0;
            changed = true;
        }
    }
    std::vector<int> id(nb, -1);
    TreeDecomposition out;
    for (int a = 0; a < nb; ++a)
        if (alive[a]) {
            id[a] = (int)out.bags.size();
            out.bags.push_back(std::move(td.bags[a]));
        }
    for (int a = 0; a < nb; ++a)
        for (int b : adj[a])
            if (a < b) out.edges.push_back({id[a], id[b]});
    td = std::move(out);
}

DecomposeResult decompose(const EmbeddedGraph& g, int k, const DecomposeConfig& cfg) {
    DecomposeResult res;
    auto t_start = Clock::now();
    Context ctx;
    ctx.cfg = &cfg;
    ctx.spare = std::max(0, cfg.jobs - 1);

    struct BlockTask {
        std::vector<int> vertices;  // g ids, sorted
        EmbeddedGraph bg;
        BlockResult r;
    };
    std::vector<std::vector<int>> comp_blocks;  // per component: task ids
    std::vector<std::vector<int>> comp_cuts;
    std::vector<BlockTask> tasks;
    for (auto& comp : connected_components(g)) {
        std::sort(comp.begin(), comp.end());
        std::vector<char> keep(g.n, 0);
        for (int v : comp) keep[v] = 1;
        auto C = restrict_graph(g, keep);
        auto bc = biconnected_components(C.g);
        std::vector<int> ids;
        for (auto& blk : bc.blocks) {
            BlockTask t;
            for (int v : blk) t.vertices.push_back(C.old_of[v]);
            std::sort(t.vertices.begin(), t.vertices.end());
            ids.push_back((int)tasks.size());
            tasks.push_back(std::move(t));
        }
        std::vector<int> cuts;
        for (int v : bc.cut_vertices) cuts.push_back(C.old_of[v]);
        comp_blocks.push_back(std::move(ids));
        comp_cuts.push_back(std::move(cuts));
    }
    res.stats.blocks = (int)tasks.size();

    auto run_task = [&](BlockTask& t) {
        if (t.vertices.size() <= 2) {
            t.r.ok = true;
            t.r.td.bags.push_back(t.vertices);
            return;
        }
        std::vector<char> keep(g.n, 0);
        for (int v : t.vertices) keep[v] = 1;
        auto R = restrict_graph(g, keep);
        t.r = solve_block(R.g, k, ctx);
        for (auto& b : t.r.td.bags) {
            for (int& v : b) v = R.old_of[v];
            normalize(b);
        }
    };
    {
        std::vector<std::future<void>> running;
        for (size_t i = 0; i < tasks.size(); ++i) {
            if (tasks[i].vertices.size() > 2 && i + 1 < tasks.size() && ctx.take()) {
                running.push_back(std::async(std::launch::async, [&, i] { run_task(tasks[i]); }));
            } else {
                run_task(tasks[i]);
            }
        }
        for (auto& f : running) {
            f.get();
            ctx.give();
        }
    }

    res.ok = true;
    for (auto& t : tasks) {
        merge_stats(res.stats, t.r.st);
        res.stats.attempts += t.r.st.attempts;
        res.stats.max_bag_fixed = std::max(res.stats.max_bag_fixed, t.r.st.max_bag_fixed);
        if (!t.r.ok) {
            res.ok = false;
            if (res.stats.failure.empty() || res.stats.failure.rfind("k too small", 0) != 0)
                res.stats.failure = t.r.st.failure.empty() ? "k too small" : t.r.st.failure;
        }
        res.stats.k = std::max(res.stats.k, t.r.k);
    }
    if (!res.ok) {
        res.stats.t.total = since(t_start);
        return res;
    }
    res.stats.failure.clear();

    auto& td = res.td;
    std::vector<int> first_node;  // per component
    for (size_t c = 0; c < comp_blocks.size(); ++c) {
        std::vector<int> off;
        for (int id : comp_blocks[c]) off.push_back(append_td(td, std::move(tasks[id].r.td)));
        first_node.push_back(off.empty() ? -1 : off[0]);
        for (int cut : comp_cuts[c]) {
            int hub = -1;
            for (size_t i = 0; i < comp_blocks[c].size(); ++i) {
                const auto& vs = tasks[comp_blocks[c][i]].vertices;
                if (!std::binary_search(vs.begin(), vs.end(), cut)) continue;
                int end = i + 1 < off.size() ? off[i + 1] : (int)td.bags.size();
                int node = -1;
                for (int x = off[i]; x < end && node < 0; ++x)
                    if (std::binary_search(td.bags[x].begin(), td.bags[x].end(), cut)) node = x;
                if (node < 0) continue;
                if (hub < 0) hub = node;
                else td.edges.push_back({hub, node});
            }
        }
    }
    for (size_t c = 1; c < first_node.size(); ++c)
        if (first_node[c] >= 0 && first_node[0] >= 0) td.edges.push_back({first_node[0], first_node[c]});
    if (td.bags.empty()) td.bags.push_back({});
    if (cfg.compress) compress_td(td);
    res.stats.width = td.width();
    res.stats.t.total = since(t_start);
    return res;
}

}  // namespace ptd

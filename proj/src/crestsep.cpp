#include "ptd/crestsep.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptd {

DownInfo compute_down_info(const EmbeddedGraph& g, const HeightMap& hm) {
    DownInfo di;
    di.down.assign(g.n, -1);
    di.reps.assign(g.n, {});
    for (int u = 0; u < g.n; ++u) {
        int q = hm.h[u];
        if (q < 2) continue;
        int d = g.deg(u);
        for (int w : g.rot[u])
            if (hm.h[w] == q - 1 && (di.down[u] < 0 || w < di.down[u])) di.down[u] = w;
        if (di.down[u] < 0) throw std::runtime_error("not almost triangulated");
        // start scanning right after a higher-or-equal neighbour so arcs do not wrap
        int start = -1;
        for (int i = 0; i < d; ++i)
            if (hm.h[g.rot[u][i]] != q - 1) {
                start = i;
                break;
            }
        if (start < 0) {
            di.reps[u].push_back(di.down[u]);
            continue;
        }
        int best = -1;
        for (int s = 1; s <= d; ++s) {
            int w = g.rot[u][(start + s) % d];
            if (hm.h[w] == q - 1) {
                if (best < 0 || w < best) best = w;
            } else if (best >= 0) {
                di.reps[u].push_back(best);
                best = -1;
            }
        }
        if (best >= 0) di.reps[u].push_back(best);
    }
    return di;
}

std::vector<int> down_path(const DownInfo& di, int v) {
    std::vector<int> p{v};
    while (di.down[p.back()] >= 0) p.push_back(di.down[p.back()]);
    return p;
}

std::vector<int> CrestSeparator::top_vertices() const {
    if (one_top) return {p1[0]};
    return {p1[0], p2[0]};
}

std::vector<int> CrestSeparator::vertices() const {
    std::vector<int> v(p1);
    v.insert(v.end(), p2.begin(), p2.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<std::pair<int, int>> CrestSeparator::border_edges() const {
    std::vector<std::pair<int, int>> e;
    auto add = [&](int a, int b) { e.push_back({std::min(a, b), std::max(a, b)}); };
    if (!one_top) add(p1[0], p2[0]);
    for (int i = 0; i + 1 < q(); ++i) {
        add(p1[i], p1[i + 1]);
        add(p2[i], p2[i + 1]);
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
}

std::vector<int> CrestSeparator::essential_walk() const {
    int J = has_lowpoint() ? low_index : q() - 1;
    std::vector<int> w;
    for (int i = J; i >= 0; --i) w.push_back(p1[i]);
    for (int i = one_top ? 1 : 0; i <= J; ++i) w.push_back(p2[i]);
    return w;
}

bool CrestSeparator::on_essential(int v) const {
    int J = has_lowpoint() ? low_index : q() - 1;
    for (int i = 0; i <= J; ++i)
        if (p1[i] == v || p2[i] == v) return true;
    return false;
}

namespace {

int index_in(const std::vector<int>& p, int v) {
    for (int i = 0; i < (int)p.size(); ++i)
        if (p[i] == v) return i;
    return -1;
}

}  // namespace

int CrestSeparator::crest_len(int s, int t) const {
    int a1 = index_in(p1, s), a2 = index_in(p2, s);
    int b1 = index_in(p1, t), b2 = index_in(p2, t);
    int c = one_top ? 0 : 1;
    int best = -1;
    auto take = [&](int x) {
        if (best < 0 || x < best) best = x;
    };
    if (a1 >= 0 && b1 >= 0) take(std::abs(a1 - b1));
    if (a2 >= 0 && b2 >= 0) take(std::abs(a2 - b2));
    if (a1 >= 0 && b2 >= 0) take(a1 + b2 + c);
    if (a2 >= 0 && b1 >= 0) take(a2 + b1 + c);
    return best;
}

std::vector<int> CrestSeparator::crest_path(int s, int t) const {
    int a1 = index_in(p1, s), a2 = index_in(p2, s);
    int b1 = index_in(p1, t), b2 = index_in(p2, t);
    int len = crest_len(s, t);
    if (len < 0) throw std::invalid_argument("crest_path: vertex not on the separator");
    int c = one_top ? 0 : 1;
    std::vector<int> path;
    auto sub = [&](const std::vector<int>& p, int i, int j) {
        int st = i < j ? 1 : -1;
        for (int x = i;; x += st) {
            path.push_back(p[x]);
            if (x == j) break;
        }
    };
    if (a1 >= 0 && b1 >= 0 && std::abs(a1 - b1) == len) {
        sub(p1, a1, b1);
    } else if (a2 >= 0 && b2 >= 0 && std::abs(a2 - b2) == len) {
        sub(p2, a2, b2);
    } else if (a1 >= 0 && b2 >= 0 && a1 + b2 + c == len) {
        sub(p1, a1, 0);
        if (one_top) path.pop_back();
        sub(p2, 0, b2);
    } else {
        sub(p2, a2, 0);
        if (one_top) path.pop_back();
        sub(p1, 0, b1);
    }
    return path;
}

std::vector<CrestSeparator> enumerate_crest_separators(const EmbeddedGraph& g, const HeightMap& hm,
                                                       const DownInfo& di) {
    std::vector<CrestSeparator> out;
    auto finish = [&](CrestSeparator x) {
        x.height = hm.h[x.p1[0]];
        for (int i = 1; i < x.q(); ++i)
            if (x.p1[i] == x.p2[i]) {
                x.low_index = i;
                break;
            }
        int h = g.he_between(x.top_u(), x.top_v());
        x.coast_edge = g.is_outer_he(h) || g.is_outer_he(g.twin[h]);
        out.push_back(std::move(x));
    };
    for (int u = 0; u < g.n; ++u) {
        int q = hm.h[u];
        for (int v : g.rot[u]) {
            if (v <= u || hm.h[v] != q) continue;
            CrestSeparator x;
            x.p1 = down_path(di, u);
            x.p2 = down_path(di, v);
            finish(std::move(x));
        }
        if (q < 2) continue;
        for (int v : di.reps[u]) {
            if (v == di.down[u]) continue;
            CrestSeparator x;
            x.one_top = true;
            x.p1 = down_path(di, u);
            x.p2 = {u};
            auto rest = down_path(di, v);
            x.p2.insert(x.p2.end(), rest.begin(), rest.end());
            finish(std::move(x));
        }
    }
    return out;
}

}  // namespace ptd

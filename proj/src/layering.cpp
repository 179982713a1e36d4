#include "ptd/layering.hpp"

#include <algorithm>

namespace ptd {

HeightMap compute_heights(const EmbeddedGraph& g) {
    HeightMap hm;
    hm.h.assign(g.n, 0);
    std::vector<char> opened(g.faces.size(), 0);
    std::vector<int> level;
    auto open = [&](int f, int fh, std::vector<int>& out) {
        opened[f] = 1;
        for (int e : g.faces[f]) {
            int v = g.tail[e];
            if (hm.h[v] == 0) {
                hm.h[v] = fh + 1;
                out.push_back(v);
            }
        }
    };
    for (int f = 0; f < (int)g.faces.size(); ++f)
        if (g.outer[f]) open(f, 0, level);
    for (int v = 0; v < g.n; ++v)
        if (hm.h[v] == 0 && g.deg(v) == 0) hm.h[v] = 1;
    int cur = 1;
    while (!level.empty()) {
        std::vector<int> nxt;
        for (int v : level)
            for (int i = 0; i < g.deg(v); ++i) {
                int f = g.face[g.off[v] + i];
                if (!opened[f]) open(f, cur, nxt);
            }
        level.swap(nxt);
        ++cur;
    }
    for (int v = 0; v < g.n; ++v) hm.max_height = std::max(hm.max_height, hm.h[v]);
    return hm;
}

std::vector<Crest> find_crests(const EmbeddedGraph& g, const HeightMap& hm) {
    std::vector<Crest> out;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        bool top = true;
        for (size_t i = 0; i < comp.size(); ++i) {
            int v = comp[i];
            for (int u : g.rot[v]) {
                if (hm.h[u] > hm.h[v]) top = false;
                if (hm.h[u] == hm.h[v] && !seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
            }
        }
        if (!top) continue;
        std::sort(comp.begin(), comp.end());
        out.push_back({std::move(comp), hm.h[s]});
    }
    return out;
}

std::vector<int> crest_index(int n, const std::vector<Crest>& crests) {
    std::vector<int> idx(n, -1);
    for (int c = 0; c < (int)crests.size(); ++c)
        for (int v : crests[c].vertices) idx[v] = c;
    return idx;
}

bool is_mountain(const EmbeddedGraph& g, const HeightMap& hm) {
    return find_crests(g, hm).size() == 1;
}

}  // namespace ptd

#include "ptd/gen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ptd {

namespace {

// Cell-mask grid. Vertices are corners of present cells; rotation follows the
// fixed clockwise direction order N, NE, E, S, SW, W.
EmbeddedGraph masked_grid(int R, int C, const std::vector<std::vector<char>>& cell, bool tri) {
    // vertex grid is (R+1) x (C+1)
    int VR = R + 1, VC = C + 1;
    auto cell_at = [&](int i, int j) {
        return i >= 0 && j >= 0 && i < R && j < C && cell[i][j];
    };
    std::vector<int> id(VR * VC, -1);
    int n = 0;
    for (int i = 0; i < VR; ++i)
        for (int j = 0; j < VC; ++j)
            if (cell_at(i - 1, j - 1) || cell_at(i - 1, j) || cell_at(i, j - 1) || cell_at(i, j))
                id[i * VC + j] = n++;
    // edge present if some adjacent cell is present
    auto horiz = [&](int i, int j) { return cell_at(i - 1, j) || cell_at(i, j); };  // (i,j)-(i,j+1)
    auto vert = [&](int i, int j) { return cell_at(i, j - 1) || cell_at(i, j); };   // (i,j)-(i+1,j)
    std::vector<std::vector<int>> rot(n);
    int top = -1, top_e = -1;
    for (int i = 0; i < VR; ++i)
        for (int j = 0; j < VC; ++j) {
            int v = id[i * VC + j];
            if (v < 0) continue;
            auto& r = rot[v];
            if (i > 0 && vert(i - 1, j)) r.push_back(id[(i - 1) * VC + j]);
            if (tri && cell_at(i - 1, j)) r.push_back(id[(i - 1) * VC + j + 1]);
            if (j + 1 < VC && horiz(i, j)) r.push_back(id[i * VC + j + 1]);
            if (i + 1 < VR && vert(i, j)) r.push_back(id[(i + 1) * VC + j]);
            if (tri && cell_at(i, j - 1)) r.push_back(id[(i + 1) * VC + j - 1]);
            if (j > 0 && horiz(i, j - 1)) r.push_back(id[i * VC + j - 1]);
            if (top < 0 && j + 1 < VC && horiz(i, j)) {
                top = v;
                top_e = id[i * VC + j + 1];
            }
        }
    std::vector<std::pair<int, int>> hint;
    if (top >= 0) hint.push_back({top, top_e});
    return make_embedded(std::move(rot), hint);
}

}  // namespace

EmbeddedGraph gen_grid(int rows, int cols, bool triangulate) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs rows, cols >= 1");
    if (rows == 1 || cols == 1) {
        int n = rows * cols;
        std::vector<std::vector<int>> rot(n);
        for (int i = 0; i + 1 < n; ++i) {
            rot[i].push_back(i + 1);
            rot[i + 1].push_back(i);
        }
        return make_embedded(std::move(rot), {});
    }
    std::vector<std::vector<char>> cell(rows - 1, std::vector<char>(cols - 1, 1));
    return masked_grid(rows - 1, cols - 1, cell, triangulate);
}

EmbeddedGraph gen_triangulation(int n, uint64_t seed) {
    if (n < 3) throw std::invalid_argument("triangulation needs n >= 3");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> rot(n);
    rot[0] = {1, 2};
    rot[1] = {2, 0};
    rot[2] = {0, 1};
    // faces as traced triples; (0,2,1) is the outer face
    std::vector<std::array<int, 3>> tris{{0, 1, 2}};
    auto insert_after = [&](int v, int a, int x) {
        auto& r = rot[v];
        auto it = std::find(r.begin(), r.end(), a);
        r.insert(it + 1, x);
    };
    for (int x = 3; x < n; ++x) {
        size_t k = std::uniform_int_distribution<size_t>(0, tris.size() - 1)(rng);
        auto [a, b, c] = tris[k];
        insert_after(b, a, x);
        insert_after(c, b, x);
        insert_after(a, c, x);
        rot[x] = {a, c, b};
        tris[k] = {a, b, x};
        tris.push_back({b, c, x});
        tris.push_back({c, a, x});
    }
    return make_embedded(std::move(rot), {{0, 2}});
}

EmbeddedGraph gen_mountain_chain(int summits, int height, uint64_t seed) {
    if (summits < 1 || height < 2) throw std::invalid_argument("chain needs summits >= 1, height >= 2");
    std::mt19937_64 rng(seed);
    int s = 2 * height - 2;  // cells per side
    int C = summits * s + (summits - 1);
    std::vector<std::vector<char>> cell(s, std::vector<char>(C, 0));
    for (int k = 0; k < summits; ++k) {
        int c0 = k * (s + 1);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) cell[i][c0 + j] = 1;
        if (k + 1 < summits) {
            int r = std::uniform_int_distribution<int>(0, s - 1)(rng);
            cell[r][c0 + s] = 1;
        }
    }
    return masked_grid(s, C, cell, true);
}

EmbeddedGraph gen_rings(const std::vector<int>& sizes, bool center, double keep, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::vector<double> x, y;
    std::vector<std::vector<int>> ring;
    int L = (int)sizes.size();
    for (int r = 0; r < L; ++r) {
        double rad = std::pow(0.3, r);
        double phase = U(rng) * 2 * M_PI / sizes[r];
        ring.emplace_back();
        for (int i = 0; i < sizes[r]; ++i) {
            double a = phase + 2 * M_PI * i / sizes[r];
            ring[r].push_back((int)x.size());
            x.push_back(rad * std::cos(a));
            y.push_back(rad * std::sin(a));
        }
    }
    int n = (int)x.size();
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < L; ++r)
        for (int i = 0; i < sizes[r]; ++i) edges.push_back({ring[r][i], ring[r][(i + 1) % sizes[r]]});
    auto angle = [&](int v) { return std::atan2(y[v], x[v]); };
    for (int r = 0; r + 1 < L; ++r) {
        // zipper: merge both rings by angle and connect each vertex to the
        // nearest earlier vertex of the other ring
        std::vector<std::pair<double, int>> all;
        for (int v : ring[r]) all.push_back({angle(v), v});
        for (int v : ring[r + 1]) all.push_back({angle(v), v});
        std::sort(all.begin(), all.end());
        std::vector<std::pair<int, int>> zip;
        int m = (int)all.size();
        for (int i = 0; i < m; ++i) {
            int a = all[i].second, b = all[(i + 1) % m].second;
            bool ra = a < ring[r + 1][0], rb = b < ring[r + 1][0];
            if (ra != rb) zip.push_back({a, b});
            else {
                // same ring: connect both to the last vertex of the other ring seen before
                for (int j = 1; j < m; ++j) {
                    int c = all[(i - j + m) % m].second;
                    if ((c < ring[r + 1][0]) != ra) {
                        zip.push_back({b, c});
                        break;
                    }
                }
            }
        }
        std::sort(zip.begin(), zip.end());
        zip.erase(std::unique(zip.begin(), zip.end()), zip.end());
        std::shuffle(zip.begin(), zip.end(), rng);
        int kept = 0;
        for (size_t i = 0; i < zip.size(); ++i)
            if (i == 0 || U(rng) < keep) {
                edges.push_back(zip[i]);
                ++kept;
            }
    }
    if (center) {
        int c = n++;
        x.push_back(0);
        y.push_back(0);
        const auto& in = ring.back();
        bool any = false;
        for (size_t i = 0; i < in.size(); ++i)
            if (!any || U(rng) < keep) {
                edges.push_back({c, in[i]});
                any = true;
            }
    }
    std::sort(edges.begin(), edges.end(), [](auto a, auto b) {
        return std::minmax(a.first, a.second) < std::minmax(b.first, b.second);
    });
    std::vector<std::vector<int>> rot(n);
    for (auto [a, b] : edges) {
        if (std::find(rot[a].begin(), rot[a].end(), b) != rot[a].end()) continue;
        rot[a].push_back(b);
        rot[b].push_back(a);
    }
    for (int v = 0; v < n; ++v)
        std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) {
            // clockwise = decreasing angle
            return std::atan2(y[a] - y[v], x[a] - x[v]) > std::atan2(y[b] - y[v], x[b] - x[v]);
        });
    // clockwise rotations trace bounded faces counterclockwise, so the outer
    // face lies left of the clockwise running outer-ring half-edge
    auto g = make_embedded(rot, {});
    int a = ring[0][0], b = ring[0][1];
    int h = g.he_between(a, b);
    double cross = x[a] * y[b] - y[a] * x[b];  // > 0: a->b runs counterclockwise
    int outer_he = cross > 0 ? g.twin[h] : h;
    return make_embedded(std::move(rot), {{g.tail[outer_he], g.head[outer_he]}});
}

EmbeddedGraph thin_edges(const EmbeddedGraph& g, double drop, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    auto e = g.edge_list();
    std::shuffle(e.begin(), e.end(), rng);
    std::vector<int> p(g.n);
    std::iota(p.begin(), p.end(), 0);
    auto find = [&](int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    };
    std::vector<char> keep(g.halfedges(), 0);
    std::vector<std::pair<int, int>> rest;
    for (auto [u, v] : e) {
        if (find(u) != find(v)) {
            p[find(u)] = find(v);
            int h = g.he_between(u, v);
            keep[h] = keep[g.twin[h]] = 1;
        } else {
            rest.push_back({u, v});
        }
    }
    for (auto [u, v] : rest)
        if (U(rng) >= drop) {
            int h = g.he_between(u, v);
            keep[h] = keep[g.twin[h]] = 1;
        }
    std::vector<char> all(g.n, 1);
    return restrict_graph(g, all, &keep).g;
}

}  // namespace ptd

#pragma once

#include <utility>
#include <vector>

#include "ptd/embed.hpp"
#include "ptd/layering.hpp"

namespace ptd {

struct DownInfo {
    std::vector<int> down;               // u↓, -1 on the coast
    std::vector<std::vector<int>> reps;  // one vertex per maximal lower arc around u
};

// Throws std::runtime_error("not almost triangulated") if a vertex of height
// >= 2 has no lower neighbour.
DownInfo compute_down_info(const EmbeddedGraph& g, const HeightMap& hm);

std::vector<int> down_path(const DownInfo& di, int v);

// Two down paths of equal length q. For a separator with one top vertex u,
// p1[0] == p2[0] == u and p2 continues with the representant.
struct CrestSeparator {
    std::vector<int> p1, p2;
    bool one_top = false;
    bool coast_edge = false;  // top edge lies on the outer face
    int height = 0;           // height of the top vertex
    int low_index = -1;       // first i >= 1 with p1[i] == p2[i]

    int q() const { return (int)p1.size(); }
    int top_u() const { return p1[0]; }
    int top_v() const { return one_top ? p2[1] : p2[0]; }
    bool has_lowpoint() const { return low_index >= 0; }
    int lowpoint() const { return low_index >= 0 ? p1[low_index] : -1; }
    int lowpoint_height() const { return low_index >= 0 ? height - low_index : 0; }
    std::vector<int> top_vertices() const;
    std::vector<int> vertices() const;  // sorted, unique
    // border edges as (u,v) pairs, including the top edge
    std::vector<std::pair<int, int>> border_edges() const;
    // Essential boundary as a walk starting at the bottom of p1, climbing to
    // the top and descending p2. With a lowpoint the walk is closed (first and
    // last vertex are the lowpoint).
    std::vector<int> essential_walk() const;
    bool on_essential(int v) const;
    // Length of the crest path between two vertices of p1 ∘ p2, or -1.
    int crest_len(int s, int t) const;
    std::vector<int> crest_path(int s, int t) const;
};

std::vector<CrestSeparator> enumerate_crest_separators(const EmbeddedGraph& g, const HeightMap& hm,
                                                       const DownInfo& di);

}  // namespace ptd

#pragma once

#include <vector>

#include "ptd/embed.hpp"

namespace ptd {

struct HeightMap {
    std::vector<int> h;  // 1 on the coast
    int max_height = 0;
};

struct Crest {
    std::vector<int> vertices;  // sorted
    int height = 0;
};

// Peels the graph face by face: a vertex gets height i+1 as soon as one of its
// faces touches a vertex of height i (outer faces count as height 0).
HeightMap compute_heights(const EmbeddedGraph& g);

std::vector<Crest> find_crests(const EmbeddedGraph& g, const HeightMap& hm);

// crest id per vertex, -1 for non-crest vertices
std::vector<int> crest_index(int n, const std::vector<Crest>& crests);

bool is_mountain(const EmbeddedGraph& g, const HeightMap& hm);

}  // namespace ptd

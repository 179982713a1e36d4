#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ptd/embed.hpp"
#include "ptd/coastsep.hpp"
#include "ptd/layering.hpp"
#include "ptd/td.hpp"

namespace ptd {

struct DecomposeConfig {
    // reject an attempt whose largest bag exceeds 12k+1
    bool enforce_bound = true;
    int max_depth = 256;
    // merge bags into neighbours that contain them
    bool compress = true;
    // worker threads for independent blocks and recursive calls
    int jobs = 1;
    // Sees the structure and cycles of every level call; accepted is false
    // when the call gives up on them. May run on worker threads.
    std::function<void(const MountainStructure&, const CoastResult&, int k, bool accepted)> observe;
};

struct PhaseTimes {
    double triangulate = 0;
    double merge = 0;
    double mountain = 0;
    double shortcuts = 0;
    double coast = 0;
    double components = 0;
    double stitch = 0;
    double total = 0;
    PhaseTimes& operator+=(const PhaseTimes& o);
};

struct DecomposeStats {
    int k = 0;
    int width = -1;
    int depth = 0;     // deepest recursion level reached, 0 = no recursion
    int calls = 0;     // level calls over all attempts
    int attempts = 0;  // decompose_fixed_k runs per block
    int blocks = 0;
    int cycles = 0;    // coast cycles used by the successful runs
    int patched = 0;   // designated bags repaired by path widening
    int max_bag_fixed = 0;
    std::string failure;
    PhaseTimes t;
};

struct MergeResult {
    EmbeddedGraph g;
    std::vector<int> old_of;  // new id -> old id, -1 for merged vertices
    std::vector<int> new_of;  // old id -> new id (merged vertices map to their v_M)
    std::vector<std::vector<int>> regions;  // per merged vertex: old ids, sorted
    int first_merged = 0;                   // merged vertices are first_merged, ...
};

// Contracts every maximal connected set of vertices of height >= h to one
// vertex. Assumes the sets avoid the outer face and are surrounded by
// triangles.
MergeResult merge_high_regions(const EmbeddedGraph& g, const HeightMap& hm, int h);

// One attempt at a fixed k on an almost triangulated biconnected graph.
// Returns nothing if a coast separator could not be found or, with
// enforce_bound, if a bag grew beyond 12k+1.
std::optional<TreeDecomposition> decompose_fixed_k(const EmbeddedGraph& g, int k,
                                                   const DecomposeConfig& cfg = {},
                                                   DecomposeStats* stats = nullptr);

struct DecomposeResult {
    bool ok = false;
    TreeDecomposition td;
    DecomposeStats stats;
};

// Any simple embedded planar graph. k <= 0 searches for the smallest
// successful k per block; otherwise every block is run at exactly k and the
// result fails with "k too small" if one of them does.
DecomposeResult decompose(const EmbeddedGraph& g, int k = 0, const DecomposeConfig& cfg = {});

// Removes bags contained in a neighbour.
void compress_td(TreeDecomposition& td);

}  // namespace ptd

#pragma once

#include <utility>
#include <vector>

#include "ptd/layering.hpp"
#include "ptd/mountain.hpp"
#include "ptd/td.hpp"

namespace ptd {

// A separator set over a fixed embedding and the components it cuts out.
struct SepPartition {
    const EmbeddedGraph* g = nullptr;
    const HeightMap* hm = nullptr;
    std::vector<CrestSeparator> seps;
    Split split;
    MCTree mct;
    const FaceFlux* flux = nullptr;
    std::vector<int> enclosed_by;  // per component, -1 if none
    std::vector<std::vector<int>> comp_faces;
    int conflicts = 0;             // components enclosed by two separators
    int components() const { return split.count; }
};

SepPartition make_partition(const EmbeddedGraph& g, const HeightMap& hm, const FaceFlux& fl,
                            std::vector<CrestSeparator> seps);
SepPartition make_partition(const MountainStructure& ms);

// Replaces every vertex of degree d > 3 by a path of d-2 copies, each taking
// a consecutive run of the rotation. The path lies in the outer face for
// coast vertices and in a face with a lower vertex otherwise. Copy 0 of
// vertex v keeps id v.
struct DegreeReduced {
    std::vector<std::vector<int>> rot;
    std::vector<int> orig;
    std::vector<std::vector<int>> copies;
};
DegreeReduced degree_reduce(const EmbeddedGraph& g, const HeightMap& hm);

struct Skeleton {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<char> in_tree;
    std::vector<char> is_virtual;  // per vertex
};

// Spanning forest built level by level from the top: an edge enters at the
// height of its lower endpoint, and inside a level lower priority goes first.
Skeleton up_connected_skeleton(int n, std::vector<std::pair<int, int>> edges,
                               const std::vector<int>& height, const std::vector<int>& priority,
                               std::vector<char> is_virtual = {});
bool is_up_connected(const Skeleton& s, const std::vector<int>& height);

struct StandardTD {
    TreeDecomposition td;
    std::vector<int> edge_node;  // per skeleton edge, -1 off the tree
};
// Nodes for vertices and tree edges. Every non-tree edge adds one endpoint
// (a non-virtual one if possible) to all nodes of its fundamental path.
StandardTD standard_td(const Skeleton& s);

struct ComponentTD {
    TreeDecomposition td;                         // vertices of the partition's graph
    std::vector<std::pair<int, int>> designated;  // (separator, node)
    int ell = 0;        // largest height among the vertices of ext(C)
    int local_ell = 0;  // largest height of the prepared graph
    int missing = 0;    // adjacent separators without a covering bag
    int patched = 0;    // of those, repaired by widening a tree path
    int nonplanar = 0;  // ladder steps that fell back to a plain insertion
    int virtual_vertices = 0;
    bool up_connected = true;
};

ComponentTD component_td(const SepPartition& p, int c, bool check_up = false);

}  // namespace ptd

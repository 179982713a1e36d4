#pragma once

#include <array>
#include <utility>
#include <vector>

#include "ptd/crestsep.hpp"
#include "ptd/embed.hpp"
#include "ptd/layering.hpp"

namespace ptd {

// Inner faces grouped across edges that lie on no separator of S.
struct Split {
    std::vector<int> face_comp;  // -1 for outer faces
    int count = 0;
};

Split split_components(const EmbeddedGraph& g, const std::vector<CrestSeparator>& S);

// Vertices on the boundary of the faces of each component, sorted.
std::vector<std::vector<int>> component_vertices(const EmbeddedGraph& g, const Split& sp);

struct MCTree {
    // per separator: the components on the left and right of its top half-edge
    std::vector<std::array<int, 2>> ends;
    std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbour, separator)
    bool is_tree = true;
};

MCTree mountain_connection_tree(const EmbeddedGraph& g, const Split& sp,
                                const std::vector<CrestSeparator>& S);

// Half-edge top_u -> top_v, which is the direction of the essential walk.
int top_halfedge(const EmbeddedGraph& g, const CrestSeparator& x);

// For a separator with lowpoint, the face next to the top edge on the side
// enclosed by the essential boundary; -1 without lowpoint.
int enclosed_top_face(const EmbeddedGraph& g, const FaceFlux& fl, const CrestSeparator& x);

struct MountainStats {
    int enumerated = 0;
    int dropped_crest = 0;
    int dropped_coast = 0;
    int merges = 0;
    int delays = 0;
    int non_tree = 0;
    int enclose_conflicts = 0;
};

struct MountainStructure {
    EmbeddedGraph g;
    HeightMap hm;
    DownInfo di;
    FaceFlux flux;
    std::vector<Crest> crests;
    std::vector<CrestSeparator> seps;  // the chosen set S
    Split split;
    MCTree mct;
    std::vector<std::vector<int>> comp_vertices;
    std::vector<int> comp_crest;   // crest inside each component, -1 if none
    std::vector<int> enclosed_by;  // per component: separator of S enclosing it, or -1
    std::vector<int> encloses;     // per separator: component it encloses, or -1
    MountainStats stats;

    int components() const { return split.count; }
};

// Ordering used to pick a largest separator: height, then number of top
// vertices, then the smaller top vertex id wins.
bool larger_sep(const CrestSeparator& a, int ia, const CrestSeparator& b, int ib);

MountainStructure good_mountain_structure(const EmbeddedGraph& g);
// Same, but with heights already known (they must belong to g).
MountainStructure good_mountain_structure(const EmbeddedGraph& g, const HeightMap& hm);

enum class Between { no, weakly, strongly };
Between goes_between(const EmbeddedGraph& g, const CrestSeparator& x, const std::vector<int>& A,
                     const std::vector<int>& B);

}  // namespace ptd

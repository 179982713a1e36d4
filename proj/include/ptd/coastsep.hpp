#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptd/mountain.hpp"
#include "ptd/shortcuts.hpp"

namespace ptd {

struct InnerGraph {
    bool enclosed = false;        // false if the search leaked into an outer face
    std::vector<int> faces;       // inner faces of the cycle
    std::vector<int> vertices;    // cycle plus enclosed vertices, sorted
    std::vector<int> strict;      // enclosed vertices not on the cycle, sorted
};

// Face search from the faces around seed that never crosses a cycle edge.
InnerGraph inner_graph(const EmbeddedGraph& g, const std::vector<int>& cycle, int seed);

// Smallest vertex set of height >= h that separates the sources from every
// vertex of height < h (and from the auxiliary vertex joined to attach),
// closest to the sources. Only vertices with region[v] != 0 take part (all if
// region is empty). Returns the induced cycle, or nothing if more than ell
// vertices are needed or the cut does not bound a single cycle.
std::optional<std::vector<int>> h_minimal_coast_separator(
    const EmbeddedGraph& g, const HeightMap& hm, const std::vector<int>& sources, int h, int ell,
    const std::vector<char>& region = {}, const std::vector<int>& attach = {},
    const std::vector<char>& uncuttable = {});

struct CoastCycle {
    enum Kind { min_cut, composed, essential };
    Kind kind = min_cut;
    std::vector<int> cycle;
    InnerGraph inner;
    std::vector<int> m;  // components whose crest the cycle encloses
    int owner = -1;      // component the cycle was built for
};

struct CoastStats {
    int min_cuts = 0;
    int composed = 0;
    int essential = 0;
    int never_case = 0;      // step (c) with an enclosing separator
    int forced_deletes = 0;  // step (e) roots whose own crest stayed outside
    int leaks = 0;           // cycles that did not enclose their seed
    int overlap = 0;         // components in two m-sets
    int disconnected_m = 0;  // m-sets not connected in the tree
    int stray_faces = 0;     // inner faces outside the m-set components
    int too_long = 0;
    int too_low = 0;
};

struct CoastResult {
    bool ok = true;
    std::string error;
    std::vector<CoastCycle> cycles;
    std::vector<int> kept;  // separators that stay in S after pruning
    CoastStats stats;
};

// Builds the cycle set for a (2k+1)-outerplanar structure with h = k+1 and
// shortcut threshold k.
CoastResult build_coast_cycles(const MountainStructure& ms, const ShortcutSet& sc, int k);

}  // namespace ptd

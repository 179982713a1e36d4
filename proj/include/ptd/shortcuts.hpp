#pragma once

#include <array>
#include <climits>
#include <utility>
#include <vector>

#include "ptd/mountain.hpp"

namespace ptd {

struct ExtComponent {
    std::vector<int> vertices;               // sorted
    std::vector<std::pair<int, int>> edges;  // u < v, sorted
};

// C plus the border edges of every separator of S whose top edge lies in C.
ExtComponent extended_component(const MountainStructure& ms, int c);

struct PseudoShortcut {
    int sep = -1;
    int side = -1;  // index into mct.ends[sep]
    int s = -1, t = -1;
    std::vector<int> path;  // s ... t
    int len = 0;
    long long flux = 0;  // flux of the path s -> t
};

struct ShortcutSet {
    int h_high = 0;
    // sets[x][j]: strict shortcuts of separator x inside the side that holds
    // component mct.ends[x][j], at most one per endpoint pair
    std::vector<std::array<std::vector<PseudoShortcut>, 2>> sets;

    int shortest(int x, int side) const {
        int b = INT_MAX;
        for (const auto& p : sets[x][side]) b = std::min(b, p.len);
        return b;
    }
};

ShortcutSet compute_shortcut_sets(const MountainStructure& ms, int h_high);

struct FreeClass {
    std::vector<char> sep_free;
    std::vector<char> comp_free;
};

FreeClass classify_shortcut_free(const MountainStructure& ms, const ShortcutSet& sc, int ell, int h);

// p followed by the crest path from t back to s, as a closed vertex list
// without repeating the first vertex.
std::vector<int> composed_cycle(const CrestSeparator& x, const PseudoShortcut& p);

// side of separator x that contains component c, or -1
int side_of(const MountainStructure& ms, int x, int c);

}  // namespace ptd

#pragma once

#include <cstdint>
#include <vector>

#include "ptd/embed.hpp"

namespace ptd {

// Grid with row-major ids. With triangulate, each cell gets its SW-NE diagonal.
EmbeddedGraph gen_grid(int rows, int cols, bool triangulate);

// Random stacked triangulation: every new vertex goes into a random inner face.
EmbeddedGraph gen_triangulation(int n, uint64_t seed);

// Square summits of the given height joined left to right by one-cell necks.
EmbeddedGraph gen_mountain_chain(int summits, int height, uint64_t seed);

// Concentric rings (outermost first) joined by a random subset of the zipper
// edges between neighbouring rings; at least one edge per ring pair survives.
// center adds one vertex inside the innermost ring.
EmbeddedGraph gen_rings(const std::vector<int>& sizes, bool center, double keep, uint64_t seed);

// Drops random edges of g while keeping it connected.
EmbeddedGraph thin_edges(const EmbeddedGraph& g, double drop, uint64_t seed);

}  // namespace ptd

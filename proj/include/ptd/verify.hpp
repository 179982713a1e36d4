#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ptd/embed.hpp"
#include "ptd/layering.hpp"
#include "ptd/td.hpp"

namespace ptd {

using EdgeList = std::vector<std::pair<int, int>>;

struct ValidationReport {
    bool tree_ok = true;
    bool vertices_ok = true;
    bool edges_ok = true;
    bool connected_ok = true;
    int width = -1;
    std::vector<std::string> issues;
    bool ok() const { return tree_ok && vertices_ok && edges_ok && connected_ok; }
};

ValidationReport validate_td(int n, const EdgeList& edges, const TreeDecomposition& td);
ValidationReport validate_td(const EmbeddedGraph& g, const TreeDecomposition& td);

// Minimum width over all elimination orderings, by dynamic programming over
// vertex subsets. Throws for n > 15.
int exact_treewidth(int n, const EdgeList& edges);

enum class SepMode { weak, strong };
bool check_separator(int n, const EdgeList& edges, const std::vector<int>& S,
                     const std::vector<int>& A, const std::vector<int>& B, SepMode mode);

// Fewest vertices outside A and B whose removal disconnects A from B;
// -1 if A and B touch or share a vertex.
int min_vertex_cut(int n, const EdgeList& edges, const std::vector<int>& A,
                   const std::vector<int>& B);

// Largest d such that s and t are connected through vertices of height >= d.
int ridge_depth(const EmbeddedGraph& g, const HeightMap& hm, int s, int t);

}  // namespace ptd

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptd/embed.hpp"
#include "ptd/td.hpp"

namespace ptd {

// Vertex ids are 1-indexed in files and 0-indexed everywhere else.

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> comments;  // text after the leading 'c'
};

// "p tw n m" followed by m lines "u v"; lines starting with 'c' are comments.
// Self-loops and parallel edges are format errors.
Graph read_gr(std::istream& in);
void write_gr(std::ostream& out, const Graph& g);
Graph graph_of(const EmbeddedGraph& g);

// "s td bags width+1 n", bag lines "b i v...", then tree edges "i j".
struct TdFile {
    int n = 0;
    TreeDecomposition td;
};
TdFile read_td(std::istream& in);
void write_td(std::ostream& out, const TreeDecomposition& td, int n);

// "r v: u1 u2 ..." per vertex (clockwise), then "outer: v1 v2 ..." per
// connected component with edges.
struct Embedding {
    std::vector<std::vector<int>> rot;
    std::vector<std::vector<int>> outer;
};
Embedding read_emb(std::istream& in, int n);
void write_emb(std::ostream& out, const EmbeddedGraph& g);
Embedding embedding_of(const EmbeddedGraph& g);

// Checks that the rotation lists exactly the edges of gr and builds the
// embedded graph; throws FormatError otherwise.
EmbeddedGraph embed(const Graph& gr, const Embedding& emb);

Graph load_gr(const std::string& path);
TdFile load_td(const std::string& path);
Embedding load_emb(const std::string& path, int n);

}  // namespace ptd

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ptd {

// Rotation system with traced faces. rot[v] lists the neighbours of v in
// clockwise order. Half-edge ids are off[v] + i for the i-th entry of rot[v].
// The face of a half-edge u->v is the one to its left; it continues with
// v -> (clockwise successor of u around v).
struct EmbeddedGraph {
    int n = 0;
    std::vector<std::vector<int>> rot;

    std::vector<int> off;
    std::vector<int> head;
    std::vector<int> tail;
    std::vector<int> twin;
    std::vector<int> face;
    std::vector<std::vector<int>> faces;
    std::vector<char> outer;

    int halfedges() const { return (int)head.size(); }
    int num_edges() const { return (int)head.size() / 2; }
    int deg(int v) const { return (int)rot[v].size(); }
    int he(int v, int i) const { return off[v] + i; }
    int next(int h) const;
    int prev(int h) const;
    // index of u in rot[v], or -1
    int pos(int v, int u) const;
    int he_between(int u, int v) const;
    bool adjacent(int u, int v) const { return pos(u, v) >= 0; }
    bool is_outer_he(int h) const { return outer[face[h]] != 0; }
    std::vector<int> face_vertices(int f) const;
    std::vector<std::pair<int, int>> edge_list() const;

    std::vector<std::vector<std::pair<int, int>>> sorted_;
};

// Builds the derived structure from a rotation system. Each pair (u,v) in
// outer_hint marks the face left of u->v as an outer face. Components without
// a hint get their longest face as outer face.
EmbeddedGraph make_embedded(std::vector<std::vector<int>> rot,
                            const std::vector<std::pair<int, int>>& outer_hint);

// Same, with the outer face given as a vertex walk (either direction).
EmbeddedGraph make_embedded_walk(std::vector<std::vector<int>> rot,
                                 const std::vector<int>& outer_walk);
// One walk per component; components without a walk get their longest face.
EmbeddedGraph make_embedded_walks(std::vector<std::vector<int>> rot,
                                  const std::vector<std::vector<int>>& outer_walks);

// Vertex walks of the outer faces, in face order.
std::vector<std::vector<int>> outer_walks(const EmbeddedGraph& g);

struct EmbeddingReport {
    bool simple = true;
    bool euler = true;
    bool almost_triangulated = true;
    bool biconnected = true;
    bool connected = true;
    int faces = 0;
    std::vector<std::string> errors;
    bool ok() const { return simple && euler && errors.empty(); }
};

// Works on raw rotations so that broken inputs are reported, never thrown.
EmbeddingReport validate_embedding(const std::vector<std::vector<int>>& rot,
                                   const std::vector<int>& outer_walk);
EmbeddingReport validate_embedding(const EmbeddedGraph& g);

struct Restriction {
    EmbeddedGraph g;
    std::vector<int> old_of;  // new id -> old id
    std::vector<int> new_of;  // old id -> new id or -1
    int orphan_components = 0;  // components whose outer face had to be guessed
};

// Keeps the vertices in keep and every edge between them; if edge_keep is
// given, only half-edges h with edge_keep[h] != 0 survive as well.
Restriction restrict_graph(const EmbeddedGraph& g, const std::vector<char>& keep,
                           const std::vector<char>* edge_keep = nullptr);

struct Triangulated {
    EmbeddedGraph g;
    std::vector<char> added;  // per vertex of g, 1 if inserted
};

Triangulated almost_triangulate(const EmbeddedGraph& g);

struct BlockCut {
    std::vector<std::vector<int>> blocks;  // vertex lists (old ids)
    std::vector<int> cut_vertices;
};

BlockCut biconnected_components(const EmbeddedGraph& g);
std::vector<std::vector<int>> connected_components(const EmbeddedGraph& g);

// Signed enclosed-face counter. Summing flux over the half-edges of a closed
// walk gives +#faces on its left side, or minus that count if the walk runs
// the other way. Built from a dual BFS tree rooted at the outer faces.
struct FaceFlux {
    std::vector<long long> g;
    long long walk(const EmbeddedGraph& eg, const std::vector<int>& cyc) const;
};

FaceFlux make_flux(const EmbeddedGraph& g);

}  // namespace ptd

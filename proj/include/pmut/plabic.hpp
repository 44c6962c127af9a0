#pragma once

#include "pmut/young.hpp"

#include "json.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pmut {

enum class Color { boundary, black, white };

// Planar bicolored graph in a disk, stored as a rotation system.
// Edge e carries half-edges 2e (edge[e][0] -> edge[e][1]) and 2e+1 (reverse).
// Consecutive boundary vertices are joined by virtual arcs so that the
// outer face can be traced like any other face.
struct PlabicGraph {
    int n = 0, k = 0;
    std::vector<Color> color;
    std::vector<int> boundary_index;  // 1..n for boundary vertices, 0 otherwise
    std::vector<std::array<int, 2>> edge;
    std::vector<bool> arc;
    std::vector<std::vector<int>> rot;  // clockwise half-edges leaving each vertex

    std::size_t vertex_count() const { return color.size(); }
    std::size_t edge_count() const { return edge.size(); }
    int origin(int h) const { return edge[h >> 1][h & 1]; }
    int target(int h) const { return edge[h >> 1][(h & 1) ^ 1]; }
    static int twin(int h) { return h ^ 1; }
    int cw_after(int h) const;   // next half-edge clockwise around origin(h)
    int ccw_after(int h) const;
    int face_next(int h) const { return cw_after(twin(h)); }
    int boundary_vertex(int i) const;
    bool internal(int v) const { return color[v] != Color::boundary; }

    // Build from internal data; arcs and boundary rotations are added here.
    // rotations[v] lists edge ids clockwise (boundary vertices: their single edge).
    static PlabicGraph from_parts(int n, int k, std::vector<Color> colors, std::vector<int> boundary_index,
                                  std::vector<std::array<int, 2>> edges, const std::vector<std::vector<int>>& rotations);
    void validate() const;
};

struct Face {
    std::vector<int> halfedges;  // boundary walk, face on the left
    bool outer = false;
    bool boundary = false;  // touches the disk boundary
    Subset label;
    YoungDiagram young;
};

struct FaceSet {
    std::vector<Face> faces;
    std::vector<int> face_of;  // per half-edge
    int outer = -1;

    int find(const YoungDiagram& y) const;  // -1 when absent
};

FaceSet trace_faces(const PlabicGraph& g);
// Faces to the left of a walk; the walk must run boundary to boundary.
Bits left_faces(const PlabicGraph& g, const FaceSet& fs, const std::vector<int>& walk);

std::vector<int> trip(const PlabicGraph& g, int i);
std::vector<int> trip_permutation(const PlabicGraph& g);  // one-line notation, 1-based
FaceSet face_labels(const PlabicGraph& g);

PlabicGraph normalize(PlabicGraph g);
bool has_parallel_edges(const PlabicGraph& g);
std::vector<int> square_faces(const PlabicGraph& g, const FaceSet& fs);
PlabicGraph square_move(const PlabicGraph& g, const YoungDiagram& face);

PlabicGraph rectangle_graph(int k, int n);
PlabicGraph dual_graph(const PlabicGraph& g);

using CanonicalKey = std::vector<YoungDiagram>;
CanonicalKey canonical_key(const PlabicGraph& g);
std::string key_string(const CanonicalKey& key);

// Axes of the valuation space: face labels without the empty diagram.
std::vector<YoungDiagram> axes_of(const PlabicGraph& g);

struct Quiver {
    std::vector<YoungDiagram> nodes;  // canonical order
    std::vector<bool> frozen;
    std::vector<std::vector<int>> b;  // b[i][j] = #(i -> j) - #(j -> i)

    std::size_t index_of(const YoungDiagram& y) const;
    std::vector<std::pair<std::size_t, std::size_t>> arrows() const;  // with multiplicity
    std::size_t arrow_count() const { return arrows().size(); }
    std::string to_dot() const;
    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.nodes == b.nodes && a.frozen == b.frozen && a.b == b.b;
    }
};

Quiver quiver_of(const PlabicGraph& g);
// The mutated node keeps its label unless relabel is given; node order is re-sorted.
Quiver quiver_mutate(const Quiver& q, const YoungDiagram& node, std::optional<YoungDiagram> relabel = std::nullopt);

nlohmann::json graph_to_json(const PlabicGraph& g);
PlabicGraph graph_from_json(const nlohmann::json& j);

}  // namespace pmut

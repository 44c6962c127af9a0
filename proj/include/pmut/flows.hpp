#pragma once

#include "pmut/plabic.hpp"

#include <string>
#include <vector>

namespace pmut {

struct PerfectOrientation {
    std::vector<int> dir;          // per edge: the half-edge pointing along the orientation (-1 for arcs)
    std::vector<std::vector<int>> out;  // outgoing half-edges per vertex
    Subset sources;
    bool acyclic = false;
};

PerfectOrientation perfect_orientation(const PlabicGraph& g);
// All acyclic perfect orientations with the given boundary sources; used to check uniqueness.
std::vector<PerfectOrientation> acyclic_orientations(const PlabicGraph& g, const Subset& sources);

// A flow is a list of paths, each a list of half-edges from a source to a sink.
using Path = std::vector<int>;
using Flow = std::vector<Path>;

std::vector<Flow> enumerate_j_flows(const PlabicGraph& g, const PerfectOrientation& o, const Subset& j);
// Exponents over axes_of(g): per path, the faces on its left.
ZVec flow_weight(const PlabicGraph& g, const FaceSet& fs, const std::vector<YoungDiagram>& axes, const Flow& f);
// Sorted multiset of monomials of the flow polynomial.
std::vector<ZVec> flow_polynomial(const PlabicGraph& g, const Subset& j);

std::vector<YoungDiagram> rectangle_axes(int k, int n);
std::vector<YoungDiagram> dual_rectangle_axes(int k, int n);

ZVec valuation_rectangle(int k, int n, const Subset& j);       // over rectangle_axes
ZVec valuation_dual_rectangle(int k, int n, const Subset& j);  // over dual_rectangle_axes

struct ValuationTable {
    int k = 0, n = 0;
    std::vector<YoungDiagram> axes;
    std::vector<Subset> subsets;  // all k-subsets, lexicographic
    std::vector<ZVec> rows;
    std::string graph_key;

    const ZVec& row(const Subset& j) const;
    // Rows reordered to the given column labels.
    std::vector<ZVec> in_order(const std::vector<YoungDiagram>& columns) const;
    std::string csv(const std::vector<YoungDiagram>& columns) const;
    std::vector<RatVec> points() const;
    nlohmann::json to_json() const;
    static ValuationTable from_json(const nlohmann::json& j);
    // Reads what csv() writes; columns become the axes in file order.
    static ValuationTable from_csv(const std::string& text, int n);
};

ValuationTable rectangle_table(int k, int n);
ValuationTable dual_rectangle_table(int k, int n);

}  // namespace pmut

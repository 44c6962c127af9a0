#pragma once

#include "pmut/flows.hpp"
#include "pmut/plabic.hpp"
#include "pmut/polytope.hpp"

#include "json.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pmut {

// Negates the coordinate of `face`.
UnimodularMap epsilon(const std::vector<YoungDiagram>& axes, const YoungDiagram& face);

// A square face and the four faces around it, (a, b, c, d) cyclically with a opposite c.
// Any of the four may be the empty diagram, whose value is 0.
struct SquareContext {
    YoungDiagram face;   // label in G
    YoungDiagram moved;  // label of the same face after the square move
    std::array<YoungDiagram, 4> around;
    std::vector<YoungDiagram> axes;        // axes of G
    std::vector<YoungDiagram> moved_axes;  // axes of G'

    SquareContext rotated(int r) const;  // (a,b,c,d) -> (b,c,d,a) applied r times
    long long value(const ZVec& v, int which) const;  // which in 0..3 = a..d
    Rat value(const RatVec& v, int which) const;
};

SquareContext square_context(const PlabicGraph& g, const YoungDiagram& face);

// a >= b >= c and a >= d >= c.
bool lemma_ordering(const SquareContext& c, const ZVec& v);
// Rotate the tuple until the ordering holds on every row; nullopt if no rotation works.
std::optional<SquareContext> orient_for_rows(const SquareContext& c, const std::vector<ZVec>& rows);

enum class Convention { min, max };

// Maps R^axes -> R^moved_axes.
//   min: v_i -> -v_i + min{v_a + v_c, v_b + v_d}
//   max: v_i -> -v_i + max{v_a + v_c, v_b + v_d}
PLMap trop_map(const SquareContext& c, Convention conv);
RatVec trop_formula(const SquareContext& c, const RatVec& v, Convention conv);
// phi_{sign * w, F} on R^moved_axes with w = -e_moved, F = {e_a + e_c, e_b + e_d}.
PLMap phi_map(const SquareContext& c, int sign);
// phi_{-w,F} o epsilon, the closed form claimed for the max convention.
PLMap trop_map_max_closed_form(const SquareContext& c);

// Wall-crossing maps on R^axes (coordinate of the square face replaced, axes unchanged).
RatVec wall_flip_F(const SquareContext& c, const RatVec& v);
RatVec wall_shift_S(const SquareContext& c, const RatVec& v);
RatVec wall_flip_F_simplified(const SquareContext& c, const RatVec& v);
RatVec wall_shift_S_simplified(const SquareContext& c, const RatVec& v);

// v_node -> -v_node + min{sum over arrows j -> node, sum over arrows node -> j}; labels kept.
// Coordinates are the quiver nodes without the empty diagram.
PLMap generalized_trop_map(const Quiver& q, const YoungDiagram& node);
std::vector<YoungDiagram> quiver_axes(const Quiver& q);

// v_{ixj} -> v_{ixj} - v_{(i-1)x(j-1)} on rectangle_axes(k, n); target coordinates are the
// elements of grid_poset(k, n).
UnimodularMap gt_map_f(int k, int n);
// w_{axb} -> w_{(a-1)xb} + w_{ax(b-1)} - w_{axb} - w_{(a-1)x(b-1)} on dual_rectangle_axes(k, n),
// where w_{axb} is the coordinate of lambda_max minus an a x b block. The value x_{axb}
// lands on poset element (k+1-a) x b.
UnimodularMap fflv_map_g(int k, int n);

struct TransportStep {
    SquareContext context;
    PLMap map;
    PlabicGraph after;
};

// Square moves applied to `start`, one context per step.
std::vector<TransportStep> transport_steps(const PlabicGraph& start, const std::vector<YoungDiagram>& path);
ValuationTable transport_valuations(const PlabicGraph& start, const ValuationTable& table,
                                    const std::vector<YoungDiagram>& path);
QPolytope transport_polytope(const PlabicGraph& start, const QPolytope& p, const std::vector<YoungDiagram>& path);
// Both start from the rectangle graph and its grid valuations.
ValuationTable transport_valuations(int k, int n, const std::vector<YoungDiagram>& path);
QPolytope no_polytope(int k, int n, const std::vector<YoungDiagram>& path);

struct Fingerprint {
    std::size_t ambient_dim = 0, vertex_count = 0, facet_count = 0;
    std::size_t lattice_count_1 = 0, lattice_count_2 = 0;
    Rat volume;
    bool integral = true;
    // Combinatorial refinements, also unimodular invariants.
    std::size_t edge_count = 0;
    std::vector<std::size_t> facet_sizes;  // vertices per facet, sorted

    std::string str() const;
    nlohmann::json to_json() const;
    friend bool operator==(const Fingerprint& a, const Fingerprint& b);
    friend bool operator<(const Fingerprint& a, const Fingerprint& b);
};

Fingerprint fingerprint(const QPolytope& p);

struct MutationGraphOptions {
    bool polytopes = true;
    bool allow_large = false;  // lift the n <= 6 guard
    std::size_t max_nodes = 5000;
};

struct MutationGraph {
    int k = 0, n = 0;
    std::vector<PlabicGraph> graphs;
    std::vector<CanonicalKey> keys;
    std::vector<int> parent;          // BFS tree, -1 at the root
    std::vector<YoungDiagram> via;    // face of the parent moved to reach the node
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j
    std::vector<ValuationTable> tables;
    std::vector<QPolytope> polytopes;
    std::vector<Fingerprint> prints;

    std::size_t size() const { return graphs.size(); }
    std::optional<std::size_t> find(const CanonicalKey& key) const;
    std::vector<YoungDiagram> path_to(std::size_t node) const;
    // Nodes grouped by equal fingerprint, in order of first appearance.
    std::vector<std::vector<std::size_t>> classes() const;
    std::string to_dot() const;
    nlohmann::json to_json(bool with_tables) const;
};

MutationGraph mutation_graph(int k, int n, const MutationGraphOptions& opt = {});

std::vector<YoungDiagram> parse_path(const std::string& s);  // "2;1,1;2"

}  // namespace pmut

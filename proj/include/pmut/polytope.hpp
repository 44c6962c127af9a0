#pragma once

#include "pmut/rational.hpp"

#include <boost/dynamic_bitset.hpp>
#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pmut {

using Bits = boost::dynamic_bitset<>;
using ZVec = std::vector<long long>;
using ZMat = std::vector<ZVec>;

// <normal, x> >= offset. Equations of the affine hull appear as opposite pairs.
struct Halfspace {
    IntVec normal;
    Rat offset;
    bool equation = false;
};

struct QPolytope {
    std::size_t ambient_dim = 0;
    std::size_t affine_dim = 0;
    std::vector<RatVec> vertices;  // sorted, distinct
    std::vector<Halfspace> halfspaces;
    std::vector<std::string> labels;
    std::vector<Bits> incidence;     // per facet (non-equation halfspace), over vertices
    std::vector<std::size_t> chart;  // coordinates projecting the affine hull injectively

    std::size_t facet_count() const { return incidence.size(); }
    bool full_dimensional() const { return affine_dim == ambient_dim; }
    bool contains(const RatVec& x) const;
    bool integral() const;
};

QPolytope convex_hull(std::vector<RatVec> points, std::vector<std::string> labels = {});
// Vertex enumeration from an H-description (bounded input assumed); sorted, distinct.
std::vector<RatVec> vertices_from_halfspaces(std::size_t dim, const std::vector<Halfspace>& hs);

// Euclidean volume; zero when the polytope is not full-dimensional.
Rat volume(const QPolytope& p);
// Volume of the projection of p onto the given coordinates (default: p.chart).
Rat relative_volume(const QPolytope& p);
Rat relative_volume(const QPolytope& p, const std::vector<std::size_t>& chart);

std::vector<ZVec> lattice_points(const QPolytope& p, long long dilation = 1);
std::size_t lattice_count(const QPolytope& p, long long dilation = 1);

std::vector<std::pair<std::size_t, std::size_t>> edges(const QPolytope& p);

struct UnimodularMap {
    ZMat matrix;
    ZVec translation;

    // Throws unless det(matrix) = +-1.
    static UnimodularMap make(ZMat matrix, ZVec translation = {});
    static UnimodularMap identity(std::size_t d);
    RatVec apply(const RatVec& x) const;
    UnimodularMap inverse() const;
    UnimodularMap compose(const UnimodularMap& inner) const;  // this o inner
    long long det() const;
};

QPolytope apply_unimodular(const QPolytope& p, const UnimodularMap& t);

// v -> post(v - min_{u in F} <v,u> w)
struct PLMap {
    ZVec w;
    std::vector<ZVec> factor;
    std::optional<UnimodularMap> post_linear;

    static PLMap make(ZVec w, std::vector<ZVec> factor, std::optional<UnimodularMap> post = std::nullopt);
    RatVec apply(const RatVec& v) const;
    // Piece index (argmin over the factor) used at v; ties go to the first.
    std::size_t piece_of(const RatVec& v) const;
    PLMap inverse() const;
    std::size_t dim() const { return w.size(); }
};

struct PLImage {
    bool convex = false;
    QPolytope image;               // valid when convex
    std::vector<QPolytope> pieces; // images of the full-dimensional cells
    QPolytope hull;                // hull of all piece images
};

PLImage apply_pl_map(const QPolytope& p, const PLMap& m);

QPolytope polar_dual(const QPolytope& p);
bool polytopes_equal(const QPolytope& a, const QPolytope& b);

// Cut p by <h, x> >= c.
std::optional<QPolytope> cut(const QPolytope& p, const RatVec& h, const Rat& c);

nlohmann::json polytope_to_json(const QPolytope& p);
QPolytope polytope_from_json(const nlohmann::json& j);

}  // namespace pmut

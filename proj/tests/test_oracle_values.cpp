// Constants frozen from tools/oracles/oracles.py (networkx / scipy), which does not
// use this library. Regenerate with that script and compare by hand if anything moves.
#include "doctest.h"
#include "pmut/fixtures.hpp"
#include "pmut/flows.hpp"
#include "pmut/mutations.hpp"

#include <map>

using namespace pmut;

namespace {
QPolytope hull_of(const fixtures::Table& t) {
    std::vector<RatVec> pts;
    for (const auto& v : t.values()) {
        RatVec p;
        for (auto x : v) p.emplace_back(static_cast<long>(x));
        pts.push_back(p);
    }
    return convex_hull(pts);
}
}  // namespace

TEST_CASE("oracle: hulls of the printed tables") {
    auto t1 = hull_of(fixtures::table1()), t2 = hull_of(fixtures::table2()), phi = hull_of(fixtures::phi_image_2_6());
    CHECK(t1.vertices.size() == 15);
    CHECK(t2.vertices.size() == 20);
    CHECK(volume(t1) * 40320 == 14);
    CHECK(volume(phi) * 40320 == 28);
    CHECK(volume(t2) * 362880 == 42);
    CHECK(t1.facet_count() == 12);
    CHECK(t2.facet_count() == 14);
    CHECK(lattice_count(t1) == 15);
    CHECK(lattice_count(t2) == 20);
    CHECK(lattice_count(t1, 2) == 105);
    // the dual of the recentred hull has one vertex per facet
    RatVec bary(t1.ambient_dim, Rat(0));
    for (const auto& v : t1.vertices)
        for (std::size_t i = 0; i < v.size(); ++i) bary[i] += v[i];
    std::vector<RatVec> shifted;
    for (auto v : t1.vertices) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= bary[i] / static_cast<long>(t1.vertices.size());
        shifted.push_back(v);
    }
    CHECK(polar_dual(convex_hull(shifted)).vertices.size() == 12);
}

TEST_CASE("oracle: grid posets") {
    auto p26 = grid_poset(2, 6), p36 = grid_poset(3, 6);
    CHECK(p26.covers.size() == 10);
    CHECK(p36.covers.size() == 12);
    CHECK(filters(p26).size() == 15);
    CHECK(antichains(p36).size() == 20);
    // volume = linear extensions / |P|!
    CHECK(volume(order_polytope(p26)) * 40320 == 14);
    CHECK(volume(order_polytope(p36)) * 362880 == 42);
    CHECK(lattice_count(order_polytope(p26), 2) == 105);
    CHECK(lattice_count(order_polytope(p36), 2) == 175);
}

TEST_CASE("oracle: flow counts agree with the grid network") {
    const std::map<std::string, std::vector<int>> counts{
        {"2_4", {1, 1, 1, 1, 2, 1}},
        {"2_5", {1, 1, 1, 1, 1, 2, 3, 1, 2, 1}},
        {"2_6", {1, 1, 1, 1, 1, 1, 2, 3, 4, 1, 2, 3, 1, 2, 1}},
        {"3_6", {1, 1, 1, 1, 1, 2, 3, 1, 2, 1, 1, 3, 6, 2, 5, 3, 1, 3, 3, 1}}};
    for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {2, 6}, {3, 6}}) {
        auto g = rectangle_graph(k, n);
        const auto& want = counts.at(std::to_string(k) + "_" + std::to_string(n));
        auto subsets = all_subsets(k, n);
        REQUIRE(subsets.size() == want.size());
        for (std::size_t i = 0; i < subsets.size(); ++i)
            CHECK(flow_polynomial(g, subsets[i]).size() == static_cast<std::size_t>(want[i]));
    }
}

TEST_CASE("oracle: exchange graphs of Gr(2,n) are flip graphs") {
    for (auto [n, nodes, edges] : {std::tuple{4, 2, 1}, {5, 5, 5}, {6, 14, 21}}) {
        auto mg = mutation_graph(2, n, {false, false, 100});
        CHECK(mg.size() == static_cast<std::size_t>(nodes));
        CHECK(mg.edges.size() == static_cast<std::size_t>(edges));
    }
}

#include "doctest.h"
#include "pmut/polytope.hpp"

using namespace pmut;

namespace {
RatVec rv(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}
}  // namespace

TEST_CASE("unit segment") {
    auto p = convex_hull({rv({0}), rv({1}), rv({1, }), rv({0})});
    CHECK(p.vertices.size() == 2);
    CHECK(volume(p) == 1);
    CHECK(lattice_count(p, 2) == 3);
    CHECK(p.facet_count() == 2);
}

TEST_CASE("unit cube and interior points") {
    std::vector<RatVec> pts;
    for (int m = 0; m < 8; ++m) pts.push_back(rv({m & 1, (m >> 1) & 1, (m >> 2) & 1}));
    pts.push_back({Rat(1, 2), Rat(1, 2), Rat(1, 2)});
    auto p = convex_hull(pts);
    CHECK(p.vertices.size() == 8);
    CHECK(p.facet_count() == 6);
    CHECK(volume(p) == 1);
    CHECK(edges(p).size() == 12);
    CHECK(lattice_count(p, 3) == 64);
}

TEST_CASE("cross polytope and polar dual") {
    std::vector<RatVec> pts;
    for (int i = 0; i < 3; ++i)
        for (int s : {-1, 1}) {
            RatVec v(3, Rat(0));
            v[i] = s;
            pts.push_back(v);
        }
    auto p = convex_hull(pts);
    CHECK(p.facet_count() == 8);
    CHECK(volume(p) == Rat(4, 3));
    auto q = polar_dual(p);
    CHECK(q.vertices.size() == 8);
    CHECK(volume(q) == 8);
}

TEST_CASE("lower dimensional triangle in R^3") {
    auto p = convex_hull({rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
    CHECK(p.affine_dim == 2);
    CHECK(volume(p) == 0);
    CHECK(relative_volume(p) == Rat(1, 2));
    CHECK(p.facet_count() == 3);
    CHECK(lattice_count(p, 2) == 6);
    CHECK(p.contains({Rat(1, 3), Rat(1, 3), Rat(1, 3)}));
    CHECK_FALSE(p.contains(rv({1, 1, 0})));
}

TEST_CASE("pl map folding a square") {
    std::vector<RatVec> pts{rv({-1, 0}), rv({1, 0}), rv({-1, 1}), rv({1, 1})};
    auto p = convex_hull(pts);
    // v -> v - min(v1, -v1) e2 ; pieces meet along v1 = 0
    auto m = PLMap::make({0, 1}, {{1, 0}, {-1, 0}});
    auto img = apply_pl_map(p, m);
    CHECK(img.pieces.size() == 2);
    CHECK_FALSE(img.convex);
    auto inv = m.inverse();
    RatVec x = rv({1, 1});
    CHECK(inv.apply(m.apply(x)) == x);
}

TEST_CASE("unimodular map round trip") {
    auto t = UnimodularMap::make({{1, 1}, {0, 1}}, {2, 0});
    CHECK(t.det() == 1);
    RatVec x{Rat(1, 2), Rat(3)};
    CHECK(t.inverse().apply(t.apply(x)) == x);
    CHECK_THROWS(UnimodularMap::make({{2, 0}, {0, 1}}));
}

TEST_CASE("json round trip") {
    auto p = convex_hull({rv({0, 0}), rv({2, 0}), rv({0, 2})});
    auto j = polytope_to_json(p);
    auto q = polytope_from_json(j);
    CHECK(polytopes_equal(p, q));
    CHECK(j["halfspaces"].size() == 3);
}

TEST_CASE("V to H to V round trip") {
    std::vector<RatVec> cube, tri;
    for (int m = 0; m < 8; ++m) cube.push_back(rv({m & 1, (m >> 1) & 1, (m >> 2) & 1}));
    tri = {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})};
    for (const auto& pts : {cube, tri}) {
        auto p = convex_hull(pts);
        CHECK(vertices_from_halfspaces(p.ambient_dim, p.halfspaces) == p.vertices);
    }
    auto p = convex_hull({rv({0, 0}), rv({2, 0}), rv({0, 3}), {Rat(1, 2), Rat(1, 3)}});
    CHECK(p.vertices.size() == 3);
    CHECK(vertices_from_halfspaces(2, p.halfspaces) == p.vertices);
}

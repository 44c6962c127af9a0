#include "doctest.h"
#include "pmut/fixtures.hpp"
#include "pmut/mutations.hpp"

#include <set>

using namespace pmut;

namespace {
RatVec rv(const ZVec& z) {
    RatVec v;
    for (auto x : z) v.emplace_back(static_cast<long>(x));
    return v;
}

std::size_t pos(const std::vector<YoungDiagram>& axes, const char* s) {
    auto y = YoungDiagram::parse(s);
    return static_cast<std::size_t>(std::find(axes.begin(), axes.end(), y) - axes.begin());
}
}  // namespace

TEST_CASE("epsilon") {
    auto axes = rectangle_axes(2, 6);
    auto e = epsilon(axes, YoungDiagram::parse("2"));
    CHECK(e.det() == -1);
    CHECK(e.compose(e).matrix == UnimodularMap::identity(axes.size()).matrix);
    auto v = e.apply(rv(rectangle_table(2, 6).row({3, 5})));
    CHECK(v[pos(axes, "2")] == 0);
    CHECK_THROWS_AS(epsilon(axes, YoungDiagram::parse("3,1")), std::invalid_argument);
}

TEST_CASE("square context at (2) of the Gr(2,6) rectangle graph") {
    auto c = square_context(rectangle_graph(2, 6), YoungDiagram::parse("2"));
    CHECK(c.moved.str() == "3,2");
    std::set<std::string> opp1{c.around[0].str(), c.around[2].str()}, opp2{c.around[1].str(), c.around[3].str()};
    std::set<std::set<std::string>> pairs{opp1, opp2};
    CHECK(pairs == std::set<std::set<std::string>>{{"1", "3,3"}, {"2,2", "3"}});
    auto m = trop_map(c, Convention::min);
    auto w = m.apply(rv(rectangle_table(2, 6).row({3, 5})));
    CHECK(w[pos(c.moved_axes, "3,2")] == 1);
    CHECK_THROWS_AS(square_context(rectangle_graph(2, 6), YoungDiagram::parse("1,1")), std::invalid_argument);
}

TEST_CASE("tropical mutation point formulas and involution") {
    for (auto [k, n] : {std::pair{2, 6}, {3, 6}}) {
        auto g = rectangle_graph(k, n);
        auto tab = rectangle_table(k, n);
        auto fs = face_labels(g);
        for (int f : square_faces(g, fs)) {
            auto c = square_context(g, fs.faces[f].young);
            auto g2 = square_move(g, c.face);
            auto back = square_context(g2, c.moved);
            CHECK(back.moved == c.face);
            for (const auto& r : tab.rows) {
                auto v = rv(r);
                for (auto conv : {Convention::min, Convention::max})
                    CHECK(trop_map(c, conv).apply(v) == trop_formula(c, v, conv));
                CHECK(trop_map(back, Convention::min).apply(trop_map(c, Convention::min).apply(v)) == v);
                auto phi = phi_map(c, 1), phin = phi_map(c, -1);
                auto u = trop_map(c, Convention::min).apply(v);
                CHECK(phin.apply(phi.apply(u)) == u);
            }
        }
    }
}

TEST_CASE("neighbour ordering and wall-crossing simplifications") {
    for (auto [k, n] : {std::pair{2, 6}, {3, 6}}) {
        auto g = rectangle_graph(k, n);
        auto tab = rectangle_table(k, n);
        auto fs = face_labels(g);
        for (int f : square_faces(g, fs)) {
            auto c = orient_for_rows(square_context(g, fs.faces[f].young), tab.rows);
            REQUIRE(c.has_value());
            for (const auto& r : tab.rows) {
                auto v = rv(r);
                CHECK(wall_flip_F(*c, v) == wall_flip_F_simplified(*c, v));
                CHECK(wall_shift_S(*c, v) == wall_shift_S_simplified(*c, v));
                auto fv = wall_flip_F(*c, v);
                auto mx = trop_map(*c, Convention::max).apply(v);
                CHECK(fv[pos(c->axes, c->face.str().c_str())] == mx[pos(c->moved_axes, c->moved.str().c_str())]);
            }
        }
    }
    // b = d leaves the coordinate alone
    auto c = square_context(rectangle_graph(2, 6), YoungDiagram::parse("2"));
    RatVec v(c.axes.size(), Rat(1));
    CHECK(wall_shift_S_simplified(c, v) == v);
}

TEST_CASE("generalized mutation at (2,2) of Gr(3,6)") {
    auto q = quiver_of(rectangle_graph(3, 6));
    auto node = YoungDiagram::parse("2,2");
    auto m = generalized_trop_map(q, node);
    auto tab = rectangle_table(3, 6);
    auto axes = quiver_axes(q);
    REQUIRE(axes == tab.axes);
    std::vector<long long> col;
    for (const auto& r : tab.rows) col.push_back(m.apply(rv(r))[pos(axes, "2,2")].get_num().get_si());
    CHECK(col == fixtures::generalized_column_3_6());
    auto q2 = quiver_mutate(q, node);
    auto m2 = generalized_trop_map(q2, node);
    for (const auto& r : tab.rows) CHECK(m2.apply(m.apply(rv(r))) == rv(r));
    CHECK_THROWS_AS(generalized_trop_map(q, YoungDiagram::parse("3,3,3")), std::invalid_argument);

    // At a square face it is the ordinary tropical mutation, up to the new label.
    auto c = square_context(rectangle_graph(3, 6), YoungDiagram::parse("2"));
    auto gm = generalized_trop_map(q, c.face);
    for (const auto& r : tab.rows) {
        auto a = gm.apply(rv(r));
        auto b = trop_map(c, Convention::min).apply(rv(r));
        CHECK(a[pos(c.axes, "2")] == b[pos(c.moved_axes, c.moved.str().c_str())]);
    }
}

TEST_CASE("f and g are unimodular identifications") {
    auto f26 = gt_map_f(2, 6);
    CHECK(std::abs(f26.det()) == 1);
    auto ax = rectangle_axes(2, 6);
    auto poset = grid_poset(2, 6);
    auto row = f26.matrix[poset.index_of(YoungDiagram::parse("4,4"))];
    CHECK(row[pos(ax, "4,4")] == 1);
    CHECK(row[pos(ax, "3")] == -1);
    CHECK(std::count(row.begin(), row.end(), 0) == 6);
    auto f36 = gt_map_f(3, 6);
    auto ax3 = rectangle_axes(3, 6);
    auto p3 = grid_poset(3, 6);
    CHECK(f36.matrix[p3.index_of(YoungDiagram::parse("3,3,3"))][pos(ax3, "2,2")] == -1);
    CHECK(f36.matrix[p3.index_of(YoungDiagram::parse("2,2,2"))][pos(ax3, "1,1")] == -1);
    for (auto [k, n] : {std::pair{2, 6}, {3, 6}}) {
        auto p = grid_poset(k, n);
        CHECK(polytopes_equal(apply_unimodular(convex_hull(rectangle_table(k, n).points()), gt_map_f(k, n)), order_polytope(p)));
        CHECK(polytopes_equal(apply_unimodular(convex_hull(dual_rectangle_table(k, n).points()), fflv_map_g(k, n)),
                              chain_polytope(p)));
    }
}

TEST_CASE("g sends dual valuations to antichain indicators") {
    auto g = fflv_map_g(2, 6);
    CHECK(std::abs(g.det()) == 1);
    auto t = dual_rectangle_table(2, 6);
    auto want = fixtures::g_image_2_6().values();
    auto poset = grid_poset(2, 6);
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        auto x = g.apply(rv(t.rows[r]));
        ZVec positional;
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 4; ++b)
                positional.push_back(x[poset.index_of(YoungDiagram::rectangle(3 - a, b))].get_num().get_si());
        CHECK(positional == want[r]);
    }
}

TEST_CASE("transport of valuations and polytopes") {
    auto path = parse_path("2;1,1;2");
    REQUIRE(path.size() == 3);
    CHECK(path[1].str() == "1,1");
    CHECK(transport_valuations(2, 6, {}).rows == rectangle_table(2, 6).rows);
    auto t = transport_valuations(2, 6, {YoungDiagram::parse("2")});
    CHECK(t.row({3, 5})[pos(t.axes, "3,2")] == 1);
    auto there = transport_valuations(3, 6, parse_path("1;1,1"));
    auto g = square_move(square_move(rectangle_graph(3, 6), YoungDiagram::parse("1")), YoungDiagram::parse("1,1"));
    auto fs = face_labels(g);
    std::vector<YoungDiagram> back;
    // undo in reverse order using the new labels
    {
        auto c2 = square_context(square_move(rectangle_graph(3, 6), YoungDiagram::parse("1")), YoungDiagram::parse("1,1"));
        auto c1 = square_context(rectangle_graph(3, 6), YoungDiagram::parse("1"));
        back = {c2.moved, c1.moved};
    }
    auto again = transport_valuations(g, there, back);
    CHECK(again.rows == rectangle_table(3, 6).rows);
    // every transported row is a flow monomial of the target graph
    for (std::size_t i = 0; i < there.subsets.size(); ++i) {
        auto mons = flow_polynomial(g, there.subsets[i]);
        CHECK(std::find(mons.begin(), mons.end(), there.rows[i]) != mons.end());
    }
    auto p = no_polytope(2, 6, {});
    CHECK(volume(p) == Rat(1, 2880));
    auto q = no_polytope(2, 6, parse_path("2;1;3"));
    CHECK(lattice_count(q) == 15);
    CHECK(lattice_count(q, 2) == lattice_count(p, 2));
    CHECK(polytopes_equal(q, convex_hull(transport_valuations(2, 6, parse_path("2;1;3")).points())));
    CHECK_THROWS_AS(transport_valuations(2, 6, parse_path("4,4")), std::invalid_argument);
}

TEST_CASE("fingerprints") {
    auto seg = convex_hull({RatVec{Rat(0)}, RatVec{Rat(1)}});
    auto f = fingerprint(seg);
    CHECK(f.ambient_dim == 1);
    CHECK(f.vertex_count == 2);
    CHECK(f.facet_count == 2);
    CHECK(f.lattice_count_1 == 2);
    CHECK(f.lattice_count_2 == 3);
    CHECK(f.volume == 1);
    CHECK(f.integral);
    auto p = convex_hull(rectangle_table(2, 6).points());
    auto fp = fingerprint(p);
    CHECK(fp.lattice_count_1 == 15);
    CHECK(fp.volume == Rat(1, 2880));
    auto t = UnimodularMap::make(gt_map_f(2, 6).matrix, ZVec{1, 0, -2, 0, 0, 3, 0, 0});
    CHECK(fingerprint(apply_unimodular(p, t)) == fp);
}

TEST_CASE("mutation graphs") {
    auto m24 = mutation_graph(2, 4);
    CHECK(m24.size() == 2);
    CHECK(m24.edges.size() == 1);
    auto m25 = mutation_graph(2, 5, {false, false, 100});
    CHECK(m25.size() == 5);
    CHECK(m25.edges.size() == 5);
    auto m26 = mutation_graph(2, 6, {false, false, 100});
    CHECK(m26.size() == 14);
    CHECK(m26.edges.size() == 21);
    CHECK(m26.find(canonical_key(dual_graph(rectangle_graph(4, 6)))).has_value());
    CHECK_THROWS(mutation_graph(3, 7));
    CHECK_THROWS(mutation_graph(2, 6, {false, false, 5}));
    auto dot = m24.to_dot();
    CHECK(dot.find("n0 -- n1") != std::string::npos);
    auto j = m24.to_json(true);
    CHECK(j["nodes"].size() == 2);
    CHECK(j["nodes"][1]["valuations"]["rows"].size() == 6);
}

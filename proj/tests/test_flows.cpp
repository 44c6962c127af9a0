#include "doctest.h"
#include "pmut/fixtures.hpp"
#include "pmut/flows.hpp"

using namespace pmut;

namespace {
bool table_matches(const fixtures::Table& t, const ValuationTable& v) {
    return v.subsets == t.subsets() && v.in_order(t.column_diagrams()) == t.values();
}

std::vector<ZVec> reindexed(const std::vector<ZVec>& mons, const std::vector<YoungDiagram>& from,
                            const std::vector<YoungDiagram>& to) {
    std::vector<ZVec> out;
    for (const auto& m : mons) {
        ZVec v(to.size(), 0);
        for (std::size_t a = 0; a < to.size(); ++a)
            for (std::size_t b = 0; b < from.size(); ++b)
                if (from[b] == to[a]) v[a] = m[b];
        out.push_back(v);
    }
    return out;
}
}  // namespace

TEST_CASE("perfect orientation of rectangle graphs") {
    for (auto [k, n] : {std::pair{2, 4}, {2, 6}, {3, 6}}) {
        auto g = rectangle_graph(k, n);
        auto o = perfect_orientation(g);
        CHECK(o.acyclic);
        Subset src;
        for (int i = 1; i <= k; ++i) src.push_back(i);
        CHECK(o.sources == src);
        CHECK(acyclic_orientations(g, src).size() == 1);
    }
}

TEST_CASE("flow polynomial of {3,5}") {
    auto g = rectangle_graph(2, 6);
    auto mons = flow_polynomial(g, {3, 5});
    REQUIRE(mons.size() == 2);
    auto cols = fixtures::table1().column_diagrams();
    auto rows = reindexed(mons, axes_of(g), cols);
    std::sort(rows.begin(), rows.end());
    CHECK(rows[0] == ZVec{0, 0, 1, 1, 0, 1, 1, 2});
    CHECK(rows[1] == ZVec{0, 1, 1, 1, 0, 1, 1, 2});
    CHECK(flow_polynomial(g, {1, 2}) == std::vector<ZVec>{ZVec(8, 0)});
}

TEST_CASE("grid valuations reproduce the printed tables") {
    CHECK(table_matches(fixtures::table1(), rectangle_table(2, 6)));
    CHECK(table_matches(fixtures::table2(), rectangle_table(3, 6)));
    CHECK(table_matches(fixtures::table3(), dual_rectangle_table(3, 6)));
    CHECK(table_matches(fixtures::dual_table_2_6(), dual_rectangle_table(2, 6)));
    CHECK(valuation_rectangle(3, 6, {4, 5, 6}) == rectangle_table(3, 6).row({4, 5, 6}));
    CHECK_THROWS_AS(valuation_rectangle(2, 6, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("grid valuation is the minimal flow monomial") {
    for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {2, 6}, {3, 6}}) {
        auto g = rectangle_graph(k, n);
        auto axes = rectangle_axes(k, n);
        REQUIRE(axes_of(g) == axes);
        for (const auto& j : all_subsets(k, n)) {
            auto v = valuation_rectangle(k, n, j);
            auto mons = flow_polynomial(g, j);
            CHECK(std::find(mons.begin(), mons.end(), v) != mons.end());
            for (const auto& m : mons)
                for (std::size_t a = 0; a < v.size(); ++a) CHECK(v[a] <= m[a]);
        }
    }
}

TEST_CASE("dual valuations are flow monomials of the dual graph") {
    for (auto [k, n] : {std::pair{2, 6}, {3, 6}, {4, 6}}) {
        auto g = dual_graph(rectangle_graph(n - k, n));
        REQUIRE(axes_of(g) == dual_rectangle_axes(k, n));
        for (const auto& j : all_subsets(k, n)) {
            auto mons = flow_polynomial(g, j);
            CHECK(std::find(mons.begin(), mons.end(), valuation_dual_rectangle(k, n, j)) != mons.end());
        }
    }
}

TEST_CASE("valuation table serialization") {
    auto t = rectangle_table(2, 6);
    CHECK(t.row({1, 2}) == ZVec(8, 0));
    auto j = ValuationTable::from_json(t.to_json());
    CHECK(j.rows == t.rows);
    CHECK(j.axes == t.axes);
    auto cols = fixtures::table1().column_diagrams();
    auto csv = t.csv(cols);
    CHECK(csv.rfind("J,\"1\",\"2\",\"3\",\"4\",\"1,1\"", 0) == 0);
    auto back = ValuationTable::from_csv(csv, 6);
    CHECK(back.axes == cols);
    CHECK(back.rows == t.in_order(cols));
    CHECK(back.subsets == t.subsets);
}

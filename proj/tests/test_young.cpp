#include "doctest.h"
#include "pmut/young.hpp"

#include <random>

using namespace pmut;

TEST_CASE("young diagrams and subsets") {
    CHECK(young_from_subset({1, 2}, 2, 6).str() == "4,4");
    CHECK(young_from_subset({5, 6}, 2, 6).empty());
    CHECK(young_from_subset({2, 4}, 2, 4).str() == "1");
    for (int k = 1; k < 6; ++k)
        for (const auto& j : all_subsets(k, 6)) CHECK(subset_from_young(young_from_subset(j, k, 6), k, 6) == j);
    CHECK(all_subsets(3, 6).size() == 20);
    CHECK(YoungDiagram::parse("e").empty());
    CHECK(YoungDiagram::parse("3,3,1").str() == "3,3,1");
    CHECK(parse_subset("{1,3}") == Subset{1, 3});
    CHECK(parse_subset("35") == Subset{3, 5});
    CHECK(subset_str({2, 4}) == "{2,4}");
    CHECK(young_leq(YoungDiagram(), YoungDiagram::parse("2,1")));
    CHECK_FALSE(young_leq(YoungDiagram::parse("3"), YoungDiagram::parse("2,2")));
    CHECK(box_complement(2, 6, 1, 1).str() == "4,3");
    CHECK(box_complement(3, 6, 2, 3).str() == "3");
    CHECK(box_complement(2, 6, 0, 0).str() == "4,4");
}

TEST_CASE("canonical order pads rows with zeros") {
    auto a = YoungDiagram::parse("1"), b = YoungDiagram::parse("1,1"), c = YoungDiagram::parse("2");
    CHECK(YoungDiagram() < a);
    CHECK(a < b);
    CHECK(b < c);
}

TEST_CASE("grid poset") {
    auto p = grid_poset(3, 6);
    CHECK(p.size() == 9);
    CHECK(p.covers.size() == 12);
    auto lower = p.lower_covers(p.index_of(YoungDiagram::parse("2,2")));
    REQUIRE(lower.size() == 2);
    std::vector<std::string> names;
    for (auto b : lower) names.push_back(p.elements[b].str());
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"1,1", "2"});
    CHECK(p.leq(p.index_of(YoungDiagram::parse("1")), p.index_of(YoungDiagram::parse("3,3,3"))));
    CHECK(p.to_dot().find("digraph") != std::string::npos);
}

TEST_CASE("filters and antichains") {
    for (auto [k, n, count] : {std::tuple{2, 6, 15}, {3, 6, 20}, {2, 4, 6}}) {
        auto p = grid_poset(k, n);
        CHECK(filters(p).size() == static_cast<std::size_t>(count));
        CHECK(antichains(p).size() == static_cast<std::size_t>(count));
    }
}

TEST_CASE("order and chain polytopes") {
    auto p = grid_poset(2, 6);
    auto o = order_polytope(p), c = chain_polytope(p);
    CHECK(o.vertices.size() == 15);
    CHECK(c.vertices.size() == 15);
    CHECK(volume(o) == Rat(1, 2880));
    CHECK(volume(c) == volume(o));
    CHECK_FALSE(polytopes_equal(o, c));
    CHECK(lattice_count(o, 2) == 105);
    CHECK(lattice_count(c, 2) == 105);
}

TEST_CASE("transfer map on a filter") {
    auto p = grid_poset(2, 6);
    RatVec x(p.size(), Rat(0));
    for (auto s : {"2,2", "3", "3,3", "4", "4,4"}) x[p.index_of(YoungDiagram::parse(s))] = 1;
    auto y = transfer_point(p, x);
    for (std::size_t a = 0; a < p.size(); ++a) {
        bool in = p.elements[a].str() == "2,2" || p.elements[a].str() == "3";
        CHECK(y[a] == (in ? 1 : 0));
    }
    RatVec ones(p.size(), Rat(1));
    auto z = transfer_point(p, ones);
    for (std::size_t a = 0; a < p.size(); ++a) CHECK(z[a] == (p.lower_covers(a).empty() ? 1 : 0));
}

TEST_CASE("transfer sequence composes to the transfer map") {
    auto p = grid_poset(2, 6);
    auto steps = transfer_sequence(p);
    CHECK(steps.size() == p.size() - 1);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    for (int t = 0; t < 200; ++t) {
        RatVec x(p.size());
        for (auto& v : x) {
            v = Rat(num(rng), den(rng));
            v.canonicalize();
        }
        RatVec y = x;
        for (const auto& s : steps) y = s.map.apply(y);
        CHECK(y == transfer_point(p, x));
    }
}

TEST_CASE("transfer chain stays convex and ends at the chain polytope") {
    for (auto [k, n] : {std::pair{2, 5}, {3, 6}}) {
        auto p = grid_poset(k, n);
        auto c = transfer_chain(p);
        CHECK(c.convex);
        CHECK(c.images.size() == transfer_sequence(p).size() + 1);
        CHECK(polytopes_equal(c.images.back(), chain_polytope(p)));
        for (const auto& im : c.images) CHECK(lattice_count(im, 2) == lattice_count(c.images.front(), 2));
    }
}

#include "pmut/verify.hpp"

#include "pmut/fixtures.hpp"
#include "pmut/mutations.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace pmut {

namespace {

RatVec rv(const ZVec& z) {
    RatVec v;
    for (auto x : z) v.emplace_back(static_cast<long>(x));
    return v;
}

CheckResult compare_table(const fixtures::Table& t, const ValuationTable& v) {
    auto got = v.in_order(t.column_diagrams());
    auto want = t.values();
    auto subsets = t.subsets();
    std::ostringstream diff;
    int bad = 0;
    if (v.subsets != subsets) return {t.name, false, "row sets differ"};
    for (std::size_t i = 0; i < want.size(); ++i)
        if (got[i] != want[i]) {
            if (bad++ < 3) {
                diff << " " << subset_str(subsets[i]) << ": got ";
                for (auto x : got[i]) diff << x;
                diff << " want " << t.rows[i].second << ";";
            }
        }
    if (bad) return {t.name, false, std::to_string(bad) + " rows differ:" + diff.str()};
    return {t.name, true, std::to_string(want.size()) + " rows"};
}

// Runs a check body, turning exceptions into failures.
CheckResult guarded(const std::string& name, const std::function<std::string(bool&)>& body) {
    bool ok = true;
    try {
        std::string detail = body(ok);
        return {name, ok, detail};
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

// Independent J-flow count: all directed paths per source, then every vertex-disjoint
// choice of one path per source.
std::vector<Flow> brute_force_flows(const PlabicGraph& g, const PerfectOrientation& o, const Subset& j) {
    std::vector<int> starts, targets;
    for (int s : o.sources)
        if (!std::binary_search(j.begin(), j.end(), s)) starts.push_back(g.boundary_vertex(s));
    for (int t : j)
        if (!std::binary_search(o.sources.begin(), o.sources.end(), t)) targets.push_back(g.boundary_vertex(t));
    std::vector<std::vector<Path>> per_source;
    for (int s : starts) {
        std::vector<Path> paths;
        std::vector<std::pair<int, Path>> stack{{s, {}}};
        while (!stack.empty()) {
            auto [v, p] = stack.back();
            stack.pop_back();
            for (int h : o.out[v]) {
                Path q = p;
                q.push_back(h);
                int u = g.target(h);
                if (g.internal(u))
                    stack.push_back({u, q});
                else if (std::find(targets.begin(), targets.end(), u) != targets.end())
                    paths.push_back(q);
            }
        }
        per_source.push_back(paths);
    }
    std::vector<Flow> out;
    Flow cur;
    std::function<void(std::size_t)> pick = [&](std::size_t i) {
        if (i == per_source.size()) {
            std::set<int> seen;
            for (const auto& p : cur) {
                if (!seen.insert(g.origin(p.front())).second) return;
                for (int h : p)
                    if (!seen.insert(g.target(h)).second) return;
            }
            out.push_back(cur);
            return;
        }
        for (const auto& p : per_source[i]) {
            cur.push_back(p);
            pick(i + 1);
            cur.pop_back();
        }
    };
    pick(0);
    return out;
}

}  // namespace

bool all_ok(const std::vector<CheckResult>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.ok; });
}

std::string format_results(const std::vector<CheckResult>& rs) {
    std::ostringstream os;
    for (const auto& r : rs) {
        os << (r.ok ? "OK   " : "FAIL ") << r.name;
        if (!r.detail.empty()) os << " (" << r.detail << ")";
        os << "\n";
    }
    return os.str();
}

std::vector<CheckResult> verify_tables() {
    return {compare_table(fixtures::table1(), rectangle_table(2, 6)),
            compare_table(fixtures::table2(), rectangle_table(3, 6)),
            compare_table(fixtures::table3(), dual_rectangle_table(3, 6)),
            compare_table(fixtures::dual_table_2_6(), dual_rectangle_table(2, 6))};
}

std::vector<CheckResult> verify_properties() {
    std::vector<CheckResult> out;

    out.push_back(guarded("young: subset <-> diagram bijection", [](bool& ok) {
        int count = 0;
        for (int n = 2; n <= 8; ++n)
            for (int k = 1; k < n; ++k)
                for (const auto& j : all_subsets(k, n)) {
                    ok &= subset_from_young(young_from_subset(j, k, n), k, n) == j;
                    ++count;
                }
        return std::to_string(count) + " subsets";
    }));

    out.push_back(guarded("young: order/chain polytope vertices are filters/antichains", [](bool& ok) {
        for (auto [k, n] : {std::pair{2, 5}, {2, 6}, {3, 6}}) {
            auto p = grid_poset(k, n);
            std::vector<RatVec> f, a;
            for (const auto& s : filters(p)) f.push_back(s.indicator(p.size()));
            for (const auto& s : antichains(p)) a.push_back(s.indicator(p.size()));
            std::sort(f.begin(), f.end());
            std::sort(a.begin(), a.end());
            ok &= order_polytope(p).vertices == f && chain_polytope(p).vertices == a;
        }
        return std::string();
    }));

    out.push_back(guarded("young: transfer sequence equals the transfer map", [](bool& ok) {
        auto p = grid_poset(2, 6);
        auto steps = transfer_sequence(p);
        std::mt19937 rng(2024);
        std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
        for (int t = 0; t < 500; ++t) {
            RatVec x(p.size());
            for (auto& v : x) {
                v = Rat(num(rng), den(rng));
                v.canonicalize();
            }
            RatVec y = x;
            for (const auto& s : steps) y = s.map.apply(y);
            ok &= y == transfer_point(p, x);
        }
        return std::string("500 random points");
    }));

    out.push_back(guarded("plabic: rectangle graphs have type pi_{k,n}", [](bool& ok) {
        for (int n = 4; n <= 8; ++n)
            for (int k = 2; k <= n - 2; ++k) {
                auto g = rectangle_graph(k, n);
                auto perm = trip_permutation(g);
                for (int i = 1; i <= n; ++i) ok &= perm[i - 1] == (i + k - 1) % n + 1;
                ok &= axes_of(g) == rectangle_axes(k, n);
            }
        return std::string();
    }));

    // One exploration reused by the graph-level suites below.
    auto mg26 = mutation_graph(2, 6, {false, false, 1000});
    auto mg36 = mutation_graph(3, 6, {true, false, 1000});

    out.push_back(guarded("plabic: square moves and quiver mutations are involutions", [&](bool& ok) {
        int moves = 0;
        for (const auto* mg : {&mg26, &mg36})
            for (std::size_t u = 0; u < mg->size(); ++u) {
                const auto& g = mg->graphs[u];
                auto fs = face_labels(g);
                auto q = quiver_of(g);
                for (int f : square_faces(g, fs)) {
                    auto c = square_context(g, fs.faces[f].young);
                    auto h = square_move(g, c.face);
                    ok &= canonical_key(square_move(h, c.moved)) == mg->keys[u];
                    ok &= quiver_mutate(q, c.face, c.moved) == quiver_of(h);
                    ok &= quiver_mutate(quiver_mutate(q, c.face), c.face) == q;
                    ++moves;
                }
            }
        return std::to_string(moves) + " moves";
    }));

    out.push_back(guarded("flows: brute-force J-flow oracle on Gr(2,4) and Gr(2,5)", [](bool& ok) {
        int flows = 0;
        for (int n : {4, 5}) {
            auto mg = mutation_graph(2, n, {false, false, 1000});
            for (const auto& g : mg.graphs) {
                auto o = perfect_orientation(g);
                for (const auto& j : all_subsets(2, n)) {
                    auto a = enumerate_j_flows(g, o, j), b = brute_force_flows(g, o, j);
                    std::sort(a.begin(), a.end());
                    std::sort(b.begin(), b.end());
                    ok &= a == b && !a.empty();
                    flows += static_cast<int>(a.size());
                }
            }
        }
        return std::to_string(flows) + " flows";
    }));

    out.push_back(guarded("flows: grid valuation is the minimal flow monomial", [](bool& ok) {
        for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {2, 6}, {3, 6}}) {
            auto g = rectangle_graph(k, n);
            for (const auto& j : all_subsets(k, n)) {
                auto v = valuation_rectangle(k, n, j);
                auto mons = flow_polynomial(g, j);
                ok &= std::find(mons.begin(), mons.end(), v) != mons.end();
                for (const auto& m : mons)
                    for (std::size_t a = 0; a < v.size(); ++a) ok &= v[a] <= m[a];
            }
        }
        return std::string();
    }));

    out.push_back(guarded("flows: dual valuations are flow monomials of the dual graph", [](bool& ok) {
        for (auto [k, n] : {std::pair{2, 6}, {3, 6}, {4, 6}}) {
            auto g = dual_graph(rectangle_graph(n - k, n));
            for (const auto& j : all_subsets(k, n)) {
                auto mons = flow_polynomial(g, j);
                ok &= std::find(mons.begin(), mons.end(), valuation_dual_rectangle(k, n, j)) != mons.end();
            }
        }
        return std::string();
    }));

    out.push_back(guarded("flows: transported rows are flow monomials", [&](bool& ok) {
        int rows = 0;
        for (std::size_t u = 0; u < mg36.size(); ++u) {
            const auto& t = mg36.tables[u];
            ok &= t.rows.front() == ZVec(t.axes.size(), 0);
            for (std::size_t i = 0; i < t.subsets.size(); ++i) {
                auto mons = flow_polynomial(mg36.graphs[u], t.subsets[i]);
                ok &= std::find(mons.begin(), mons.end(), t.rows[i]) != mons.end();
                ++rows;
            }
        }
        return std::to_string(rows) + " rows";
    }));

    out.push_back(guarded("mutations: epsilon and phi_{+-w,F} are involutive", [&](bool& ok) {
        for (std::size_t u = 0; u < mg36.size(); ++u) {
            const auto& g = mg36.graphs[u];
            auto fs = face_labels(g);
            for (int f : square_faces(g, fs)) {
                auto c = square_context(g, fs.faces[f].young);
                auto e = epsilon(c.axes, c.face);
                ok &= e.compose(e).matrix == UnimodularMap::identity(c.axes.size()).matrix;
                auto phi = phi_map(c, 1), inv = phi_map(c, -1);
                for (const auto& r : mg36.tables[u].rows) {
                    auto v = trop_map(c, Convention::min).apply(rv(r));
                    ok &= inv.apply(phi.apply(v)) == v && phi.apply(inv.apply(v)) == v;
                }
            }
        }
        return std::string();
    }));

    out.push_back(guarded("mutations: transport there and back is the identity", [&](bool& ok) {
        for (std::size_t u = 0; u < mg36.size(); ++u) {
            auto path = mg36.path_to(u);
            std::vector<YoungDiagram> back;
            for (const auto& s : transport_steps(mg36.graphs[0], path)) back.push_back(s.context.moved);
            std::reverse(back.begin(), back.end());
            ok &= transport_valuations(mg36.graphs[u], mg36.tables[u], back).rows == mg36.tables[0].rows;
        }
        return std::to_string(mg36.size()) + " paths";
    }));

    out.push_back(guarded("mutations: Ehrhart counts at dilations 1-2 preserved by every mutation", [&](bool& ok) {
        for (auto [a, b] : mg36.edges) {
            ok &= mg36.prints[a].lattice_count_1 == mg36.prints[b].lattice_count_1;
            ok &= mg36.prints[a].lattice_count_2 == mg36.prints[b].lattice_count_2;
            ok &= mg36.prints[a].volume == mg36.prints[b].volume;
        }
        for (std::size_t u = 0; u < mg36.size(); ++u) {
            ok &= mg36.prints[u].lattice_count_1 == 20;
            if (mg36.polytopes[u].integral()) {
                std::vector<ZVec> pts = lattice_points(mg36.polytopes[u]), rows = mg36.tables[u].rows;
                std::sort(rows.begin(), rows.end());
                ok &= pts == rows;
            }
        }
        return std::to_string(mg36.edges.size()) + " edges";
    }));

    out.push_back(guarded("exactgeom: V -> H -> V round trips", [&](bool& ok) {
        std::vector<QPolytope> ps(mg36.polytopes.begin(), mg36.polytopes.end());
        for (auto [k, n] : {std::pair{2, 6}, {3, 6}}) {
            auto p = grid_poset(k, n);
            ps.push_back(order_polytope(p));
            ps.push_back(chain_polytope(p));
            ps.push_back(convex_hull(dual_rectangle_table(k, n).points()));
        }
        for (const auto& p : ps) ok &= vertices_from_halfspaces(p.ambient_dim, p.halfspaces) == p.vertices;
        return std::to_string(ps.size()) + " polytopes";
    }));

    return out;
}

}  // namespace pmut

// One PASS/FAIL line per acceptance criterion; diagnostics indented below it.
#include "pmut/fixtures.hpp"
#include "pmut/mutations.hpp"
#include "pmut/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace pmut;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;
    void need(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.note(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs >= limit) {
        o.ok = false;
        o.note("runtime over " + std::to_string(limit) + " s");
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << buf << ")\n";
    for (const auto& n : o.notes) std::cout << "       " << n << "\n";
    std::cout.flush();
    if (!o.ok) ++failures;
}

RatVec rv(const ZVec& z) {
    RatVec v;
    for (auto x : z) v.emplace_back(static_cast<long>(x));
    return v;
}

std::vector<RatVec> rows_of(const fixtures::Table& t) {
    std::vector<RatVec> out;
    for (const auto& r : t.values()) out.push_back(rv(r));
    return out;
}

std::size_t pos(const std::vector<YoungDiagram>& axes, const YoungDiagram& y) {
    return static_cast<std::size_t>(std::find(axes.begin(), axes.end(), y) - axes.begin());
}

// Compares computed rows, reordered to the fixture's columns, with the fixture.
void compare(Outcome& o, const fixtures::Table& t, const std::vector<YoungDiagram>& axes, const std::vector<ZVec>& rows) {
    auto cols = t.column_diagrams();
    auto want = t.values();
    int bad = 0;
    for (std::size_t r = 0; r < want.size(); ++r) {
        ZVec got;
        for (const auto& c : cols) got.push_back(rows[r][pos(axes, c)]);
        if (got != want[r]) ++bad;
    }
    o.need(bad == 0, std::to_string(bad) + " rows of " + t.name + " differ");
}

std::string str(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

}  // namespace

int main() {
    const Rat f8 = Rat(1, 40320);

    criterion(1, "Table 1: valuation_rectangle(2,6,J) for all 15 J", 1.0, [](Outcome& o) {
        std::vector<ZVec> rows;
        for (const auto& j : all_subsets(2, 6)) rows.push_back(valuation_rectangle(2, 6, j));
        compare(o, fixtures::table1(), rectangle_axes(2, 6), rows);
        o.need(rows.size() == 15, "15 rows");
    });

    criterion(2, "Table 2: valuation_rectangle(3,6,J) for all 20 J", 1.0, [](Outcome& o) {
        std::vector<ZVec> rows;
        for (const auto& j : all_subsets(3, 6)) rows.push_back(valuation_rectangle(3, 6, j));
        compare(o, fixtures::table2(), rectangle_axes(3, 6), rows);
        o.need(rows.size() == 20, "20 rows");
    });

    criterion(3, "Table 3: dual rectangle valuations and transport to the dual", 10.0, [](Outcome& o) {
        std::vector<ZVec> rows;
        for (const auto& j : all_subsets(3, 6)) rows.push_back(valuation_dual_rectangle(3, 6, j));
        compare(o, fixtures::table3(), dual_rectangle_axes(3, 6), rows);
        auto mg = mutation_graph(3, 6, {false, false, 1000});
        auto at = mg.find(canonical_key(dual_graph(rectangle_graph(3, 6))));
        o.need(at.has_value(), "dual graph reached in the mutation graph");
        if (!at) return;
        auto path = mg.path_to(*at);
        std::string ps;
        for (const auto& y : path) ps += (ps.empty() ? "" : ";") + y.str();
        o.note("path " + ps);
        auto t = transport_valuations(3, 6, path);
        o.need(t.axes == dual_rectangle_axes(3, 6), "transported axes are the dual axes");
        compare(o, fixtures::table3(), t.axes, t.rows);
    });

    criterion(4, "dual table for (2,6) and its g-image", 0, [](Outcome& o) {
        auto r = verify_tables()[3];
        o.need(r.ok, r.name + ": " + r.detail);
        auto t = dual_rectangle_table(2, 6);
        auto g = fflv_map_g(2, 6);
        auto p = grid_poset(2, 6);
        auto want = fixtures::g_image_2_6().values();
        std::set<RatVec> image, antichain;
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            auto x = g.apply(rv(t.rows[i]));
            image.insert(x);
            ZVec positional;
            for (int a = 1; a <= 2; ++a)
                for (int b = 1; b <= 4; ++b)
                    positional.push_back(x[p.index_of(YoungDiagram::rectangle(3 - a, b))].get_num().get_si());
            o.need(positional == want[i], "g-image row " + subset_str(t.subsets[i]) + " matches the printed table");
        }
        for (const auto& a : antichains(p)) antichain.insert(a.indicator(p.size()));
        o.need(antichain.size() == 15 && image == antichain, "g-image is the set of 15 antichain indicators");
    });

    criterion(5, "volumes 14/8! and 28/8!; the phi-image is non-convex", 0, [&](Outcome& o) {
        auto t1 = convex_hull(rows_of(fixtures::table1()));
        o.need(volume(t1) == 14 * f8, "vol Conv(Table 1) = 14/8!, got " + volume(t1).get_str());
        // phi_{w,F} at (1) with w = -e_(1) on the axes of G itself, no sign flip.
        auto g = rectangle_graph(2, 6);
        auto c = square_context(g, YoungDiagram::parse("1"));
        auto unit = [&](const YoungDiagram& y, long long s) {
            ZVec v(c.axes.size(), 0);
            if (!y.empty()) v[pos(c.axes, y)] = s;
            return v;
        };
        auto sum = [](ZVec a, const ZVec& b) {
            for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
            return a;
        };
        auto phi = PLMap::make(unit(c.face, -1), {sum(unit(c.around[0], 1), unit(c.around[2], 1)),
                                                  sum(unit(c.around[1], 1), unit(c.around[3], 1))});
        auto fix = fixtures::phi_image_2_6();
        auto cols = fix.column_diagrams();
        auto tab = rectangle_table(2, 6);
        std::vector<RatVec> img;
        for (const auto& r : tab.in_order(tab.axes)) img.push_back(phi.apply(rv(r)));
        auto want = fix.values();
        int bad = 0;
        for (std::size_t i = 0; i < img.size(); ++i)
            for (std::size_t a = 0; a < cols.size(); ++a)
                if (img[i][pos(c.axes, cols[a])] != Rat(static_cast<long>(want[i][a]))) ++bad;
        o.need(bad == 0, "image rows equal the printed image table");
        auto hull = convex_hull(rows_of(fix));
        o.need(volume(hull) == 28 * f8, "vol of the image hull = 28/8!, got " + volume(hull).get_str());
        auto res = apply_pl_map(convex_hull(tab.points()), phi);
        o.need(!res.convex, "apply_pl_map reports non_convex");
        o.note(std::string("apply_pl_map: ") + (res.convex ? "convex" : "non_convex") + ", " +
               std::to_string(res.pieces.size()) + " pieces, hull volume " + volume(res.hull).get_str());
        o.need(volume(res.hull) == 28 * f8, "hull of the pieces has volume 28/8!");
    });

    auto t_mg = std::chrono::steady_clock::now();
    auto mg36 = mutation_graph(3, 6);
    double mg_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_mg).count();

    criterion(6, "lattice points of Conv(Table 1), Conv(Table 2) and all 34 node polytopes", 0, [&](Outcome& o) {
        for (const auto* t : {&fixtures::table1(), &fixtures::table2()}) {
            auto rows = rows_of(*t);
            auto pts = lattice_points(convex_hull(rows));
            std::set<RatVec> a(rows.begin(), rows.end()), b;
            for (const auto& p : pts) b.insert(rv(p));
            o.need(a == b && pts.size() == rows.size(), t->name + ": lattice points are the rows");
        }
        std::size_t bad = 0;
        for (const auto& fp : mg36.prints) bad += fp.lattice_count_1 != 20;
        o.need(mg36.size() == 34 && bad == 0, std::to_string(bad) + " node polytopes without 20 lattice points");
    });

    criterion(7, "f(Delta_rec) = O(P) and g(Delta_dual) = C(P) for (2,6), (3,6)", 0, [](Outcome& o) {
        for (auto [k, n] : {std::pair{2, 6}, {3, 6}}) {
            auto p = grid_poset(k, n);
            auto f = apply_unimodular(convex_hull(rectangle_table(k, n).points()), gt_map_f(k, n));
            auto label = "(" + std::to_string(k) + "," + std::to_string(n) + ")";
            o.need(f.vertices == order_polytope(p).vertices, "f image is O(P) at " + label);
            // dual_rectangle_table(k, n) belongs to the dual of G^rec_{n-k,n}, of type pi_{k,n}
            auto g = apply_unimodular(convex_hull(dual_rectangle_table(k, n).points()), fflv_map_g(k, n));
            o.need(g.vertices == chain_polytope(p).vertices, "g image is C(P) at " + label);
        }
    });

    criterion(8, "transfer chain O(P_{2,6}) -> C(P_{2,6})", 0, [](Outcome& o) {
        auto p = grid_poset(2, 6);
        auto chain = transfer_chain(p);
        o.need(chain.convex, "every intermediate image certified convex");
        o.note(std::to_string(chain.images.size() - 1) + " steps");
        o.need(polytopes_equal(chain.images.back(), chain_polytope(p)), "final image is C(P)");
        auto l1 = lattice_count(chain.images[0], 1), l2 = lattice_count(chain.images[0], 2);
        for (const auto& im : chain.images)
            o.need(lattice_count(im, 1) == l1 && lattice_count(im, 2) == l2, "lattice counts preserved");
        o.note("lattice counts " + std::to_string(l1) + ", " + std::to_string(l2));
        auto steps = transfer_sequence(p);
        auto compose = [&](RatVec x) {
            for (const auto& s : steps) x = s.map.apply(x);
            return x;
        };
        int bad = 0;
        for (const auto& v : order_polytope(p).vertices) bad += compose(v) != transfer_point(p, v);
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<long> num(-50, 50), den(1, 17);
        for (int t = 0; t < 1000; ++t) {
            RatVec x(p.size());
            for (auto& v : x) {
                v = Rat(num(rng), den(rng));
                v.canonicalize();
            }
            bad += compose(x) != transfer_point(p, x);
        }
        o.need(bad == 0, std::to_string(bad) + " disagreements with transfer_point");
    });

    criterion(9, "mutation graph of type pi_{3,6}", 60.0, [&](Outcome& o) {
        o.note("built in " + std::to_string(mg_secs) + " s");
        o.need(mg36.size() == 34, "34 nodes, got " + std::to_string(mg36.size()));
        std::size_t nonint = 0;
        for (const auto& fp : mg36.prints) nonint += !fp.integral;
        o.need(nonint == 2, "2 non-integral polytopes, got " + std::to_string(nonint));
        auto classes = mg36.classes();
        std::string sizes;
        for (const auto& c : classes) sizes += (sizes.empty() ? "" : "/") + std::to_string(c.size());
        o.note(std::to_string(classes.size()) + " fingerprint classes, sizes " + sizes);
        for (const auto& c : classes) o.note("  " + mg36.prints[c.front()].str());
        // The plain seven-field fingerprint, without the combinatorial refinements.
        std::set<std::string> plain;
        for (auto fp : mg36.prints) {
            fp.edge_count = 0;
            fp.facet_sizes.clear();
            plain.insert(fp.str());
        }
        o.note(std::to_string(plain.size()) + " classes from the seven base fields alone");
        o.need(classes.size() >= 6, "at least 6 fingerprint classes, got " + std::to_string(classes.size()));
    });

    criterion(10, "square-face properties: neighbour ordering, F/S simplification, Psi^min = phi^2 o Psi^max", 0,
              [](Outcome& o) {
        std::size_t squares = 0, rows = 0, ordering_bad = 0, fs_bad = 0, psi_bad = 0, closed_bad = 0;
        std::string example;
        for (auto [k, n] : {std::pair{2, 6}, {3, 6}}) {
            auto g = rectangle_graph(k, n);
            auto fs = face_labels(g);
            auto tab = rectangle_table(k, n);
            for (int f : square_faces(g, fs)) {
                ++squares;
                auto c0 = square_context(g, fs.faces[f].young);
                auto c = orient_for_rows(c0, tab.rows);
                if (!c) {
                    ++ordering_bad;
                    continue;
                }
                auto phi = phi_map(*c, 1);
                auto mn = trop_map(*c, Convention::min), mx = trop_map(*c, Convention::max);
                auto closed = trop_map_max_closed_form(*c);
                for (const auto& r : tab.rows) {
                    ++rows;
                    auto v = rv(r);
                    ordering_bad += !lemma_ordering(*c, r);
                    fs_bad += wall_flip_F(*c, v) != wall_flip_F_simplified(*c, v) ||
                              wall_shift_S(*c, v) != wall_shift_S_simplified(*c, v);
                    auto lhs = mn.apply(v);
                    auto rhs = phi.apply(phi.apply(mx.apply(v)));
                    if (lhs != rhs) {
                        if (psi_bad++ == 0)
                            example = "face " + c->face.str() + ", J " + subset_str(tab.subsets[&r - &tab.rows[0]]) +
                                      ": Psi^min " + str(lhs) + " vs phi^2 Psi^max " + str(rhs);
                    }
                    closed_bad += lhs != phi.apply(phi.apply(closed.apply(v)));
                }
            }
        }
        o.note(std::to_string(squares) + " squares, " + std::to_string(rows) + " face-row pairs");
        o.need(ordering_bad == 0, std::to_string(ordering_bad) + " ordering violations");
        o.need(fs_bad == 0, std::to_string(fs_bad) + " rows where raw F/S differ from simplified");
        o.need(psi_bad == 0, std::to_string(psi_bad) + " rows where Psi^min != phi^2 o Psi^max");
        if (psi_bad) {
            o.note("first: " + example);
            o.note("with Psi^max(v)_i = -v_i + max{v_a+v_c, v_b+v_d} the identity fails;");
            o.note("with the closed form phi_{-w,F} o eps it has " + std::to_string(closed_bad) + " failures");
        }
    });

    criterion(11, "generalized mutation at (2,2) of the G^rec_{3,6} quiver", 0, [](Outcome& o) {
        auto q = quiver_of(rectangle_graph(3, 6));
        auto node = YoungDiagram::parse("2,2");
        auto m = generalized_trop_map(q, node);
        auto tab = rectangle_table(3, 6);
        auto axes = quiver_axes(q);
        o.need(axes == tab.axes, "quiver axes are the table axes");
        std::vector<long long> col;
        for (const auto& r : tab.rows) col.push_back(m.apply(rv(r))[pos(axes, node)].get_num().get_si());
        o.need(col == fixtures::generalized_column_3_6(), "transformed column equals the listed vector");
    });

    criterion(12, "property suites", 0, [](Outcome& o) {
        auto rs = verify_properties();
        for (const auto& r : rs)
            o.note(std::string(r.ok ? "ok   " : "FAIL ") + r.name + (r.detail.empty() ? "" : " (" + r.detail + ")"));
        o.need(all_ok(rs), "all suites green");
    });

    std::cout << (failures ? std::to_string(failures) + " criteria failed\n" : "all criteria passed\n");
    return failures ? 1 : 0;
}

#include "pmut/fixtures.hpp"
#include "pmut/mutations.hpp"
#include "pmut/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pmut;

namespace {

std::vector<std::string> labels(const std::vector<YoungDiagram>& ys) {
    std::vector<std::string> out;
    for (const auto& y : ys) out.push_back(y.str());
    return out;
}

py::dict table_dict(const ValuationTable& t) {
    py::dict d;
    d["axes"] = labels(t.axes);
    std::vector<std::string> js;
    for (const auto& j : t.subsets) js.push_back(subset_str(j));
    d["subsets"] = js;
    d["rows"] = t.rows;
    return d;
}

RatVec parse_point(const std::vector<std::string>& xs) {
    RatVec v;
    for (const auto& x : xs) v.push_back(rat_from_string(x));
    return v;
}

std::vector<std::string> show(const RatVec& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(rat_to_string(x));
    return out;
}

py::dict polytope_dict(const QPolytope& p) {
    auto fp = fingerprint(p);
    py::dict d;
    std::vector<std::vector<std::string>> verts;
    for (const auto& v : p.vertices) verts.push_back(show(v));
    d["vertices"] = verts;
    d["facet_count"] = p.facet_count();
    d["volume"] = rat_to_string(fp.volume);
    d["lattice_count_1"] = fp.lattice_count_1;
    d["lattice_count_2"] = fp.lattice_count_2;
    d["integral"] = fp.integral;
    return d;
}

}  // namespace

PYBIND11_MODULE(_pmut, m) {
    m.doc() = "Plabic graphs, valuation polytopes and their mutations";

    m.def("faces", [](int k, int n, const std::string& path) {
        auto g = rectangle_graph(k, n);
        for (const auto& f : parse_path(path)) g = square_move(g, f);
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& f : face_labels(g).faces)
            if (!f.outer) out.emplace_back(f.young.str(), subset_str(f.label));
        std::sort(out.begin(), out.end());
        return out;
    }, py::arg("k"), py::arg("n"), py::arg("path") = "");

    m.def("trip_permutation", [](int k, int n) { return trip_permutation(rectangle_graph(k, n)); });

    m.def("valuations", [](int k, int n, bool dual, const std::string& path) {
        auto start = dual ? dual_graph(rectangle_graph(n - k, n)) : rectangle_graph(k, n);
        auto t = dual ? dual_rectangle_table(k, n) : rectangle_table(k, n);
        auto p = parse_path(path);
        return table_dict(p.empty() ? t : transport_valuations(start, t, p));
    }, py::arg("k"), py::arg("n"), py::arg("dual") = false, py::arg("path") = "");

    m.def("polytope", [](int k, int n, const std::string& path) { return polytope_dict(no_polytope(k, n, parse_path(path))); },
          py::arg("k"), py::arg("n"), py::arg("path") = "");

    m.def("hull", [](const std::vector<std::vector<std::string>>& pts) {
        std::vector<RatVec> ps;
        for (const auto& p : pts) ps.push_back(parse_point(p));
        return polytope_dict(convex_hull(ps));
    }, "Convex hull of points given as rational strings");

    m.def("order_polytope", [](int k, int n) { return polytope_dict(order_polytope(grid_poset(k, n))); });
    m.def("chain_polytope", [](int k, int n) { return polytope_dict(chain_polytope(grid_poset(k, n))); });

    m.def("transfer_point", [](int k, int n, const std::vector<std::string>& x) {
        return show(transfer_point(grid_poset(k, n), parse_point(x)));
    });

    m.def("mutation_graph", [](int k, int n, bool polytopes) {
        auto mg = mutation_graph(k, n, {polytopes, false, 5000});
        py::dict d;
        std::vector<std::string> keys;
        for (const auto& key : mg.keys) keys.push_back(key_string(key));
        d["nodes"] = keys;
        d["edges"] = mg.edges;
        std::vector<std::size_t> sizes;
        if (polytopes)
            for (const auto& c : mg.classes()) sizes.push_back(c.size());
        d["class_sizes"] = sizes;
        std::size_t nonint = 0;
        for (const auto& fp : mg.prints) nonint += !fp.integral;
        d["non_integral"] = nonint;
        return d;
    }, py::arg("k"), py::arg("n"), py::arg("polytopes") = true);

    m.def("verify", [](const std::string& suite) {
        auto rs = suite == "tables" ? verify_tables() : suite == "properties" ? verify_properties()
                                                                               : throw std::invalid_argument("unknown suite");
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& r : rs) out.emplace_back(r.name, r.ok, r.detail);
        return out;
    }, py::arg("suite") = "tables");
}

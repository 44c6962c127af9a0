#include "pmut/fixtures.hpp"
#include "pmut/mutations.hpp"
#include "pmut/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace pmut;
using nlohmann::json;

namespace {

struct Opts {
    int k = 2, n = 6;
    bool dual = false;
    std::string path, graph_file, emit, format, out, suite = "tables", point;
    bool no_polytopes = false, allow_large = false, tables = false;
    std::size_t max_nodes = 5000;
};

struct VerifyFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write(const Opts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + o.out);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void check_kn(const Opts& o) {
    if (o.n < 4 || o.n > 12 || o.k < 2 || o.k > o.n - 2)
        throw std::invalid_argument("need 2 <= k <= n-2 and n <= 12");
}

// Starting graph, then the square moves of --path.
PlabicGraph start_graph(const Opts& o) {
    PlabicGraph g;
    if (!o.graph_file.empty()) {
        std::ifstream f(o.graph_file);
        if (!f) throw std::invalid_argument("cannot read " + o.graph_file);
        g = graph_from_json(json::parse(f));
    } else {
        check_kn(o);
        g = o.dual ? dual_graph(rectangle_graph(o.n - o.k, o.n)) : rectangle_graph(o.k, o.n);
    }
    for (const auto& face : parse_path(o.path)) g = square_move(g, face);
    return g;
}

json faces_json(const PlabicGraph& g) {
    auto fs = face_labels(g);
    std::vector<const Face*> order;
    for (const auto& f : fs.faces)
        if (!f.outer) order.push_back(&f);
    std::sort(order.begin(), order.end(), [](auto a, auto b) { return a->young < b->young; });
    json out = json::array();
    for (auto f : order)
        out.push_back({{"label", subset_str(f->label)}, {"diagram", f->young.str()}, {"boundary", f->boundary}});
    return out;
}

std::string faces_text(const PlabicGraph& g, const std::string& fmt) {
    auto j = faces_json(g);
    if (fmt == "json") return dump(j);
    std::ostringstream os;
    os << "label,diagram,boundary\n";
    for (const auto& f : j)
        os << "\"" << f["label"].get<std::string>() << "\",\"" << f["diagram"].get<std::string>() << "\","
           << (f["boundary"].get<bool>() ? 1 : 0) << "\n";
    return os.str();
}

std::string trips_text(const PlabicGraph& g, const std::string& fmt) {
    auto perm = trip_permutation(g);
    if (fmt == "csv") {
        std::ostringstream os;
        os << "i,target\n";
        for (std::size_t i = 0; i < perm.size(); ++i) os << i + 1 << "," << perm[i] << "\n";
        return os.str();
    }
    json trips = json::array();
    for (int i = 1; i <= g.n; ++i) {
        json verts = json::array();
        auto t = trip(g, i);
        if (!t.empty()) verts.push_back(g.origin(t.front()));
        for (int h : t) verts.push_back(g.target(h));
        trips.push_back({{"start", i}, {"end", perm[i - 1]}, {"vertices", verts}});
    }
    return dump({{"permutation", perm}, {"trips", trips}});
}

std::string quiver_text(const PlabicGraph& g, const std::string& fmt) {
    auto q = quiver_of(g);
    if (fmt == "dot") return q.to_dot();
    json nodes = json::array(), arrows = json::array();
    for (std::size_t i = 0; i < q.nodes.size(); ++i)
        nodes.push_back({{"diagram", q.nodes[i].str()}, {"frozen", static_cast<bool>(q.frozen[i])}});
    for (auto [a, b] : q.arrows()) arrows.push_back({q.nodes[a].str(), q.nodes[b].str()});
    return dump({{"nodes", nodes}, {"arrows", arrows}});
}

std::string graph_text(const PlabicGraph& g, const std::string& emit, const std::string& fmt) {
    if (emit == "faces") return faces_text(g, fmt.empty() ? "json" : fmt);
    if (emit == "trips") return trips_text(g, fmt);
    if (emit == "quiver") return quiver_text(g, fmt);
    if (emit.empty() || emit == "graph") return dump(graph_to_json(g));
    throw std::invalid_argument("unknown --emit " + emit);
}

ValuationTable table_for(const Opts& o) {
    check_kn(o);
    auto start = o.dual ? dual_graph(rectangle_graph(o.n - o.k, o.n)) : rectangle_graph(o.k, o.n);
    auto t = o.dual ? dual_rectangle_table(o.k, o.n) : rectangle_table(o.k, o.n);
    auto path = parse_path(o.path);
    return path.empty() ? t : transport_valuations(start, t, path);
}

QPolytope polytope_for(const Opts& o) {
    check_kn(o);
    auto path = parse_path(o.path);
    if (!o.dual) return no_polytope(o.k, o.n, path);
    auto t = dual_rectangle_table(o.k, o.n);
    return transport_polytope(dual_graph(rectangle_graph(o.n - o.k, o.n)), convex_hull(t.points()), path);
}

json polytope_json(const QPolytope& p) {
    json j = polytope_to_json(p);
    j["fingerprint"] = fingerprint(p).to_json();
    return j;
}

std::string poset_polytope(const Opts& o, bool chain) {
    check_kn(o);
    auto p = grid_poset(o.k, o.n);
    if (o.format == "dot") return p.to_dot();
    auto poly = chain ? chain_polytope(p) : order_polytope(p);
    json j = polytope_json(poly);
    j["coordinates"] = p.labels();
    return dump(j);
}

std::string transfer(const Opts& o) {
    check_kn(o);
    auto p = grid_poset(o.k, o.n);
    if (!o.point.empty()) {
        RatVec x;
        std::stringstream ss(o.point);
        for (std::string t; std::getline(ss, t, ',');) x.push_back(rat_from_string(t));
        if (x.size() != p.size()) throw std::invalid_argument("point needs " + std::to_string(p.size()) + " coordinates");
        json img = json::array();
        for (const auto& v : transfer_point(p, x)) img.push_back(rat_to_string(v));
        return dump({{"coordinates", p.labels()}, {"image", img}});
    }
    auto chain = transfer_chain(p);
    json steps = json::array();
    auto seq = transfer_sequence(p);
    for (std::size_t i = 1; i < chain.images.size(); ++i) {
        const auto& im = chain.images[i];
        steps.push_back({{"element", p.elements[seq[i - 1].element].str()},
                         {"convex", true},
                         {"lattice_count_1", lattice_count(im, 1)},
                         {"lattice_count_2", lattice_count(im, 2)}});
    }
    bool reaches = chain.convex && polytopes_equal(chain.images.back(), chain_polytope(p));
    return dump({{"coordinates", p.labels()},
                 {"all_convex", chain.convex},
                 {"reaches_chain_polytope", reaches},
                 {"order_lattice_counts", {lattice_count(chain.images[0], 1), lattice_count(chain.images[0], 2)}},
                 {"steps", steps}});
}

std::string mutation_graph_text(const Opts& o) {
    if (o.k < 2 || o.k > o.n - 2) throw std::invalid_argument("need 2 <= k <= n-2");
    MutationGraphOptions opt{!o.no_polytopes, o.allow_large, o.max_nodes};
    auto mg = mutation_graph(o.k, o.n, opt);
    std::string fmt = !o.emit.empty() ? o.emit : (o.format.empty() ? "dot" : o.format);
    if (fmt == "dot") return mg.to_dot();
    if (fmt == "json") return dump(mg.to_json(o.tables));
    throw std::invalid_argument("mutation-graph emits dot or json");
}

std::string verify(const Opts& o) {
    std::vector<CheckResult> rs;
    if (o.suite == "tables")
        rs = verify_tables();
    else if (o.suite == "properties")
        rs = verify_properties();
    else
        throw std::invalid_argument("unknown suite " + o.suite);
    auto text = format_results(rs);
    if (!all_ok(rs)) throw VerifyFailed(text);
    return text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plabic graphs, valuation polytopes and their mutations"};
    app.require_subcommand(1);
    Opts o;

    auto kn = [&](CLI::App* s) {
        s->add_option("--k", o.k, "Grassmannian k");
        s->add_option("--n", o.n, "Grassmannian n");
        s->add_option("--out", o.out, "write to file instead of stdout");
    };
    auto graph_opts = [&](CLI::App* s, bool dual_flag) {
        kn(s);
        if (dual_flag) s->add_flag("--dual", o.dual, "start from the dual rectangle graph");
        s->add_option("--graph", o.graph_file, "read the starting graph from JSON");
        s->add_option("--path", o.path, "square moves, e.g. \"2;1,1;2\"");
        s->add_option("--format", o.format, "json|csv|dot");
    };

    std::map<std::string, std::function<std::string()>> run;

    auto rect = app.add_subcommand("rect", "rectangle graph G^rec_{k,n}");
    graph_opts(rect, false);
    rect->add_option("--emit", o.emit, "graph|faces|trips|quiver");
    run["rect"] = [&] { return graph_text(start_graph(o), o.emit, o.format); };

    auto dual = app.add_subcommand("dual", "dual rectangle graph of type pi_{k,n}");
    graph_opts(dual, false);
    dual->add_option("--emit", o.emit, "graph|faces|trips|quiver");
    run["dual"] = [&] {
        o.dual = true;
        return graph_text(start_graph(o), o.emit, o.format);
    };

    graph_opts(app.add_subcommand("trips", "trip permutation and trips"), true);
    run["trips"] = [&] { return trips_text(start_graph(o), o.format); };

    graph_opts(app.add_subcommand("faces", "face labels"), true);
    run["faces"] = [&] { return faces_text(start_graph(o), o.format.empty() ? "json" : o.format); };

    graph_opts(app.add_subcommand("quiver", "quiver of the graph"), true);
    run["quiver"] = [&] { return quiver_text(start_graph(o), o.format); };

    auto mutate = app.add_subcommand("mutate", "apply square moves");
    graph_opts(mutate, true);
    mutate->add_option("--emit", o.emit, "graph|faces|trips|quiver");
    run["mutate"] = [&] {
        if (o.path.empty()) throw std::invalid_argument("mutate needs --path");
        return graph_text(start_graph(o), o.emit, o.format);
    };

    graph_opts(app.add_subcommand("valuations", "valuation table, transported along --path"), true);
    run["valuations"] = [&] {
        auto t = table_for(o);
        return o.format == "json" ? dump(t.to_json()) : t.csv(t.axes);
    };

    graph_opts(app.add_subcommand("polytope", "Newton-Okounkov polytope, transported along --path"), true);
    run["polytope"] = [&] { return dump(polytope_json(polytope_for(o))); };

    auto op = app.add_subcommand("order-polytope", "order polytope of the grid poset");
    kn(op);
    op->add_option("--format", o.format, "json|dot (Hasse diagram)");
    run["order-polytope"] = [&] { return poset_polytope(o, false); };

    auto cp = app.add_subcommand("chain-polytope", "chain polytope of the grid poset");
    kn(cp);
    cp->add_option("--format", o.format, "json|dot (Hasse diagram)");
    run["chain-polytope"] = [&] { return poset_polytope(o, true); };

    auto tr = app.add_subcommand("transfer", "transfer map from the order to the chain polytope");
    kn(tr);
    tr->add_option("--point", o.point, "comma-separated rationals; prints the image");
    run["transfer"] = [&] { return transfer(o); };

    auto mg = app.add_subcommand("mutation-graph", "all graphs reachable by square moves");
    kn(mg);
    mg->add_option("--emit,--format", o.emit, "dot|json");
    mg->add_flag("--no-polytopes", o.no_polytopes, "skip polytopes and fingerprints");
    mg->add_flag("--allow-large", o.allow_large, "permit n > 6");
    mg->add_option("--max-nodes", o.max_nodes, "node limit");
    mg->add_flag("--tables", o.tables, "include valuation tables in JSON");
    run["mutation-graph"] = [&] { return mutation_graph_text(o); };

    auto ver = app.add_subcommand("verify", "fixture and property checks");
    ver->add_option("--suite", o.suite, "tables|properties");
    ver->add_option("--out", o.out, "write to file instead of stdout");
    run["verify"] = [&] { return verify(o); };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        write(o, run.at(app.get_subcommands().front()->get_name())());
    } catch (const VerifyFailed& e) {
        std::cout << e.what();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

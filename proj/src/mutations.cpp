#include "pmut/mutations.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace pmut {

namespace {

std::size_t axis_of(const std::vector<YoungDiagram>& axes, const YoungDiagram& y) {
    auto it = std::lower_bound(axes.begin(), axes.end(), y);
    if (it == axes.end() || *it != y) throw std::invalid_argument("unknown face " + y.str());
    return static_cast<std::size_t>(it - axes.begin());
}

// e_x + e_y with the empty diagram dropped.
ZVec pair_vector(const std::vector<YoungDiagram>& axes, const YoungDiagram& x, const YoungDiagram& y) {
    ZVec v(axes.size(), 0);
    if (!x.empty()) ++v[axis_of(axes, x)];
    if (!y.empty()) ++v[axis_of(axes, y)];
    return v;
}

ZVec negated(ZVec v) {
    for (auto& x : v) x = -x;
    return v;
}

ZVec unit(std::size_t d, std::size_t i, long long s = 1) {
    ZVec v(d, 0);
    v[i] = s;
    return v;
}

// Relabel coordinates from `axes` to `moved_axes` and negate the moved face.
UnimodularMap relabel_and_flip(const SquareContext& c) {
    std::size_t d = c.axes.size();
    ZMat m(d, ZVec(d, 0));
    for (std::size_t s = 0; s < d; ++s) {
        if (c.axes[s] == c.face)
            m[axis_of(c.moved_axes, c.moved)][s] = -1;
        else
            m[axis_of(c.moved_axes, c.axes[s])][s] = 1;
    }
    return UnimodularMap::make(std::move(m));
}

struct Moved {
    SquareContext context;
    PlabicGraph after;
};

Moved square_context_and_move(const PlabicGraph& g, const YoungDiagram& face) {
    FaceSet fs = face_labels(g);
    int f = fs.find(face);
    if (f < 0) throw std::invalid_argument("no face labeled " + face.str());
    auto sq = square_faces(g, fs);
    if (std::find(sq.begin(), sq.end(), f) == sq.end()) throw std::invalid_argument("face " + face.str() + " is not a square");
    const auto& hs = fs.faces[f].halfedges;

    // Start the walk at the white corner whose incoming edge lies outside the square.
    int start = -1;
    try {
        auto o = perfect_orientation(g);
        for (int t = 0; t < 4; ++t) {
            int h = hs[t], prev = hs[(t + 3) % 4];
            if (g.color[g.origin(h)] != Color::white) continue;
            bool out_here = o.dir[h >> 1] == h;
            bool out_prev_rev = o.dir[prev >> 1] == PlabicGraph::twin(prev);
            if (out_here && out_prev_rev) {
                start = t;
                break;
            }
        }
    } catch (const std::exception&) {
        start = -1;
    }
    if (start < 0)
        for (int t = 0; t < 4; ++t)
            if (g.color[g.origin(hs[t])] == Color::white) {
                start = t;
                break;
            }
    if (start < 0) throw std::logic_error("square face without a white corner");

    auto across = [&](int t) { return fs.faces[fs.face_of[PlabicGraph::twin(hs[(start + t) % 4])]].young; };
    Moved out;
    SquareContext& c = out.context;
    c.face = face;
    c.around = {across(2), across(3), across(0), across(1)};
    c.axes = axes_of(g);
    out.after = square_move(g, face);
    c.moved_axes = axes_of(out.after);
    std::vector<YoungDiagram> fresh;
    std::set_difference(c.moved_axes.begin(), c.moved_axes.end(), c.axes.begin(), c.axes.end(), std::back_inserter(fresh));
    if (fresh.size() != 1) throw std::logic_error("square move must relabel exactly one face");
    c.moved = fresh.front();
    return out;
}

template <class V>
auto val_at(const SquareContext& c, const V& v, const YoungDiagram& y) -> typename V::value_type {
    if (y.empty()) return typename V::value_type(0);
    return v[axis_of(c.axes, y)];
}

}  // namespace

UnimodularMap epsilon(const std::vector<YoungDiagram>& axes, const YoungDiagram& face) {
    std::size_t i = axis_of(axes, face);
    auto id = UnimodularMap::identity(axes.size());
    id.matrix[i][i] = -1;
    return id;
}

SquareContext SquareContext::rotated(int r) const {
    SquareContext c = *this;
    r = ((r % 4) + 4) % 4;
    for (int t = 0; t < 4; ++t) c.around[t] = around[(t + r) % 4];
    return c;
}

long long SquareContext::value(const ZVec& v, int which) const { return val_at(*this, v, around[which]); }
Rat SquareContext::value(const RatVec& v, int which) const { return val_at(*this, v, around[which]); }

SquareContext square_context(const PlabicGraph& g, const YoungDiagram& face) {
    return square_context_and_move(g, face).context;
}

bool lemma_ordering(const SquareContext& c, const ZVec& v) {
    long long a = c.value(v, 0), b = c.value(v, 1), cc = c.value(v, 2), d = c.value(v, 3);
    return a >= b && b >= cc && a >= d && d >= cc;
}

std::optional<SquareContext> orient_for_rows(const SquareContext& c, const std::vector<ZVec>& rows) {
    for (int r = 0; r < 4; ++r) {
        SquareContext t = c.rotated(r);
        if (std::all_of(rows.begin(), rows.end(), [&](const ZVec& v) { return lemma_ordering(t, v); })) return t;
    }
    return std::nullopt;
}

PLMap trop_map(const SquareContext& c, Convention conv) {
    std::size_t d = c.axes.size();
    std::size_t i = axis_of(c.axes, c.face);
    std::vector<ZVec> f{pair_vector(c.axes, c.around[0], c.around[2]), pair_vector(c.axes, c.around[1], c.around[3])};
    // min: eps o phi_{e_i, F};  max: eps o phi_{-e_i, -F}
    if (conv == Convention::max) {
        for (auto& u : f) u = negated(u);
        return PLMap::make(unit(d, i, -1), f, relabel_and_flip(c));
    }
    return PLMap::make(unit(d, i, 1), f, relabel_and_flip(c));
}

PLMap trop_map_max_closed_form(const SquareContext& c) {
    std::size_t d = c.axes.size();
    std::size_t i = axis_of(c.axes, c.face);
    std::vector<ZVec> f{pair_vector(c.axes, c.around[0], c.around[2]), pair_vector(c.axes, c.around[1], c.around[3])};
    return PLMap::make(unit(d, i, -1), f, relabel_and_flip(c));
}

PLMap phi_map(const SquareContext& c, int sign) {
    std::size_t d = c.moved_axes.size();
    std::size_t i = axis_of(c.moved_axes, c.moved);
    std::vector<ZVec> f{pair_vector(c.moved_axes, c.around[0], c.around[2]),
                        pair_vector(c.moved_axes, c.around[1], c.around[3])};
    return PLMap::make(unit(d, i, sign >= 0 ? -1 : 1), f);
}

RatVec trop_formula(const SquareContext& c, const RatVec& v, Convention conv) {
    Rat s1 = c.value(v, 0) + c.value(v, 2), s2 = c.value(v, 1) + c.value(v, 3);
    Rat vi = -v[axis_of(c.axes, c.face)] + (conv == Convention::min ? std::min(s1, s2) : std::max(s1, s2));
    RatVec out(c.moved_axes.size());
    for (std::size_t s = 0; s < c.axes.size(); ++s)
        if (c.axes[s] != c.face) out[axis_of(c.moved_axes, c.axes[s])] = v[s];
    out[axis_of(c.moved_axes, c.moved)] = vi;
    return out;
}

namespace {
Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }
}  // namespace

RatVec wall_flip_F(const SquareContext& c, const RatVec& v) {
    Rat a = c.value(v, 0), b = c.value(v, 1), cc = c.value(v, 2), d = c.value(v, 3);
    RatVec out(v);
    std::size_t i = axis_of(c.axes, c.face);
    out[i] = -v[i] + std::min(Rat(a + d), Rat(b + cc)) + std::max(abs_rat(a - b), abs_rat(cc - d));
    return out;
}

RatVec wall_shift_S(const SquareContext& c, const RatVec& v) {
    Rat a = c.value(v, 0), b = c.value(v, 1), cc = c.value(v, 2), d = c.value(v, 3);
    RatVec out(v);
    std::size_t i = axis_of(c.axes, c.face);
    out[i] = v[i] + std::max(abs_rat(a - d), abs_rat(b - cc)) - std::max(abs_rat(a - b), abs_rat(cc - d));
    return out;
}

RatVec wall_flip_F_simplified(const SquareContext& c, const RatVec& v) {
    RatVec out(v);
    std::size_t i = axis_of(c.axes, c.face);
    out[i] = -v[i] + std::max(Rat(c.value(v, 0) + c.value(v, 2)), Rat(c.value(v, 1) + c.value(v, 3)));
    return out;
}

RatVec wall_shift_S_simplified(const SquareContext& c, const RatVec& v) {
    RatVec out(v);
    std::size_t i = axis_of(c.axes, c.face);
    out[i] = v[i] + c.value(v, 1) - c.value(v, 3);
    return out;
}

std::vector<YoungDiagram> quiver_axes(const Quiver& q) {
    std::vector<YoungDiagram> out;
    for (const auto& y : q.nodes)
        if (!y.empty()) out.push_back(y);
    std::sort(out.begin(), out.end());
    return out;
}

PLMap generalized_trop_map(const Quiver& q, const YoungDiagram& node) {
    std::size_t m = q.index_of(node);
    if (q.frozen[m]) throw std::invalid_argument("cannot mutate at frozen node " + node.str());
    auto axes = quiver_axes(q);
    std::size_t d = axes.size(), i = axis_of(axes, node);
    ZVec in(d, 0), out(d, 0);
    for (std::size_t j = 0; j < q.nodes.size(); ++j) {
        if (q.nodes[j].empty()) continue;
        std::size_t a = axis_of(axes, q.nodes[j]);
        if (q.b[j][m] > 0) in[a] += q.b[j][m];
        if (q.b[m][j] > 0) out[a] += q.b[m][j];
    }
    return PLMap::make(unit(d, i, 1), {in, out}, epsilon(axes, node));
}

UnimodularMap gt_map_f(int k, int n) {
    auto axes = rectangle_axes(k, n);
    auto poset = grid_poset(k, n);
    std::size_t d = axes.size();
    ZMat m(d, ZVec(d, 0));
    for (std::size_t e = 0; e < poset.size(); ++e) {
        const auto& y = poset.elements[e];
        int i = y.height(), j = y.width();
        m[e][axis_of(axes, y)] += 1;
        if (i > 1 && j > 1) m[e][axis_of(axes, YoungDiagram::rectangle(i - 1, j - 1))] -= 1;
    }
    return UnimodularMap::make(std::move(m));
}

UnimodularMap fflv_map_g(int k, int n) {
    auto axes = dual_rectangle_axes(k, n);
    auto poset = grid_poset(k, n);
    std::size_t d = axes.size();
    ZMat m(d, ZVec(d, 0));
    auto add = [&](ZVec& row, int a, int b, long long s) {
        if (a == k && b == n - k) return;  // the empty face, value 0
        if (a <= 0 || b <= 0) a = b = 0;
        row[axis_of(axes, box_complement(k, n, a, b))] += s;
    };
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= n - k; ++b) {
            ZVec& row = m[poset.index_of(YoungDiagram::rectangle(k + 1 - a, b))];
            add(row, a - 1, b, 1);
            add(row, a, b - 1, 1);
            add(row, a, b, -1);
            add(row, a - 1, b - 1, -1);
        }
    return UnimodularMap::make(std::move(m));
}

std::vector<TransportStep> transport_steps(const PlabicGraph& start, const std::vector<YoungDiagram>& path) {
    std::vector<TransportStep> out;
    PlabicGraph g = start;
    for (const auto& face : path) {
        auto mv = square_context_and_move(g, face);
        PLMap map = trop_map(mv.context, Convention::min);
        out.push_back({std::move(mv.context), std::move(map), mv.after});
        g = std::move(mv.after);
    }
    return out;
}

ValuationTable transport_valuations(const PlabicGraph& start, const ValuationTable& table,
                                    const std::vector<YoungDiagram>& path) {
    if (table.axes != axes_of(start)) throw std::invalid_argument("valuation table does not match the graph's faces");
    ValuationTable t = table;
    for (const auto& step : transport_steps(start, path)) {
        for (auto& r : t.rows) {
            RatVec v;
            for (auto x : r) v.emplace_back(static_cast<long>(x));
            RatVec w = step.map.apply(v);
            for (std::size_t i = 0; i < w.size(); ++i) r[i] = w[i].get_num().get_si();
        }
        t.axes = step.context.moved_axes;
        t.graph_key = key_string(canonical_key(step.after));
    }
    return t;
}

QPolytope transport_polytope(const PlabicGraph& start, const QPolytope& p, const std::vector<YoungDiagram>& path) {
    QPolytope q = p;
    for (const auto& step : transport_steps(start, path)) {
        PLImage im = apply_pl_map(q, step.map);
        if (!im.convex)
            throw std::logic_error("mutation of " + step.context.face.str() + " produced a non-convex image");
        q = std::move(im.image);
        q.labels.clear();
        for (const auto& a : step.context.moved_axes) q.labels.push_back(a.str());
    }
    return q;
}

ValuationTable transport_valuations(int k, int n, const std::vector<YoungDiagram>& path) {
    return transport_valuations(rectangle_graph(k, n), rectangle_table(k, n), path);
}

QPolytope no_polytope(int k, int n, const std::vector<YoungDiagram>& path) {
    auto t = rectangle_table(k, n);
    std::vector<std::string> labels;
    for (const auto& a : t.axes) labels.push_back(a.str());
    return transport_polytope(rectangle_graph(k, n), convex_hull(t.points(), labels), path);
}

std::string Fingerprint::str() const {
    std::ostringstream os;
    os << "dim=" << ambient_dim << " v=" << vertex_count << " f=" << facet_count << " L1=" << lattice_count_1
       << " L2=" << lattice_count_2 << " vol=" << rat_to_string(volume) << (integral ? " integral" : " non-integral")
       << " e=" << edge_count << " facets=[";
    for (std::size_t i = 0; i < facet_sizes.size(); ++i) os << (i ? "," : "") << facet_sizes[i];
    os << "]";
    return os.str();
}

nlohmann::json Fingerprint::to_json() const {
    return {{"ambient_dim", ambient_dim},         {"vertex_count", vertex_count},
            {"facet_count", facet_count},         {"lattice_count_1", lattice_count_1},
            {"lattice_count_2", lattice_count_2}, {"euclidean_volume", rat_to_string(volume)},
            {"integral", integral},               {"edge_count", edge_count},
            {"facet_sizes", facet_sizes}};
}

bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.ambient_dim == b.ambient_dim && a.vertex_count == b.vertex_count && a.facet_count == b.facet_count &&
           a.lattice_count_1 == b.lattice_count_1 && a.lattice_count_2 == b.lattice_count_2 && a.volume == b.volume &&
           a.integral == b.integral && a.edge_count == b.edge_count && a.facet_sizes == b.facet_sizes;
}

bool operator<(const Fingerprint& a, const Fingerprint& b) {
    auto t = [](const Fingerprint& f) {
        return std::make_tuple(f.ambient_dim, f.vertex_count, f.facet_count, f.lattice_count_1, f.lattice_count_2);
    };
    if (t(a) != t(b)) return t(a) < t(b);
    if (a.volume != b.volume) return a.volume < b.volume;
    return std::tie(a.integral, a.edge_count, a.facet_sizes) < std::tie(b.integral, b.edge_count, b.facet_sizes);
}

Fingerprint fingerprint(const QPolytope& p) {
    Fingerprint f;
    f.ambient_dim = p.ambient_dim;
    f.vertex_count = p.vertices.size();
    f.facet_count = p.facet_count();
    f.lattice_count_1 = lattice_count(p, 1);
    f.lattice_count_2 = lattice_count(p, 2);
    f.volume = volume(p);
    f.integral = p.integral();
    f.edge_count = edges(p).size();
    for (const auto& b : p.incidence) f.facet_sizes.push_back(b.count());
    std::sort(f.facet_sizes.begin(), f.facet_sizes.end());
    return f;
}

std::optional<std::size_t> MutationGraph::find(const CanonicalKey& key) const {
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (keys[i] == key) return i;
    return std::nullopt;
}

std::vector<YoungDiagram> MutationGraph::path_to(std::size_t node) const {
    std::vector<YoungDiagram> out;
    for (int v = static_cast<int>(node); parent.at(v) >= 0; v = parent[v]) out.push_back(via[v]);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::size_t>> MutationGraph::classes() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<Fingerprint> reps;
    for (std::size_t i = 0; i < prints.size(); ++i) {
        auto it = std::find(reps.begin(), reps.end(), prints[i]);
        if (it == reps.end()) {
            reps.push_back(prints[i]);
            out.push_back({i});
        } else {
            out[it - reps.begin()].push_back(i);
        }
    }
    return out;
}

namespace {
std::string short_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << (h & 0xffffffffULL);
    return os.str();
}
}  // namespace

std::string MutationGraph::to_dot() const {
    std::ostringstream os;
    os << "graph mutation_graph_" << k << "_" << n << " {\n";
    for (std::size_t i = 0; i < size(); ++i) {
        os << "  n" << i << " [label=\"" << i << " #" << short_hash(key_string(keys[i]));
        if (i < prints.size()) {
            const auto& f = prints[i];
            os << "\\nv=" << f.vertex_count << " f=" << f.facet_count << " vol=" << rat_to_string(f.volume)
               << (f.integral ? "" : " non-integral");
        }
        os << "\"";
        if (i < prints.size() && !prints[i].integral) os << " style=filled fillcolor=lightgray";
        os << "];\n";
    }
    for (auto [a, b] : edges) os << "  n" << a << " -- n" << b << ";\n";
    os << "}\n";
    return os.str();
}

nlohmann::json MutationGraph::to_json(bool with_tables) const {
    nlohmann::json j;
    j["k"] = k;
    j["n"] = n;
    j["nodes"] = nlohmann::json::array();
    for (std::size_t i = 0; i < size(); ++i) {
        nlohmann::json v{{"id", i}, {"key", key_string(keys[i])}, {"parent", parent[i]}};
        v["via"] = parent[i] < 0 ? nlohmann::json(nullptr) : nlohmann::json(via[i].str());
        if (i < prints.size()) v["fingerprint"] = prints[i].to_json();
        if (with_tables && i < tables.size()) v["valuations"] = tables[i].to_json();
        j["nodes"].push_back(std::move(v));
    }
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : edges) j["edges"].push_back({a, b});
    if (!prints.empty()) {
        j["classes"] = nlohmann::json::array();
        for (const auto& c : classes()) j["classes"].push_back(c);
    }
    return j;
}

MutationGraph mutation_graph(int k, int n, const MutationGraphOptions& opt) {
    if (k < 2 || k > n - 2) throw std::invalid_argument("mutation_graph needs 2 <= k <= n-2");
    if (n > 6 && !opt.allow_large) throw std::invalid_argument("exploration bound exceeded: n > 6 needs allow_large");
    MutationGraph mg;
    mg.k = k;
    mg.n = n;
    std::map<CanonicalKey, std::size_t> index;
    std::set<std::pair<std::size_t, std::size_t>> edge_set;

    auto root = rectangle_graph(k, n);
    mg.graphs.push_back(root);
    mg.keys.push_back(canonical_key(root));
    mg.parent.push_back(-1);
    mg.via.emplace_back();
    mg.tables.push_back(rectangle_table(k, n));
    if (opt.polytopes) {
        std::vector<std::string> labels;
        for (const auto& a : mg.tables[0].axes) labels.push_back(a.str());
        mg.polytopes.push_back(convex_hull(mg.tables[0].points(), labels));
    }
    index[mg.keys[0]] = 0;

    for (std::size_t u = 0; u < mg.size(); ++u) {
        FaceSet fs = face_labels(mg.graphs[u]);
        std::vector<YoungDiagram> squares;
        for (int f : square_faces(mg.graphs[u], fs)) squares.push_back(fs.faces[f].young);
        std::sort(squares.begin(), squares.end());
        for (const auto& face : squares) {
            auto mv = square_context_and_move(mg.graphs[u], face);
            auto key = canonical_key(mv.after);
            auto it = index.find(key);
            std::size_t v;
            if (it != index.end()) {
                v = it->second;
            } else {
                if (mg.size() >= opt.max_nodes) throw std::runtime_error("exploration bound exceeded: too many nodes");
                v = mg.size();
                index[key] = v;
                mg.keys.push_back(key);
                mg.parent.push_back(static_cast<int>(u));
                mg.via.push_back(face);
                mg.tables.push_back(transport_valuations(mg.graphs[u], mg.tables[u], {face}));
                if (opt.polytopes) mg.polytopes.push_back(transport_polytope(mg.graphs[u], mg.polytopes[u], {face}));
                mg.graphs.push_back(std::move(mv.after));
            }
            if (u != v) edge_set.insert({std::min(u, v), std::max(u, v)});
        }
    }
    mg.edges.assign(edge_set.begin(), edge_set.end());
    if (opt.polytopes)
        for (const auto& p : mg.polytopes) mg.prints.push_back(fingerprint(p));
    return mg;
}

std::vector<YoungDiagram> parse_path(const std::string& s) {
    std::vector<YoungDiagram> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ';')) {
        part.erase(std::remove_if(part.begin(), part.end(), [](unsigned char c) { return std::isspace(c); }), part.end());
        if (part.empty()) continue;
        out.push_back(YoungDiagram::parse(part));
    }
    return out;
}

}  // namespace pmut

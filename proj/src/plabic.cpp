#include "pmut/plabic.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pmut {

namespace {

int position(const std::vector<int>& r, int h) {
    auto it = std::find(r.begin(), r.end(), h);
    if (it == r.end()) throw std::logic_error("half-edge missing from rotation");
    return static_cast<int>(it - r.begin());
}

void rotate_to(std::vector<int>& r, int h) {
    std::rotate(r.begin(), r.begin() + position(r, h), r.end());
}

struct Parts {
    std::vector<Color> colors;
    std::vector<int> bidx;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::vector<int>> rotations;  // edge ids
};

// Strip arcs, returning data accepted by from_parts.
Parts parts_of(const PlabicGraph& g) {
    Parts p;
    p.colors = g.color;
    p.bidx = g.boundary_index;
    std::vector<int> new_id(g.edge_count(), -1);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (g.arc[e]) continue;
        new_id[e] = static_cast<int>(p.edges.size());
        p.edges.push_back(g.edge[e]);
    }
    p.rotations.resize(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (int h : g.rot[v])
            if (!g.arc[h >> 1]) p.rotations[v].push_back(new_id[h >> 1]);
    return p;
}

}  // namespace

int PlabicGraph::cw_after(int h) const {
    const auto& r = rot[origin(h)];
    int p = position(r, h);
    return r[(p + 1) % r.size()];
}

int PlabicGraph::ccw_after(int h) const {
    const auto& r = rot[origin(h)];
    int p = position(r, h);
    return r[(p + r.size() - 1) % r.size()];
}

int PlabicGraph::boundary_vertex(int i) const {
    for (std::size_t v = 0; v < color.size(); ++v)
        if (boundary_index[v] == i) return static_cast<int>(v);
    throw std::invalid_argument("no boundary vertex " + std::to_string(i));
}

PlabicGraph PlabicGraph::from_parts(int n, int k, std::vector<Color> colors, std::vector<int> bidx,
                                    std::vector<std::array<int, 2>> edges,
                                    const std::vector<std::vector<int>>& rotations) {
    PlabicGraph g;
    g.n = n;
    g.k = k;
    g.color = std::move(colors);
    g.boundary_index = std::move(bidx);
    g.edge = std::move(edges);
    g.arc.assign(g.edge.size(), false);
    std::size_t nv = g.color.size();
    if (g.boundary_index.size() != nv || rotations.size() != nv) throw std::invalid_argument("graph: size mismatch");
    g.rot.resize(nv);
    for (std::size_t v = 0; v < nv; ++v)
        for (int e : rotations[v]) {
            if (e < 0 || static_cast<std::size_t>(e) >= g.edge.size()) throw std::invalid_argument("graph: bad edge id");
            if (g.edge[e][0] == static_cast<int>(v))
                g.rot[v].push_back(2 * e);
            else if (g.edge[e][1] == static_cast<int>(v))
                g.rot[v].push_back(2 * e + 1);
            else
                throw std::invalid_argument("graph: rotation lists a non-incident edge");
        }
    std::vector<int> bv(n + 1, -1);
    for (std::size_t v = 0; v < nv; ++v) {
        int i = g.boundary_index[v];
        if (g.color[v] != Color::boundary) continue;
        if (i < 1 || i > n || bv[i] != -1) throw std::invalid_argument("graph: bad boundary labels");
        bv[i] = static_cast<int>(v);
    }
    for (int i = 1; i <= n; ++i)
        if (bv[i] < 0) throw std::invalid_argument("graph: missing boundary vertex");
    std::vector<int> arc_id(n + 1);
    for (int i = 1; i <= n; ++i) {
        arc_id[i] = static_cast<int>(g.edge.size());
        g.edge.push_back({bv[i], bv[i % n + 1]});
        g.arc.push_back(true);
    }
    for (int i = 1; i <= n; ++i) {
        int v = bv[i];
        if (g.rot[v].size() != 1) throw std::invalid_argument("graph: boundary vertex must have degree 1");
        int prev = i == 1 ? n : i - 1;
        g.rot[v] = {2 * arc_id[prev] + 1, 2 * arc_id[i], g.rot[v][0]};
    }
    return g;
}

void PlabicGraph::validate() const {
    std::size_t nb = 0;
    for (std::size_t v = 0; v < color.size(); ++v) {
        if (color[v] == Color::boundary) {
            ++nb;
            if (rot[v].size() != 3) throw std::invalid_argument("graph: boundary degree");
        } else if (rot[v].empty()) {
            throw std::invalid_argument("graph: isolated vertex");
        }
        for (int h : rot[v])
            if (origin(h) != static_cast<int>(v)) throw std::invalid_argument("graph: rotation/endpoint mismatch");
    }
    if (nb != static_cast<std::size_t>(n)) throw std::invalid_argument("graph: boundary count");
    for (std::size_t e = 0; e < edge.size(); ++e) {
        if (arc[e]) continue;
        int a = edge[e][0], b = edge[e][1];
        if (a == b) throw std::invalid_argument("graph: loop");
        if (internal(a) && internal(b) && color[a] == color[b]) throw std::invalid_argument("graph: not bipartite");
    }
    std::size_t f = trace_faces(*this).faces.size();
    long euler = static_cast<long>(color.size()) - static_cast<long>(edge.size()) + static_cast<long>(f);
    if (euler != 2) throw std::invalid_argument("graph: embedding is not planar (Euler characteristic " + std::to_string(euler) + ")");
}

int FaceSet::find(const YoungDiagram& y) const {
    for (std::size_t f = 0; f < faces.size(); ++f)
        if (!faces[f].outer && faces[f].young == y) return static_cast<int>(f);
    return -1;
}

FaceSet trace_faces(const PlabicGraph& g) {
    FaceSet fs;
    std::size_t nh = 2 * g.edge_count();
    fs.face_of.assign(nh, -1);
    for (std::size_t h0 = 0; h0 < nh; ++h0) {
        if (fs.face_of[h0] != -1) continue;
        Face f;
        int id = static_cast<int>(fs.faces.size());
        int h = static_cast<int>(h0);
        do {
            if (fs.face_of[h] != -1) throw std::logic_error("face tracing revisited a half-edge");
            fs.face_of[h] = id;
            f.halfedges.push_back(h);
            if (g.arc[h >> 1]) ((h & 1) ? f.boundary : f.outer) = true;
            h = g.face_next(h);
        } while (h != static_cast<int>(h0));
        if (f.outer && f.boundary) throw std::invalid_argument("graph: outer face touches the inner side of an arc");
        if (f.outer) fs.outer = id;
        fs.faces.push_back(std::move(f));
    }
    return fs;
}

Bits left_faces(const PlabicGraph& g, const FaceSet& fs, const std::vector<int>& walk) {
    Bits seen(fs.faces.size());
    std::vector<bool> blocked(g.edge_count(), false);
    for (int h : walk) blocked[h >> 1] = true;
    std::deque<int> queue;
    for (int h : walk) {
        int f = fs.face_of[h];
        if (!seen.test(f)) {
            seen.set(f);
            queue.push_back(f);
        }
    }
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        for (int h : fs.faces[f].halfedges) {
            if (blocked[h >> 1] || g.arc[h >> 1]) continue;
            int o = fs.face_of[PlabicGraph::twin(h)];
            if (!seen.test(o)) {
                seen.set(o);
                queue.push_back(o);
            }
        }
    }
    if (fs.outer >= 0 && seen.test(fs.outer)) throw std::logic_error("left region leaked into the outer face");
    return seen;
}

std::vector<int> trip(const PlabicGraph& g, int i) {
    int v = g.boundary_vertex(i);
    int h = g.rot[v][2];
    std::vector<int> out{h};
    std::size_t guard = 2 * g.edge_count() + 2;
    while (g.internal(g.target(h))) {
        int back = PlabicGraph::twin(h);
        h = g.color[g.target(h)] == Color::white ? g.cw_after(back) : g.ccw_after(back);
        out.push_back(h);
        if (out.size() > guard) throw std::invalid_argument("trip does not terminate");
    }
    return out;
}

std::vector<int> trip_permutation(const PlabicGraph& g) {
    std::vector<int> perm;
    for (int i = 1; i <= g.n; ++i) perm.push_back(g.boundary_index[g.target(trip(g, i).back())]);
    return perm;
}

FaceSet face_labels(const PlabicGraph& g) {
    FaceSet fs = trace_faces(g);
    for (int i = 1; i <= g.n; ++i) {
        Bits left = left_faces(g, fs, trip(g, i));
        for (auto f = left.find_first(); f != Bits::npos; f = left.find_next(f)) fs.faces[f].label.push_back(i);
    }
    int empties = 0;
    for (auto& f : fs.faces) {
        if (f.outer) continue;
        if (static_cast<int>(f.label.size()) != g.k)
            throw std::invalid_argument("face label " + subset_str(f.label) + " does not have k elements");
        f.young = young_from_subset(f.label, g.k, g.n);
        if (f.young.empty()) ++empties;
    }
    if (empties != 1) throw std::invalid_argument("expected exactly one face labeled by the empty diagram");
    return fs;
}

namespace {

struct Editor {
    PlabicGraph g;
    std::vector<bool> vdead, edead;

    explicit Editor(PlabicGraph x) : g(std::move(x)), vdead(g.vertex_count(), false), edead(g.edge_count(), false) {}

    void contract(int e) {
        int x = g.edge[e][0], y = g.edge[e][1];
        if (x == y) throw std::invalid_argument("normalize: loop");
        rotate_to(g.rot[x], 2 * e);
        rotate_to(g.rot[y], 2 * e + 1);
        std::vector<int> merged(g.rot[x].begin() + 1, g.rot[x].end());
        for (auto it = g.rot[y].begin() + 1; it != g.rot[y].end(); ++it) {
            g.edge[*it >> 1][*it & 1] = x;
            merged.push_back(*it);
        }
        g.rot[x] = std::move(merged);
        g.rot[y].clear();
        vdead[y] = true;
        edead[e] = true;
        for (int h : g.rot[x])
            if (g.target(h) == x) throw std::invalid_argument("normalize: contraction created a loop");
    }

    void smooth(int v) {
        int g1 = g.rot[v][0], g2 = g.rot[v][1];
        int a = g.target(g1), b = g.target(g2);
        if (a == b) throw std::invalid_argument("normalize: degree-2 vertex on a double edge");
        g.edge[g1 >> 1][g1 & 1] = b;
        auto& rb = g.rot[b];
        rb[position(rb, PlabicGraph::twin(g2))] = g1;
        edead[g2 >> 1] = true;
        g.rot[v].clear();
        vdead[v] = true;
    }

    int add_vertex(Color c) {
        g.color.push_back(c);
        g.boundary_index.push_back(0);
        g.rot.emplace_back();
        vdead.push_back(false);
        return static_cast<int>(g.color.size()) - 1;
    }

    int add_edge(int a, int b) {
        g.edge.push_back({a, b});
        g.arc.push_back(false);
        edead.push_back(false);
        return static_cast<int>(g.edge.size()) - 1;
    }

    PlabicGraph compact() const {
        std::vector<int> vid(g.vertex_count(), -1), eid(g.edge_count(), -1);
        PlabicGraph out;
        out.n = g.n;
        out.k = g.k;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (vdead[v]) continue;
            vid[v] = static_cast<int>(out.color.size());
            out.color.push_back(g.color[v]);
            out.boundary_index.push_back(g.boundary_index[v]);
        }
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (edead[e]) continue;
            eid[e] = static_cast<int>(out.edge.size());
            out.edge.push_back({vid[g.edge[e][0]], vid[g.edge[e][1]]});
            out.arc.push_back(g.arc[e]);
        }
        out.rot.resize(out.color.size());
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (vdead[v]) continue;
            for (int h : g.rot[v]) out.rot[vid[v]].push_back(2 * eid[h >> 1] + (h & 1));
        }
        return out;
    }
};

}  // namespace

PlabicGraph normalize(PlabicGraph g0) {
    Editor ed(std::move(g0));
    auto& g = ed.g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (ed.edead[e] || g.arc[e]) continue;
            int a = g.edge[e][0], b = g.edge[e][1];
            if (g.internal(a) && g.internal(b) && g.color[a] == g.color[b]) {
                ed.contract(static_cast<int>(e));
                changed = true;
            }
        }
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (ed.vdead[v] || !g.internal(v)) continue;
            if (g.rot[v].size() < 2) throw std::invalid_argument("normalize: internal leaf");
            if (g.rot[v].size() == 2) {
                ed.smooth(static_cast<int>(v));
                changed = true;
            }
        }
    }
    return ed.compact();
}

bool has_parallel_edges(const PlabicGraph& g) {
    std::map<std::pair<int, int>, int> seen;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (g.arc[e]) continue;
        auto key = std::minmax(g.edge[e][0], g.edge[e][1]);
        if (++seen[key] > 1) return true;
    }
    return false;
}

std::vector<int> square_faces(const PlabicGraph& g, const FaceSet& fs) {
    std::vector<int> out;
    for (std::size_t f = 0; f < fs.faces.size(); ++f) {
        const auto& face = fs.faces[f];
        if (face.outer || face.boundary || face.halfedges.size() != 4) continue;
        std::vector<int> vs;
        bool ok = true;
        for (int h : face.halfedges) {
            int v = g.origin(h);
            if (!g.internal(v)) ok = false;
            vs.push_back(v);
        }
        std::sort(vs.begin(), vs.end());
        if (ok && std::unique(vs.begin(), vs.end()) == vs.end()) out.push_back(static_cast<int>(f));
    }
    return out;
}

PlabicGraph square_move(const PlabicGraph& g, const YoungDiagram& label) {
    FaceSet fs = face_labels(g);
    int f = fs.find(label);
    if (f < 0) throw std::invalid_argument("no face labeled " + label.str());
    auto sq = square_faces(g, fs);
    if (std::find(sq.begin(), sq.end(), f) == sq.end()) throw std::invalid_argument("face " + label.str() + " is not a square");
    Editor ed(g);
    const auto hs = fs.faces[f].halfedges;
    std::vector<int> corners;
    for (std::size_t t = 0; t < 4; ++t) {
        int h_in = hs[t], h_out = hs[(t + 1) % 4];
        int u = ed.g.target(h_in);
        corners.push_back(u);
        if (ed.g.rot[u].size() <= 3) continue;
        // Split u so that the square sees a trivalent vertex.
        auto& r = ed.g.rot[u];
        rotate_to(r, PlabicGraph::twin(h_in));
        if (r[1] != h_out) throw std::logic_error("square corner is not consecutive in the rotation");
        std::vector<int> others(r.begin() + 2, r.end());
        int u2 = ed.add_vertex(ed.g.color[u]);
        int e = ed.add_edge(u, u2);
        ed.g.rot[u] = {PlabicGraph::twin(h_in), h_out, 2 * e};
        for (int h : others) ed.g.edge[h >> 1][h & 1] = u2;
        others.push_back(2 * e + 1);
        ed.g.rot[u2] = std::move(others);
    }
    for (int u : corners) ed.g.color[u] = ed.g.color[u] == Color::black ? Color::white : Color::black;
    PlabicGraph out = normalize(ed.compact());
    out.validate();
    return out;
}

PlabicGraph rectangle_graph(int k, int n) {
    if (k < 2 || k > n - 2) throw std::invalid_argument("rectangle_graph: need 2 <= k <= n-2");
    int m = n - k;
    std::vector<Color> colors;
    std::vector<int> bidx;
    std::vector<std::pair<double, double>> pos;
    auto add = [&](Color c, int b, double x, double y) {
        colors.push_back(c);
        bidx.push_back(b);
        pos.emplace_back(x, y);
        return static_cast<int>(colors.size()) - 1;
    };
    // Boundary: sources 1..k down the right side, then k+1..n right to left along the bottom.
    for (int r = 1; r <= k; ++r) add(Color::boundary, r, m + 1.0, -r);
    for (int j = k + 1; j <= n; ++j) add(Color::boundary, j, (n - j + 1) - 0.25, -(k + 1.0));
    std::vector<std::vector<int>> black(k + 1, std::vector<int>(m + 1)), white = black;
    for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= m; ++c) {
            black[r][c] = add(Color::black, 0, c + 0.25, -r);
            white[r][c] = add(Color::white, 0, c - 0.25, -r);
        }
    std::vector<std::array<int, 2>> edges;
    for (int r = 1; r <= k; ++r) {
        edges.push_back({r - 1, black[r][m]});
        for (int c = 1; c <= m; ++c) {
            edges.push_back({black[r][c], white[r][c]});
            if (c < m) edges.push_back({black[r][c], white[r][c + 1]});
            if (r > 1) edges.push_back({black[r][c], white[r - 1][c]});
        }
    }
    for (int c = 1; c <= m; ++c) edges.push_back({white[k][c], n - c});
    std::vector<std::vector<int>> inc(colors.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        inc[edges[e][0]].push_back(static_cast<int>(e));
        inc[edges[e][1]].push_back(static_cast<int>(e));
    }
    for (std::size_t v = 0; v < colors.size(); ++v) {
        auto angle = [&](int e) {
            int o = edges[e][0] == static_cast<int>(v) ? edges[e][1] : edges[e][0];
            return std::atan2(pos[o].second - pos[v].second, pos[o].first - pos[v].first);
        };
        std::sort(inc[v].begin(), inc[v].end(), [&](int a, int b) { return angle(a) > angle(b); });
    }
    PlabicGraph g = normalize(PlabicGraph::from_parts(n, k, colors, bidx, edges, inc));
    g.validate();

    auto perm = trip_permutation(g);
    for (int i = 1; i <= n; ++i)
        if (perm[i - 1] != (i + k - 1) % n + 1) throw std::logic_error("rectangle_graph: wrong trip permutation");
    CanonicalKey want{YoungDiagram()};
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= m; ++j) want.push_back(YoungDiagram::rectangle(i, j));
    for (int i = 1; i <= n; ++i) {
        Subset beta;
        for (int t = 0; t < k; ++t) beta.push_back((i - 1 + t) % n + 1);
        std::sort(beta.begin(), beta.end());
        want.push_back(young_from_subset(beta, k, n));
    }
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    if (canonical_key(g) != want) throw std::logic_error("rectangle_graph: unexpected face labels");
    return g;
}

PlabicGraph dual_graph(const PlabicGraph& g) {
    Parts p = parts_of(g);
    int k2 = g.n - g.k;
    for (std::size_t v = 0; v < p.colors.size(); ++v) {
        if (p.colors[v] == Color::black)
            p.colors[v] = Color::white;
        else if (p.colors[v] == Color::white)
            p.colors[v] = Color::black;
        else
            p.bidx[v] = (p.bidx[v] - 1 + k2) % g.n + 1;
    }
    PlabicGraph d = PlabicGraph::from_parts(g.n, k2, p.colors, p.bidx, p.edges, p.rotations);
    d.validate();
    auto perm = trip_permutation(d);
    for (int i = 1; i <= d.n; ++i)
        if (perm[i - 1] != (i + k2 - 1) % d.n + 1) throw std::invalid_argument("dual_graph: input is not of Grassmannian type");
    return d;
}

CanonicalKey canonical_key(const PlabicGraph& g) {
    FaceSet fs = face_labels(g);
    CanonicalKey key;
    for (const auto& f : fs.faces)
        if (!f.outer) key.push_back(f.young);
    std::sort(key.begin(), key.end());
    return key;
}

std::string key_string(const CanonicalKey& key) {
    std::string s;
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) s += ';';
        s += key[i].str();
    }
    return s;
}

std::vector<YoungDiagram> axes_of(const PlabicGraph& g) {
    auto key = canonical_key(g);
    key.erase(std::remove_if(key.begin(), key.end(), [](const YoungDiagram& y) { return y.empty(); }), key.end());
    return key;
}

std::size_t Quiver::index_of(const YoungDiagram& y) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), y);
    if (it == nodes.end() || *it != y) throw std::invalid_argument("quiver has no node " + y.str());
    return static_cast<std::size_t>(it - nodes.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> Quiver::arrows() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < nodes.size(); ++j)
            for (int t = 0; t < b[i][j]; ++t) out.emplace_back(i, j);
    return out;
}

std::string Quiver::to_dot() const {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (std::size_t i = 0; i < nodes.size(); ++i)
        os << "  \"" << nodes[i].str() << "\" [shape=" << (frozen[i] ? "box" : "ellipse") << "];\n";
    for (auto [i, j] : arrows()) os << "  \"" << nodes[i].str() << "\" -> \"" << nodes[j].str() << "\";\n";
    os << "}\n";
    return os.str();
}

Quiver quiver_of(const PlabicGraph& g) {
    FaceSet fs = face_labels(g);
    Quiver q;
    std::vector<int> faces;
    for (std::size_t f = 0; f < fs.faces.size(); ++f)
        if (!fs.faces[f].outer) faces.push_back(static_cast<int>(f));
    std::sort(faces.begin(), faces.end(), [&](int a, int b) { return fs.faces[a].young < fs.faces[b].young; });
    std::vector<int> node_of(fs.faces.size(), -1);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        node_of[faces[i]] = static_cast<int>(i);
        q.nodes.push_back(fs.faces[faces[i]].young);
        q.frozen.push_back(fs.faces[faces[i]].boundary);
    }
    q.b.assign(faces.size(), std::vector<int>(faces.size(), 0));
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (g.arc[e]) continue;
        int u = g.edge[e][0], v = g.edge[e][1];
        if (!g.internal(u) || !g.internal(v)) continue;
        int h = g.color[u] == Color::black ? static_cast<int>(2 * e) : static_cast<int>(2 * e + 1);
        int left = node_of[fs.face_of[h]], right = node_of[fs.face_of[PlabicGraph::twin(h)]];
        if (q.frozen[left] && q.frozen[right]) continue;
        // the white endpoint lies to the right of right -> left
        q.b[right][left] += 1;
        q.b[left][right] -= 1;
    }
    return q;
}

Quiver quiver_mutate(const Quiver& q, const YoungDiagram& node, std::optional<YoungDiagram> relabel) {
    std::size_t m = q.index_of(node);
    if (q.frozen[m]) throw std::invalid_argument("cannot mutate at frozen node " + node.str());
    std::size_t d = q.nodes.size();
    Quiver r = q;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (i == m || j == m) {
                r.b[i][j] = -q.b[i][j];
            } else if (!(q.frozen[i] && q.frozen[j])) {
                r.b[i][j] = q.b[i][j] + (std::abs(q.b[i][m]) * q.b[m][j] + q.b[i][m] * std::abs(q.b[m][j])) / 2;
            }
        }
    if (relabel) {
        r.nodes[m] = *relabel;
        std::vector<std::size_t> order(d);
        for (std::size_t i = 0; i < d; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return r.nodes[a] < r.nodes[b]; });
        Quiver s;
        s.b.assign(d, std::vector<int>(d, 0));
        for (std::size_t i = 0; i < d; ++i) {
            s.nodes.push_back(r.nodes[order[i]]);
            s.frozen.push_back(r.frozen[order[i]]);
            for (std::size_t j = 0; j < d; ++j) s.b[i][j] = r.b[order[i]][order[j]];
        }
        return s;
    }
    return r;
}

nlohmann::json graph_to_json(const PlabicGraph& g) {
    Parts p = parts_of(g);
    nlohmann::json j;
    j["n"] = g.n;
    j["k"] = g.k;
    auto& vs = j["vertices"] = nlohmann::json::array();
    for (std::size_t v = 0; v < p.colors.size(); ++v) {
        nlohmann::json e{{"id", v}};
        if (p.colors[v] == Color::boundary) {
            e["kind"] = "boundary";
            e["boundary_index"] = p.bidx[v];
        } else {
            e["kind"] = p.colors[v] == Color::black ? "black" : "white";
        }
        vs.push_back(e);
    }
    auto& rot = j["rotation"] = nlohmann::json::object();
    for (std::size_t v = 0; v < p.colors.size(); ++v) rot[std::to_string(v)] = p.rotations[v];
    auto& es = j["edges"] = nlohmann::json::array();
    for (const auto& e : p.edges) es.push_back({e[0], e[1]});
    return j;
}

PlabicGraph graph_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>(), k = j.at("k").get<int>();
    const auto& vs = j.at("vertices");
    std::size_t nv = vs.size();
    std::vector<Color> colors(nv);
    std::vector<int> bidx(nv, 0);
    for (const auto& v : vs) {
        std::size_t id = v.at("id").get<std::size_t>();
        if (id >= nv) throw std::invalid_argument("graph json: vertex ids must be 0..V-1");
        std::string kind = v.at("kind").get<std::string>();
        if (kind == "boundary") {
            colors[id] = Color::boundary;
            bidx[id] = v.at("boundary_index").get<int>();
        } else if (kind == "black") {
            colors[id] = Color::black;
        } else if (kind == "white") {
            colors[id] = Color::white;
        } else {
            throw std::invalid_argument("graph json: unknown vertex kind " + kind);
        }
    }
    std::vector<std::array<int, 2>> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    std::vector<std::vector<int>> rotations(nv);
    for (const auto& [key, val] : j.at("rotation").items()) {
        std::size_t id = std::stoul(key);
        if (id >= nv) throw std::invalid_argument("graph json: rotation for unknown vertex");
        rotations[id] = val.get<std::vector<int>>();
    }
    PlabicGraph g = PlabicGraph::from_parts(n, k, colors, bidx, edges, rotations);
    g.validate();
    return g;
}

}  // namespace pmut

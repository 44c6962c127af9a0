#include "pmut/flows.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pmut {

namespace {

bool contains(const Subset& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

std::size_t axis_index(const std::vector<YoungDiagram>& axes, const YoungDiagram& y) {
    auto it = std::lower_bound(axes.begin(), axes.end(), y);
    if (it == axes.end() || *it != y) throw std::invalid_argument("no axis labeled " + y.str());
    return static_cast<std::size_t>(it - axes.begin());
}

}  // namespace

std::vector<PerfectOrientation> acyclic_orientations(const PlabicGraph& g, const Subset& sources) {
    std::size_t nv = g.vertex_count();
    std::vector<int> matched_by(nv, -1);  // edge id matching each internal vertex
    std::vector<bool> boundary_edge(g.edge_count(), false);
    for (int i = 1; i <= g.n; ++i) {
        int b = g.boundary_vertex(i);
        int h = g.rot[b][2];
        boundary_edge[h >> 1] = true;
        int u = g.target(h);
        if (!g.internal(u)) continue;
        bool src = contains(sources, i);
        if ((src && g.color[u] == Color::white) || (!src && g.color[u] == Color::black)) {
            if (matched_by[u] != -1) return {};
            matched_by[u] = h >> 1;
        }
    }
    std::vector<std::vector<int>> matchings;
    auto rec = [&](auto&& self) -> void {
        int best = -1;
        std::size_t best_opts = SIZE_MAX;
        for (std::size_t v = 0; v < nv; ++v) {
            if (!g.internal(v) || matched_by[v] != -1) continue;
            std::size_t opts = 0;
            for (int h : g.rot[v]) {
                int u = g.target(h);
                if (!boundary_edge[h >> 1] && g.internal(u) && matched_by[u] == -1) ++opts;
            }
            if (opts < best_opts) {
                best_opts = opts;
                best = static_cast<int>(v);
            }
        }
        if (best == -1) {
            matchings.push_back(matched_by);
            return;
        }
        for (int h : g.rot[best]) {
            int u = g.target(h);
            if (boundary_edge[h >> 1] || !g.internal(u) || matched_by[u] != -1) continue;
            matched_by[best] = matched_by[u] = h >> 1;
            self(self);
            matched_by[best] = matched_by[u] = -1;
        }
    };
    rec(rec);

    std::vector<PerfectOrientation> out;
    for (const auto& m : matchings) {
        PerfectOrientation o;
        o.sources = sources;
        o.dir.assign(g.edge_count(), -1);
        o.out.assign(nv, {});
        std::vector<bool> in_matching(g.edge_count(), false);
        for (std::size_t v = 0; v < nv; ++v)
            if (g.internal(v)) in_matching[m[v]] = true;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (g.arc[e]) continue;
            int a = g.edge[e][0], b = g.edge[e][1];
            int h;
            if (!g.internal(a)) {
                h = contains(sources, g.boundary_index[a]) ? static_cast<int>(2 * e) : static_cast<int>(2 * e + 1);
            } else if (!g.internal(b)) {
                h = contains(sources, g.boundary_index[b]) ? static_cast<int>(2 * e + 1) : static_cast<int>(2 * e);
            } else {
                // matched edges run black -> white
                bool a_black = g.color[a] == Color::black;
                h = (in_matching[e] == a_black) ? static_cast<int>(2 * e) : static_cast<int>(2 * e + 1);
            }
            o.dir[e] = h;
            o.out[g.origin(h)].push_back(h);
        }
        std::vector<int> indeg(nv, 0);
        for (std::size_t v = 0; v < nv; ++v)
            for (int h : o.out[v]) ++indeg[g.target(h)];
        std::vector<int> stack;
        for (std::size_t v = 0; v < nv; ++v)
            if (indeg[v] == 0) stack.push_back(static_cast<int>(v));
        std::size_t seen = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++seen;
            for (int h : o.out[v])
                if (--indeg[g.target(h)] == 0) stack.push_back(g.target(h));
        }
        o.acyclic = seen == nv;
        if (o.acyclic) out.push_back(std::move(o));
    }
    return out;
}

PerfectOrientation perfect_orientation(const PlabicGraph& g) {
    Subset src;
    for (int i = 1; i <= g.k; ++i) src.push_back(i);
    auto all = acyclic_orientations(g, src);
    if (all.empty()) throw std::invalid_argument("no acyclic perfect orientation with sources [k]");
    if (all.size() > 1) throw std::logic_error("acyclic perfect orientation with sources [k] is not unique");
    return all.front();
}

std::vector<Flow> enumerate_j_flows(const PlabicGraph& g, const PerfectOrientation& o, const Subset& j) {
    if (static_cast<int>(j.size()) != g.k) throw std::invalid_argument("J must have k elements");
    std::vector<int> starts, targets;
    for (int s : o.sources)
        if (!contains(j, s)) starts.push_back(g.boundary_vertex(s));
    for (int t : j)
        if (!contains(o.sources, t)) targets.push_back(g.boundary_vertex(t));
    std::vector<bool> used(g.vertex_count(), false), target(g.vertex_count(), false);
    for (int t : targets) target[t] = true;
    std::vector<Flow> out;
    Flow cur;
    Path path;
    auto next_path = [&](auto&& self, std::size_t idx) -> void {
        if (idx == starts.size()) {
            out.push_back(cur);
            return;
        }
        auto walk = [&](auto&& step, int v) -> void {
            for (int h : o.out[v]) {
                int u = g.target(h);
                if (used[u]) continue;
                path.push_back(h);
                used[u] = true;
                if (!g.internal(u)) {
                    if (target[u]) {
                        cur.push_back(path);
                        self(self, idx + 1);
                        cur.pop_back();
                    }
                } else {
                    step(step, u);
                }
                used[u] = false;
                path.pop_back();
            }
        };
        Path saved;
        std::swap(saved, path);
        used[starts[idx]] = true;
        walk(walk, starts[idx]);
        used[starts[idx]] = false;
        std::swap(saved, path);
    };
    next_path(next_path, 0);
    return out;
}

ZVec flow_weight(const PlabicGraph& g, const FaceSet& fs, const std::vector<YoungDiagram>& axes, const Flow& f) {
    ZVec w(axes.size(), 0);
    for (const auto& p : f) {
        Bits left = left_faces(g, fs, p);
        for (auto x = left.find_first(); x != Bits::npos; x = left.find_next(x)) {
            const auto& y = fs.faces[x].young;
            if (!y.empty()) ++w[axis_index(axes, y)];
        }
    }
    return w;
}

std::vector<ZVec> flow_polynomial(const PlabicGraph& g, const Subset& j) {
    auto o = perfect_orientation(g);
    FaceSet fs = face_labels(g);
    auto axes = axes_of(g);
    std::vector<ZVec> out;
    for (const auto& f : enumerate_j_flows(g, o, j)) out.push_back(flow_weight(g, fs, axes, f));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<YoungDiagram> rectangle_axes(int k, int n) {
    std::vector<YoungDiagram> out;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= n - k; ++j) out.push_back(YoungDiagram::rectangle(i, j));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<YoungDiagram> dual_rectangle_axes(int k, int n) {
    std::vector<YoungDiagram> out{box_complement(k, n, 0, 0)};
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= n - k; ++b)
            if (a != k || b != n - k) out.push_back(box_complement(k, n, a, b));
    std::sort(out.begin(), out.end());
    return out;
}

// Strongly minimal flow on the labeled k x (n-k) grid. Grid points are (x, y) with
// 0 <= x <= n-k, 0 <= y <= k; source s enters at (n-k, k-s+1), sink j leaves at (n-j, 0).
// Horizontal lines run west, vertical lines run south, except along the right and
// bottom sides. Paths are placed bottom-up, each hugging the one below it.
ZVec valuation_rectangle(int k, int n, const Subset& j) {
    if (k < 1 || k >= n) throw std::invalid_argument("valuation_rectangle: bad (k, n)");
    if (static_cast<int>(j.size()) != k) throw std::invalid_argument("valuation_rectangle: J must have k elements");
    young_from_subset(j, k, n);  // validates J
    int m = n - k;
    std::vector<int> src, snk;
    for (int s = 1; s <= k; ++s)
        if (!contains(j, s)) src.push_back(s);
    for (int t : j)
        if (t > k) snk.push_back(t);
    auto axes = rectangle_axes(k, n);
    ZVec val(axes.size(), 0);
    std::vector<std::vector<bool>> used(m + 1, std::vector<bool>(k + 1, false));
    // the largest source pairs with the smallest sink
    for (std::size_t t = src.size(); t-- > 0;) {
        int sx = m, sy = k - src[t] + 1;
        int tx = n - snk[src.size() - 1 - t];
        std::vector<std::pair<int, int>> path;
        auto dfs = [&](auto&& self, int x, int y) -> bool {
            if (used[x][y]) return false;
            path.emplace_back(x, y);
            if (x == tx && y == 0) return true;
            if (y > 0 && x < m && self(self, x, y - 1)) return true;
            if (y > 0 && x - 1 >= tx && self(self, x - 1, y)) return true;
            path.pop_back();
            return false;
        };
        if (!dfs(dfs, sx, sy)) throw std::logic_error("valuation_rectangle: no disjoint path");
        for (auto [x, y] : path) used[x][y] = true;
        for (std::size_t p = 1; p < path.size(); ++p) {
            auto [x0, y0] = path[p - 1];
            auto [x1, y1] = path[p];
            if (y1 != y0) continue;
            // west step across column x0: cells below height y0 lie to the left of the path
            int c = x0;
            for (int r = k - y0 + 1; r <= k; ++r) ++val[axis_index(axes, YoungDiagram::rectangle(r, c))];
            (void)x1;
        }
    }
    return val;
}

ZVec valuation_dual_rectangle(int k, int n, const Subset& jp) {
    if (static_cast<int>(jp.size()) != k) throw std::invalid_argument("valuation_dual_rectangle: J must have k elements");
    young_from_subset(jp, k, n);
    auto axes = dual_rectangle_axes(k, n);
    ZVec val(axes.size(), 0);
    Subset low, missing;
    for (int x : jp)
        if (x <= k) low.push_back(x);
    for (int i = 1; i <= k; ++i)
        if (!contains(low, i)) missing.push_back(i);
    std::size_t m = low.size();
    for (std::size_t l = 1; l <= k - m; ++l) {
        int i = missing[l - 1];
        int jj = jp[k - l] - k;  // j'_{k+1-l} shifted
        ++val[axis_index(axes, box_complement(k, n, 0, 0))];
        for (int a = 1; a <= k; ++a)
            for (int b = 1; b <= n - k; ++b) {
                if (a == k && b == n - k) continue;
                if (a <= k - i || b <= jj - 1) ++val[axis_index(axes, box_complement(k, n, a, b))];
            }
    }
    return val;
}

const ZVec& ValuationTable::row(const Subset& j) const {
    for (std::size_t i = 0; i < subsets.size(); ++i)
        if (subsets[i] == j) return rows[i];
    throw std::invalid_argument("no row for " + subset_str(j));
}

std::vector<ZVec> ValuationTable::in_order(const std::vector<YoungDiagram>& columns) const {
    std::vector<std::size_t> idx;
    for (const auto& c : columns) idx.push_back(axis_index(axes, c));
    std::vector<ZVec> out;
    for (const auto& r : rows) {
        ZVec v;
        for (auto i : idx) v.push_back(r[i]);
        out.push_back(std::move(v));
    }
    return out;
}

std::string ValuationTable::csv(const std::vector<YoungDiagram>& columns) const {
    std::ostringstream os;
    os << "J";
    for (const auto& c : columns) os << ",\"" << c.str() << "\"";
    os << "\n";
    auto ordered = in_order(columns);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        os << "\"" << subset_str(subsets[i]) << "\"";
        for (auto x : ordered[i]) os << "," << x;
        os << "\n";
    }
    return os.str();
}

std::vector<RatVec> ValuationTable::points() const {
    std::vector<RatVec> out;
    for (const auto& r : rows) {
        RatVec v;
        for (auto x : r) v.emplace_back(static_cast<long>(x));
        out.push_back(std::move(v));
    }
    return out;
}

nlohmann::json ValuationTable::to_json() const {
    nlohmann::json j;
    j["k"] = k;
    j["n"] = n;
    j["graph_key"] = graph_key;
    j["axes"] = nlohmann::json::array();
    for (const auto& a : axes) j["axes"].push_back(a.str());
    j["rows"] = nlohmann::json::array();
    for (std::size_t i = 0; i < subsets.size(); ++i)
        j["rows"].push_back({{"J", subset_str(subsets[i])}, {"v", rows[i]}});
    return j;
}

ValuationTable ValuationTable::from_json(const nlohmann::json& j) {
    ValuationTable t;
    t.k = j.at("k").get<int>();
    t.n = j.at("n").get<int>();
    t.graph_key = j.value("graph_key", std::string());
    for (const auto& a : j.at("axes")) t.axes.push_back(YoungDiagram::parse(a.get<std::string>()));
    for (const auto& r : j.at("rows")) {
        t.subsets.push_back(parse_subset(r.at("J").get<std::string>()));
        t.rows.push_back(r.at("v").get<ZVec>());
        if (t.rows.back().size() != t.axes.size()) throw std::invalid_argument("valuation row has the wrong length");
    }
    return t;
}

namespace {
std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}
}  // namespace

ValuationTable ValuationTable::from_csv(const std::string& text, int n) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("empty CSV");
    auto head = split_csv_line(line);
    ValuationTable t;
    t.n = n;
    for (std::size_t i = 1; i < head.size(); ++i) t.axes.push_back(YoungDiagram::parse(head[i]));
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto cells = split_csv_line(line);
        if (cells.size() != head.size()) throw std::invalid_argument("CSV row has the wrong length");
        t.subsets.push_back(parse_subset(cells[0]));
        ZVec v;
        for (std::size_t i = 1; i < cells.size(); ++i) v.push_back(std::stoll(cells[i]));
        t.rows.push_back(std::move(v));
    }
    t.k = t.subsets.empty() ? 0 : static_cast<int>(t.subsets.front().size());
    return t;
}

namespace {
std::string key_with_empty(std::vector<YoungDiagram> axes) {
    axes.emplace_back();
    std::sort(axes.begin(), axes.end());
    return key_string(axes);
}
}  // namespace

ValuationTable rectangle_table(int k, int n) {
    ValuationTable t;
    t.k = k;
    t.n = n;
    t.axes = rectangle_axes(k, n);
    t.subsets = all_subsets(k, n);
    for (const auto& j : t.subsets) t.rows.push_back(valuation_rectangle(k, n, j));
    t.graph_key = key_with_empty(t.axes);
    return t;
}

ValuationTable dual_rectangle_table(int k, int n) {
    ValuationTable t;
    t.k = k;
    t.n = n;
    t.axes = dual_rectangle_axes(k, n);
    t.subsets = all_subsets(k, n);
    for (const auto& j : t.subsets) t.rows.push_back(valuation_dual_rectangle(k, n, j));
    t.graph_key = key_with_empty(t.axes);
    return t;
}

}  // namespace pmut

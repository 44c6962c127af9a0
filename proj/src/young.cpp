#include "pmut/young.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pmut {

YoungDiagram::YoungDiagram(std::vector<int> r) : rows(std::move(r)) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 0) throw std::invalid_argument("young diagram: negative row");
        if (i > 0 && rows[i] > rows[i - 1]) throw std::invalid_argument("young diagram: rows must weakly decrease");
    }
}

YoungDiagram YoungDiagram::rectangle(int height, int width) {
    if (height <= 0 || width <= 0) return {};
    return YoungDiagram(std::vector<int>(height, width));
}

int YoungDiagram::size() const {
    int s = 0;
    for (int r : rows) s += r;
    return s;
}

bool YoungDiagram::is_rectangle() const {
    return !rows.empty() && std::all_of(rows.begin(), rows.end(), [&](int r) { return r == rows[0]; });
}

std::string YoungDiagram::str() const {
    if (rows.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(rows[i]);
    }
    return s;
}

YoungDiagram YoungDiagram::parse(const std::string& s) {
    if (s == "e" || s.empty() || s == "()" || s == "0") return {};
    std::string t = s;
    if (t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    std::vector<int> rows;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        int v = std::stoi(part, &used);
        if (used != part.size()) throw std::invalid_argument("young diagram: bad row '" + part + "'");
        rows.push_back(v);
    }
    return YoungDiagram(std::move(rows));
}

bool operator<(const YoungDiagram& a, const YoungDiagram& b) {
    std::size_t m = std::max(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < m; ++i) {
        int x = i < a.rows.size() ? a.rows[i] : 0;
        int y = i < b.rows.size() ? b.rows[i] : 0;
        if (x != y) return x < y;
    }
    return false;
}

namespace {
void check_subset(const Subset& j, int k, int n) {
    if (static_cast<int>(j.size()) != k) throw std::invalid_argument("subset must have k elements");
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i] < 1 || j[i] > n) throw std::invalid_argument("subset element out of range");
        if (i && j[i] <= j[i - 1]) throw std::invalid_argument("subset must be strictly increasing");
    }
}
}  // namespace

// Walk the border from the north-east corner: step t is south when t is in J.
// The row reached by the r-th south step has length (n-k) - #west steps before it.
YoungDiagram young_from_subset(const Subset& j, int k, int n) {
    check_subset(j, k, n);
    std::vector<int> rows;
    for (int r = 0; r < k; ++r) {
        int west_before = j[r] - 1 - r;
        rows.push_back((n - k) - west_before);
    }
    return YoungDiagram(std::move(rows));
}

Subset subset_from_young(const YoungDiagram& y, int k, int n) {
    if (!y.fits(k, n - k)) throw std::invalid_argument("young diagram exceeds the box");
    Subset j;
    for (int r = 0; r < k; ++r) {
        int len = r < y.height() ? y.rows[r] : 0;
        j.push_back((n - k) - len + r + 1);
    }
    return j;
}

bool young_leq(const YoungDiagram& a, const YoungDiagram& b) {
    if (a.height() > b.height()) return false;
    for (int i = 0; i < a.height(); ++i)
        if (a.rows[i] > b.rows[i]) return false;
    return true;
}

YoungDiagram box_complement(int k, int n, int a, int b) {
    std::vector<int> rows(k, n - k);
    for (int r = k - a; r < k; ++r)
        if (r >= 0) rows[r] -= b;
    return YoungDiagram(std::move(rows));
}

std::string subset_str(const Subset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out + "}";
}

Subset parse_subset(const std::string& s) {
    Subset out;
    std::string t;
    for (char c : s)
        if (c != '{' && c != '}' && c != ' ') t += c;
    if (t.find(',') == std::string::npos) {
        for (char c : t) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad subset '" + s + "'");
            out.push_back(c - '0');
        }
    } else {
        std::stringstream ss(t);
        std::string part;
        while (std::getline(ss, part, ',')) out.push_back(std::stoi(part));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subset> all_subsets(int k, int n) {
    std::vector<Subset> out;
    Subset cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::size_t GridPoset::index_of(const YoungDiagram& y) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), y);
    if (it == elements.end() || *it != y) throw std::invalid_argument("not a poset element: " + y.str());
    return static_cast<std::size_t>(it - elements.begin());
}

std::vector<std::size_t> GridPoset::lower_covers(std::size_t a) const {
    std::vector<std::size_t> out;
    for (auto [lo, hi] : covers)
        if (hi == a) out.push_back(lo);
    return out;
}

bool GridPoset::leq(std::size_t a, std::size_t b) const { return young_leq(elements[a], elements[b]); }

std::vector<std::string> GridPoset::labels() const {
    std::vector<std::string> out;
    for (const auto& e : elements) out.push_back(e.str());
    return out;
}

std::string GridPoset::to_dot() const {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n";
    for (const auto& e : elements) os << "  \"" << e.str() << "\";\n";
    for (auto [lo, hi] : covers) os << "  \"" << elements[lo].str() << "\" -> \"" << elements[hi].str() << "\";\n";
    os << "}\n";
    return os.str();
}

GridPoset grid_poset(int k, int n) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("grid_poset: need 1 <= k <= n-1");
    GridPoset p;
    p.k = k;
    p.n = n;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= n - k; ++j) p.elements.push_back(YoungDiagram::rectangle(i, j));
    std::sort(p.elements.begin(), p.elements.end());
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= n - k; ++j) {
            std::size_t a = p.index_of(YoungDiagram::rectangle(i, j));
            if (j < n - k) p.covers.emplace_back(a, p.index_of(YoungDiagram::rectangle(i, j + 1)));
            if (i < k) p.covers.emplace_back(a, p.index_of(YoungDiagram::rectangle(i + 1, j)));
        }
    std::sort(p.covers.begin(), p.covers.end());
    return p;
}

RatVec PosetSubset::indicator(std::size_t dim) const {
    RatVec v(dim, Rat(0));
    for (auto m : members) v[m] = 1;
    return v;
}

namespace {
template <class Pred>
std::vector<PosetSubset> enumerate(const GridPoset& p, SubsetKind kind, Pred ok) {
    std::size_t d = p.size();
    if (d > 24) throw std::invalid_argument("poset too large for subset enumeration");
    std::vector<PosetSubset> out;
    for (unsigned long mask = 0; mask < (1UL << d); ++mask) {
        if (!ok(mask)) continue;
        PosetSubset s{{}, kind};
        for (std::size_t i = 0; i < d; ++i)
            if (mask >> i & 1) s.members.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}
}  // namespace

std::vector<PosetSubset> filters(const GridPoset& p) {
    return enumerate(p, SubsetKind::filter, [&](unsigned long m) {
        for (auto [lo, hi] : p.covers)
            if ((m >> lo & 1) && !(m >> hi & 1)) return false;
        return true;
    });
}

std::vector<PosetSubset> antichains(const GridPoset& p) {
    std::size_t d = p.size();
    return enumerate(p, SubsetKind::antichain, [&](unsigned long m) {
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                if (a != b && (m >> a & 1) && (m >> b & 1) && p.leq(a, b)) return false;
        return true;
    });
}

namespace {
// All 0/1 points satisfying the defining inequalities; both polytopes are 0/1 polytopes.
template <class Pred>
QPolytope zero_one_hull(const GridPoset& p, Pred ok) {
    std::size_t d = p.size();
    std::vector<RatVec> pts;
    for (unsigned long m = 0; m < (1UL << d); ++m) {
        if (!ok(m)) continue;
        RatVec v(d, Rat(0));
        for (std::size_t i = 0; i < d; ++i)
            if (m >> i & 1) v[i] = 1;
        pts.push_back(std::move(v));
    }
    return convex_hull(std::move(pts), p.labels());
}

// Maximal chains of the grid, as element bitmasks.
std::vector<unsigned long> maximal_chains(const GridPoset& p) {
    std::vector<unsigned long> out;
    std::vector<std::vector<std::size_t>> up(p.size());
    std::vector<bool> has_lower(p.size(), false);
    for (auto [lo, hi] : p.covers) {
        up[lo].push_back(hi);
        has_lower[hi] = true;
    }
    auto rec = [&](auto&& self, std::size_t a, unsigned long mask) -> void {
        mask |= 1UL << a;
        if (up[a].empty()) {
            out.push_back(mask);
            return;
        }
        for (auto b : up[a]) self(self, b, mask);
    };
    for (std::size_t a = 0; a < p.size(); ++a)
        if (!has_lower[a]) rec(rec, a, 0);
    return out;
}
}  // namespace

QPolytope order_polytope(const GridPoset& p) {
    return zero_one_hull(p, [&](unsigned long m) {
        for (auto [lo, hi] : p.covers)
            if ((m >> lo & 1) > (m >> hi & 1)) return false;
        return true;
    });
}

QPolytope chain_polytope(const GridPoset& p) {
    auto chains = maximal_chains(p);
    return zero_one_hull(p, [&](unsigned long m) {
        for (auto c : chains)
            if (__builtin_popcountl(m & c) > 1) return false;
        return true;
    });
}

RatVec transfer_point(const GridPoset& p, const RatVec& x) {
    if (x.size() != p.size()) throw std::invalid_argument("transfer_point: dimension mismatch");
    RatVec y(x.size());
    for (std::size_t a = 0; a < p.size(); ++a) {
        auto lower = p.lower_covers(a);
        if (lower.empty()) {
            y[a] = x[a];
            continue;
        }
        Rat best = x[a] - x[lower[0]];
        for (auto b : lower) best = std::min(best, Rat(x[a] - x[b]));
        y[a] = best;
    }
    return y;
}

std::vector<TransferStep> transfer_sequence(const GridPoset& p) {
    // A linear extension read from the top: larger i+j first, ties by larger height.
    std::vector<std::size_t> order;
    for (std::size_t a = 0; a < p.size(); ++a)
        if (!p.lower_covers(a).empty()) order.push_back(a);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = p.elements[a];
        const auto& y = p.elements[b];
        int sx = x.height() + x.width(), sy = y.height() + y.width();
        if (sx != sy) return sx > sy;
        return x.height() > y.height();
    });
    std::vector<TransferStep> out;
    std::size_t d = p.size();
    for (auto a : order) {
        ZVec w(d, 0);
        w[a] = -1;
        std::vector<ZVec> factor;
        for (auto b : p.lower_covers(a)) {
            ZVec u(d, 0);
            u[b] = -1;
            factor.push_back(u);
        }
        out.push_back({a, PLMap::make(w, factor)});
    }
    return out;
}

TransferChain transfer_chain(const GridPoset& p) {
    TransferChain out;
    out.images.push_back(order_polytope(p));
    for (const auto& step : transfer_sequence(p)) {
        auto img = apply_pl_map(out.images.back(), step.map);
        if (!img.convex) {
            out.convex = false;
            break;
        }
        out.images.push_back(std::move(img.image));
    }
    return out;
}

}  // namespace pmut

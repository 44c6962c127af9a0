#include "pmut/polytope.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace pmut {

namespace {

struct Facet {
    RatVec a;  // chart coordinates, primitive integral
    Rat b;
    Bits inc;  // over the working point list
};

RatVec project(const RatVec& x, const std::vector<std::size_t>& chart) {
    RatVec y;
    y.reserve(chart.size());
    for (auto c : chart) y.push_back(x[c]);
    return y;
}

// Hyperplane through pts (spanning dimension d-1), interior strictly on the >= side.
bool hyperplane_through(const std::vector<const RatVec*>& pts, const RatVec& interior, RatVec& a, Rat& b) {
    std::size_t d = interior.size();
    std::vector<RatVec> rows;
    rows.reserve(pts.size());
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RatVec r(d);
        for (std::size_t j = 0; j < d; ++j) r[j] = (*pts[i])[j] - (*pts[0])[j];
        rows.push_back(std::move(r));
    }
    if (rows.empty()) rows.push_back(RatVec(d, Rat(0)));
    auto ns = nullspace(rows, d);
    if (ns.size() != 1) return false;
    a = to_rat(primitive(ns[0]));
    b = dot(a, *pts[0]);
    Rat s = dot(a, interior);
    if (s == b) return false;
    if (s < b) {
        for (auto& x : a) x = -x;
        b = -b;
    }
    return true;
}

struct ChartHull {
    std::vector<Facet> facets;
    std::vector<std::size_t> vertex_ids;  // indices into the point list
};

// Beneath-beyond over full-dimensional points y in Q^d, d >= 1.
ChartHull beneath_beyond(const std::vector<RatVec>& y, const std::vector<std::size_t>& simplex) {
    std::size_t n = y.size();
    std::size_t d = y[0].size();
    RatVec interior(d, Rat(0));
    for (auto i : simplex)
        for (std::size_t j = 0; j < d; ++j) interior[j] += y[i][j];
    for (auto& x : interior) x /= Rat(static_cast<long>(simplex.size()));

    Bits kept(n);
    for (auto i : simplex) kept.set(i);

    std::vector<Facet> facets;
    for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
        std::vector<const RatVec*> pts;
        for (std::size_t t = 0; t < simplex.size(); ++t)
            if (t != skip) pts.push_back(&y[simplex[t]]);
        Facet f;
        if (!hyperplane_through(pts, interior, f.a, f.b)) throw std::logic_error("degenerate initial simplex");
        f.inc = Bits(n);
        for (std::size_t t = 0; t < simplex.size(); ++t)
            if (t != skip) f.inc.set(simplex[t]);
        facets.push_back(std::move(f));
    }

    Bits in_simplex(n);
    for (auto i : simplex) in_simplex.set(i);

    for (std::size_t q = 0; q < n; ++q) {
        if (in_simplex.test(q)) continue;
        std::vector<std::size_t> vis, nonvis;
        std::vector<Rat> side(facets.size());
        for (std::size_t f = 0; f < facets.size(); ++f) {
            side[f] = dot(facets[f].a, y[q]) - facets[f].b;
            (side[f] < 0 ? vis : nonvis).push_back(f);
        }
        if (vis.empty()) continue;
        kept.set(q);

        std::vector<Facet> fresh;
        for (auto f1 : vis) {
            for (auto f2 : nonvis) {
                Bits s = facets[f1].inc & facets[f2].inc;
                if (s.count() + 1 < d) continue;
                std::size_t holders = 0;
                for (const auto& g : facets)
                    if (s.is_subset_of(g.inc) && ++holders > 2) break;
                if (holders != 2) continue;
                std::vector<const RatVec*> pts{&y[q]};
                for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) pts.push_back(&y[i]);
                Facet nf;
                if (!hyperplane_through(pts, interior, nf.a, nf.b)) throw std::logic_error("degenerate ridge");
                if (nf.a == facets[f2].a && nf.b == facets[f2].b) continue;
                bool dup = false;
                for (const auto& g : fresh)
                    if (g.a == nf.a && g.b == nf.b) dup = true;
                if (!dup) fresh.push_back(std::move(nf));
            }
        }
        for (auto f : nonvis)
            if (side[f] == 0) facets[f].inc.set(q);
        std::vector<Facet> next;
        next.reserve(nonvis.size() + fresh.size());
        for (auto f : nonvis) next.push_back(std::move(facets[f]));
        for (auto& nf : fresh) {
            nf.inc = Bits(n);
            for (auto i = kept.find_first(); i != Bits::npos; i = kept.find_next(i))
                if (dot(nf.a, y[i]) == nf.b) nf.inc.set(i);
            next.push_back(std::move(nf));
        }
        facets = std::move(next);
    }

    ChartHull out;
    for (auto i = kept.find_first(); i != Bits::npos; i = kept.find_next(i)) {
        Bits common(n);
        common.set();
        std::size_t holders = 0;
        for (const auto& f : facets) {
            if (!f.inc.test(i)) continue;
            common &= f.inc;
            ++holders;
        }
        if (holders >= d && common.count() == 1) out.vertex_ids.push_back(i);
    }
    out.facets = std::move(facets);
    return out;
}

void sum_simplices(const std::vector<RatVec>& v, const std::vector<Bits>& facets, const Bits& face,
                   std::size_t dim, std::vector<std::size_t>& apexes, Rat& acc) {
    if (face.count() == dim + 1) {
        std::vector<std::size_t> idx = apexes;
        for (auto i = face.find_first(); i != Bits::npos; i = face.find_next(i)) idx.push_back(i);
        std::size_t d = v[0].size();
        std::vector<RatVec> m;
        m.reserve(d);
        for (std::size_t r = 1; r < idx.size(); ++r) {
            RatVec row(d);
            for (std::size_t j = 0; j < d; ++j) row[j] = v[idx[r]][j] - v[idx[0]][j];
            m.push_back(std::move(row));
        }
        acc += abs(determinant(std::move(m)));
        return;
    }
    auto apex = face.find_first();
    std::vector<Bits> cand;
    for (const auto& g : facets) {
        if (face.is_subset_of(g)) continue;
        Bits r = face & g;
        if (r.none()) continue;
        cand.push_back(std::move(r));
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    apexes.push_back(apex);
    for (std::size_t i = 0; i < cand.size(); ++i) {
        if (cand[i].test(apex)) continue;
        bool maximal = true;
        for (std::size_t j = 0; j < cand.size() && maximal; ++j)
            if (j != i && cand[i].is_proper_subset_of(cand[j])) maximal = false;
        if (maximal) sum_simplices(v, facets, cand[i], dim - 1, apexes, acc);
    }
    apexes.pop_back();
}

long long to_ll(const Int& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("coefficient exceeds 64 bits");
    return z.get_si();
}

Rat ceil_rat(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return Rat(q);
}
Rat floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return Rat(q);
}

template <class Visit>
void scan_lattice(const QPolytope& p, long long t, Visit&& visit) {
    if (p.vertices.empty()) return;
    std::size_t d = p.ambient_dim;
    ZVec lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
        Rat mn = p.vertices[0][j], mx = p.vertices[0][j];
        for (const auto& v : p.vertices) {
            if (v[j] < mn) mn = v[j];
            if (v[j] > mx) mx = v[j];
        }
        lo[j] = to_ll(ceil_rat(mn * static_cast<long>(t)).get_num());
        hi[j] = to_ll(floor_rat(mx * static_cast<long>(t)).get_num());
        if (lo[j] > hi[j]) return;
    }
    std::size_t m = p.halfspaces.size();
    ZMat a(m, ZVec(d));
    ZVec rhs(m);
    // tail[c][j] = best achievable contribution of coordinates j.. for constraint c
    ZMat tail(m, ZVec(d + 1, 0));
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t j = 0; j < d; ++j) a[c][j] = to_ll(p.halfspaces[c].normal[j]);
        rhs[c] = to_ll(ceil_rat(p.halfspaces[c].offset * static_cast<long>(t)).get_num());
        for (std::size_t j = d; j-- > 0;)
            tail[c][j] = tail[c][j + 1] + std::max(a[c][j] * lo[j], a[c][j] * hi[j]);
    }
    ZVec x(d), partial(m, 0);
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == d) {
            visit(x);
            return;
        }
        for (long long val = lo[j]; val <= hi[j]; ++val) {
            bool ok = true;
            for (std::size_t c = 0; c < m && ok; ++c)
                if (partial[c] + a[c][j] * val + tail[c][j + 1] < rhs[c]) ok = false;
            if (!ok) continue;
            x[j] = val;
            for (std::size_t c = 0; c < m; ++c) partial[c] += a[c][j] * val;
            self(self, j + 1);
            for (std::size_t c = 0; c < m; ++c) partial[c] -= a[c][j] * val;
        }
    };
    rec(rec, 0);
}

}  // namespace

bool QPolytope::contains(const RatVec& x) const {
    if (vertices.empty()) return false;
    for (const auto& h : halfspaces)
        if (dot(h.normal, x) < h.offset) return false;
    return true;
}

bool QPolytope::integral() const {
    for (const auto& v : vertices)
        if (!is_integral(v)) return false;
    return true;
}

QPolytope convex_hull(std::vector<RatVec> points, std::vector<std::string> labels) {
    if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
    std::size_t n_amb = points[0].size();
    for (const auto& p : points)
        if (p.size() != n_amb) throw std::invalid_argument("convex_hull: dimension mismatch");
    if (!labels.empty() && labels.size() != n_amb) throw std::invalid_argument("convex_hull: label count mismatch");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    QPolytope out;
    out.ambient_dim = n_amb;
    out.labels = std::move(labels);

    // affine hull: independent differences, in insertion order
    std::vector<RatVec> dirs;
    std::vector<std::size_t> simplex{0};
    for (std::size_t i = 1; i < points.size() && dirs.size() < n_amb; ++i) {
        RatVec r(n_amb);
        for (std::size_t j = 0; j < n_amb; ++j) r[j] = points[i][j] - points[0][j];
        dirs.push_back(r);
        if (rank_of(dirs) == dirs.size())
            simplex.push_back(i);
        else
            dirs.pop_back();
    }
    std::size_t d = dirs.size();
    out.affine_dim = d;
    Echelon ech = rref(dirs);
    out.chart = ech.pivots;

    // equations of the affine hull
    for (const auto& z : nullspace(ech.rows.empty() ? std::vector<RatVec>{RatVec(n_amb, Rat(0))} : ech.rows, n_amb)) {
        IntVec nz = primitive(z);
        Rat c = dot(nz, points[0]);
        IntVec neg(nz);
        for (auto& x : neg) x = -x;
        out.halfspaces.push_back({nz, c, true});
        out.halfspaces.push_back({neg, -c, true});
    }

    if (d == 0) {
        out.vertices = {points[0]};
        return out;
    }

    std::vector<RatVec> y;
    y.reserve(points.size());
    for (const auto& p : points) y.push_back(project(p, out.chart));
    ChartHull ch = beneath_beyond(y, simplex);

    for (auto i : ch.vertex_ids) out.vertices.push_back(points[i]);
    std::sort(out.vertices.begin(), out.vertices.end());

    std::vector<Halfspace> facets;
    for (const auto& f : ch.facets) {
        RatVec amb(n_amb, Rat(0));
        for (std::size_t j = 0; j < d; ++j) amb[out.chart[j]] = f.a[j];
        IntVec nz = primitive(amb);
        facets.push_back({nz, dot(nz, out.vertices.empty() ? points[0] : points[f.inc.find_first()]), false});
    }
    std::sort(facets.begin(), facets.end(),
              [](const Halfspace& x, const Halfspace& y) { return std::tie(x.normal, x.offset) < std::tie(y.normal, y.offset); });
    std::vector<Halfspace> all = std::move(facets);
    std::size_t nf = all.size();
    for (auto& h : out.halfspaces) all.push_back(std::move(h));
    out.halfspaces = std::move(all);

    out.incidence.assign(nf, Bits(out.vertices.size()));
    for (std::size_t f = 0; f < nf; ++f)
        for (std::size_t v = 0; v < out.vertices.size(); ++v)
            if (dot(out.halfspaces[f].normal, out.vertices[v]) == out.halfspaces[f].offset) out.incidence[f].set(v);
    return out;
}

namespace {
// Rows [a | b] for <a, x> = b, kept in reduced echelon form.
struct Tight {
    std::vector<RatVec> rows;
    std::vector<std::size_t> piv;
};

// false when the row is dependent or inconsistent
bool add_tight(Tight& t, RatVec row, std::size_t dim) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        Rat f = row[t.piv[r]];
        if (f == 0) continue;
        for (std::size_t c = 0; c <= dim; ++c) row[c] -= f * t.rows[r][c];
    }
    std::size_t p = 0;
    while (p < dim && row[p] == 0) ++p;
    if (p == dim) return false;
    Rat inv = 1 / row[p];
    for (auto& x : row) x *= inv;
    for (auto& other : t.rows) {
        Rat f = other[p];
        if (f == 0) continue;
        for (std::size_t c = 0; c <= dim; ++c) other[c] -= f * row[c];
    }
    t.rows.push_back(std::move(row));
    t.piv.push_back(p);
    return true;
}
}  // namespace

std::vector<RatVec> vertices_from_halfspaces(std::size_t dim, const std::vector<Halfspace>& hs) {
    std::vector<RatVec> ineq;
    Tight base;
    for (const auto& h : hs) {
        RatVec row = to_rat(h.normal);
        if (row.size() != dim) throw std::invalid_argument("vertices_from_halfspaces: dimension mismatch");
        row.push_back(h.offset);
        if (h.equation) {
            RatVec probe = row;
            if (!add_tight(base, probe, dim)) {
                // dependent is fine, inconsistent means empty
                Tight t = base;
                for (std::size_t r = 0; r < t.rows.size(); ++r) {
                    Rat f = probe[t.piv[r]];
                    if (f != 0)
                        for (std::size_t c = 0; c <= dim; ++c) probe[c] -= f * t.rows[r][c];
                }
                if (probe[dim] != 0) return {};
            }
        } else {
            ineq.push_back(std::move(row));
        }
    }
    std::vector<RatVec> out;
    auto feasible = [&](const RatVec& x) {
        for (const auto& r : ineq) {
            Rat s = 0;
            for (std::size_t c = 0; c < dim; ++c)
                if (r[c] != 0) s += r[c] * x[c];
            if (s < r[dim]) return false;
        }
        return true;
    };
    auto dfs = [&](auto&& self, std::size_t start, const Tight& t) -> void {
        if (t.rows.size() == dim) {
            RatVec x(dim);
            for (std::size_t r = 0; r < dim; ++r) x[t.piv[r]] = t.rows[r][dim];
            if (feasible(x)) out.push_back(std::move(x));
            return;
        }
        if (ineq.size() - start < dim - t.rows.size()) return;
        for (std::size_t i = start; i < ineq.size(); ++i) {
            Tight next = t;
            if (add_tight(next, ineq[i], dim)) self(self, i + 1, next);
        }
    };
    dfs(dfs, 0, base);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rat relative_volume(const QPolytope& p, const std::vector<std::size_t>& chart) {
    if (p.vertices.empty()) return 0;
    if (p.affine_dim == 0) return 1;
    if (chart.size() != p.affine_dim) throw std::invalid_argument("relative_volume: chart size mismatch");
    std::vector<RatVec> v;
    v.reserve(p.vertices.size());
    for (const auto& x : p.vertices) v.push_back(project(x, chart));
    Bits all(v.size());
    all.set();
    std::vector<std::size_t> apexes;
    Rat acc = 0;
    sum_simplices(v, p.incidence, all, p.affine_dim, apexes, acc);
    return acc / Rat(factorial(static_cast<unsigned>(p.affine_dim)));
}

Rat relative_volume(const QPolytope& p) { return relative_volume(p, p.chart); }

Rat volume(const QPolytope& p) {
    if (!p.full_dimensional()) return 0;
    return relative_volume(p);
}

std::vector<ZVec> lattice_points(const QPolytope& p, long long dilation) {
    if (dilation < 1) throw std::invalid_argument("lattice_points: dilation must be positive");
    std::vector<ZVec> out;
    scan_lattice(p, dilation, [&](const ZVec& x) { out.push_back(x); });
    return out;
}

std::size_t lattice_count(const QPolytope& p, long long dilation) {
    if (dilation < 1) throw std::invalid_argument("lattice_count: dilation must be positive");
    std::size_t n = 0;
    scan_lattice(p, dilation, [&](const ZVec&) { ++n; });
    return n;
}

std::vector<std::pair<std::size_t, std::size_t>> edges(const QPolytope& p) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Bits common(n);
            common.set();
            for (const auto& f : p.incidence)
                if (f.test(i) && f.test(j)) common &= f;
            if (common.count() == 2) out.emplace_back(i, j);
        }
    return out;
}

std::optional<QPolytope> cut(const QPolytope& p, const RatVec& h, const Rat& c) {
    std::vector<RatVec> pts;
    std::vector<Rat> val(p.vertices.size());
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        val[i] = dot(h, p.vertices[i]) - c;
        if (val[i] >= 0) pts.push_back(p.vertices[i]);
    }
    if (pts.empty()) return std::nullopt;
    if (pts.size() == p.vertices.size()) return p;
    for (auto [i, j] : edges(p)) {
        if ((val[i] > 0 && val[j] < 0) || (val[i] < 0 && val[j] > 0)) {
            Rat t = val[i] / (val[i] - val[j]);
            RatVec x(p.ambient_dim);
            for (std::size_t k = 0; k < x.size(); ++k) x[k] = p.vertices[i][k] + t * (p.vertices[j][k] - p.vertices[i][k]);
            pts.push_back(std::move(x));
        }
    }
    return convex_hull(std::move(pts), p.labels);
}

UnimodularMap UnimodularMap::make(ZMat matrix, ZVec translation) {
    std::size_t d = matrix.size();
    for (const auto& r : matrix)
        if (r.size() != d) throw std::invalid_argument("unimodular map: matrix not square");
    if (translation.empty()) translation.assign(d, 0);
    if (translation.size() != d) throw std::invalid_argument("unimodular map: translation size");
    UnimodularMap t{std::move(matrix), std::move(translation)};
    long long det = t.det();
    if (det != 1 && det != -1) throw std::invalid_argument("unimodular map: determinant is not +-1");
    return t;
}

UnimodularMap UnimodularMap::identity(std::size_t d) {
    ZMat m(d, ZVec(d, 0));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
    return {m, ZVec(d, 0)};
}

long long UnimodularMap::det() const {
    std::vector<RatVec> m;
    for (const auto& r : matrix) {
        RatVec row;
        for (auto x : r) row.emplace_back(static_cast<long>(x));
        m.push_back(std::move(row));
    }
    if (m.empty()) return 1;
    Rat d = determinant(std::move(m));
    return d.get_num().get_si();
}

RatVec UnimodularMap::apply(const RatVec& x) const {
    std::size_t d = matrix.size();
    RatVec y(d);
    for (std::size_t i = 0; i < d; ++i) {
        Rat s = static_cast<long>(translation[i]);
        for (std::size_t j = 0; j < d; ++j)
            if (matrix[i][j] != 0) s += static_cast<long>(matrix[i][j]) * x[j];
        y[i] = s;
    }
    return y;
}

UnimodularMap UnimodularMap::inverse() const {
    std::size_t d = matrix.size();
    std::vector<RatVec> aug(d, RatVec(2 * d, Rat(0)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug[i][j] = static_cast<long>(matrix[i][j]);
        aug[i][d + i] = 1;
    }
    Echelon e = rref(aug);
    ZMat inv(d, ZVec(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) inv[i][j] = e.rows[i][d + j].get_num().get_si();
    ZVec t(d, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) t[i] -= inv[i][j] * translation[j];
    return {inv, t};
}

UnimodularMap UnimodularMap::compose(const UnimodularMap& inner) const {
    std::size_t d = matrix.size();
    ZMat m(d, ZVec(d, 0));
    ZVec t(translation);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) m[i][j] += matrix[i][k] * inner.matrix[k][j];
        for (std::size_t k = 0; k < d; ++k) t[i] += matrix[i][k] * inner.translation[k];
    }
    return {m, t};
}

QPolytope apply_unimodular(const QPolytope& p, const UnimodularMap& t) {
    if (t.matrix.size() != p.ambient_dim) throw std::invalid_argument("apply_unimodular: dimension mismatch");
    std::vector<RatVec> img;
    img.reserve(p.vertices.size());
    for (const auto& v : p.vertices) img.push_back(t.apply(v));
    return convex_hull(std::move(img), p.labels);
}

PLMap PLMap::make(ZVec w, std::vector<ZVec> factor, std::optional<UnimodularMap> post) {
    Int g = 0;
    for (auto x : w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Int(static_cast<long>(x)).get_mpz_t());
    if (g != 1) throw std::invalid_argument("PLMap: w must be primitive");
    for (const auto& u : factor) {
        if (u.size() != w.size()) throw std::invalid_argument("PLMap: factor dimension mismatch");
        long long s = 0;
        for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * w[i];
        if (s != 0) throw std::invalid_argument("PLMap: factor not orthogonal to w");
    }
    if (post && post->matrix.size() != w.size()) throw std::invalid_argument("PLMap: post map dimension mismatch");
    std::sort(factor.begin(), factor.end());
    factor.erase(std::unique(factor.begin(), factor.end()), factor.end());
    return {std::move(w), std::move(factor), std::move(post)};
}

std::size_t PLMap::piece_of(const RatVec& v) const {
    std::size_t best = 0;
    Rat bv;
    for (std::size_t i = 0; i < factor.size(); ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (factor[i][j] != 0) s += static_cast<long>(factor[i][j]) * v[j];
        if (i == 0 || s < bv) {
            bv = s;
            best = i;
        }
    }
    return best;
}

RatVec PLMap::apply(const RatVec& v) const {
    RatVec r(v);
    if (!factor.empty()) {
        Rat vmin;
        for (std::size_t i = 0; i < factor.size(); ++i) {
            Rat s = 0;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (factor[i][j] != 0) s += static_cast<long>(factor[i][j]) * v[j];
            if (i == 0 || s < vmin) vmin = s;
        }
        for (std::size_t j = 0; j < r.size(); ++j)
            if (w[j] != 0) r[j] -= vmin * static_cast<long>(w[j]);
    }
    if (post_linear) r = post_linear->apply(r);
    return r;
}

PLMap PLMap::inverse() const {
    ZVec nw(w);
    for (auto& x : nw) x = -x;
    if (!post_linear) return make(nw, factor);
    // (T o phi_{w,F})^{-1} = T^{-1} o phi_{-Mw, M^{-T} F} o ... for linear T = M
    for (auto x : post_linear->translation)
        if (x != 0) throw std::invalid_argument("PLMap::inverse: translated post map");
    const auto& m = post_linear->matrix;
    UnimodularMap minv = post_linear->inverse();
    std::size_t d = w.size();
    ZVec w2(d, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) w2[i] -= m[i][j] * w[j];
    std::vector<ZVec> f2;
    for (const auto& u : factor) {
        ZVec v(d, 0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) v[i] += minv.matrix[j][i] * u[j];
        f2.push_back(v);
    }
    return make(w2, f2, minv);
}

PLImage apply_pl_map(const QPolytope& p, const PLMap& m) {
    if (m.dim() != p.ambient_dim) throw std::invalid_argument("apply_pl_map: dimension mismatch");
    PLImage out;
    std::vector<QPolytope> cells;
    if (m.factor.size() <= 1) {
        cells.push_back(p);
    } else {
        for (std::size_t i = 0; i < m.factor.size(); ++i) {
            std::optional<QPolytope> q = p;
            for (std::size_t j = 0; j < m.factor.size() && q; ++j) {
                if (j == i) continue;
                RatVec h(p.ambient_dim);
                for (std::size_t k = 0; k < h.size(); ++k)
                    h[k] = static_cast<long>(m.factor[j][k] - m.factor[i][k]);
                q = cut(*q, h, 0);
            }
            if (q && q->affine_dim == p.affine_dim) cells.push_back(std::move(*q));
        }
    }
    std::vector<RatVec> all;
    for (const auto& c : cells) {
        std::vector<RatVec> img;
        for (const auto& v : c.vertices) img.push_back(m.apply(v));
        all.insert(all.end(), img.begin(), img.end());
        out.pieces.push_back(convex_hull(std::move(img), p.labels));
    }
    out.hull = convex_hull(std::move(all), p.labels);
    if (out.pieces.size() == 1) {
        out.convex = true;
    } else if (out.hull.affine_dim == p.affine_dim) {
        Rat sum = 0;
        for (const auto& q : out.pieces) {
            if (q.affine_dim != p.affine_dim) continue;
            sum += relative_volume(q, out.hull.chart);
        }
        out.convex = (sum == relative_volume(out.hull));
    }
    if (out.convex) out.image = out.hull;
    return out;
}

QPolytope polar_dual(const QPolytope& p) {
    if (!p.full_dimensional() || p.vertices.empty()) throw std::invalid_argument("polar_dual: origin not interior");
    std::vector<RatVec> pts;
    for (const auto& h : p.halfspaces) {
        if (h.equation) continue;
        if (h.offset >= 0) throw std::invalid_argument("polar_dual: origin not interior");
        RatVec v = to_rat(h.normal);
        for (auto& x : v) x /= -h.offset;
        pts.push_back(std::move(v));
    }
    return convex_hull(std::move(pts), p.labels);
}

bool polytopes_equal(const QPolytope& a, const QPolytope& b) {
    if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("polytopes_equal: dimension mismatch");
    return a.vertices == b.vertices;
}

namespace {
nlohmann::json int_json(const Int& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}
Int json_int(const nlohmann::json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<long>());
}
}  // namespace

nlohmann::json polytope_to_json(const QPolytope& p) {
    nlohmann::json j;
    j["dim"] = p.ambient_dim;
    j["labels"] = p.labels;
    auto& vs = j["vertices"] = nlohmann::json::array();
    for (const auto& v : p.vertices) {
        auto row = nlohmann::json::array();
        for (const auto& x : v) row.push_back(rat_to_string(x));
        vs.push_back(row);
    }
    auto& hs = j["halfspaces"] = nlohmann::json::array();
    for (const auto& h : p.halfspaces) {
        nlohmann::json e;
        auto nrm = nlohmann::json::array();
        for (const auto& x : h.normal) nrm.push_back(int_json(x));
        e["normal"] = nrm;
        if (is_integral(h.offset))
            e["offset"] = int_json(h.offset.get_num());
        else
            e["offset"] = rat_to_string(h.offset);
        hs.push_back(e);
    }
    return j;
}

QPolytope polytope_from_json(const nlohmann::json& j) {
    std::size_t d = j.at("dim").get<std::size_t>();
    std::vector<RatVec> pts;
    for (const auto& row : j.at("vertices")) {
        RatVec v;
        for (const auto& x : row) v.push_back(x.is_string() ? rat_from_string(x.get<std::string>()) : Rat(x.get<long>()));
        if (v.size() != d) throw std::invalid_argument("polytope json: vertex dimension mismatch");
        pts.push_back(std::move(v));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    QPolytope p = convex_hull(std::move(pts), std::move(labels));
    if (j.contains("halfspaces")) {
        std::size_t k = 0;
        for (const auto& e : j.at("halfspaces")) {
            if (k >= p.halfspaces.size()) throw std::invalid_argument("polytope json: extra halfspaces");
            IntVec nrm;
            for (const auto& x : e.at("normal")) nrm.push_back(json_int(x));
            Rat off = e.at("offset").is_string() ? rat_from_string(e.at("offset").get<std::string>())
                                                 : Rat(json_int(e.at("offset")));
            if (nrm != p.halfspaces[k].normal || off != p.halfspaces[k].offset)
                throw std::invalid_argument("polytope json: halfspaces disagree with vertices");
            ++k;
        }
        if (k != p.halfspaces.size()) throw std::invalid_argument("polytope json: missing halfspaces");
    }
    return p;
}

}  // namespace pmut

#include "pmut/rational.hpp"

#include <stdexcept>

namespace pmut {

std::string rat_to_string(const Rat& r) {
    Rat c(r);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

RatVec to_rat(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

RatVec to_rat(const std::vector<long>& v) {
    RatVec out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

bool is_integral(const Rat& r) { return r.get_den() == 1; }

bool is_integral(const RatVec& v) {
    for (const auto& x : v)
        if (!is_integral(x)) return false;
    return true;
}

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += Rat(a[i]) * b[i];
    return s;
}

IntVec primitive(const RatVec& v) {
    Int l = 1;
    for (const auto& x : v)
        if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVec out(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * l;
        out[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g == 0) throw std::invalid_argument("primitive: zero vector");
    for (auto& x : out) x /= g;
    return out;
}

Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

Echelon rref(std::vector<RatVec> rows) {
    Echelon e;
    if (rows.empty()) return e;
    std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Rat inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        e.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    e.rows = std::move(rows);
    return e;
}

std::size_t rank_of(const std::vector<RatVec>& rows) { return rref(rows).rows.size(); }

std::vector<RatVec> nullspace(const std::vector<RatVec>& rows, std::size_t ncols) {
    Echelon e = rref(rows);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (std::size_t j = 0; j < ncols; ++j) {
        if (is_pivot[j]) continue;
        RatVec z(ncols, Rat(0));
        z[j] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r) z[e.pivots[r]] = -e.rows[r][j];
        basis.push_back(std::move(z));
    }
    return basis;
}

Rat determinant(std::vector<RatVec> m) {
    std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

}  // namespace pmut

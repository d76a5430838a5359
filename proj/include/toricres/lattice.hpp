#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace toricres {

using Int = std::int64_t;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer addition");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer subtraction");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer multiplication");
    return r;
}

// Floor division for b > 0.
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

inline Int sum(const Vec& v) {
    Int s = 0;
    for (Int x : v) s = add(s, x);
    return s;
}

inline Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = add(a[i], b[i]);
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub(a[i], b[i]);
    return r;
}

inline Vec operator-(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub(0, a[i]);
    return r;
}

inline Vec scaled(const Vec& a, Int c) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], c);
    return r;
}

// a += c * b
inline void axpy(Vec& a, Int c, const Vec& b) {
    if (c == 0) return;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = add(a[i], mul(c, b[i]));
}

inline Int dot(const Vec& a, const Vec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = add(s, mul(a[i], b[i]));
    return s;
}

inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

inline bool leq(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Int vec_gcd(const Vec& v) {
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x);
    return g;
}

inline Vec unit_vector(std::size_t n, std::size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

inline Mat identity(std::size_t n) {
    Mat m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// Row vector times matrix: (v M)_j = sum_i v_i M[i][j].
inline Vec row_times(const Vec& v, const Mat& m, std::size_t ncols) {
    Vec r(ncols, 0);
    for (std::size_t i = 0; i < v.size(); ++i) axpy(r, v[i], m[i]);
    return r;
}

// Matrix times column vector.
inline Vec times_col(const Mat& m, const Vec& v) {
    Vec r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

// Row-style Hermite normal form of the lattice spanned by `rows`. Returns the
// nonzero rows in echelon form: strictly increasing pivot columns, positive
// pivots, and entries above each pivot reduced into [0, pivot).
inline Mat hermite_normal_form(Mat rows, std::size_t ncols) {
    for (const auto& r : rows)
        if (r.size() != ncols) fail(ErrorKind::InvalidInput, "row length mismatch in HNF");
    std::size_t p = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < ncols && p < rows.size(); ++c) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = p; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (best == rows.size() || std::llabs(rows[i][c]) < std::llabs(rows[best][c])))
                    best = i;
            if (best == rows.size()) break;
            std::swap(rows[p], rows[best]);
            bool done = true;
            for (std::size_t i = p + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Int q = rows[i][c] / rows[p][c];
                axpy(rows[i], -q, rows[p]);
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[p][c] == 0) continue;
        if (rows[p][c] < 0) rows[p] = -rows[p];
        for (std::size_t i = 0; i < p; ++i) {
            Int q = floor_div(rows[i][c], rows[p][c]);
            axpy(rows[i], -q, rows[p]);
        }
        pivots.push_back(c);
        ++p;
    }
    rows.resize(p);
    return rows;
}

inline std::size_t pivot_column(const Vec& row) {
    for (std::size_t c = 0; c < row.size(); ++c)
        if (row[c] != 0) return c;
    return row.size();
}

inline std::size_t rank(const Mat& rows, std::size_t ncols) {
    return hermite_normal_form(rows, ncols).size();
}

// Reduce v by an HNF basis: returns coefficients c with v - c*H reduced
// (entries at pivot columns in [0, pivot)), and the remainder.
inline std::pair<Vec, Vec> reduce_by_hnf(const Mat& hnf, Vec v) {
    Vec coeff(hnf.size(), 0);
    for (std::size_t k = 0; k < hnf.size(); ++k) {
        std::size_t c = pivot_column(hnf[k]);
        Int q = floor_div(v[c], hnf[k][c]);
        coeff[k] = q;
        axpy(v, -q, hnf[k]);
    }
    return {coeff, v};
}

inline bool in_lattice(const Mat& hnf, const Vec& v) {
    return is_zero(reduce_by_hnf(hnf, v).second);
}

// Nonzero invariant factors of the Smith normal form, in divisibility order.
inline Vec smith_invariants(Mat a, std::size_t ncols) {
    std::size_t nrows = a.size();
    for (const auto& r : a)
        if (r.size() != ncols) fail(ErrorKind::InvalidInput, "row length mismatch in SNF");
    Vec diag;
    std::size_t t = 0;
    while (t < nrows && t < ncols) {
        // Pick the smallest nonzero entry of the remaining block.
        std::size_t bi = nrows, bj = ncols;
        for (std::size_t i = t; i < nrows; ++i)
            for (std::size_t j = t; j < ncols; ++j)
                if (a[i][j] != 0 && (bi == nrows || std::llabs(a[i][j]) < std::llabs(a[bi][bj]))) {
                    bi = i;
                    bj = j;
                }
        if (bi == nrows) break;
        std::swap(a[t], a[bi]);
        for (auto& row : a) std::swap(row[t], row[bj]);
        bool clean = true;
        for (std::size_t i = t + 1; i < nrows; ++i) {
            Int q = a[i][t] / a[t][t];
            axpy(a[i], -q, a[t]);
            if (a[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < ncols; ++j) {
            Int q = a[t][j] / a[t][t];
            if (q != 0)
                for (std::size_t i = t; i < nrows; ++i) a[i][j] = sub(a[i][j], mul(q, a[i][t]));
            if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;
        // Enforce divisibility of the rest of the block by the pivot.
        bool divides = true;
        for (std::size_t i = t + 1; i < nrows && divides; ++i)
            for (std::size_t j = t + 1; j < ncols; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    axpy(a[t], 1, a[i]);
                    divides = false;
                    break;
                }
        if (!divides) continue;
        diag.push_back(std::llabs(a[t][t]));
        ++t;
    }
    return diag;
}

// True iff the vectors are part of a basis of Z^n.
inline bool is_regular(const Mat& rays) {
    if (rays.empty()) return true;
    std::size_t n = rays[0].size();
    for (const auto& r : rays)
        if (r.size() != n) fail(ErrorKind::InvalidInput, "ray dimension mismatch");
    Vec inv = smith_invariants(rays, n);
    if (inv.size() != rays.size()) return false;
    return std::all_of(inv.begin(), inv.end(), [](Int x) { return x == 1; });
}

// Vectors f_1..f_{n-r} such that rays + f form a basis of Z^n.
inline Mat complete_basis(const Mat& rays, std::size_t n) {
    if (!is_regular(rays)) fail(ErrorKind::InvalidInput, "vectors do not extend to a lattice basis");
    std::size_t r = rays.size();
    Mat a = rays;
    Mat w = identity(n);  // inverse of the accumulated column transform
    for (std::size_t i = 0; i < r; ++i) {
        while (true) {
            std::size_t best = n;
            for (std::size_t j = i; j < n; ++j)
                if (a[i][j] != 0 && (best == n || std::llabs(a[i][j]) < std::llabs(a[i][best]))) best = j;
            if (best == n) fail(ErrorKind::InvalidInput, "dependent vectors");
            if (best != i) {
                for (auto& row : a) std::swap(row[i], row[best]);
                std::swap(w[i], w[best]);
            }
            bool done = true;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (a[i][j] == 0) continue;
                Int q = a[i][j] / a[i][i];
                for (auto& row : a) row[j] = sub(row[j], mul(q, row[i]));
                axpy(w[i], q, w[j]);
                if (a[i][j] != 0) done = false;
            }
            if (done) break;
        }
    }
    return Mat(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
}

// Inverse of a unimodular integer matrix.
inline Mat unimodular_inverse(const Mat& f) {
    std::size_t n = f.size();
    Mat a(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (f[i].size() != n) fail(ErrorKind::InvalidInput, "matrix is not square");
        a[i] = f[i];
        a[i].resize(2 * n, 0);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        while (true) {
            std::size_t best = n;
            for (std::size_t i = c; i < n; ++i)
                if (a[i][c] != 0 && (best == n || std::llabs(a[i][c]) < std::llabs(a[best][c]))) best = i;
            if (best == n) fail(ErrorKind::InvalidInput, "matrix is singular");
            std::swap(a[c], a[best]);
            bool done = true;
            for (std::size_t i = c + 1; i < n; ++i) {
                if (a[i][c] == 0) continue;
                axpy(a[i], -(a[i][c] / a[c][c]), a[c]);
                if (a[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (std::llabs(a[c][c]) != 1) fail(ErrorKind::InvalidInput, "matrix is not unimodular");
        if (a[c][c] < 0) a[c] = -a[c];
    }
    for (std::size_t c = n; c-- > 0;)
        for (std::size_t i = 0; i < c; ++i) axpy(a[i], -a[i][c], a[c]);
    Mat inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i] = Vec(a[i].begin() + static_cast<std::ptrdiff_t>(n), a[i].end());
    return inv;
}

// Fourier-Motzkin feasibility of {x : row.coeff . x >= row.rhs} over Q.
struct Inequality {
    Vec coeff;
    Int rhs = 0;
    auto operator<=>(const Inequality&) const = default;
};

inline bool feasible(std::vector<Inequality> rows, std::size_t nvars) {
    auto normalize = [](Inequality& q) {
        Int g = std::gcd(vec_gcd(q.coeff), q.rhs);
        if (g > 1) {
            for (auto& c : q.coeff) c /= g;
            q.rhs /= g;
        }
    };
    for (std::size_t v = 0; v < nvars; ++v) {
        std::vector<Inequality> pos, neg, out;
        for (auto& q : rows) {
            if (q.coeff[v] > 0) pos.push_back(q);
            else if (q.coeff[v] < 0) neg.push_back(q);
            else out.push_back(q);
        }
        for (const auto& p : pos)
            for (const auto& m : neg) {
                Inequality q;
                Int a = p.coeff[v], b = -m.coeff[v];
                q.coeff = scaled(p.coeff, b) + scaled(m.coeff, a);
                q.rhs = add(mul(p.rhs, b), mul(m.rhs, a));
                normalize(q);
                out.push_back(std::move(q));
            }
        std::set<Inequality> uniq(out.begin(), out.end());
        rows.assign(uniq.begin(), uniq.end());
        for (const auto& q : rows)
            if (is_zero(q.coeff) && q.rhs > 0) return false;
    }
    for (const auto& q : rows)
        if (q.rhs > 0) return false;
    return true;
}

}  // namespace toricres

#pragma once

#include <functional>
#include <vector>

#include "binomial.hpp"
#include "hasse.hpp"
#include "standard_basis.hpp"

namespace toricres {

// Arithmetic in F_p on int64 residues.
namespace modp {

inline Int reduce(Int a, Int p) { return ((a % p) + p) % p; }

inline Int power(Int a, Int e, Int p) {
    a = reduce(a, p);
    if (e < 0) {
        if (a == 0) fail(ErrorKind::InvalidInput, "inverting zero mod p");
        a = power(a, p - 2, p);
        e = -e;
    }
    Int r = 1 % p;
    while (e > 0) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

// x^a * y^g at a point with x in F_p^r, y in (F_p^*)^m.
inline Int monomial(const Vec& a, const Vec& g, const Vec& x, const Vec& y, Int p) {
    Int v = 1 % p;
    for (std::size_t i = 0; i < a.size(); ++i) v = v * power(x[i], a[i], p) % p;
    for (std::size_t j = 0; j < g.size(); ++j) v = v * power(y[j], g[j], p) % p;
    return v;
}

inline std::size_t rank(Mat rows, Int p) {
    std::size_t rk = 0;
    std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < ncols && rk < rows.size(); ++c) {
        std::size_t piv = rk;
        while (piv < rows.size() && reduce(rows[piv][c], p) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rk]);
        Int inv = power(rows[rk][c], -1, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rk) continue;
            Int f = reduce(rows[i][c], p) * inv % p;
            if (f == 0) continue;
            for (std::size_t k = 0; k < ncols; ++k) rows[i][k] = reduce(rows[i][k] - f * reduce(rows[rk][k], p), p);
        }
        ++rk;
    }
    return rk;
}

}  // namespace modp

// Calls visit(x, y) for every x in F_p^r and y in (F_p^*)^m.
inline void for_each_point(std::size_t r, std::size_t m, Int p, const std::function<void(const Vec&, const Vec&)>& visit) {
    Vec x(r, 0), y(m, 1);
    for (;;) {
        visit(x, y);
        std::size_t i = 0;
        for (; i < r + m; ++i) {
            if (i < r) {
                if (++x[i] < p) break;
                x[i] = 0;
            } else {
                if (++y[i - r] < p) break;
                y[i - r] = 1;
            }
        }
        if (i == r + m) return;
    }
}

// Per-prime comparison of the Hasse-monomial locus with the locus of the
// Hasse derivatives carrying their coefficients mod p.
struct HasseSetReport {
    Int prime = 0;
    std::size_t points = 0;
    std::size_t monomial_locus = 0;
    std::size_t derivative_locus = 0;
    bool equal = true;
};

inline HasseSetReport hasse_set_check(const Binomial& f, Int p) {
    std::vector<HasseMonomial> hm = hasse_monomials(f);
    HasseSetReport rep;
    rep.prime = p;
    for_each_point(f.alpha.size(), f.gamma.size(), p, [&](const Vec& x, const Vec& y) {
        ++rep.points;
        bool mono = true, deriv = true;
        for (const auto& h : hm) {
            const Vec& base = h.side == Side::U ? f.alpha : f.beta;
            Vec g = h.side == Side::U ? Vec(f.gamma.size(), 0) : f.gamma;
            Int value = modp::monomial(h.exponents, g, x, y, p);
            if (value != 0) mono = false;
            if (hasse_coefficient_mod(base, h.order, p) * value % p != 0) deriv = false;
        }
        rep.monomial_locus += mono;
        rep.derivative_locus += deriv;
        if (mono != deriv) rep.equal = false;
    });
    return rep;
}

// Jacobian criterion on every F_p-point of the chart ideal's zero set.
struct JacobianReport {
    Int prime = 0;
    std::size_t points_on_x = 0;
    std::size_t singular_points = 0;
    std::size_t codimension = 0;
};

inline JacobianReport jacobian_check(const ChartIdeal& id, Int p) {
    ChartIdeal gens = saturated_ideal(id);
    JacobianReport rep;
    rep.prime = p;
    rep.codimension = torus_lattice(id).rank;
    std::size_t r = id.r, m = id.m;
    for_each_point(r, m, p, [&](const Vec& x, const Vec& y) {
        Mat jac;
        bool on_x = true;
        auto add_row = [&](const Vec& a, const Vec& b, const Vec& g) {
            // x^a - x^b y^g and its partial derivatives
            Int val = modp::reduce(modp::monomial(a, Vec(m, 0), x, y, p) - modp::monomial(b, g, x, y, p), p);
            if (val != 0) on_x = false;
            Vec row;
            for (std::size_t i = 0; i < r; ++i) {
                Int d = 0;
                if (a[i] > 0) {
                    Vec a2 = a;
                    --a2[i];
                    d += modp::reduce(a[i], p) * modp::monomial(a2, Vec(m, 0), x, y, p);
                }
                if (b[i] > 0) {
                    Vec b2 = b;
                    --b2[i];
                    d -= modp::reduce(b[i], p) * modp::monomial(b2, g, x, y, p);
                }
                row.push_back(modp::reduce(d, p));
            }
            for (std::size_t j = 0; j < m; ++j) {
                Vec g2 = g;
                --g2[j];
                row.push_back(modp::reduce(-modp::reduce(g[j], p) * modp::monomial(b, g2, x, y, p), p));
            }
            jac.push_back(row);
        };
        for (const auto& b : gens.binomials) add_row(b.alpha, b.beta, b.gamma);
        for (const auto& g : gens.torus) add_row(Vec(r, 0), Vec(r, 0), g);
        if (!on_x) return;
        ++rep.points_on_x;
        if (modp::rank(jac, p) != rep.codimension) ++rep.singular_points;
    });
    return rep;
}

// Rank of the torus-relation exponents of the standard basis over F_p.
inline std::size_t nu_mod_p(const ChartIdeal& id, Int p) {
    StandardBasis sb = standard_basis(id);
    return modp::rank(sb.torus, p);
}

}  // namespace toricres

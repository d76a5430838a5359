#pragma once

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "binomial.hpp"
#include "lattice.hpp"

namespace toricres {

// Groebner bases of lattice ideals, with binomials stored as lattice vectors
// v (terms x^{v+} and x^{v-}, disjoint supports) oriented so x^{v+} leads.
namespace groebner {

using TermLess = std::function<bool(const Vec&, const Vec&)>;

inline Vec positive_part(const Vec& v) {
    Vec p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = std::max<Int>(v[i], 0);
    return p;
}

inline Vec negative_part(const Vec& v) {
    Vec p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = std::max<Int>(-v[i], 0);
    return p;
}

// Graded reverse lexicographic order in which variable z is the cheapest.
inline TermLess grevlex_last(std::size_t z) {
    return [z](const Vec& a, const Vec& b) {
        Int da = sum(a), db = sum(b);
        if (da != db) return da < db;
        if (a[z] != b[z]) return a[z] > b[z];
        for (std::size_t i = a.size(); i-- > 0;) {
            if (i == z) continue;
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    };
}

// Degree first; among equal degrees the term whose first `r` exponents are
// smaller in ExponentOrder is the larger term (it becomes the lead).
inline TermLess local_degree(std::size_t r) {
    return [r](const Vec& a, const Vec& b) {
        Int da = sum(a), db = sum(b);
        if (da != db) return da < db;
        Vec ax(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(r));
        Vec bx(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(r));
        return exp_less(bx, ax);
    };
}

inline bool orient(Vec& v, const TermLess& less) {
    if (is_zero(v)) return false;
    if (less(positive_part(v), negative_part(v))) v = -v;
    return true;
}

inline bool divides(const Vec& a, const Vec& b) { return leq(a, b); }

inline Vec reduce(Vec v, const std::vector<Vec>& g, const TermLess& less) {
    while (orient(v, less)) {
        Vec lead = positive_part(v);
        bool reduced = false;
        for (const auto& h : g)
            if (divides(positive_part(h), lead)) {
                v = v - h;
                reduced = true;
                break;
            }
        if (!reduced) return v;
    }
    return v;
}

inline std::vector<Vec> minimalize(std::vector<Vec> g) {
    std::sort(g.begin(), g.end(), [](const Vec& a, const Vec& b) {
        Vec pa = positive_part(a), pb = positive_part(b);
        Int sa = sum(pa), sb = sum(pb);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    std::vector<Vec> out;
    for (const auto& v : g) {
        Vec lead = positive_part(v);
        bool redundant = std::any_of(out.begin(), out.end(), [&](const Vec& w) { return divides(positive_part(w), lead); });
        if (!redundant) out.push_back(v);
    }
    return out;
}

inline std::vector<Vec> buchberger(std::vector<Vec> input, const TermLess& less) {
    std::vector<Vec> g;
    for (auto v : input) {
        v = reduce(v, g, less);
        if (orient(v, less)) g.push_back(v);
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        Vec li = positive_part(g[i]), lj = positive_part(g[j]);
        bool coprime = true;
        for (std::size_t k = 0; k < li.size(); ++k)
            if (li[k] > 0 && lj[k] > 0) coprime = false;
        if (coprime) continue;
        Vec s = reduce(g[j] - g[i], g, less);
        if (!orient(s, less)) continue;
        g.push_back(s);
        for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
    }
    return minimalize(g);
}

// Groebner basis, under `final_order`, of the lattice ideal I_L of the
// lattice spanned by `basis` (vectors of length k).
inline std::vector<Vec> lattice_ideal_basis(const Mat& basis, std::size_t k, const TermLess& final_order) {
    std::vector<Vec> g(basis.begin(), basis.end());
    if (g.empty()) return g;
    // I_L = I_B : (x_1...x_k)^inf, one variable at a time.
    for (std::size_t z = 0; z < k; ++z) g = buchberger(g, grevlex_last(z));
    return buchberger(g, final_order);
}

}  // namespace groebner

}  // namespace toricres

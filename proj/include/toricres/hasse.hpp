#pragma once

#include <algorithm>
#include <vector>

#include "binomial.hpp"
#include "blowup.hpp"
#include "fan.hpp"

namespace toricres {

enum class Side { U, V };

struct HasseMonomial {
    Side side = Side::U;
    Vec order;      // zeta (u-side) or delta (v-side)
    Vec exponents;  // alpha - zeta or beta - delta
    Int mark = 0;   // d - |order|: the order this monomial must reach
    auto operator<=>(const HasseMonomial&) const = default;
};

namespace detail {

// All vectors o with 0 <= o <= bound componentwise and |o| <= max_total.
inline void bounded_orders(const Vec& bound, Int max_total, std::size_t i, Vec& cur, Int total, std::vector<Vec>& out) {
    if (i == bound.size()) {
        out.push_back(cur);
        return;
    }
    for (Int k = 0; k <= bound[i] && total + k <= max_total; ++k) {
        cur[i] = k;
        bounded_orders(bound, max_total, i + 1, cur, total + k, out);
    }
    cur[i] = 0;
}

}  // namespace detail

inline std::vector<Vec> orders_below(const Vec& bound, Int max_total) {
    std::vector<Vec> out;
    Vec cur(bound.size(), 0);
    if (max_total >= 0) detail::bounded_orders(bound, max_total, 0, cur, 0, out);
    return out;
}

// Monomials of all Hasse derivatives of f of order below d = |alpha|.
inline std::vector<HasseMonomial> hasse_monomials(const Binomial& f) {
    Int d = sum(f.alpha);
    if (d == 0) fail(ErrorKind::EmptyDerivativeSet, "binomial has no u-side monomial (d = 0)");
    std::vector<HasseMonomial> out;
    for (const auto& z : orders_below(f.alpha, d - 1)) out.push_back({Side::U, z, f.alpha - z, d - sum(z)});
    for (const auto& z : orders_below(f.beta, d - 1)) out.push_back({Side::V, z, f.beta - z, d - sum(z)});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(), [](const HasseMonomial& a, const HasseMonomial& b) {
                  return a.side == b.side && a.exponents == b.exponents;
              }),
              out.end());
    return out;
}

inline Int binomial_coefficient(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        __int128 next = static_cast<__int128>(r) * (n - k + i) / i;
        if (next > INT64_MAX) fail(ErrorKind::Overflow, "binomial coefficient");
        r = static_cast<Int>(next);
    }
    return r;
}

// prod_i C(exponent_i, order_i)
inline Int hasse_coefficient(const Vec& exponent, const Vec& order) {
    Int c = 1;
    for (std::size_t i = 0; i < exponent.size(); ++i) c = mul(c, binomial_coefficient(exponent[i], order[i]));
    return c;
}

inline Int hasse_coefficient_mod(const Vec& exponent, const Vec& order, Int p) {
    Int c = 1 % p;
    for (std::size_t i = 0; i < exponent.size(); ++i) c = c * (binomial_coefficient(exponent[i], order[i]) % p) % p;
    return c;
}

// ord along the orbit where the variables in `vanishing` are zero.
inline Int order_at_orbit(const Binomial& f, const std::vector<std::size_t>& vanishing) {
    return std::min(partial_sum(f.alpha, vanishing), partial_sum(f.beta, vanishing));
}

inline bool is_admissible_local(const Binomial& f, const std::vector<std::size_t>& delta) {
    Int d = sum(f.alpha);
    if (d < 2) return false;
    return partial_sum(f.alpha, delta) == d && partial_sum(f.beta, delta) >= d;
}

inline bool is_minimal_local(const Binomial& f, const std::vector<std::size_t>& delta) {
    if (!is_admissible_local(f, delta)) fail(ErrorKind::NotAdmissible, "centre is not admissible for the binomial");
    Int a = partial_sum(f.alpha, delta);
    std::vector<std::size_t> vb;
    for (std::size_t i : delta)
        if (f.beta[i] > 0) vb.push_back(i);
    Int bsum = partial_sum(f.beta, vb);
    for (std::size_t i : vb)
        if (bsum - f.beta[i] - a >= 0) return false;
    return true;
}

// Minimal faces Delta (as sets of chart positions) whose orbit closure lies in
// the locus where f has order d.
inline std::vector<std::vector<std::size_t>> hasse_locus_components(const Binomial& f) {
    std::vector<std::vector<std::size_t>> out;
    std::size_t r = f.alpha.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask) {
        std::vector<std::size_t> delta;
        bool in_support = true;
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1) {
                delta.push_back(i);
                if (f.alpha[i] == 0 && f.beta[i] == 0) in_support = false;
            }
        if (in_support && is_admissible_local(f, delta) && is_minimal_local(f, delta)) out.push_back(delta);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Replaces an order delta <= beta by one whose Hasse coefficient is 1 and
// whose monomial vanishes wherever x^(beta - delta) does.
inline Vec unit_coefficient_order(const Vec& beta, const Vec& delta) {
    if (beta.size() != delta.size() || !leq(delta, beta))
        fail(ErrorKind::InvalidOrder, "order is not bounded by the exponent");
    for (Int x : delta)
        if (x < 0) fail(ErrorKind::InvalidOrder, "negative order");
    Vec out(beta.size(), 0);
    for (std::size_t i = 0; i < beta.size(); ++i)
        if (delta[i] == beta[i]) out[i] = beta[i];
    return out;
}

}  // namespace toricres

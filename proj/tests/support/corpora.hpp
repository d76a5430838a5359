#pragma once

// Seeded generators for the randomized tests and the fixed example inputs.

#include <random>
#include <vector>

#include "toricres/toricres.hpp"

namespace corpora {

using namespace toricres;

using Rng = std::mt19937_64;

inline Int uniform(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

inline Fan standard_fan(std::size_t n) {
    Fan f;
    f.rank = n;
    Cone all;
    for (std::size_t i = 0; i < n; ++i) {
        f.rays.push_back(unit_vector(n, i));
        all.push_back(static_cast<int>(i));
    }
    f.cones.push_back(all);
    return f;
}

inline EmbeddingState affine_state(const Binomial& raw) {
    std::size_t n = raw.alpha.size();
    Fan f = standard_fan(n);
    ChartIdeal id{n, 0, {}, {}};
    id.add(normalize(raw));
    return EmbeddingState{f, {make_chart(f, f.cones[0], id)}};
}

inline EmbeddingState affine_state(std::size_t n, const std::vector<std::pair<Vec, Vec>>& gens) {
    Fan f = standard_fan(n);
    ChartIdeal id{n, 0, {}, {}};
    for (const auto& [a, b] : gens) id.add(normalize(a, b, {}));
    return EmbeddingState{f, {make_chart(f, f.cones[0], id)}};
}

inline EmbeddingState e1_state() { return affine_state(Binomial{{2, 0, 0}, {0, 1, 1}, {}}); }
inline EmbeddingState cusp_state() { return affine_state(Binomial{{2, 0}, {0, 3}, {}}); }

// t -> (t^3, t^4, t^5): y^2 - xz, x^3 - yz, z^2 - x^2 y.
inline EmbeddingState curve345_state() {
    return affine_state(3, {{{0, 2, 0}, {1, 0, 1}}, {{3, 0, 0}, {0, 1, 1}}, {{0, 0, 2}, {2, 1, 0}}});
}

// Random hypersurface binomial on A^n: disjoint supports, |alpha|, |beta| in
// [1, max_deg], primitive exponent difference.
inline Binomial random_hypersurface(Rng& rng, std::size_t n, Int max_deg) {
    for (;;) {
        Binomial b{Vec(n, 0), Vec(n, 0), {}};
        for (std::size_t i = 0; i < n; ++i) {
            Int side = uniform(rng, 0, 2);
            Int e = uniform(rng, 1, 3);
            if (side == 0) b.alpha[i] = e;
            else if (side == 1) b.beta[i] = e;
        }
        Int da = sum(b.alpha), db = sum(b.beta);
        if (da < 1 || db < 1 || da > max_deg || db > max_deg) continue;
        if (vec_gcd(b.alpha - b.beta) != 1) continue;
        return b;
    }
}

// Random binomial with x- and y-exponents, supports disjoint.
inline Binomial random_binomial(Rng& rng, std::size_t r, std::size_t m, Int max_exp) {
    for (;;) {
        Binomial b{Vec(r, 0), Vec(r, 0), Vec(m, 0)};
        for (std::size_t i = 0; i < r; ++i) {
            Int e = uniform(rng, -max_exp, max_exp);
            if (e > 0) b.alpha[i] = e;
            else b.beta[i] = -e;
        }
        for (std::size_t j = 0; j < m; ++j) b.gamma[j] = uniform(rng, -2, 2);
        if (is_zero(b.alpha) && is_zero(b.beta)) continue;
        return b;
    }
}

// A small regular fan: a standard cone or the fan of P^2 / P^1 x P^1 /
// P^3, refined by a few random star subdivisions.
inline Fan random_fan(Rng& rng) {
    Fan f;
    switch (uniform(rng, 0, 4)) {
    case 0:
        f = standard_fan(static_cast<std::size_t>(uniform(rng, 2, 4)));
        break;
    case 1:
        f.rank = 2;
        f.rays = {{1, 0}, {0, 1}, {-1, -1}};
        f.cones = {{0, 1}, {1, 2}, {0, 2}};
        break;
    case 2:
        f.rank = 2;
        f.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        f.cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
        break;
    case 3:
        f.rank = 3;
        f.rays = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
        f.cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
        break;
    default:
        f.rank = 3;
        f.rays = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, -1}};
        f.cones = {{0, 1, 2}, {0, 1, 3}};
        break;
    }
    Int extra = uniform(rng, 0, 3);
    for (Int k = 0; k < extra; ++k) {
        const Cone& c = f.cones[static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(f.cones.size()) - 1))];
        Cone face;
        for (int id : c)
            if (uniform(rng, 0, 1)) face.push_back(id);
        if (face.size() < 2) face = c;
        f = star_subdivision(f, face).fan;
    }
    return f;
}

// Lattice of 1-2 random relations on r x-variables and m torus variables;
// torsion-free quotients only.
inline ChartIdeal random_chart_ideal(Rng& rng, std::size_t r, std::size_t m, std::size_t k, Int max_exp) {
    for (;;) {
        Mat vecs;
        for (std::size_t i = 0; i < k; ++i) {
            Vec v;
            for (std::size_t j = 0; j < r + m; ++j) v.push_back(uniform(rng, -max_exp, max_exp));
            vecs.push_back(v);
        }
        if (rank(vecs, r + m) != k) continue;
        try {
            ChartIdeal id = ideal_from_vectors(vecs, r, m);
            torus_lattice(id);
            return id;
        } catch (const Error&) {
            continue;
        }
    }
}

// Glued embedding on `fan` whose chart ideals all come from the same
// characters of the torus.
inline EmbeddingState state_from_characters(const Fan& fan, const Mat& chars) {
    EmbeddingState s;
    s.fan = fan;
    for (const auto& cone : fan.cones) {
        Chart ch;
        ch.frame = cone;
        ch.torus_basis = complete_basis(fan.ray_vectors(cone), fan.rank);
        Mat f = frame_matrix(fan, ch);
        Mat vecs;
        for (const auto& m : chars) vecs.push_back(times_col(f, m));
        ch.ideal = ideal_from_vectors(vecs, cone.size(), fan.rank - cone.size());
        s.charts.push_back(std::move(ch));
    }
    return s;
}

inline Vec random_primitive(Rng& rng, std::size_t n, Int bound) {
    for (;;) {
        Vec v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(uniform(rng, -bound, bound));
        if (!is_zero(v) && vec_gcd(v) == 1) return v;
    }
}

struct MarkedCase {
    std::size_t r;
    std::vector<Vec> gens;
    Int mark;
};

// Monomial marked ideals: <= 3 generators, degree <= 6, mark <= 4.
inline MarkedCase random_marked(Rng& rng) {
    MarkedCase mc;
    mc.r = static_cast<std::size_t>(uniform(rng, 1, 4));
    mc.mark = uniform(rng, 1, 4);
    Int ng = uniform(rng, 1, 3);
    for (Int g = 0; g < ng; ++g) {
        for (;;) {
            Vec h;
            for (std::size_t i = 0; i < mc.r; ++i) h.push_back(uniform(rng, 0, 3));
            if (sum(h) >= 1 && sum(h) <= 6) {
                mc.gens.push_back(h);
                break;
            }
        }
    }
    return mc;
}

}  // namespace corpora

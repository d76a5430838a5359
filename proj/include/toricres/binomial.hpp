#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fan.hpp"
#include "lattice.hpp"

namespace toricres {

// ExponentOrder: a < b iff (|a|, a_1, ..., a_q) < (|b|, b_1, ..., b_q) lexicographically.
inline bool exp_less(const Vec& a, const Vec& b) {
    Int sa = sum(a), sb = sum(b);
    if (sa != sb) return sa < sb;
    return a < b;
}

// x^alpha - x^beta * y^gamma on a chart with r non-invertible and m invertible variables.
struct Binomial {
    Vec alpha;
    Vec beta;
    Vec gamma;
    auto operator<=>(const Binomial&) const = default;
};

enum class NormalKind { Binomial, TorusRelation, Monomial };

struct Normalized {
    NormalKind kind = NormalKind::Binomial;
    Binomial binomial;  // valid when kind == Binomial
    Vec torus;          // valid when kind == TorusRelation
};

// Canonical sign of a torus-relation exponent: first nonzero entry positive.
inline Vec canonical_sign(Vec g) {
    for (Int x : g)
        if (x != 0) {
            if (x < 0) g = -g;
            break;
        }
    return g;
}

inline bool is_normalized(const Binomial& b) {
    for (std::size_t i = 0; i < b.alpha.size(); ++i) {
        if (b.alpha[i] < 0 || b.beta[i] < 0) return false;
        if (b.alpha[i] > 0 && b.beta[i] > 0) return false;
    }
    if (is_zero(b.alpha) && is_zero(b.beta)) return false;
    return !exp_less(b.beta, b.alpha);
}

// Normalizes a generator. A missing beta means the generator is a lone monomial.
inline Normalized normalize(const Vec& alpha, const std::optional<Vec>& beta, const Vec& gamma) {
    Normalized out;
    if (!beta) {
        out.kind = NormalKind::Monomial;
        out.binomial = {alpha, Vec(alpha.size(), 0), gamma};
        return out;
    }
    if (alpha.size() != beta->size()) fail(ErrorKind::InvalidInput, "alpha and beta lengths differ");
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0 || (*beta)[i] < 0) fail(ErrorKind::InvalidInput, "negative x-exponent");
        if (alpha[i] > 0 && (*beta)[i] > 0)
            fail(ErrorKind::SharedSupport, "alpha and beta share variable " + std::to_string(i + 1));
    }
    if (is_zero(alpha) && is_zero(*beta)) {
        if (is_zero(gamma)) fail(ErrorKind::ZeroBinomial, "all exponents are zero");
        out.kind = NormalKind::TorusRelation;
        out.torus = canonical_sign(gamma);
        return out;
    }
    out.kind = NormalKind::Binomial;
    if (exp_less(*beta, alpha)) out.binomial = {*beta, alpha, -gamma};
    else out.binomial = {alpha, *beta, gamma};
    return out;
}

inline Normalized normalize(const Binomial& b) { return normalize(b.alpha, b.beta, b.gamma); }

// Lattice vector (alpha - beta, -gamma) of a binomial in chart coordinates.
inline Vec to_vector(const Binomial& b) {
    Vec v = b.alpha - b.beta;
    for (Int g : b.gamma) v.push_back(-g);
    return v;
}

inline Normalized from_vector(const Vec& u, std::size_t r) {
    Vec a(r), b(r), g;
    for (std::size_t i = 0; i < r; ++i) {
        a[i] = std::max<Int>(u[i], 0);
        b[i] = std::max<Int>(-u[i], 0);
    }
    for (std::size_t i = r; i < u.size(); ++i) g.push_back(-u[i]);
    return normalize(a, b, g);
}

struct ChartIdeal {
    std::size_t r = 0;  // non-invertible variables x_1..x_r
    std::size_t m = 0;  // invertible variables y_1..y_m
    std::vector<Binomial> binomials;
    Mat torus;  // exponents gamma^j of relations 1 - y^gamma^j

    Mat vectors() const {
        Mat out;
        for (const auto& b : binomials) out.push_back(to_vector(b));
        for (const auto& g : torus) {
            Vec v(r, 0);
            for (Int x : g) v.push_back(-x);
            out.push_back(v);
        }
        return out;
    }

    // Adds a raw generator, classifying it as binomial or torus relation.
    void add(const Normalized& n) {
        if (n.kind == NormalKind::Binomial) binomials.push_back(n.binomial);
        else if (n.kind == NormalKind::TorusRelation) torus.push_back(n.torus);
        else fail(ErrorKind::MonomialGenerator, "monomial generator in a chart ideal");
    }
};

inline ChartIdeal ideal_from_vectors(const Mat& vecs, std::size_t r, std::size_t m) {
    ChartIdeal id{r, m, {}, {}};
    for (const auto& v : vecs) id.add(from_vector(v, r));
    return id;
}

struct Chart {
    std::vector<int> frame;  // ray ids in chart-variable order
    Mat torus_basis;         // n - r completion vectors defining the y-variables
    ChartIdeal ideal;
};

// Rows: the frame's rays followed by the completion vectors.
inline Mat frame_matrix(const Fan& fan, const Chart& c) {
    Mat f;
    for (int id : c.frame) f.push_back(fan.rays.at(static_cast<std::size_t>(id)));
    for (const auto& v : c.torus_basis) f.push_back(v);
    return f;
}

struct EmbeddingState {
    Fan fan;
    std::vector<Chart> charts;  // aligned with fan.cones
};

inline Chart make_chart(const Fan& fan, const Cone& cone, ChartIdeal ideal) {
    Chart c;
    c.frame = cone;
    c.torus_basis = complete_basis(fan.ray_vectors(cone), fan.rank);
    c.ideal = std::move(ideal);
    return c;
}

// Localize at every chart variable outside `face`: those move to the front of
// the invertible block, keeping chart order. The torus basis is left empty;
// the overload taking the fan fills it in.
inline Chart restrict_to_face(const Chart& chart, const Cone& face) {
    std::vector<std::size_t> keep = orbit_closure_ideal(face, chart.frame);
    std::vector<std::size_t> moved;
    for (std::size_t i = 0; i < chart.frame.size(); ++i)
        if (!std::binary_search(keep.begin(), keep.end(), i)) moved.push_back(i);
    Chart out;
    for (std::size_t i : keep) out.frame.push_back(chart.frame[i]);
    const ChartIdeal& id = chart.ideal;
    std::size_t r = id.r;
    auto remap = [&](const Vec& u) {
        Vec w;
        for (std::size_t i : keep) w.push_back(u[i]);
        for (std::size_t i : moved) w.push_back(u[i]);
        for (std::size_t i = r; i < u.size(); ++i) w.push_back(u[i]);
        return w;
    };
    out.ideal = ideal_from_vectors({}, keep.size(), id.m + moved.size());
    for (const auto& v : id.vectors()) out.ideal.add(from_vector(remap(v), keep.size()));
    return out;
}

inline Chart restrict_to_face(const Fan& fan, const Chart& chart, const Cone& face) {
    Chart out = restrict_to_face(chart, face);
    std::vector<std::size_t> keep = orbit_closure_ideal(face, chart.frame);
    for (std::size_t i = 0; i < chart.frame.size(); ++i)
        if (!std::binary_search(keep.begin(), keep.end(), i))
            out.torus_basis.push_back(fan.rays.at(static_cast<std::size_t>(chart.frame[i])));
    for (const auto& v : chart.torus_basis) out.torus_basis.push_back(v);
    return out;
}

// Character lattice (in M = Z^n) generated by the chart's relations, as an HNF.
inline Mat character_lattice(const Fan& fan, const Chart& chart) {
    Mat inv = unimodular_inverse(frame_matrix(fan, chart));
    Mat chars;
    for (const auto& u : chart.ideal.vectors()) chars.push_back(times_col(inv, u));
    return hermite_normal_form(chars, fan.rank);
}

// Exponent vector of a character in chart coordinates.
inline Vec chart_coordinates(const Fan& fan, const Chart& chart, const Vec& character) {
    return times_col(frame_matrix(fan, chart), character);
}

struct GluingViolation {
    std::size_t chart_a;
    std::size_t chart_b;
    Cone face;
};

struct GluingReport {
    bool ok = true;
    std::vector<GluingViolation> violations;
};

inline GluingReport check_gluing(const EmbeddingState& s) {
    GluingReport rep;
    for (std::size_t a = 0; a < s.charts.size(); ++a)
        for (std::size_t b = a + 1; b < s.charts.size(); ++b) {
            Cone shared = cone_intersection(s.fan.cones[a], s.fan.cones[b]);
            Chart ra = restrict_to_face(s.fan, s.charts[a], shared);
            Chart rb = restrict_to_face(s.fan, s.charts[b], shared);
            if (character_lattice(s.fan, ra) != character_lattice(s.fan, rb)) {
                rep.ok = false;
                rep.violations.push_back({a, b, shared});
            }
        }
    return rep;
}

struct TorusLattice {
    std::size_t rank = 0;  // rank of the relation lattice
    std::size_t c = 0;     // rank of the quotient
    Vec invariants;
};

inline TorusLattice torus_lattice(const ChartIdeal& id) {
    std::size_t n = id.r + id.m;
    TorusLattice t;
    t.invariants = smith_invariants(id.vectors(), n);
    t.rank = t.invariants.size();
    t.c = n - t.rank;
    for (Int f : t.invariants)
        if (f > 1) fail(ErrorKind::TorsionError, "relation lattice quotient has torsion (invariant factor " + std::to_string(f) + ")");
    return t;
}

// Presentation-level check: no generator is a pure monomial. Binomials stored
// in a ChartIdeal are two-sided by construction.
inline bool generators_unpointed(const ChartIdeal& id) {
    return std::all_of(id.binomials.begin(), id.binomials.end(), [](const Binomial& b) {
        return is_normalized(b);
    });
}

inline void validate_state(const EmbeddingState& s) {
    validate_fan(s.fan);
    if (s.charts.size() != s.fan.cones.size()) fail(ErrorKind::InvalidInput, "one chart per maximal cone required");
    for (std::size_t c = 0; c < s.charts.size(); ++c) {
        const Chart& ch = s.charts[c];
        std::string where = "chart " + std::to_string(c);
        if (sorted_cone(ch.frame) != s.fan.cones[c] || ch.frame.size() != s.fan.cones[c].size())
            fail(ErrorKind::InvalidInput, where + ": frame does not match its maximal cone");
        std::size_t r = ch.frame.size(), m = s.fan.rank - r;
        if (ch.torus_basis.size() != m) fail(ErrorKind::InvalidInput, where + ": wrong number of torus basis vectors");
        Mat f = frame_matrix(s.fan, ch);
        for (const auto& row : f)
            if (row.size() != s.fan.rank) fail(ErrorKind::InvalidInput, where + ": torus basis vector has wrong length");
        if (!is_regular(f)) fail(ErrorKind::InvalidInput, where + ": rays and torus basis are not a lattice basis");
        if (ch.ideal.r != r || ch.ideal.m != m) fail(ErrorKind::InvalidInput, where + ": ideal dimensions do not match");
        for (const auto& b : ch.ideal.binomials) {
            if (b.alpha.size() != r || b.beta.size() != r || b.gamma.size() != m)
                fail(ErrorKind::InvalidInput, where + ": binomial has wrong vector lengths");
            if (!is_normalized(b)) fail(ErrorKind::InvalidInput, where + ": binomial is not normalized");
        }
        for (const auto& g : ch.ideal.torus) {
            if (g.size() != m) fail(ErrorKind::InvalidInput, where + ": torus relation has wrong length");
            if (is_zero(g)) fail(ErrorKind::ZeroBinomial, where + ": zero torus relation");
        }
        torus_lattice(ch.ideal);
    }
}

}  // namespace toricres

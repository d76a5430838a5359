#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "binomial.hpp"
#include "groebner.hpp"
#include "hasse.hpp"
#include "lattice.hpp"

namespace toricres {

inline Vec initial_exponent(const Binomial& f) {
    if (is_zero(f.alpha) && is_zero(f.beta)) fail(ErrorKind::NoXInitial, "torus relation has no initial exponent");
    return exp_less(f.beta, f.alpha) ? f.beta : f.alpha;
}

// Lattice data of a chart ideal: the relation lattice L in chart coordinates,
// its torus part J = L cap (0 x Z^m), and lifts of a basis of the x-projection.
struct RelationLattice {
    std::size_t r = 0, m = 0;
    Mat x_rows;  // HNF rows of L with pivot among the x-columns
    Mat j_hnf;   // HNF basis of J (vectors of length m)
};

inline RelationLattice relation_lattice(const ChartIdeal& id) {
    torus_lattice(id);
    RelationLattice rl{id.r, id.m, {}, {}};
    Mat h = hermite_normal_form(id.vectors(), id.r + id.m);
    Mat jy;
    for (const auto& row : h) {
        if (pivot_column(row) < id.r) rl.x_rows.push_back(row);
        else jy.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(id.r), row.end());
    }
    rl.j_hnf = hermite_normal_form(jy, id.m);
    return rl;
}

// Invertible-variable exponent gamma with x^a - x^b y^gamma in the ideal,
// reduced modulo J. Requires a - b in the x-projection of L.
inline Vec twist_exponent(const RelationLattice& rl, const Vec& a, const Vec& b) {
    Vec w = a - b;
    w.resize(rl.r + rl.m, 0);
    Vec rem = reduce_by_hnf(rl.x_rows, w).second;
    for (std::size_t i = 0; i < rl.r; ++i)
        if (rem[i] != 0) fail(ErrorKind::InvalidInput, "exponent difference is not in the relation lattice");
    // v = w - rem lies in L; its y-part is -rem_y.
    Vec vy;
    for (std::size_t i = rl.r; i < rl.r + rl.m; ++i) vy.push_back(-rem[i]);
    vy = reduce_by_hnf(rl.j_hnf, vy).second;
    return -vy;
}

struct StandardBasis {
    std::size_t r = 0, m = 0;
    bool passes_through_point = true;  // false: unit ideal at the distinguished point
    std::vector<Binomial> nonlinear;   // |alpha| >= 2
    std::vector<Binomial> linear;      // |alpha| == 1
    Mat torus;                         // basis of the exponents of J
    std::vector<std::pair<Vec, Vec>> rewrite;  // dehomogenized Groebner pairs (lead, trail)

    std::size_t t() const { return nonlinear.size(); }
    std::size_t s() const { return nonlinear.size() + linear.size(); }
    std::size_t nu() const { return torus.size(); }

    std::vector<Binomial> elements() const {
        std::vector<Binomial> all = nonlinear;
        all.insert(all.end(), linear.begin(), linear.end());
        std::sort(all.begin(), all.end(), [](const Binomial& a, const Binomial& b) { return exp_less(a.alpha, b.alpha); });
        return all;
    }

    std::vector<Vec> vertices() const {
        std::vector<Vec> v;
        if (!passes_through_point) return {Vec(r, 0)};
        for (const auto& b : elements()) v.push_back(b.alpha);
        return v;
    }
};

// ExponentOrder-largest element of the fiber (b + L_x) cap N^r.
inline Vec fiber_maximum(const StandardBasis& sb, Vec b) {
    for (std::size_t guard = 0;; ++guard) {
        if (guard > 1000000) fail(ErrorKind::NonTermination, "fiber rewriting did not terminate");
        bool moved = false;
        for (const auto& [lead, trail] : sb.rewrite)
            if (leq(lead, b)) {
                b = b - lead + trail;
                moved = true;
                break;
            }
        if (!moved) return b;
    }
}

inline StandardBasis standard_basis(const ChartIdeal& id) {
    RelationLattice rl = relation_lattice(id);
    StandardBasis sb;
    sb.r = id.r;
    sb.m = id.m;
    for (const auto& g : rl.j_hnf) sb.torus.push_back(g);
    std::size_t r = id.r;
    Mat homog;
    for (const auto& row : rl.x_rows) {
        Vec u(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(r));
        u.push_back(-sum(u));
        homog.push_back(u);
    }
    auto gb = groebner::lattice_ideal_basis(homog, r + 1, groebner::local_degree(r));
    std::vector<Vec> leads;
    for (const auto& g : gb) {
        Vec lead = groebner::positive_part(g), trail = groebner::negative_part(g);
        lead.pop_back();
        trail.pop_back();
        if (is_zero(lead)) sb.passes_through_point = false;
        sb.rewrite.emplace_back(lead, trail);
        leads.push_back(lead);
    }
    if (!sb.passes_through_point) return sb;
    std::sort(leads.begin(), leads.end(), exp_less);
    std::vector<Vec> verts;
    for (const auto& a : leads) {
        bool covered = std::any_of(verts.begin(), verts.end(), [&](const Vec& v) { return leq(v, a); });
        if (!covered) verts.push_back(a);
    }
    for (const auto& a : verts) {
        Vec b = fiber_maximum(sb, a);
        Binomial f{a, b, twist_exponent(rl, a, b)};
        if (sum(a) == 1) sb.linear.push_back(f);
        else sb.nonlinear.push_back(f);
    }
    return sb;
}

// Generators of the lattice ideal of the chart: dehomogenized Groebner basis
// elements with their torus twists, plus a basis of the torus relations.
inline ChartIdeal saturated_ideal(const ChartIdeal& id) {
    RelationLattice rl = relation_lattice(id);
    StandardBasis sb = standard_basis(id);
    ChartIdeal out{id.r, id.m, {}, sb.torus};
    for (const auto& [lead, trail] : sb.rewrite) {
        Normalized n = normalize(lead, trail, twist_exponent(rl, lead, trail));
        if (n.kind == NormalKind::Binomial) out.binomials.push_back(n.binomial);
    }
    std::sort(out.binomials.begin(), out.binomials.end());
    out.binomials.erase(std::unique(out.binomials.begin(), out.binomials.end()), out.binomials.end());
    return out;
}

// False iff some generator is a lone monomial.
inline bool check_unpointed(const std::vector<Normalized>& generators) {
    return std::none_of(generators.begin(), generators.end(),
                        [](const Normalized& g) { return g.kind == NormalKind::Monomial; });
}

inline bool check_unpointed(const ChartIdeal& id) {
    if (!generators_unpointed(id)) return false;
    StandardBasis sb = standard_basis(id);
    for (const auto& b : sb.elements())
        if (!is_normalized(b)) return false;
    return true;
}

inline std::size_t nu_torus_codim(const Mat& gammas, std::size_t m) {
    Vec inv = smith_invariants(gammas, m);
    for (Int f : inv)
        if (f > 1) fail(ErrorKind::TorsionError, "torus relations have torsion quotient");
    return inv.size();
}

// #{(a, b) in N^r x N^free : a outside the staircase, |a| + |b| <= l}
inline Int hs_from_diagram(const std::vector<Vec>& vertices, std::size_t r, std::size_t free_dims, Int l) {
    if (l < 0) return 0;
    std::size_t q = r + free_dims;
    auto count_from = [&](Int deg) -> Int {  // points of N^q with |.| <= l - deg
        if (deg > l) return 0;
        return binomial_coefficient(static_cast<Int>(q) + l - deg, static_cast<Int>(q));
    };
    if (vertices.size() <= 20) {
        Int total = 0;
        std::size_t k = vertices.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            Vec lcm(r, 0);
            int bits = 0;
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1) {
                    ++bits;
                    for (std::size_t j = 0; j < r; ++j) lcm[j] = std::max(lcm[j], vertices[i][j]);
                }
            Int c = count_from(sum(lcm));
            total = (bits % 2 == 0) ? add(total, c) : sub(total, c);
        }
        return total;
    }
    // Many vertices: count standard monomials degree by degree.
    Int total = 0;
    std::vector<Vec> layer{Vec(r, 0)};
    for (Int deg = 0; deg <= l && !layer.empty(); ++deg) {
        std::vector<Vec> next;
        Int standard = 0;
        for (const auto& a : layer) {
            bool inside = std::any_of(vertices.begin(), vertices.end(), [&](const Vec& v) { return leq(v, a); });
            if (inside) continue;
            ++standard;
            // extend only along the last nonzero coordinate to avoid duplicates
            std::size_t start = 0;
            for (std::size_t j = 0; j < r; ++j)
                if (a[j] > 0) start = j;
            for (std::size_t j = start; j < r; ++j) {
                Vec b = a;
                ++b[j];
                next.push_back(b);
            }
        }
        total = add(total, mul(standard, binomial_coefficient(static_cast<Int>(free_dims) + l - deg, static_cast<Int>(free_dims))));
        layer = std::move(next);
    }
    return total;
}

struct HSFunction {
    bool empty = false;  // distinguished point not on X
    std::size_t r = 0;
    std::size_t free_dims = 0;
    std::vector<Vec> vertices;

    Int value(Int l) const { return empty ? 0 : hs_from_diagram(vertices, r, free_dims, l); }

    Int regularity() const {
        Int s = 1;
        for (const auto& v : vertices) s = add(s, sum(v));
        return s;
    }

    std::vector<Int> table(Int lmax) const {
        std::vector<Int> t;
        for (Int l = 0; l <= lmax; ++l) t.push_back(value(l));
        return t;
    }
};

enum class HSOrder { Less, Equal, Greater, Incomparable };

inline Int comparison_window(const HSFunction& a, const HSFunction& b) {
    Int q = static_cast<Int>(std::max(a.r + a.free_dims, b.r + b.free_dims));
    return std::max(a.regularity(), b.regularity()) + q + 1;
}

inline HSOrder compare_hs(const HSFunction& a, const HSFunction& b) {
    bool less = false, greater = false;
    Int lmax = comparison_window(a, b);
    for (Int l = 0; l <= lmax; ++l) {
        Int x = a.value(l), y = b.value(l);
        if (x < y) less = true;
        if (x > y) greater = true;
    }
    if (less && greater) return HSOrder::Incomparable;
    if (less) return HSOrder::Less;
    if (greater) return HSOrder::Greater;
    return HSOrder::Equal;
}

inline HSFunction hs_of_basis(const StandardBasis& sb) {
    HSFunction h;
    h.r = sb.r;
    h.free_dims = sb.m - sb.nu();
    if (!sb.passes_through_point) {
        h.empty = true;
        return h;
    }
    h.vertices = sb.vertices();
    return h;
}

inline HSFunction hs_at_distinguished(const ChartIdeal& id) { return hs_of_basis(standard_basis(id)); }

// Length of Z_(p)[x_1..x_n] / m^(k+1) counted through the graded ring in (p, x).
inline Int mixed_affine_hs(Int n, Int k) {
    if (n < 1 || k < 0) fail(ErrorKind::InvalidInput, "mixed_affine_hs needs n >= 1, k >= 0");
    return binomial_coefficient(n + 1 + k, n + 1);
}

// Smooth re-embedding N: linear pivots eliminated, torus quotiented by J.
struct SmoothReembedding {
    std::vector<std::size_t> surviving;  // chart positions that remain variables
    std::size_t torus_rank = 0;          // c
    ChartIdeal ideal;                    // nonlinear elements in the new coordinates
};

inline SmoothReembedding build_N(const ChartIdeal& id) {
    StandardBasis sb = standard_basis(id);
    SmoothReembedding out;
    std::vector<bool> pivot(id.r, false);
    for (const auto& f : sb.linear)
        for (std::size_t j = 0; j < id.r; ++j)
            if (f.alpha[j] == 1) pivot[j] = true;
    for (std::size_t j = 0; j < id.r; ++j)
        if (!pivot[j]) out.surviving.push_back(j);
    std::size_t nu = nu_torus_codim(sb.torus, id.m);
    out.torus_rank = id.m - nu;
    Mat q = complete_basis(sb.torus, id.m);
    Mat frame = sb.torus;
    frame.insert(frame.end(), q.begin(), q.end());
    Mat inv = id.m > 0 ? unimodular_inverse(frame) : Mat{};
    out.ideal = ChartIdeal{out.surviving.size(), out.torus_rank, {}, {}};
    for (const auto& f : sb.nonlinear) {
        Binomial g;
        for (std::size_t j : out.surviving) {
            g.alpha.push_back(f.alpha[j]);
            g.beta.push_back(f.beta[j]);
        }
        Vec coords = id.m > 0 ? row_times(f.gamma, inv, id.m) : Vec{};
        g.gamma.assign(coords.begin() + static_cast<std::ptrdiff_t>(nu), coords.end());
        out.ideal.binomials.push_back(g);
    }
    return out;
}

// Generators of the ideal cutting out the Samuel stratum of the distinguished point.
struct StratumIdeal {
    std::vector<Vec> monomials;     // Hasse monomials of the nonlinear elements
    std::vector<Binomial> linear;   // linear standard-basis elements
    Mat torus;
};

inline StratumIdeal samuel_stratum_ideal(const StandardBasis& sb) {
    StratumIdeal L;
    L.linear = sb.linear;
    L.torus = sb.torus;
    for (const auto& f : sb.nonlinear)
        for (const auto& h : hasse_monomials(f)) L.monomials.push_back(h.exponents);
    std::sort(L.monomials.begin(), L.monomials.end());
    L.monomials.erase(std::unique(L.monomials.begin(), L.monomials.end()), L.monomials.end());
    return L;
}

inline StratumIdeal samuel_stratum_ideal(const ChartIdeal& id) { return samuel_stratum_ideal(standard_basis(id)); }

namespace detail {
inline bool meets(const Vec& exps, const std::vector<bool>& zero) {
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > 0 && zero[i]) return true;
    return false;
}
}  // namespace detail

// Does the stratum ideal vanish somewhere on the orbit where exactly the
// variables flagged in `zero` vanish?
inline bool stratum_contains_orbit(const StratumIdeal& L, const std::vector<bool>& zero) {
    for (const auto& mono : L.monomials)
        if (!detail::meets(mono, zero)) return false;
    for (const auto& f : L.linear)
        if (detail::meets(f.alpha, zero) != detail::meets(f.beta, zero)) return false;
    return true;
}

// Distinguished-point data of a face of a chart, computed on the localization.
inline StandardBasis face_basis(const Chart& chart, const Cone& face) {
    return standard_basis(restrict_to_face(chart, face).ideal);
}

inline bool is_smooth_chart(const Chart& chart) {
    try {
        for (const auto& face : faces(sorted_cone(chart.frame))) {
            StandardBasis sb = face_basis(chart, face);
            if (sb.passes_through_point && sb.t() > 0) return false;
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::TorsionError) return false;
        throw;
    }
    return true;
}

inline bool is_smooth_chart(const ChartIdeal& id) {
    Chart c;
    for (std::size_t i = 0; i < id.r; ++i) c.frame.push_back(static_cast<int>(i));
    c.ideal = id;
    return is_smooth_chart(c);
}

// The largest face of the chart whose orbit meets X (empty optional if none).
inline std::optional<Cone> closed_orbit_face(const Chart& chart) {
    std::optional<Cone> best;
    for (const auto& face : faces(sorted_cone(chart.frame))) {
        if (!face_basis(chart, face).passes_through_point) continue;
        if (!best || face.size() > best->size()) best = face;
    }
    return best;
}

inline HSFunction hs_at_face(const Chart& chart, const Cone& face) { return hs_of_basis(face_basis(chart, face)); }

struct ZMaximal {
    HSFunction H;
    std::vector<std::size_t> attaining;
    std::vector<std::optional<Cone>> closed_faces;  // per chart
    std::vector<HSFunction> chart_hs;               // per chart, at its closed-orbit face
};

// Charts with `consider[c] == false` are skipped (recorded as empty).
inline ZMaximal z_maximal_hs(const EmbeddingState& s, const std::vector<bool>& consider = {}) {
    ZMaximal z;
    for (std::size_t c = 0; c < s.charts.size(); ++c) {
        const Chart& ch = s.charts[c];
        std::optional<Cone> f;
        if (consider.empty() || consider[c]) f = closed_orbit_face(ch);
        z.closed_faces.push_back(f);
        if (f) z.chart_hs.push_back(hs_at_face(ch, *f));
        else {
            HSFunction e;
            e.empty = true;
            z.chart_hs.push_back(e);
        }
    }
    std::vector<std::size_t> maxima;
    for (std::size_t i = 0; i < z.chart_hs.size(); ++i) {
        if (!z.closed_faces[i]) continue;
        bool dominated = false;
        for (std::size_t j = 0; j < z.chart_hs.size() && !dominated; ++j)
            if (compare_hs(z.chart_hs[i], z.chart_hs[j]) == HSOrder::Less) dominated = true;
        if (!dominated) maxima.push_back(i);
    }
    for (std::size_t i : maxima)
        for (std::size_t j : maxima)
            if (compare_hs(z.chart_hs[i], z.chart_hs[j]) != HSOrder::Equal)
                fail(ErrorKind::IncomparableMaxima, "charts " + std::to_string(i) + " and " + std::to_string(j) +
                                                        " have incomparable maximal Hilbert-Samuel functions");
    z.attaining = maxima;
    if (!maxima.empty()) z.H = z.chart_hs[maxima.front()];
    return z;
}

// Per-chart stratum ideals of the Z-maximal stratum; nullopt means unit ideal.
inline std::vector<std::optional<StratumIdeal>> maximal_strata(const EmbeddingState& s, const ZMaximal& z) {
    std::vector<std::optional<StratumIdeal>> out(s.charts.size());
    for (std::size_t c : z.attaining)
        if (z.closed_faces[c]) out[c] = samuel_stratum_ideal(face_basis(s.charts[c], *z.closed_faces[c]));
    return out;
}

}  // namespace toricres

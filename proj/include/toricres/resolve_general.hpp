#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "blowup.hpp"
#include "hypersurface.hpp"
#include "marked_ideal.hpp"
#include "standard_basis.hpp"

namespace toricres {

inline EmbeddingState saturate_state(EmbeddingState s) {
    for (auto& c : s.charts) c.ideal = saturated_ideal(c.ideal);
    return s;
}

inline bool all_charts_smooth(const EmbeddingState& s) {
    return std::all_of(s.charts.begin(), s.charts.end(), [](const Chart& c) { return is_smooth_chart(c); });
}

// Data of one attaining chart at its closed-orbit face.
struct StratumChart {
    std::size_t chart = 0;
    Cone face;                        // ray ids of the closed-orbit face
    std::vector<std::size_t> keep;    // chart positions of the face, in restricted order
    StandardBasis basis;              // standard basis on the restricted chart
};

inline StratumChart stratum_chart(const EmbeddingState& s, std::size_t c, const Cone& face) {
    StratumChart sc;
    sc.chart = c;
    sc.face = face;
    sc.keep = orbit_closure_ideal(face, s.charts[c].frame);
    sc.basis = face_basis(s.charts[c], face);
    return sc;
}

// Marked ideal from the Hasse monomials of the nonlinear standard-basis
// elements, one chart per attaining chart, with marks raised to a common lcm.
// Linear pivots are eliminated coordinates and never enter a centre directly.
inline MarkedIdeal assemble_marked_ideal(const EmbeddingState& s, const std::vector<StratumChart>& attaining) {
    Int e = 1;
    for (const auto& sc : attaining)
        for (const auto& f : sc.basis.nonlinear)
            for (const auto& h : hasse_monomials(f)) e = std::lcm(e, h.mark);
    MarkedIdeal m;
    m.fan = s.fan;
    m.mark = e;
    for (const auto& ch : s.charts) {
        MarkedChart mc{ch.frame, {}, std::vector<bool>(ch.frame.size(), false), false};
        m.charts.push_back(mc);
    }
    for (const auto& sc : attaining) {
        MarkedChart& mc = m.charts[sc.chart];
        std::size_t r = mc.frame.size();
        std::vector<bool> pivot(sc.keep.size(), false);
        for (const auto& f : sc.basis.linear)
            for (std::size_t j = 0; j < sc.keep.size(); ++j)
                if (f.alpha[j] > 0) pivot[j] = true;
        for (std::size_t j = 0; j < sc.keep.size(); ++j) mc.allowed[sc.keep[j]] = !pivot[j];
        for (const auto& f : sc.basis.nonlinear)
            for (const auto& h : hasse_monomials(f)) {
                Vec g(r, 0);
                for (std::size_t j = 0; j < sc.keep.size(); ++j) g[sc.keep[j]] = mul(h.exponents[j], e / h.mark);
                mc.gens.push_back(g);
            }
        std::sort(mc.gens.begin(), mc.gens.end());
        mc.gens.erase(std::unique(mc.gens.begin(), mc.gens.end()), mc.gens.end());
        mc.active = !mc.gens.empty();
    }
    return m;
}

// Adds the linear pivots whose eliminating monomial vanishes on the centre.
inline Cone close_under_pivots(const EmbeddingState& s, const StratumChart& sc, const Cone& centre) {
    const std::vector<int>& frame = s.charts[sc.chart].frame;
    std::vector<bool> zero(sc.keep.size(), false);
    for (std::size_t j = 0; j < sc.keep.size(); ++j)
        zero[j] = std::binary_search(centre.begin(), centre.end(), frame[sc.keep[j]]);
    Cone out = centre;
    for (const auto& f : sc.basis.linear) {
        bool beta_meets = false;
        for (std::size_t j = 0; j < sc.keep.size(); ++j)
            if (f.beta[j] > 0 && zero[j]) beta_meets = true;
        if (!beta_meets) continue;
        for (std::size_t j = 0; j < sc.keep.size(); ++j)
            if (f.alpha[j] > 0) out.push_back(frame[sc.keep[j]]);
    }
    return sorted_cone(out);
}

// Faces of the attaining charts' closed-orbit faces lying in the stratum.
inline std::vector<Cone> stratum_cones(const EmbeddingState& s, const std::vector<StratumChart>& attaining) {
    std::vector<Cone> out;
    for (const auto& sc : attaining) {
        StratumIdeal L = samuel_stratum_ideal(sc.basis);
        const std::vector<int>& frame = s.charts[sc.chart].frame;
        for (const auto& f : faces(sc.face)) {
            if (f.empty()) continue;
            std::vector<bool> zero(sc.keep.size(), false);
            for (std::size_t j = 0; j < sc.keep.size(); ++j) zero[j] = std::binary_search(f.begin(), f.end(), frame[sc.keep[j]]);
            if (stratum_contains_orbit(L, zero)) out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// The centre's Hilbert-Samuel function equals the maximum H on some
// attaining chart containing it.
inline bool is_h_permissible(const EmbeddingState& s, const std::vector<StratumChart>& attaining, const HSFunction& H,
                             const Cone& centre) {
    for (const auto& sc : attaining) {
        if (!is_subset(centre, sc.face)) continue;
        StandardBasis sb = face_basis(s.charts[sc.chart], centre);
        if (!sb.passes_through_point) continue;
        if (compare_hs(hs_of_basis(sb), H) == HSOrder::Equal) return true;
    }
    return false;
}

inline std::optional<Cone> fallback_centre(const EmbeddingState& s, const std::vector<StratumChart>& attaining,
                                           const HSFunction& H) {
    std::vector<Cone> cands = stratum_cones(s, attaining);
    std::vector<Cone> minimal;
    for (const auto& c : cands) {
        bool has_smaller = std::any_of(cands.begin(), cands.end(), [&](const Cone& d) { return d != c && is_subset(d, c); });
        if (!has_smaller && is_h_permissible(s, attaining, H, c)) minimal.push_back(c);
    }
    if (minimal.empty()) return std::nullopt;
    return *std::min_element(minimal.begin(), minimal.end(), [](const Cone& a, const Cone& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
}

// Experimental general driver: Hilbert-Samuel maximum over the singular
// charts, marked-ideal order reduction on its stratum, centres replayed on
// the embedding while they remain H-permissible.
inline ResolutionTrace resolve_general(const EmbeddingState& input, std::size_t max_steps = 200) {
    ResolutionTrace tr;
    tr.initial = input;
    EmbeddingState cur = saturate_state(input);
    for (;;) {
        std::vector<bool> singular;
        for (const auto& c : cur.charts) singular.push_back(!is_smooth_chart(c));
        if (std::none_of(singular.begin(), singular.end(), [](bool b) { return b; })) break;
        ZMaximal z = z_maximal_hs(cur, singular);
        std::vector<StratumChart> attaining;
        for (std::size_t c : z.attaining) attaining.push_back(stratum_chart(cur, c, *z.closed_faces[c]));
        MarkedIdeal marked = assemble_marked_ideal(cur, attaining);
        std::vector<Cone> plan;
        if (!support(marked).empty()) {
            for (const auto& st : order_reduce(marked, 1000).steps) plan.push_back(st.center);
        }
        bool progressed = false;
        HSFunction H = z.H;
        for (const auto& planned : plan) {
            if (progressed) {
                singular.clear();
                for (const auto& c : cur.charts) singular.push_back(!is_smooth_chart(c));
                if (std::none_of(singular.begin(), singular.end(), [](bool b) { return b; })) break;
                z = z_maximal_hs(cur, singular);
                if (compare_hs(z.H, H) != HSOrder::Equal) break;
                attaining.clear();
                for (std::size_t c : z.attaining) attaining.push_back(stratum_chart(cur, c, *z.closed_faces[c]));
            }
            Cone centre = planned;
            for (const auto& sc : attaining)
                if (is_subset(planned, sc.face)) {
                    centre = close_under_pivots(cur, sc, planned);
                    break;
                }
            if (!cur.fan.is_cone(centre) || !is_h_permissible(cur, attaining, H, centre)) break;
            if (tr.steps.size() >= max_steps) fail(ErrorKind::NonTermination, "general resolution exceeded the step cap");
            ResolutionStep step;
            step.center = centre;
            step.center_rays = cur.fan.ray_vectors(centre);
            step.rule = centre == planned ? "marked" : "marked+pivots";
            BlowupResult br = blow_up_global(cur, centre);
            step.records = std::move(br.records);
            cur = saturate_state(std::move(br.state));
            tr.steps.push_back(std::move(step));
            progressed = true;
            // the marked plan no longer matches the embedding's fan
            if (centre != planned) break;
        }
        if (progressed) continue;
        auto fb = fallback_centre(cur, attaining, z.H);
        if (!fb) fail(ErrorKind::NonTermination, "no permissible centre found on a singular embedding");
        if (tr.steps.size() >= max_steps) fail(ErrorKind::NonTermination, "general resolution exceeded the step cap");
        ResolutionStep step;
        step.center = *fb;
        step.center_rays = cur.fan.ray_vectors(*fb);
        step.rule = "stratum";
        BlowupResult br = blow_up_global(cur, *fb);
        step.records = std::move(br.records);
        cur = saturate_state(std::move(br.state));
        tr.steps.push_back(std::move(step));
    }
    tr.final_state = cur;
    return tr;
}

}  // namespace toricres

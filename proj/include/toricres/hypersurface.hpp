#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "blowup.hpp"
#include "hasse.hpp"
#include "standard_basis.hpp"

namespace toricres {

struct InvariantTriple {
    Int gamma = 0;  // Gamma_Sigma
    Int omega = 0;  // Omega_Sigma
    Int w_count = 0;
    auto operator<=>(const InvariantTriple&) const = default;
};

struct GlobalInvariant {
    InvariantTriple triple;
    std::map<Cone, Int> gamma_of;  // every cone of the fan except the zero cone
    std::vector<Cone> v_sigma;
    std::vector<Cone> v_min;
    std::vector<Cone> w_sigma;
};

inline const Binomial& hypersurface_equation(const Chart& c) {
    if (c.ideal.binomials.size() != 1) fail(ErrorKind::InvalidInput, "hypersurface chart must carry exactly one binomial");
    return c.ideal.binomials.front();
}

inline Int gamma_at(const Chart& c, const Cone& delta) {
    return order_at_orbit(hypersurface_equation(c), orbit_closure_ideal(delta, c.frame));
}

inline Int omega_at(const Chart& c, const Cone& delta) {
    const Binomial& f = hypersurface_equation(c);
    auto pos = orbit_closure_ideal(delta, c.frame);
    return std::max(partial_sum(f.alpha, pos), partial_sum(f.beta, pos));
}

// Gamma of every cone computed from every chart containing it; true iff all agree.
inline bool gamma_chart_consistent(const EmbeddingState& s) {
    std::map<Cone, Int> seen;
    for (std::size_t c = 0; c < s.charts.size(); ++c)
        for (const auto& f : faces(s.fan.cones[c])) {
            Int g = gamma_at(s.charts[c], f);
            auto [it, inserted] = seen.emplace(f, g);
            if (!inserted && it->second != g) return false;
        }
    return true;
}

inline GlobalInvariant global_invariant(const EmbeddingState& s) {
    GlobalInvariant gi;
    std::map<Cone, std::size_t> chart_of;
    for (std::size_t c = 0; c < s.charts.size(); ++c)
        for (const auto& f : faces(s.fan.cones[c])) {
            if (f.empty() || gi.gamma_of.count(f)) continue;
            gi.gamma_of[f] = gamma_at(s.charts[c], f);
            chart_of[f] = c;
        }
    for (const auto& [cone, g] : gi.gamma_of) gi.triple.gamma = std::max(gi.triple.gamma, g);
    for (const auto& [cone, g] : gi.gamma_of)
        if (g == gi.triple.gamma) gi.v_sigma.push_back(cone);
    for (const auto& cone : gi.v_sigma) {
        bool minimal = true;
        for (std::size_t k = 0; k < cone.size() && minimal; ++k) {
            Cone facet = cone;
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(k));
            Int g = facet.empty() ? 0 : gi.gamma_of.at(facet);
            if (g >= gi.triple.gamma) minimal = false;
        }
        if (minimal) gi.v_min.push_back(cone);
    }
    for (const auto& cone : gi.v_min) gi.triple.omega = std::max(gi.triple.omega, omega_at(s.charts[chart_of[cone]], cone));
    for (const auto& cone : gi.v_min)
        if (omega_at(s.charts[chart_of[cone]], cone) == gi.triple.omega) gi.w_sigma.push_back(cone);
    gi.triple.w_count = static_cast<Int>(gi.w_sigma.size());
    return gi;
}

// Per chart: minimal Hasse monomials (in chart positions), or nullopt for the unit ideal.
inline std::vector<std::optional<std::vector<Vec>>> glue_hasse_ideal(const EmbeddingState& s) {
    GlobalInvariant gi = global_invariant(s);
    if (gi.triple.gamma < 2) fail(ErrorKind::InvalidInput, "hypersurface is already smooth (Gamma <= 1)");
    std::vector<std::optional<std::vector<Vec>>> out;
    for (const auto& c : s.charts) {
        const Binomial& f = hypersurface_equation(c);
        if (sum(f.alpha) != gi.triple.gamma) {
            out.emplace_back(std::nullopt);
            continue;
        }
        std::vector<Vec> monos;
        for (const auto& h : hasse_monomials(f)) monos.push_back(h.exponents);
        std::sort(monos.begin(), monos.end(), exp_less);
        std::vector<Vec> minimal;
        for (const auto& m : monos)
            if (std::none_of(minimal.begin(), minimal.end(), [&](const Vec& v) { return leq(v, m); })) minimal.push_back(m);
        out.emplace_back(minimal);
    }
    return out;
}

// Do the per-chart monomial ideals cut out the same orbits on every shared face?
inline bool hasse_ideal_consistent(const EmbeddingState& s, const std::vector<std::optional<std::vector<Vec>>>& ideals) {
    auto vanishes = [&](std::size_t c, const Cone& orbit) {
        const auto& id = ideals[c];
        if (!id) return false;
        auto pos = orbit_closure_ideal(orbit, s.charts[c].frame);
        return std::all_of(id->begin(), id->end(), [&](const Vec& m) { return partial_sum(m, pos) > 0; });
    };
    for (std::size_t a = 0; a < s.charts.size(); ++a)
        for (std::size_t b = a + 1; b < s.charts.size(); ++b) {
            Cone shared = cone_intersection(s.fan.cones[a], s.fan.cones[b]);
            for (const auto& f : faces(shared))
                if (vanishes(a, f) != vanishes(b, f)) return false;
        }
    return true;
}

struct ResolutionStep {
    Cone center;
    Mat center_rays;
    InvariantTriple before;
    InvariantTriple after;
    std::vector<TransformRecord> records;
    std::string rule;  // how the centre was chosen
};

struct ResolutionTrace {
    EmbeddingState initial;
    std::vector<ResolutionStep> steps;
    EmbeddingState final_state;
};

inline ResolutionTrace resolve_hypersurface(const EmbeddingState& s, std::size_t max_steps = 500) {
    ResolutionTrace tr;
    tr.initial = s;
    EmbeddingState cur = s;
    GlobalInvariant gi = global_invariant(cur);
    while (gi.triple.gamma > 1) {
        if (tr.steps.size() >= max_steps) fail(ErrorKind::NonTermination, "hypersurface resolution exceeded the step cap");
        Cone delta = *std::min_element(gi.w_sigma.begin(), gi.w_sigma.end());
        ResolutionStep step;
        step.center = delta;
        step.center_rays = cur.fan.ray_vectors(delta);
        step.before = gi.triple;
        step.rule = "W-min";
        BlowupResult br = blow_up_global(cur, delta);
        cur = std::move(br.state);
        step.records = std::move(br.records);
        gi = global_invariant(cur);
        step.after = gi.triple;
        tr.steps.push_back(std::move(step));
    }
    tr.final_state = cur;
    return tr;
}

}  // namespace toricres

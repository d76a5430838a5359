#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "blowup.hpp"
#include "fan.hpp"

namespace toricres {

// One chart of a marked monomial ideal: generators are divisor-exponent
// vectors over the chart variables. Variables that are not `allowed` are
// units on the locus the ideal lives on and never enter its support.
struct MarkedChart {
    std::vector<int> frame;
    std::vector<Vec> gens;
    std::vector<bool> allowed;
    bool active = true;  // false once the chart no longer meets P
};

struct MarkedIdeal {
    Fan fan;
    std::vector<MarkedChart> charts;  // aligned with fan.cones
    Cone p_cone;                      // P: a single orbit closure (empty cone = whole ambient)
    Int mark = 1;
};

inline void validate_marked(const MarkedIdeal& h) {
    if (h.mark < 1) fail(ErrorKind::InvalidInput, "mark must be positive");
    if (h.charts.size() != h.fan.cones.size()) fail(ErrorKind::InvalidInput, "one marked chart per maximal cone required");
    if (sorted_cone(h.p_cone) != h.p_cone) fail(ErrorKind::InvalidInput, "P must be a sorted list of ray ids");
    if (!h.p_cone.empty() && !h.fan.is_cone(h.p_cone)) fail(ErrorKind::InvalidInput, "P is not a cone of the fan");
    for (std::size_t c = 0; c < h.charts.size(); ++c) {
        const MarkedChart& ch = h.charts[c];
        if (sorted_cone(ch.frame) != h.fan.cones[c]) fail(ErrorKind::InvalidInput, "marked chart frame does not match its cone");
        if (ch.allowed.size() != ch.frame.size()) fail(ErrorKind::InvalidInput, "allowed flags have wrong length");
        if (ch.gens.empty()) fail(ErrorKind::InvalidInput, "marked chart has no generators");
        for (const auto& g : ch.gens) {
            if (g.size() != ch.frame.size()) fail(ErrorKind::InvalidInput, "generator has wrong length");
            for (Int x : g)
                if (x < 0) fail(ErrorKind::InvalidInput, "negative divisor exponent");
        }
        if (!ch.active) continue;
        for (std::size_t p : orbit_closure_ideal(h.p_cone, ch.frame))
            for (const auto& g : ch.gens)
                if (g[p] != 0) fail(ErrorKind::InvalidInput, "a generator's divisor contains P");
    }
}

// Marked ideal on the standard r-dimensional affine chart.
inline MarkedIdeal marked_ideal_on_affine(std::size_t r, std::vector<Vec> gens, Int mark, Cone p = {}) {
    MarkedIdeal h;
    h.fan.rank = r;
    Cone all;
    for (std::size_t i = 0; i < r; ++i) {
        h.fan.rays.push_back(unit_vector(r, i));
        all.push_back(static_cast<int>(i));
    }
    h.fan.cones.push_back(all);
    h.charts.push_back({all, std::move(gens), std::vector<bool>(r, true), true});
    h.p_cone = sorted_cone(std::move(p));
    h.mark = mark;
    validate_marked(h);
    return h;
}

// mu_Delta = min_i h^i_Delta, the order of the ideal along Z_Delta.
inline Int monomial_order(const std::vector<Vec>& gens, const std::vector<std::size_t>& positions) {
    Int mu = -1;
    for (const auto& g : gens) {
        Int s = partial_sum(g, positions);
        if (mu < 0 || s < mu) mu = s;
    }
    return mu;
}

struct SupportDescription {
    std::vector<Cone> minimal;   // minimal cones of the support
    std::map<Cone, Int> order;   // every cone in the support with its order
    bool empty() const { return order.empty(); }
};

inline SupportDescription support(const MarkedIdeal& h) {
    SupportDescription s;
    for (const auto& ch : h.charts) {
        if (!ch.active || !is_subset(h.p_cone, sorted_cone(ch.frame))) continue;
        for (const auto& f : faces(sorted_cone(ch.frame))) {
            if (f.empty() || !is_subset(h.p_cone, f) || s.order.count(f)) continue;
            auto pos = orbit_closure_ideal(f, ch.frame);
            if (!std::all_of(pos.begin(), pos.end(), [&](std::size_t p) { return ch.allowed[p]; })) continue;
            Int mu = monomial_order(ch.gens, pos);
            if (mu >= h.mark) s.order[f] = mu;
        }
    }
    for (const auto& [cone, mu] : s.order) {
        bool minimal = true;
        for (std::size_t k = 0; k < cone.size() && minimal; ++k) {
            Cone facet = cone;
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(k));
            if (s.order.count(facet)) minimal = false;
        }
        if (minimal) s.minimal.push_back(cone);
    }
    return s;
}

// Each component lies in the support and no two components meet.
inline bool is_permissible(const MarkedIdeal& h, const std::vector<Cone>& components) {
    if (components.empty()) return false;
    SupportDescription s = support(h);
    for (const auto& c : components)
        if (!s.order.count(sorted_cone(c))) return false;
    for (std::size_t a = 0; a < components.size(); ++a)
        for (std::size_t b = a + 1; b < components.size(); ++b)
            if (h.fan.is_cone(cone_union(sorted_cone(components[a]), sorted_cone(components[b])))) return false;
    return true;
}

// Chart-local transform: the exceptional exponent becomes h_Delta - e.
inline std::vector<Vec> transform_generators(const std::vector<Vec>& gens, const std::vector<std::size_t>& delta,
                                             std::size_t i, Int mark) {
    if (std::find(delta.begin(), delta.end(), i) == delta.end())
        fail(ErrorKind::InvalidChart, "chart index is not a ray of the centre");
    std::vector<Vec> out;
    for (const auto& g : gens) {
        Int hd = partial_sum(g, delta);
        if (hd < mark) fail(ErrorKind::NotPermissible, "generator order along the centre is below the mark");
        Vec t = g;
        t[i] = hd - mark;
        out.push_back(t);
    }
    return out;
}

inline MarkedIdeal transform(const MarkedIdeal& h, const Cone& delta_in) {
    Cone delta = sorted_cone(delta_in);
    if (!support(h).order.count(delta)) fail(ErrorKind::NotPermissible, "centre is not in the support");
    Subdivision sub = star_subdivision(h.fan, delta);
    MarkedIdeal out;
    out.fan = sub.fan;
    out.p_cone = h.p_cone;
    out.mark = h.mark;
    for (std::size_t k = 0; k < sub.fan.cones.size(); ++k) {
        auto [old, rho] = sub.origin[k];
        const MarkedChart& parent = h.charts[old];
        if (rho < 0 && (delta.size() > 1 || !is_subset(delta, h.fan.cones[old]))) {
            out.charts.push_back(parent);
            continue;
        }
        auto pos = orbit_closure_ideal(delta, parent.frame);
        std::size_t i = rho < 0 ? pos.front() : orbit_closure_ideal({rho}, parent.frame).front();
        MarkedChart child = parent;
        if (rho >= 0) child.frame[i] = sub.new_ray;
        bool inside = std::all_of(pos.begin(), pos.end(), [&](std::size_t p) { return parent.allowed[p]; });
        child.allowed[i] = inside;
        if (rho >= 0 && std::binary_search(h.p_cone.begin(), h.p_cone.end(), rho)) child.active = false;
        if (child.active && inside) {
            child.gens = transform_generators(parent.gens, pos, i, h.mark);
        } else {
            for (auto& g : child.gens) g[i] = std::max<Int>(partial_sum(g, pos) - h.mark, 0);
        }
        out.charts.push_back(std::move(child));
    }
    return out;
}

struct OrderReductionStep {
    Cone center;
    Int mu_max = 0;          // max order over minimal support cones before the step
    std::size_t count = 0;   // minimal support cones attaining mu_max
};

struct OrderReductionTrace {
    std::vector<OrderReductionStep> steps;
    MarkedIdeal final_ideal;
};

// Among the minimal support cones: smallest dimension, then largest order,
// then lexicographically smallest ray ids.
inline Cone choose_center(const SupportDescription& s) {
    Cone best;
    bool have = false;
    for (const auto& c : s.minimal) {
        if (!have) {
            best = c;
            have = true;
            continue;
        }
        Int mc = s.order.at(c), mb = s.order.at(best);
        if (c.size() != best.size() ? c.size() < best.size() : (mc != mb ? mc > mb : c < best)) best = c;
    }
    return best;
}

inline OrderReductionTrace order_reduce(const MarkedIdeal& h, std::size_t max_steps = 1000) {
    OrderReductionTrace tr;
    MarkedIdeal cur = h;
    for (;;) {
        SupportDescription s = support(cur);
        if (s.empty()) break;
        if (tr.steps.size() >= max_steps) fail(ErrorKind::NonTermination, "order reduction exceeded the step cap");
        OrderReductionStep step;
        for (const auto& c : s.minimal) step.mu_max = std::max(step.mu_max, s.order.at(c));
        for (const auto& c : s.minimal)
            if (s.order.at(c) == step.mu_max) ++step.count;
        step.center = choose_center(s);
        cur = transform(cur, step.center);
        tr.steps.push_back(step);
    }
    tr.final_ideal = cur;
    return tr;
}

}  // namespace toricres

#pragma once

#include <algorithm>
#include <vector>

#include "binomial.hpp"
#include "fan.hpp"

namespace toricres {

inline Int partial_sum(const Vec& v, const std::vector<std::size_t>& positions) {
    Int s = 0;
    for (std::size_t p : positions) s = add(s, v.at(p));
    return s;
}

// Substitution x_j -> w_i w_j for j in delta \ {i}: the i-th exponent becomes
// the delta-partial degree, every other exponent is unchanged.
inline Binomial total_transform(const Binomial& f, const std::vector<std::size_t>& delta, std::size_t i) {
    if (std::find(delta.begin(), delta.end(), i) == delta.end())
        fail(ErrorKind::InvalidChart, "chart index is not a ray of the centre");
    Binomial t = f;
    t.alpha[i] = partial_sum(f.alpha, delta);
    t.beta[i] = partial_sum(f.beta, delta);
    return t;
}

inline Binomial strict_transform(const Binomial& f, const std::vector<std::size_t>& delta, std::size_t i) {
    Binomial t = total_transform(f, delta, i);
    Int a = t.alpha[i], b = t.beta[i];
    if (a > 0 && b > 0) {
        Int k = std::min(a, b);
        t.alpha[i] -= k;
        t.beta[i] -= k;
    }
    Normalized n = normalize(t);
    if (n.kind != NormalKind::Binomial) fail(ErrorKind::InvalidInput, "strict transform degenerated to a torus relation");
    return n.binomial;
}

struct TransformRecord {
    Cone center;
    std::size_t parent_chart = 0;
    std::size_t new_chart = 0;
    std::size_t position = 0;  // chart variable replaced by the exceptional coordinate
    Binomial before;
    Binomial total;
    Binomial strict;
};

struct BlowupResult {
    EmbeddingState state;
    int new_ray = -1;
    std::vector<TransformRecord> records;
};

inline BlowupResult blow_up_global(const EmbeddingState& s, const Cone& delta_in) {
    Cone delta = sorted_cone(delta_in);
    Subdivision sub = star_subdivision(s.fan, delta);
    BlowupResult out;
    out.new_ray = sub.new_ray;
    out.state.fan = sub.fan;
    for (std::size_t k = 0; k < sub.fan.cones.size(); ++k) {
        auto [old, rho] = sub.origin[k];
        const Chart& parent = s.charts[old];
        if (rho < 0 && !(delta.size() == 1 && is_subset(delta, s.fan.cones[old]))) {
            out.state.charts.push_back(parent);
            continue;
        }
        std::vector<std::size_t> pos = orbit_closure_ideal(delta, parent.frame);
        std::size_t i = rho < 0 ? pos.front() : orbit_closure_ideal({rho}, parent.frame).front();
        Chart child = parent;
        if (rho >= 0) child.frame[i] = sub.new_ray;
        child.ideal.binomials.clear();
        for (const auto& b : parent.ideal.binomials) {
            TransformRecord rec;
            rec.center = delta;
            rec.parent_chart = old;
            rec.new_chart = k;
            rec.position = i;
            rec.before = b;
            rec.total = total_transform(b, pos, i);
            rec.strict = strict_transform(b, pos, i);
            child.ideal.binomials.push_back(rec.strict);
            out.records.push_back(std::move(rec));
        }
        out.state.charts.push_back(std::move(child));
    }
    return out;
}

}  // namespace toricres

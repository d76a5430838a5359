#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace toricres {

// A cone is an ascending list of ray ids into the fan's ray table.
using Cone = std::vector<int>;

inline bool is_subset(const Cone& a, const Cone& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Cone cone_intersection(const Cone& a, const Cone& b) {
    Cone r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline Cone cone_union(const Cone& a, const Cone& b) {
    Cone r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline Cone sorted_cone(Cone c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

// All 2^r faces of a regular cone, ordered by bitmask over its rays.
inline std::vector<Cone> faces(const Cone& cone) {
    std::vector<Cone> out;
    std::size_t r = cone.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        Cone f;
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1) f.push_back(cone[i]);
        out.push_back(f);
    }
    return out;
}

struct Fan {
    std::size_t rank = 0;
    Mat rays;
    std::vector<Cone> cones;  // maximal cones

    Mat ray_vectors(const Cone& c) const {
        Mat m;
        for (int id : c) m.push_back(rays.at(static_cast<std::size_t>(id)));
        return m;
    }

    int find_ray(const Vec& v) const {
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (rays[i] == v) return static_cast<int>(i);
        return -1;
    }

    // True iff c is a face of some maximal cone.
    bool is_cone(const Cone& c) const {
        return std::any_of(cones.begin(), cones.end(), [&](const Cone& s) { return is_subset(c, s); });
    }

    std::vector<std::size_t> cones_containing(const Cone& c) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < cones.size(); ++i)
            if (is_subset(c, cones[i])) out.push_back(i);
        return out;
    }
};

namespace detail {

// Does some point of cone a lie in cone b but outside the face spanned by the
// rays they share?  Decided exactly by Fourier-Motzkin on the coefficients of a.
inline bool meets_beyond_common_face(const Fan& fan, const Cone& a, const Cone& b) {
    std::size_t n = fan.rank;
    Mat brays = fan.ray_vectors(b);
    Mat frame = brays;
    for (auto& f : complete_basis(brays, n)) frame.push_back(f);
    Mat inv = unimodular_inverse(frame);
    Cone shared = cone_intersection(a, b);
    std::size_t r = a.size();
    // Coordinates of sum_k t_k a_k in b's frame: t . T with T[k] = a_k * inv.
    Mat t(r);
    for (std::size_t k = 0; k < r; ++k) t[k] = row_times(fan.rays[static_cast<std::size_t>(a[k])], inv, n);
    std::vector<Inequality> rows;
    for (std::size_t k = 0; k < r; ++k) rows.push_back({unit_vector(r, k), 0});
    for (std::size_t j = 0; j < n; ++j) {
        Vec col(r);
        for (std::size_t k = 0; k < r; ++k) col[k] = t[k][j];
        rows.push_back({col, 0});
        if (j >= b.size()) rows.push_back({-col, 0});
    }
    Vec outside(r, 0);
    bool any = false;
    for (std::size_t k = 0; k < r; ++k)
        if (!std::binary_search(shared.begin(), shared.end(), a[k])) {
            outside[k] = 1;
            any = true;
        }
    if (!any) return false;
    rows.push_back({outside, 1});
    return feasible(rows, r);
}

}  // namespace detail

// Throws InvalidInput describing the first violated fan invariant.
inline void validate_fan(const Fan& fan) {
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        if (fan.rays[i].size() != fan.rank) fail(ErrorKind::InvalidInput, "ray " + std::to_string(i) + " has wrong length");
        if (is_zero(fan.rays[i])) fail(ErrorKind::InvalidInput, "ray " + std::to_string(i) + " is zero");
        for (std::size_t j = 0; j < i; ++j)
            if (fan.rays[i] == fan.rays[j]) fail(ErrorKind::InvalidInput, "duplicate ray " + std::to_string(i));
    }
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        const Cone& s = fan.cones[c];
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k] < 0 || static_cast<std::size_t>(s[k]) >= fan.rays.size())
                fail(ErrorKind::InvalidInput, "cone " + std::to_string(c) + " references unknown ray");
            if (k > 0 && s[k] <= s[k - 1])
                fail(ErrorKind::InvalidInput, "cone " + std::to_string(c) + " ray ids not strictly ascending");
        }
        if (!is_regular(fan.ray_vectors(s))) fail(ErrorKind::InvalidInput, "cone " + std::to_string(c) + " is not regular");
    }
    for (std::size_t c = 0; c < fan.cones.size(); ++c)
        for (std::size_t d = 0; d < fan.cones.size(); ++d) {
            if (c == d) continue;
            if (is_subset(fan.cones[c], fan.cones[d]))
                fail(ErrorKind::InvalidInput, "cone " + std::to_string(c) + " is a face of cone " + std::to_string(d));
            if (c < d && detail::meets_beyond_common_face(fan, fan.cones[c], fan.cones[d]))
                fail(ErrorKind::InvalidInput,
                     "cones " + std::to_string(c) + " and " + std::to_string(d) + " do not meet in a common face");
        }
}

struct Subdivision {
    Fan fan;
    int new_ray = -1;  // -1 when the centre is a single ray
    // For every new maximal cone: the old cone index and the replaced ray id
    // (-1 when the cone was kept unchanged).
    std::vector<std::pair<std::size_t, int>> origin;
};

inline Subdivision star_subdivision(const Fan& fan, const Cone& delta_in) {
    Cone delta = sorted_cone(delta_in);
    if (delta.empty()) fail(ErrorKind::InvalidCenter, "the zero cone is not a valid centre");
    if (!fan.is_cone(delta)) fail(ErrorKind::InvalidCenter, "centre is not a face of any maximal cone");
    Subdivision out;
    out.fan = fan;
    if (delta.size() == 1) {
        for (std::size_t i = 0; i < fan.cones.size(); ++i) out.origin.emplace_back(i, -1);
        return out;
    }
    Vec e0(fan.rank, 0);
    for (int id : delta) e0 = e0 + fan.rays[static_cast<std::size_t>(id)];
    int id0 = fan.find_ray(e0);
    if (id0 < 0) {
        out.fan.rays.push_back(e0);
        id0 = static_cast<int>(out.fan.rays.size() - 1);
    }
    out.new_ray = id0;
    out.fan.cones.clear();
    for (std::size_t i = 0; i < fan.cones.size(); ++i) {
        const Cone& s = fan.cones[i];
        if (!is_subset(delta, s)) {
            out.fan.cones.push_back(s);
            out.origin.emplace_back(i, -1);
            continue;
        }
        for (int rho : delta) {
            Cone c;
            for (int x : s)
                if (x != rho) c.push_back(x);
            c.push_back(id0);
            out.fan.cones.push_back(sorted_cone(c));
            out.origin.emplace_back(i, rho);
        }
    }
    return out;
}

// Positions of delta's rays inside a chart's ordered ray list.
inline std::vector<std::size_t> orbit_closure_ideal(const Cone& delta, const std::vector<int>& frame) {
    std::vector<std::size_t> pos;
    for (int id : delta) {
        auto it = std::find(frame.begin(), frame.end(), id);
        if (it == frame.end()) fail(ErrorKind::InvalidInput, "cone is not a face of the chart");
        pos.push_back(static_cast<std::size_t>(it - frame.begin()));
    }
    std::sort(pos.begin(), pos.end());
    return pos;
}

}  // namespace toricres

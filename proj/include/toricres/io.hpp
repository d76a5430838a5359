#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "blowup.hpp"
#include "hypersurface.hpp"
#include "resolve_general.hpp"
#include "standard_basis.hpp"

namespace toricres {

using Json = nlohmann::ordered_json;

// Error raised while reading a document; `path` is a JSON pointer.
class DocumentError : public Error {
public:
    DocumentError(ErrorKind kind, std::string path, const std::string& what)
        : Error(kind, path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

namespace detail {

[[noreturn]] inline void doc_fail(ErrorKind kind, const std::string& path, const std::string& what) {
    throw DocumentError(kind, path, what);
}

inline Int read_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) doc_fail(ErrorKind::InvalidInput, path, "expected an integer");
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
        doc_fail(ErrorKind::Overflow, path, "integer out of range");
    return j.get<Int>();
}

inline Vec read_vec(const Json& j, const std::string& path, std::optional<std::size_t> len = std::nullopt) {
    if (!j.is_array()) doc_fail(ErrorKind::InvalidInput, path, "expected an integer array");
    if (len && j.size() != *len)
        doc_fail(ErrorKind::InvalidInput, path, "expected length " + std::to_string(*len) + ", got " + std::to_string(j.size()));
    Vec v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(read_int(j[i], path + "/" + std::to_string(i)));
    return v;
}

inline Mat read_mat(const Json& j, const std::string& path, std::optional<std::size_t> len = std::nullopt) {
    if (!j.is_array()) doc_fail(ErrorKind::InvalidInput, path, "expected an array of integer arrays");
    Mat m;
    for (std::size_t i = 0; i < j.size(); ++i) m.push_back(read_vec(j[i], path + "/" + std::to_string(i), len));
    return m;
}

inline const Json& member(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) doc_fail(ErrorKind::InvalidInput, path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) doc_fail(ErrorKind::InvalidInput, path + "/" + key, "missing field");
    return *it;
}

// Runs f, prefixing any library error with the document path.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const DocumentError&) {
        throw;
    } catch (const Error& e) {
        std::string w = e.what();
        doc_fail(e.kind(), path, w.substr(w.find(": ") + 2));
    }
}

}  // namespace detail

struct ProblemDocument {
    EmbeddingState state;
    std::string mode;  // "" when absent
};

inline Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
}

inline ProblemDocument parse_problem(const Json& doc) {
    using namespace detail;
    ProblemDocument out;
    EmbeddingState& s = out.state;
    Int rank = read_int(member(doc, "lattice_rank", ""), "/lattice_rank");
    if (rank < 1) doc_fail(ErrorKind::InvalidInput, "/lattice_rank", "lattice rank must be positive");
    std::size_t n = static_cast<std::size_t>(rank);
    s.fan.rank = n;
    s.fan.rays = read_mat(member(doc, "rays", ""), "/rays", n);
    const Json& cones = member(doc, "maximal_cones", "");
    if (!cones.is_array()) doc_fail(ErrorKind::InvalidInput, "/maximal_cones", "expected an array");
    for (std::size_t c = 0; c < cones.size(); ++c) {
        std::string p = "/maximal_cones/" + std::to_string(c);
        Cone cone;
        for (Int id : read_vec(cones[c], p)) {
            if (id < 0 || static_cast<std::size_t>(id) >= s.fan.rays.size())
                doc_fail(ErrorKind::InvalidInput, p, "unknown ray id " + std::to_string(id));
            cone.push_back(static_cast<int>(id));
        }
        if (sorted_cone(cone) != cone) doc_fail(ErrorKind::InvalidInput, p, "ray ids must be strictly ascending");
        s.fan.cones.push_back(cone);
    }
    at_path("/maximal_cones", [&] { validate_fan(s.fan); });
    if (doc.contains("mode")) {
        const Json& m = doc["mode"];
        if (!m.is_string() || (m != "hypersurface" && m != "general"))
            doc_fail(ErrorKind::InvalidInput, "/mode", "mode must be \"hypersurface\" or \"general\"");
        out.mode = m.get<std::string>();
    }
    const Json& charts = member(doc, "charts", "");
    if (!charts.is_array() || charts.size() != s.fan.cones.size())
        doc_fail(ErrorKind::InvalidInput, "/charts", "expected one chart per maximal cone");
    for (std::size_t c = 0; c < charts.size(); ++c) {
        std::string p = "/charts/" + std::to_string(c);
        const Json& cj = charts[c];
        if (!cj.is_object()) doc_fail(ErrorKind::InvalidInput, p, "expected an object");
        const Cone& cone = s.fan.cones[c];
        std::size_t r = cone.size(), m = n - r;
        Chart ch;
        if (cj.contains("frame")) {
            for (Int id : read_vec(cj["frame"], p + "/frame", r)) ch.frame.push_back(static_cast<int>(id));
            if (sorted_cone(ch.frame) != cone) doc_fail(ErrorKind::InvalidInput, p + "/frame", "frame is not an ordering of the cone's rays");
        } else {
            ch.frame = cone;
        }
        if (cj.contains("torus_basis")) {
            ch.torus_basis = read_mat(cj["torus_basis"], p + "/torus_basis", n);
            if (ch.torus_basis.size() != m)
                doc_fail(ErrorKind::InvalidInput, p + "/torus_basis", "expected " + std::to_string(m) + " vectors");
            if (!is_regular(frame_matrix(s.fan, ch)))
                doc_fail(ErrorKind::InvalidInput, p + "/torus_basis", "rays and torus basis are not a lattice basis");
        } else {
            ch.torus_basis = complete_basis(s.fan.ray_vectors(ch.frame), n);
        }
        ch.ideal = ChartIdeal{r, m, {}, {}};
        const Json& bins = member(cj, "binomials", p);
        if (!bins.is_array()) doc_fail(ErrorKind::InvalidInput, p + "/binomials", "expected an array");
        for (std::size_t k = 0; k < bins.size(); ++k) {
            std::string bp = p + "/binomials/" + std::to_string(k);
            const Json& bj = bins[k];
            Vec alpha = read_vec(member(bj, "alpha", bp), bp + "/alpha", r);
            std::optional<Vec> beta;
            const Json& bb = member(bj, "beta", bp);
            if (!bb.is_null()) beta = read_vec(bb, bp + "/beta", r);
            Vec gamma = bj.contains("gamma") ? read_vec(bj["gamma"], bp + "/gamma", m) : Vec(m, 0);
            at_path(bp, [&] { ch.ideal.add(normalize(alpha, beta, gamma)); });
        }
        if (cj.contains("torus_relations")) {
            Mat tr = read_mat(cj["torus_relations"], p + "/torus_relations", m);
            for (std::size_t k = 0; k < tr.size(); ++k) {
                if (is_zero(tr[k])) doc_fail(ErrorKind::ZeroBinomial, p + "/torus_relations/" + std::to_string(k), "zero torus relation");
                ch.ideal.torus.push_back(canonical_sign(tr[k]));
            }
        }
        at_path(p, [&] { torus_lattice(ch.ideal); });
        s.charts.push_back(std::move(ch));
    }
    at_path("", [&] { validate_state(s); });
    return out;
}

inline Json to_json(const Vec& v) {
    Json j = Json::array();
    for (Int x : v) j.push_back(x);
    return j;
}

inline Json to_json(const Mat& m) {
    Json j = Json::array();
    for (const auto& v : m) j.push_back(to_json(v));
    return j;
}

inline Json to_json(const Cone& c) {
    Json j = Json::array();
    for (int x : c) j.push_back(x);
    return j;
}

inline Json to_json(const Binomial& b) {
    Json j = Json::object();
    j["alpha"] = to_json(b.alpha);
    j["beta"] = to_json(b.beta);
    j["gamma"] = to_json(b.gamma);
    return j;
}

inline Json to_json(const EmbeddingState& s, const std::string& mode = "") {
    Json j = Json::object();
    j["lattice_rank"] = s.fan.rank;
    j["rays"] = to_json(s.fan.rays);
    Json cones = Json::array();
    for (const auto& c : s.fan.cones) cones.push_back(to_json(c));
    j["maximal_cones"] = cones;
    Json charts = Json::array();
    for (const auto& ch : s.charts) {
        Json cj = Json::object();
        cj["frame"] = to_json(ch.frame);
        cj["torus_basis"] = to_json(ch.torus_basis);
        Json bins = Json::array();
        for (const auto& b : ch.ideal.binomials) bins.push_back(to_json(b));
        cj["binomials"] = bins;
        cj["torus_relations"] = to_json(ch.ideal.torus);
        charts.push_back(cj);
    }
    j["charts"] = charts;
    if (!mode.empty()) j["mode"] = mode;
    return j;
}

inline std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

inline Json to_json(const InvariantTriple& t) {
    Json j = Json::object();
    j["gamma"] = t.gamma;
    j["omega"] = t.omega;
    j["w_count"] = t.w_count;
    return j;
}

inline Json trace_to_json(const ResolutionTrace& tr, const std::string& mode, std::optional<Int> seed = std::nullopt) {
    Json j = Json::object();
    j["mode"] = mode;
    j["experimental"] = mode == "general";
    if (seed) j["seed"] = *seed;
    j["input"] = to_json(tr.initial);
    Json steps = Json::array();
    for (const auto& st : tr.steps) {
        Json sj = Json::object();
        sj["center"] = to_json(st.center);
        sj["center_rays"] = to_json(st.center_rays);
        sj["rule"] = st.rule;
        if (mode == "hypersurface") {
            sj["invariant_before"] = to_json(st.before);
            sj["invariant_after"] = to_json(st.after);
        }
        Json recs = Json::array();
        for (const auto& r : st.records) {
            Json rj = Json::object();
            rj["parent_chart"] = r.parent_chart;
            rj["new_chart"] = r.new_chart;
            rj["position"] = r.position;
            rj["before"] = to_json(r.before);
            rj["total"] = to_json(r.total);
            rj["strict"] = to_json(r.strict);
            recs.push_back(rj);
        }
        sj["transforms"] = recs;
        steps.push_back(sj);
    }
    j["steps"] = steps;
    j["final"] = to_json(tr.final_state);
    Json smooth = Json::array();
    for (const auto& c : tr.final_state.charts) smooth.push_back(is_smooth_chart(c));
    j["smooth"] = smooth;
    j["gluing_ok"] = check_gluing(tr.final_state).ok;
    return j;
}

// Re-applies the recorded centres to the recorded input.
inline EmbeddingState replay_trace(const Json& trace) {
    std::string mode = trace.at("mode").get<std::string>();
    EmbeddingState s = parse_problem(trace.at("input")).state;
    if (mode == "general") s = saturate_state(s);
    for (const auto& st : trace.at("steps")) {
        Cone c;
        for (const auto& x : st.at("center")) c.push_back(x.get<int>());
        s = blow_up_global(s, c).state;
        if (mode == "general") s = saturate_state(s);
    }
    return s;
}

}  // namespace toricres

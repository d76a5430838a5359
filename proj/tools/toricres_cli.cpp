#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toricres/toricres.hpp"

using namespace toricres;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitUnresolved = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ProblemDocument load(const std::string& path) { return parse_problem(parse_json_text(read_file(path))); }

void emit(const Json& j) { std::cout << serialize(j); }

int report_error(const Error& e) {
    Json j = Json::object();
    j["ok"] = false;
    j["error"] = error_name(e.kind());
    if (auto* d = dynamic_cast<const DocumentError*>(&e)) j["path"] = d->path();
    j["message"] = e.what();
    emit(j);
    bool unresolved = e.kind() == ErrorKind::IncomparableMaxima || e.kind() == ErrorKind::NonTermination;
    return unresolved ? kExitUnresolved : kExitInvalid;
}

const Chart& chart_at(const EmbeddingState& s, std::size_t id) {
    if (id >= s.charts.size()) fail(ErrorKind::InvalidInput, "chart id " + std::to_string(id) + " out of range");
    return s.charts[id];
}

int cmd_validate(const std::string& input) {
    ProblemDocument doc = load(input);
    GluingReport g = check_gluing(doc.state);
    Json j = Json::object();
    j["ok"] = g.ok;
    j["charts"] = doc.state.charts.size();
    Json viol = Json::array();
    for (const auto& v : g.violations) {
        Json vj = Json::object();
        vj["chart_a"] = v.chart_a;
        vj["chart_b"] = v.chart_b;
        vj["face"] = to_json(v.face);
        viol.push_back(vj);
    }
    j["gluing_violations"] = viol;
    if (!g.ok) j["error"] = "GluingViolation";
    emit(j);
    return g.ok ? 0 : kExitInvalid;
}

int cmd_resolve(const std::string& input, const std::string& mode_opt, const std::string& trace_path,
                std::size_t max_steps, std::optional<Int> seed) {
    ProblemDocument doc = load(input);
    std::string mode = mode_opt.empty() ? (doc.mode.empty() ? "hypersurface" : doc.mode) : mode_opt;
    ResolutionTrace tr = mode == "general" ? resolve_general(doc.state, max_steps) : resolve_hypersurface(doc.state, max_steps);
    Json trace = trace_to_json(tr, mode, seed);
    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out) fail(ErrorKind::InvalidInput, "cannot write " + trace_path);
        out << serialize(trace);
    }
    Json j = Json::object();
    j["ok"] = true;
    j["mode"] = mode;
    if (mode == "general") j["experimental"] = true;
    j["steps"] = tr.steps.size();
    j["smooth"] = trace["smooth"];
    j["gluing_ok"] = trace["gluing_ok"];
    emit(j);
    return 0;
}

int cmd_hasse_locus(const std::string& input) {
    ProblemDocument doc = load(input);
    Json charts = Json::array();
    for (const auto& ch : doc.state.charts) {
        Json cj = Json::array();
        for (const auto& b : ch.ideal.binomials) {
            Json bj = Json::object();
            bj["binomial"] = to_json(b);
            bj["order"] = sum(b.alpha);
            Json comps = Json::array();
            if (sum(b.alpha) >= 2)
                for (const auto& comp : hasse_locus_components(b)) {
                    Cone rays;
                    for (std::size_t p : comp) rays.push_back(ch.frame[p]);
                    comps.push_back(to_json(sorted_cone(rays)));
                }
            bj["components"] = comps;
            cj.push_back(bj);
        }
        charts.push_back(cj);
    }
    Json j = Json::object();
    j["ok"] = true;
    j["charts"] = charts;
    emit(j);
    return 0;
}

int cmd_standard_basis(const std::string& input, std::size_t chart) {
    ProblemDocument doc = load(input);
    StandardBasis sb = standard_basis(chart_at(doc.state, chart).ideal);
    Json j = Json::object();
    j["ok"] = true;
    j["chart"] = chart;
    j["passes_through_point"] = sb.passes_through_point;
    Json els = Json::array();
    for (const auto& b : sb.elements()) {
        Json bj = to_json(b);
        bj["linear"] = sum(b.alpha) == 1;
        els.push_back(bj);
    }
    j["elements"] = els;
    j["torus"] = to_json(sb.torus);
    j["t"] = sb.t();
    j["s"] = sb.s();
    j["nu"] = sb.nu();
    j["vertices"] = to_json(sb.vertices());
    emit(j);
    return 0;
}

int cmd_hilbert_samuel(const std::string& input, std::size_t chart, Int lmax) {
    ProblemDocument doc = load(input);
    HSFunction h = hs_at_distinguished(chart_at(doc.state, chart).ideal);
    Json j = Json::object();
    j["ok"] = true;
    j["chart"] = chart;
    j["on_x"] = !h.empty;
    j["vertices"] = to_json(h.vertices);
    j["free_dims"] = h.free_dims;
    j["values"] = to_json(h.table(lmax));
    emit(j);
    return 0;
}

int cmd_fiber_check(const std::string& input, const std::vector<Int>& primes) {
    ProblemDocument doc = load(input);
    const EmbeddingState& s = doc.state;
    bool ok = true;
    Json reports = Json::array();
    for (Int p : primes) {
        if (p < 2) fail(ErrorKind::InvalidInput, "primes must be at least 2");
        Json pj = Json::object();
        pj["prime"] = p;
        Json hasse = Json::array();
        if (s.fan.rank <= 4 && p <= 3)
            for (std::size_t c = 0; c < s.charts.size(); ++c)
                for (const auto& b : s.charts[c].ideal.binomials) {
                    if (sum(b.alpha) == 0) continue;
                    HasseSetReport r = hasse_set_check(b, p);
                    Json hj = Json::object();
                    hj["chart"] = c;
                    hj["points"] = r.points;
                    hj["monomial_locus"] = r.monomial_locus;
                    hj["derivative_locus"] = r.derivative_locus;
                    hj["equal"] = r.equal;
                    ok = ok && r.equal;
                    hasse.push_back(hj);
                }
        pj["hasse_sets"] = hasse;
        Json jac = Json::array();
        Json nus = Json::array();
        for (std::size_t c = 0; c < s.charts.size(); ++c) {
            const ChartIdeal& id = s.charts[c].ideal;
            JacobianReport r = jacobian_check(id, p);
            bool smooth = is_smooth_chart(s.charts[c]);
            Json jj = Json::object();
            jj["chart"] = c;
            jj["points_on_x"] = r.points_on_x;
            jj["singular_points"] = r.singular_points;
            jj["smooth_chart"] = smooth;
            // a smooth chart must have smooth fibers
            if (smooth && r.singular_points > 0) ok = false;
            jac.push_back(jj);
            std::size_t nu = standard_basis(id).nu();
            std::size_t nup = nu_mod_p(id, p);
            Json nj = Json::object();
            nj["chart"] = c;
            nj["nu"] = nu;
            nj["nu_mod_p"] = nup;
            ok = ok && nu == nup;
            nus.push_back(nj);
        }
        pj["jacobian"] = jac;
        pj["nu"] = nus;
        reports.push_back(pj);
    }
    Json j = Json::object();
    j["ok"] = ok;
    j["primes"] = reports;
    emit(j);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toric resolution of binomial embeddings"};
    app.require_subcommand(1);
    std::string input, mode, trace;
    std::size_t chart = 0, max_steps = 500;
    Int lmax = 10;
    Int seed = 0;
    std::vector<Int> primes{2, 3, 5};

    auto* validate = app.add_subcommand("validate", "Check a problem document");
    validate->add_option("--input", input)->required();

    auto* resolve = app.add_subcommand("resolve", "Resolve and write a trace");
    resolve->add_option("--input", input)->required();
    resolve->add_option("--mode", mode)->check(CLI::IsMember({"hypersurface", "general"}));
    resolve->add_option("--trace", trace);
    resolve->add_option("--max-steps", max_steps);
    auto* seed_opt = resolve->add_option("--seed", seed, "Recorded in the trace; resolution is deterministic");

    auto* hasse = app.add_subcommand("hasse-locus", "Minimal components of the Hasse locus per binomial");
    hasse->add_option("--input", input)->required();

    auto* sb = app.add_subcommand("standard-basis", "Standard basis at a chart's distinguished point");
    sb->add_option("--input", input)->required();
    sb->add_option("--chart", chart)->required();

    auto* hs = app.add_subcommand("hilbert-samuel", "Hilbert-Samuel values at a chart's distinguished point");
    hs->add_option("--input", input)->required();
    hs->add_option("--chart", chart)->required();
    hs->add_option("--lmax", lmax)->required();

    auto* fc = app.add_subcommand("fiber-check", "Per-prime checks on F_p points");
    fc->add_option("--input", input)->required();
    fc->add_option("--primes", primes)->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return cmd_validate(input);
        if (*resolve)
            return cmd_resolve(input, mode, trace, max_steps, seed_opt->count() ? std::optional<Int>(seed) : std::nullopt);
        if (*hasse) return cmd_hasse_locus(input);
        if (*sb) return cmd_standard_basis(input, chart);
        if (*hs) return cmd_hilbert_samuel(input, chart, lmax);
        if (*fc) return cmd_fiber_check(input, primes);
    } catch (const Error& e) {
        return report_error(e);
    }
    return 0;
}

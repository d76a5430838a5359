#include <gtest/gtest.h>

#include "support/corpora.hpp"

using namespace toricres;

namespace {

std::string error_path(const std::string& text) {
    try {
        parse_problem(parse_json_text(text));
    } catch (const DocumentError& e) {
        return e.path();
    } catch (const Error& e) {
        return std::string("<no path> ") + e.what();
    }
    return "<accepted>";
}

ErrorKind error_kind(const std::string& text) {
    try {
        parse_problem(parse_json_text(text));
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Overflow;
}

const char* kAffine = R"({
  "lattice_rank": 2,
  "rays": [[1, 0], [0, 1]],
  "maximal_cones": [[0, 1]],
  "charts": [{"binomials": [{"alpha": [2, 0], "beta": [0, 3]}]}]
})";

}  // namespace

TEST(Io, ParsesAndNormalizes) {
    ProblemDocument d = parse_problem(parse_json_text(kAffine));
    ASSERT_EQ(d.state.charts.size(), 1u);
    EXPECT_EQ(d.state.charts[0].ideal.binomials[0].alpha, (Vec{2, 0}));
    EXPECT_TRUE(d.mode.empty());
}

TEST(Io, RoundTripIsByteIdentical) {
    corpora::Rng rng(91);
    for (int t = 0; t < 20; ++t) {
        Fan f = corpora::random_fan(rng);
        EmbeddingState s = corpora::state_from_characters(f, {corpora::random_primitive(rng, f.rank, 3)});
        std::string once = serialize(to_json(s, "general"));
        ProblemDocument d = parse_problem(parse_json_text(once));
        EXPECT_EQ(d.mode, "general");
        EXPECT_EQ(serialize(to_json(d.state, d.mode)), once);
    }
}

TEST(Io, ErrorPaths) {
    EXPECT_EQ(error_path(R"({"rays": [], "maximal_cones": [], "charts": []})"), "/lattice_rank");
    EXPECT_EQ(error_path(R"({"lattice_rank": 2, "rays": [[1, 0], [0]], "maximal_cones": [], "charts": []})"), "/rays/1");
    EXPECT_EQ(error_path(R"({"lattice_rank": 2, "rays": [[1, 0], [0, 1]], "maximal_cones": [[1, 0]], "charts": [{}]})"),
              "/maximal_cones/0");
    EXPECT_EQ(error_path(R"({"lattice_rank": 2, "rays": [[1, 0], [0, 1]], "maximal_cones": [[0, 1]],
        "charts": [{"binomials": [{"alpha": [1, 1], "beta": [0, 1]}]}]})"),
              "/charts/0/binomials/0");
    EXPECT_EQ(error_kind(R"({"lattice_rank": 2, "rays": [[1, 0], [0, 1]], "maximal_cones": [[0, 1]],
        "charts": [{"binomials": [{"alpha": [1, 1], "beta": [0, 1]}]}]})"),
              ErrorKind::SharedSupport);
    EXPECT_EQ(error_path(R"({"lattice_rank": 2, "rays": [[1, 0], [0, 1]], "maximal_cones": [[0, 1]],
        "charts": [{"binomials": [{"alpha": [1, 0], "beta": null}]}]})"),
              "/charts/0/binomials/0");
    EXPECT_EQ(error_path(R"({"lattice_rank": 2, "rays": [[1, 0], [0, 1]], "maximal_cones": [[0, 1]], "mode": "x",
        "charts": [{"binomials": []}]})"),
              "/mode");
    EXPECT_EQ(error_kind("{not json"), ErrorKind::InvalidInput);
    EXPECT_EQ(error_kind(R"({"lattice_rank": 1, "rays": [[1]], "maximal_cones": [[0]],
        "charts": [{"binomials": [{"alpha": [1], "beta": [99999999999999999999]}]}]})"),
              ErrorKind::InvalidInput);
}

TEST(Io, TraceReplay) {
    for (const std::string mode : {"hypersurface", "general"}) {
        EmbeddingState s = corpora::e1_state();
        ResolutionTrace tr = mode == "general" ? resolve_general(s) : resolve_hypersurface(s);
        Json j = trace_to_json(tr, mode, 7);
        EXPECT_EQ(j["seed"], 7);
        EXPECT_EQ(j["experimental"], mode == "general");
        Json reparsed = parse_json_text(serialize(j));
        EXPECT_EQ(serialize(to_json(replay_trace(reparsed))), serialize(to_json(tr.final_state)));
    }
}

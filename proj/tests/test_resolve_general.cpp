#include <gtest/gtest.h>

#include "support/corpora.hpp"

using namespace toricres;

namespace {

std::vector<Cone> centres(const ResolutionTrace& tr) {
    std::vector<Cone> out;
    for (const auto& st : tr.steps) out.push_back(st.center);
    return out;
}

}  // namespace

TEST(ResolveGeneral, AgreesWithHypersurfaceDriver) {
    for (const EmbeddingState& s : {corpora::e1_state(), corpora::cusp_state()}) {
        ResolutionTrace a = resolve_hypersurface(s);
        ResolutionTrace b = resolve_general(s);
        EXPECT_EQ(centres(a), centres(b));
        EXPECT_TRUE(all_charts_smooth(b.final_state));
    }
}

TEST(ResolveGeneral, CurveThreeFourFive) {
    ResolutionTrace tr = resolve_general(corpora::curve345_state());
    ASSERT_FALSE(tr.steps.empty());
    EXPECT_EQ(tr.steps[0].center, (Cone{0, 1, 2}));
    EXPECT_TRUE(all_charts_smooth(tr.final_state));
    EXPECT_TRUE(check_gluing(tr.final_state).ok);
    for (const auto& c : tr.final_state.charts)
        for (Int p : {2, 3, 5}) EXPECT_EQ(jacobian_check(c.ideal, p).singular_points, 0u);
}

TEST(ResolveGeneral, SmoothInputHasEmptyTrace) {
    ResolutionTrace tr = resolve_general(corpora::affine_state(3, {{{0, 0, 1}, {1, 1, 0}}}));
    EXPECT_TRUE(tr.steps.empty());
}

TEST(ResolveGeneral, SingularChartsAreDetected) {
    // before resolving, the Jacobian criterion finds the singular point
    EmbeddingState s = saturate_state(corpora::curve345_state());
    EXPECT_GT(jacobian_check(s.charts[0].ideal, 2).singular_points, 0u);
    EXPECT_FALSE(all_charts_smooth(s));
}

TEST(ResolveGeneral, MarkedIdealOfE1) {
    EmbeddingState s = saturate_state(corpora::e1_state());
    ZMaximal z = z_maximal_hs(s);
    ASSERT_EQ(z.attaining.size(), 1u);
    StratumChart sc = stratum_chart(s, 0, *z.closed_faces[0]);
    MarkedIdeal h = assemble_marked_ideal(s, {sc});
    EXPECT_EQ(support(h).minimal, (std::vector<Cone>{{0, 1, 2}}));
}

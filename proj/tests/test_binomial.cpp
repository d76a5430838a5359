#include <gtest/gtest.h>

#include "support/corpora.hpp"

using namespace toricres;

TEST(Binomial, ExponentOrder) {
    EXPECT_TRUE(exp_less({0, 1, 1}, {2, 0, 0}));
    EXPECT_TRUE(exp_less({5, 0, 0}, {0, 0, 6}));
    EXPECT_FALSE(exp_less({1, 0}, {1, 0}));
}

TEST(Binomial, NormalizeSwapsToSmallerInitialSide) {
    Normalized n = normalize({2, 0, 0}, Vec{0, 1, 1}, {});
    ASSERT_EQ(n.kind, NormalKind::Binomial);
    EXPECT_EQ(n.binomial.alpha, (Vec{0, 1, 1}));
    EXPECT_EQ(n.binomial.beta, (Vec{2, 0, 0}));
}

TEST(Binomial, NormalizeNegatesGammaOnSwap) {
    Normalized n = normalize({0, 3}, Vec{1, 0}, {2});
    ASSERT_EQ(n.kind, NormalKind::Binomial);
    EXPECT_EQ(n.binomial.alpha, (Vec{1, 0}));
    EXPECT_EQ(n.binomial.gamma, (Vec{-2}));
}

TEST(Binomial, NormalizeClassifies) {
    EXPECT_EQ(normalize({0, 0}, Vec{0, 0}, {3, -1}).kind, NormalKind::TorusRelation);
    EXPECT_EQ(normalize({0, 0}, Vec{0, 0}, {-3, 1}).torus, (Vec{3, -1}));
    EXPECT_EQ(normalize({1, 0}, std::nullopt, {}).kind, NormalKind::Monomial);
    // a one-sided binomial such as 1 - x2 x3 is a binomial
    EXPECT_EQ(normalize({0, 0, 0}, Vec{0, 1, 1}, {}).kind, NormalKind::Binomial);
}

TEST(Binomial, NormalizeErrors) {
    try {
        normalize({1, 1}, Vec{0, 1}, {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SharedSupport);
    }
    try {
        normalize({0, 0}, Vec{0, 0}, {0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroBinomial);
    }
    ChartIdeal id{2, 0, {}, {}};
    try {
        id.add(normalize({1, 0}, std::nullopt, {}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MonomialGenerator);
    }
}

TEST(Binomial, NormalizeIsIdempotent) {
    corpora::Rng rng(31);
    for (int t = 0; t < 500; ++t) {
        Binomial b = corpora::random_binomial(rng, 3, 2, 3);
        Normalized n = normalize(b);
        if (n.kind != NormalKind::Binomial) continue;
        EXPECT_TRUE(is_normalized(n.binomial));
        Normalized again = normalize(n.binomial);
        EXPECT_EQ(again.binomial, n.binomial);
        // the lattice vector only changes sign
        Vec u = to_vector(b), w = to_vector(n.binomial);
        EXPECT_TRUE(u == w || u == -w);
    }
}

TEST(Binomial, VectorRoundTrip) {
    corpora::Rng rng(32);
    for (int t = 0; t < 300; ++t) {
        Binomial b = normalize(corpora::random_binomial(rng, 3, 1, 3)).binomial;
        if (!is_normalized(b)) continue;
        EXPECT_EQ(from_vector(to_vector(b), 3).binomial, b);
    }
}

TEST(Binomial, TorusLatticeAndTorsion) {
    ChartIdeal id{1, 2, {}, {{2, 0}}};
    try {
        torus_lattice(id);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TorsionError);
    }
    ChartIdeal ok{1, 2, {}, {{1, 2}}};
    TorusLattice t = torus_lattice(ok);
    EXPECT_EQ(t.rank, 1u);
    EXPECT_EQ(t.c, 2u);
}

TEST(Binomial, GluingOfCharacterStates) {
    corpora::Rng rng(33);
    for (int t = 0; t < 30; ++t) {
        Fan f = corpora::random_fan(rng);
        Mat chars{corpora::random_primitive(rng, f.rank, 3)};
        EmbeddingState s = corpora::state_from_characters(f, chars);
        EXPECT_NO_THROW(validate_state(s));
        EXPECT_TRUE(check_gluing(s).ok);
    }
}

TEST(Binomial, GluingDetectsMismatch) {
    Fan f{2, {{1, 0}, {0, 1}, {-1, 0}}, {{0, 1}, {1, 2}}};
    EmbeddingState s = corpora::state_from_characters(f, {{1, 2}});
    ASSERT_TRUE(check_gluing(s).ok);
    s.charts[1] = corpora::state_from_characters(f, {{1, 3}}).charts[1];
    GluingReport rep = check_gluing(s);
    EXPECT_FALSE(rep.ok);
    ASSERT_EQ(rep.violations.size(), 1u);
    EXPECT_EQ(rep.violations[0].face, (Cone{1}));
}

TEST(Binomial, RestrictionComposes) {
    corpora::Rng rng(34);
    for (int t = 0; t < 40; ++t) {
        Fan f = corpora::random_fan(rng);
        EmbeddingState s = corpora::state_from_characters(f, {corpora::random_primitive(rng, f.rank, 3)});
        const Chart& c = s.charts[0];
        std::vector<Cone> fs = faces(c.frame.empty() ? Cone{} : sorted_cone(c.frame));
        const Cone& big = fs[static_cast<std::size_t>(corpora::uniform(rng, 0, static_cast<Int>(fs.size()) - 1))];
        std::vector<Cone> sub = faces(big);
        const Cone& small = sub[static_cast<std::size_t>(corpora::uniform(rng, 0, static_cast<Int>(sub.size()) - 1))];
        Chart once = restrict_to_face(f, c, small);
        Chart twice = restrict_to_face(f, restrict_to_face(f, c, big), small);
        EXPECT_EQ(character_lattice(f, once), character_lattice(f, twice));
        EXPECT_EQ(character_lattice(f, once), character_lattice(f, c));
    }
}

#include <gtest/gtest.h>

#include "support/corpora.hpp"
#include "support/oracles.hpp"

using namespace toricres;

TEST(Fan, ValidFans) {
    corpora::Rng rng(21);
    for (int t = 0; t < 30; ++t) EXPECT_NO_THROW(validate_fan(corpora::random_fan(rng)));
}

TEST(Fan, RejectsNonRegularCone) {
    Fan f{2, {{1, 0}, {1, 2}}, {{0, 1}}};
    EXPECT_THROW(validate_fan(f), Error);
}

TEST(Fan, RejectsOverlappingCones) {
    // Cone(e1, e2) and Cone(e1 + e2, e2) overlap without sharing a face
    Fan f{2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {1, 2}}};
    EXPECT_THROW(validate_fan(f), Error);
}

TEST(Fan, RejectsConeThatIsAFace) {
    Fan f{2, {{1, 0}, {0, 1}}, {{0, 1}, {0}}};
    EXPECT_THROW(validate_fan(f), Error);
}

TEST(Fan, StarSubdivisionOfPlane) {
    Fan f = corpora::standard_fan(2);
    Subdivision s = star_subdivision(f, {0, 1});
    EXPECT_EQ(s.new_ray, 2);
    EXPECT_EQ(s.fan.rays[2], (Vec{1, 1}));
    EXPECT_EQ(s.fan.cones, (std::vector<Cone>{{1, 2}, {0, 2}}));
    EXPECT_NO_THROW(validate_fan(s.fan));
}

TEST(Fan, StarSubdivisionKeepsOtherCones) {
    Fan f{2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}};
    Subdivision s = star_subdivision(f, {0, 1});
    EXPECT_EQ(s.fan.cones.size(), 4u);
    EXPECT_NE(std::find(s.fan.cones.begin(), s.fan.cones.end(), Cone{1, 2}), s.fan.cones.end());
    EXPECT_NO_THROW(validate_fan(s.fan));
}

TEST(Fan, SingleRayCentreIsIdentity) {
    Fan f = corpora::standard_fan(3);
    Subdivision s = star_subdivision(f, {1});
    EXPECT_EQ(s.fan.cones, f.cones);
    EXPECT_EQ(s.fan.rays, f.rays);
}

TEST(Fan, InvalidCentres) {
    Fan f{2, {{1, 0}, {0, 1}, {-1, 0}}, {{0, 1}, {1, 2}}};
    try {
        star_subdivision(f, {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidCenter);
    }
    try {
        star_subdivision(f, {0, 2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidCenter);
    }
}

TEST(Fan, OrbitClosurePositions) {
    EXPECT_EQ(orbit_closure_ideal({3, 7}, {7, 1, 3}), (std::vector<std::size_t>{0, 2}));
    EXPECT_THROW(orbit_closure_ideal({4}, {7, 1, 3}), Error);
}

TEST(Fan, SubdivisionPreservesSupportAndRegularity) {
    corpora::Rng rng(22);
    for (int t = 0; t < 15; ++t) {
        Fan f = corpora::random_fan(rng);
        const Cone& c = f.cones[static_cast<std::size_t>(corpora::uniform(rng, 0, static_cast<Int>(f.cones.size()) - 1))];
        Cone face;
        for (int id : c)
            if (corpora::uniform(rng, 0, 1)) face.push_back(id);
        if (face.empty()) face = c;
        Fan g = star_subdivision(f, face).fan;
        EXPECT_NO_THROW(validate_fan(g));
        for (int k = 0; k < 300; ++k) {
            Vec v;
            for (std::size_t i = 0; i < f.rank; ++i) v.push_back(corpora::uniform(rng, -6, 6));
            EXPECT_EQ(oracle::in_support(f, v), oracle::in_support(g, v));
        }
    }
}

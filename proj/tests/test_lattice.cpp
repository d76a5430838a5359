#include <gtest/gtest.h>

#include "support/corpora.hpp"
#include "support/oracles.hpp"

using namespace toricres;

namespace {

Mat random_matrix(corpora::Rng& rng, std::size_t rows, std::size_t cols, Int bound) {
    Mat m;
    for (std::size_t i = 0; i < rows; ++i) {
        Vec v;
        for (std::size_t j = 0; j < cols; ++j) v.push_back(corpora::uniform(rng, -bound, bound));
        m.push_back(v);
    }
    return m;
}

}  // namespace

TEST(Lattice, HermiteNormalFormShape) {
    Mat h = hermite_normal_form({{2, 4, 6}, {1, 1, 1}}, 3);
    ASSERT_EQ(h.size(), 2u);
    EXPECT_EQ(h[0], (Vec{1, 1, 1}));
    EXPECT_EQ(h[1], (Vec{0, 2, 4}));
}

TEST(Lattice, HermiteNormalFormSpansSameLattice) {
    corpora::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        std::size_t rows = static_cast<std::size_t>(corpora::uniform(rng, 1, 4));
        std::size_t cols = static_cast<std::size_t>(corpora::uniform(rng, 1, 5));
        Mat m = random_matrix(rng, rows, cols, 6);
        Mat h = hermite_normal_form(m, cols);
        EXPECT_EQ(h.size(), oracle::rank_over_q(m));
        for (const auto& row : m) EXPECT_TRUE(in_lattice(h, row));
        // echelon with positive pivots, entries above pivots reduced
        for (std::size_t k = 0; k < h.size(); ++k) {
            std::size_t c = pivot_column(h[k]);
            EXPECT_GT(h[k][c], 0);
            if (k > 0) EXPECT_GT(c, pivot_column(h[k - 1]));
            for (std::size_t i = 0; i < k; ++i) {
                EXPECT_GE(h[i][c], 0);
                EXPECT_LT(h[i][c], h[k][c]);
            }
        }
        // every HNF row is an integer combination of the input rows:
        // the input's HNF and the HNF of (input + h) coincide
        Mat both = m;
        both.insert(both.end(), h.begin(), h.end());
        EXPECT_EQ(hermite_normal_form(both, cols), h);
    }
}

TEST(Lattice, SmithInvariants) {
    EXPECT_EQ(smith_invariants({{2, 0}, {0, 3}}, 2), (Vec{1, 6}));
    EXPECT_EQ(smith_invariants({{2, 4}, {4, 8}}, 2), (Vec{2}));
    EXPECT_EQ(smith_invariants({{1, 2, 3}}, 3), (Vec{1}));
}

TEST(Lattice, SmithInvariantsDivideAndMultiplyToDeterminant) {
    corpora::Rng rng(12);
    for (int t = 0; t < 200; ++t) {
        Mat m = random_matrix(rng, 2, 2, 9);
        Int det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        Vec inv = smith_invariants(m, 2);
        if (det == 0) {
            EXPECT_LT(inv.size(), 2u);
            continue;
        }
        ASSERT_EQ(inv.size(), 2u);
        EXPECT_EQ(inv[1] % inv[0], 0);
        EXPECT_EQ(inv[0] * inv[1], std::llabs(det));
        Int g = std::gcd(std::gcd(m[0][0], m[0][1]), std::gcd(m[1][0], m[1][1]));
        EXPECT_EQ(inv[0], g);
    }
}

TEST(Lattice, Regularity) {
    EXPECT_TRUE(is_regular({{1, 0}, {1, 1}}));
    EXPECT_FALSE(is_regular({{1, 0}, {1, 2}}));
    EXPECT_FALSE(is_regular({{2, 0, 0}}));
    EXPECT_TRUE(is_regular({{1, 2, 3}}));
}

TEST(Lattice, CompletionAndInverse) {
    corpora::Rng rng(13);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = static_cast<std::size_t>(corpora::uniform(rng, 1, 4));
        Mat rays{corpora::random_primitive(rng, n, 5)};
        Mat frame = rays;
        for (auto& v : complete_basis(rays, n)) frame.push_back(v);
        ASSERT_EQ(frame.size(), n);
        EXPECT_TRUE(is_regular(frame));
        Mat inv = unimodular_inverse(frame);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Int s = 0;
                for (std::size_t k = 0; k < n; ++k) s += frame[i][k] * inv[k][j];
                EXPECT_EQ(s, i == j ? 1 : 0);
            }
    }
    EXPECT_THROW(complete_basis({{2, 0}}, 2), Error);
    EXPECT_THROW(unimodular_inverse({{2, 0}, {0, 1}}), Error);
}

TEST(Lattice, FourierMotzkin) {
    // x >= 1, y >= 1, x + y <= 3 feasible; x + y <= 1 infeasible
    EXPECT_TRUE(feasible({{{1, 0}, 1}, {{0, 1}, 1}, {{-1, -1}, -3}}, 2));
    EXPECT_FALSE(feasible({{{1, 0}, 1}, {{0, 1}, 1}, {{-1, -1}, -1}}, 2));
}

TEST(Lattice, OverflowIsAnError) {
    EXPECT_THROW(mul(INT64_MAX / 2, 3), Error);
    EXPECT_THROW(add(INT64_MAX, 1), Error);
    try {
        mul(INT64_MAX, INT64_MAX);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Overflow);
    }
}

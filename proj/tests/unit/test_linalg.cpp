#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "toricsym/linalg.hpp"

using namespace toricsym;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

}  // namespace

TEST(Linalg, BareissRankKnownMatrices) {
    EXPECT_EQ(rank(IntegerMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})), 2u);
    EXPECT_EQ(rank(IntegerMatrix::identity(4)), 4u);
    EXPECT_EQ(rank(IntegerMatrix(3, 5)), 0u);
}

TEST(Linalg, KernelOfSingleRow) {
    const auto k = kernel_basis(IntegerMatrix::from_rows({{1, 1, 1, 1}}));
    ASSERT_EQ(k.size(), 3u);
    for (const auto& v : k) EXPECT_TRUE(oracle::dot_zero({1, 1, 1, 1}, v));
}

TEST(Linalg, KernelVectorsArePrimitiveWithPositiveLead) {
    const auto k = kernel_basis(IntegerMatrix::from_rows({{2, 4, 6, 8}, {1, 3, 5, 7}}));
    for (const auto& v : k) {
        EXPECT_EQ(content(v), 1);
        auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
        ASSERT_NE(lead, v.end());
        EXPECT_GT(*lead, 0);
    }
}

TEST(Linalg, RandomKernelAgreesWithGaussOracle) {
    std::mt19937_64 rng(101);
    for (int iter = 0; iter < 150; ++iter) {
        const std::size_t r = 1 + rng() % 5;
        const std::size_t c = 1 + rng() % 7;
        const IntegerMatrix m = random_matrix(rng, r, c, -3, 3);
        const std::size_t rk = oracle::gauss_rank(oracle::matrix_rows(m));
        EXPECT_EQ(rank(m), rk);
        const auto k = kernel_basis(m);
        ASSERT_EQ(k.size(), c - rk);
        EXPECT_EQ(oracle::gauss_rank(k), k.size());
        for (const auto& v : k) EXPECT_TRUE(is_zero(m * v));
    }
}

TEST(Linalg, RationalKernelMatchesScaledInteger) {
    RationalMatrix m(2, 3);
    m(0, 0) = Rational(1, 2);
    m(0, 1) = Rational(1, 3);
    m(1, 2) = 1;
    const auto k = kernel_basis(m);
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], (IntegerVector{2, -3, 0}));
}

TEST(Linalg, SpanEchelonAgreesWithGaussOracle) {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t dim = 1 + rng() % 8;
        SpanEchelon e(dim);
        std::vector<IntegerVector> inserted;
        for (int k = 0; k < 6; ++k) {
            IntegerVector v = random_matrix(rng, 1, dim, -2, 2).row(0);
            const std::size_t before = oracle::gauss_rank(inserted);
            auto with = inserted;
            with.push_back(v);
            const bool grows = oracle::gauss_rank(with) > before;
            EXPECT_EQ(e.contains(v), !grows);
            EXPECT_EQ(e.insert(v), grows);
            inserted.push_back(v);
            EXPECT_EQ(e.rank(), oracle::gauss_rank(inserted));
        }
    }
}

TEST(Linalg, InSpanRejectsDimensionMismatch) {
    EXPECT_THROW(in_span(IntegerVector{1, 2}, {IntegerVector{1, 2, 3}}), std::invalid_argument);
    EXPECT_TRUE(in_span(IntegerVector{0, 0}, {}));
    EXPECT_FALSE(in_span(IntegerVector{1, 0}, {}));
}

TEST(Linalg, HermiteTransformIsUnimodularAndExact) {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 60; ++iter) {
        const IntegerMatrix m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 5, -4, 4);
        const HermiteForm h = hermite_normal_form(m);
        // transform * m == h
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                Integer s = 0;
                for (std::size_t k = 0; k < m.rows(); ++k) s += h.transform(i, k) * m(k, j);
                EXPECT_EQ(s, h.h(i, j));
            }
        EXPECT_EQ(h.rank, oracle::gauss_rank(oracle::matrix_rows(m)));
        // the transform must be invertible over Z: its rows generate Z^r
        for (std::size_t i = 0; i < m.rows(); ++i) {
            IntegerVector e(m.rows());
            e[i] = 1;
            EXPECT_TRUE(integer_solve(h.transform.transpose(), e).has_value());
        }
    }
}

TEST(Linalg, LatticeKernelIsSaturated) {
    // ker of (2 4) over Z is generated by (2,-1); (1, -1/2) is not integral.
    const auto k = lattice_kernel(IntegerMatrix::from_rows({{2, 4}}));
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], (IntegerVector{2, -1}));
    EXPECT_TRUE(lattice_kernel(IntegerMatrix::identity(3)).empty());
}

TEST(Linalg, RandomLatticeKernelContainsIntegerKernelVectors) {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 60; ++iter) {
        const IntegerMatrix m = random_matrix(rng, 1 + rng() % 3, 2 + rng() % 4, 0, 3);
        const auto lk = lattice_kernel(m);
        const auto qk = kernel_basis(m);
        ASSERT_EQ(lk.size(), qk.size());
        for (const auto& u : lk) EXPECT_TRUE(is_zero(m * u));
        if (lk.empty()) continue;
        IntegerMatrix basis(m.cols(), lk.size());
        for (std::size_t j = 0; j < lk.size(); ++j)
            for (std::size_t i = 0; i < m.cols(); ++i) basis(i, j) = lk[j][i];
        for (const auto& v : qk) EXPECT_TRUE(integer_solve(basis, v).has_value());
    }
}

TEST(Linalg, IntegerSolve) {
    const IntegerMatrix b = IntegerMatrix::from_rows({{2, 0}, {0, 3}});
    EXPECT_EQ(integer_solve(b, {4, 9}), (IntegerVector{2, 3}));
    EXPECT_FALSE(integer_solve(b, {1, 0}).has_value());
    EXPECT_THROW(integer_solve(b, {1}), std::invalid_argument);
}

TEST(Linalg, LllKeepsLatticeAndShortens) {
    const std::vector<IntegerVector> basis{{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}};
    const auto reduced = lll_reduce(basis);
    ASSERT_EQ(reduced.size(), 3u);
    IntegerMatrix bm(3, 3);
    IntegerMatrix rm(3, 3);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) {
            bm(i, j) = basis[j][i];
            rm(i, j) = reduced[j][i];
        }
    for (const auto& v : reduced) EXPECT_TRUE(integer_solve(bm, v).has_value());
    for (const auto& v : basis) EXPECT_TRUE(integer_solve(rm, v).has_value());
}

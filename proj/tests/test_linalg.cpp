#include "gerst/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gerst;

namespace {

ExactMatrix random_matrix(std::mt19937& rng, int r, int c, int p)
{
    std::uniform_int_distribution<int> v(-2, 2), e(0, p - 1), z(0, 2);
    ExactMatrix m(r, c, p);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (z(rng) == 0)
                m.set(i, j, Cyc::omega_power(p, e(rng)) * Rational(v(rng)));
    return m;
}

}  // namespace

TEST(Linalg, IdentityRref)
{
    auto id = ExactMatrix::identity(4, 3);
    auto r = rref(id);
    EXPECT_EQ(r.reduced, id);
    EXPECT_EQ(r.pivots, (std::vector<int>{0, 1, 2, 3}));
    EXPECT_TRUE(kernel_basis(id).empty());
}

TEST(Linalg, RankOneRational)
{
    ExactMatrix m(2, 2, 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m.set(i, j, Cyc(3, 1));
    auto r = rref(m);
    EXPECT_EQ(r.pivots, std::vector<int>{0});
    EXPECT_TRUE(r.reduced.at(0, 1).is_one());
    EXPECT_TRUE(r.reduced.at(1, 1).is_zero());
}

TEST(Linalg, CyclotomicRankOne)
{
    ExactMatrix m(2, 2, 3);
    m.set(0, 0, Cyc(3, 1));
    m.set(0, 1, Cyc::omega_power(3, 1));
    m.set(1, 0, Cyc::omega_power(3, 2));
    m.set(1, 1, Cyc(3, 1));
    EXPECT_EQ(rank(m), 1);
    auto k = kernel_basis(m);
    ASSERT_EQ(k.size(), 1u);
    EXPECT_TRUE(m.apply(k[0]).empty());
}

TEST(Linalg, ZeroMatrixKernel)
{
    ExactMatrix m(2, 3, 5);
    EXPECT_EQ(kernel_basis(m).size(), 3u);
}

TEST(Linalg, MembershipBasics)
{
    std::mt19937 rng(7);
    ExactMatrix m = random_matrix(rng, 5, 4, 5);
    auto zero = solve_membership(m, {});
    ASSERT_TRUE(zero.has_value());
    EXPECT_TRUE(m.apply(*zero).empty());
    auto col = m.column(0);
    auto s = solve_membership(m, col);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(m.apply(*s), col);
}

TEST(Linalg, RandomRankNullityAndSolve)
{
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        int p = trial % 2 ? 3 : 5;
        ExactMatrix m = random_matrix(rng, 2 + trial % 5, 3 + trial % 4, p);
        int rk = rank(m);
        EXPECT_EQ(rk + static_cast<int>(kernel_basis(m).size()), m.cols());
        for (const auto& k : kernel_basis(m))
            EXPECT_TRUE(m.apply(k).empty());
        auto rr = rref(m);
        EXPECT_EQ(static_cast<int>(rr.pivots.size()), rk);
        SparseVec x;
        for (int c = 0; c < m.cols(); ++c)
            x.emplace_back(c, Cyc(p, Rational(c + 1, 2)));
        SparseVec v = m.apply(x);
        auto s = solve_membership(m, v);
        ASSERT_TRUE(s.has_value());
        EXPECT_EQ(m.apply(*s), v);
    }
}

TEST(Linalg, NonMember)
{
    ExactMatrix m(2, 1, 3);
    m.set(0, 0, Cyc(3, 1));
    EXPECT_FALSE(solve_membership(m, {{1, Cyc(3, 1)}}).has_value());
}

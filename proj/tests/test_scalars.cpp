#include "gerst/scalars.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gerst;

namespace {

RatPoly poly(std::initializer_list<int> c)
{
    RatPoly r;
    for (int v : c)
        r.emplace_back(v);
    return r;
}

Cyc random_cyc(std::mt19937& rng, int p)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    int d = CyclotomicField::get(p).degree();
    std::vector<Rational> c;
    for (int i = 0; i < d; ++i)
        c.emplace_back(num(rng), den(rng));
    for (auto& r : c)
        r.canonicalize();
    return Cyc(p, c);
}

}  // namespace

TEST(Cyclotomic, SmallCases)
{
    EXPECT_EQ(cyclotomic_polynomial(2), poly({1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(3), poly({1, 1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), poly({1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), poly({1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), poly({1, 0, -1, 0, 1}));
    EXPECT_THROW(cyclotomic_polynomial(1), DomainError);
}

TEST(Cyc, OmegaPowers)
{
    EXPECT_TRUE(Cyc::omega_power(5, 0).is_one());
    Cyc w2 = Cyc::omega_power(3, 2);
    EXPECT_EQ(w2, Cyc(3, std::vector<Rational>{-1, -1}));
    EXPECT_EQ(Cyc::omega_power(3, 5), w2);
    EXPECT_EQ(Cyc::omega_power(3, -1), w2);
    EXPECT_TRUE((Cyc::omega_power(7, 3) * Cyc::omega_power(7, 4)).is_one());
}

TEST(Cyc, Products)
{
    Cyc one_plus_w = Cyc(3, 1) + Cyc::omega_power(3, 1);
    EXPECT_EQ(one_plus_w * one_plus_w, Cyc::omega_power(3, 1));
}

TEST(Cyc, PrimitiveRoots)
{
    for (int p = 3; p <= 12; ++p) {
        for (int e = 1; e < p; ++e)
            EXPECT_FALSE(Cyc::omega_power(p, e).is_one()) << p << " " << e;
        Cyc s(p);
        for (int e = 0; e < p; ++e)
            s += Cyc::omega_power(p, e);
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            prime = prime && p % d;
        if (prime)
            EXPECT_TRUE(s.is_zero()) << p;
    }
}

TEST(Cyc, FieldAxiomsRandom)
{
    std::mt19937 rng(20240611);
    for (int p : {3, 5, 7, 8, 9}) {
        for (int trial = 0; trial < 40; ++trial) {
            Cyc a = random_cyc(rng, p), b = random_cyc(rng, p), c = random_cyc(rng, p);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a * b, b * a);
            if (!a.is_zero())
                EXPECT_TRUE((a * a.inverse()).is_one());
        }
    }
}

TEST(Cyc, ZeroInverseThrows)
{
    EXPECT_THROW(Cyc(5).inverse(), DomainError);
}

TEST(Cyc, MixedFieldsRejected)
{
    EXPECT_THROW(Cyc(3, 1) + Cyc(5, 1), DomainError);
}

TEST(Cyc, DetachedZeroAdopts)
{
    Cyc z;
    z += Cyc::omega_power(5, 2);
    EXPECT_EQ(z.p(), 5);
    EXPECT_EQ(z, Cyc::omega_power(5, 2));
}

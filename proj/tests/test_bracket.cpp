#include "gerst/bracket.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gerst;

namespace {

SmallComplex::Ptr A(int p) { return SmallComplex::get(SmallKind::SmallA, p); }
SmallComplex::Ptr T(int p) { return SmallComplex::get(SmallKind::SmallTaft, p); }

SmallCochain xa(int p, int deg, int i) { return SmallCochain::monomial(A(p), deg, i); }

AlgElem amono(int p, int i, const Cyc& c) { return AlgElem::basis(A(p)->coef(), i, c); }

}  // namespace

TEST(Cochain, TaftValuesRestricted)
{
    EXPECT_THROW(SmallCochain::monomial(T(3), 2, 1, 0), DomainError);
    EXPECT_THROW(SmallCochain::monomial(T(3), 1, 0, 2), DomainError);
    EXPECT_NO_THROW(SmallCochain::monomial(T(3), 1, 1, 2));
}

TEST(Cochain, CocycleConditions)
{
    EXPECT_TRUE(is_cocycle(xa(3, 1, 1)));
    EXPECT_FALSE(is_cocycle(xa(3, 1, 0)));
    // the degree-2 generator composes with u, which kills it
    EXPECT_TRUE(is_cocycle(xa(3, 2, 0)));
    EXPECT_TRUE(is_cocycle(SmallCochain::zero(A(3), 4)));
    EXPECT_TRUE(is_cocycle(SmallCochain::monomial(T(5), 3, 1, 4)));
    EXPECT_TRUE(is_cocycle(SmallCochain::monomial(T(5), 2, 0, 0)));
    EXPECT_FALSE(is_cocycle(SmallCochain::monomial(T(5), 2, 0, 1)));
}

TEST(Cochain, CohomologyDimensions)
{
    EXPECT_EQ(hh_dimension(A(3), 0), 3);
    for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(hh_dimension(A(3), n), 2) << n;
    EXPECT_EQ(hh_dimension(A(5), 2), 4);
    for (int n = 0; n <= 5; ++n)
        EXPECT_EQ(hh_dimension(T(3), n), 1) << n;
}

TEST(Cochain, Classes)
{
    EXPECT_TRUE(to_class(xa(3, 2, 2)).is_zero());
    EXPECT_EQ(to_class(xa(3, 1, 1)).reduced, AlgElem::basis(A(3)->coef(), 1));
    EXPECT_THROW(to_class(xa(3, 1, 0)), DomainError);
    auto odd = SmallCochain::monomial(T(3), 1, 1, 2);
    // x g^2 is the coboundary of a multiple of g^2
    EXPECT_TRUE(to_class(odd).is_zero());
    EXPECT_FALSE(to_class(SmallCochain::monomial(T(3), 1, 1, 0)).is_zero());
}

TEST(Circle, SmallAExamples)
{
    for (int p : {3, 5})
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                AlgElem expect(A(p)->coef());
                if (i + j - 1 >= 0 && i + j - 1 < p)
                    expect.add_term(i + j - 1, Cyc(p, j));
                EXPECT_EQ(circle_phi(xa(p, 1, i), xa(p, 1, j)).value(), expect) << i << "," << j;
                EXPECT_TRUE(circle_phi(xa(p, 2, i), xa(p, 2, j)).value().is_zero());
            }
}

TEST(Circle, TaftDegreeOne)
{
    int p = 5;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            auto f = SmallCochain::monomial(T(p), 1, 1, i), g = SmallCochain::monomial(T(p), 1, 1, j);
            EXPECT_EQ(circle_phi(f, g).value(), AlgElem::basis(T(p)->coef(), taft_index(p, 1, i + j)));
        }
}

TEST(Bracket, SmallAExample)
{
    auto b = bracket_phi(xa(3, 1, 1), xa(3, 1, 2));
    EXPECT_EQ(b.value(), amono(3, 2, Cyc(3, 1)));
}

TEST(Bracket, Antisymmetry)
{
    std::mt19937 rng(42);
    for (auto cx : {A(3), T(3), A(5)}) {
        int p = cx->p();
        for (int trial = 0; trial < 30; ++trial) {
            int m = 1 + static_cast<int>(rng() % 3), n = 1 + static_cast<int>(rng() % 3);
            auto pick = [&](int deg) {
                auto basis = hom_basis(*cx, deg);
                AlgElem v(cx->coef());
                for (int k = 0; k < 2; ++k)
                    v.add_term(basis[rng() % basis.size()], Cyc(p, static_cast<int>(rng() % 5) - 2));
                return SmallCochain(cx, deg, v);
            };
            auto f = pick(m), g = pick(n);
            int e = (m - 1) * (n - 1);
            EXPECT_EQ(bracket_phi(f, g), Cyc(p, e % 2 ? 1 : -1) * bracket_phi(g, f));
            if (e % 2 == 0 && m == n)
                EXPECT_TRUE(bracket_phi(f, f).value().is_zero());
        }
    }
}

TEST(Cup, Examples)
{
    auto one = xa(3, 0, 0);
    auto g = xa(3, 2, 1);
    EXPECT_EQ(cup(one, g), g);
    EXPECT_EQ(cup(g, one), g);
    // three terms x^a x^b x^c with a+b+c = 1, sign -1
    EXPECT_EQ(cup(xa(3, 1, 0), xa(3, 1, 0)).value(), amono(3, 1, Cyc(3, -3)));
    EXPECT_TRUE(cup(SmallCochain::zero(A(3), 1), g).value().is_zero());
}

TEST(Derivation, Examples)
{
    EXPECT_TRUE(derivation_identity_check(xa(3, 1, 1), xa(3, 1, 1), SmallCochain::zero(A(3), 2)));
    EXPECT_TRUE(derivation_identity_check(xa(3, 1, 1), xa(3, 1, 1), xa(3, 2, 0)));
    auto t = T(3);
    EXPECT_TRUE(derivation_identity_check(SmallCochain::monomial(t, 1, 1, 1), SmallCochain::monomial(t, 0, 0, 0),
                                          SmallCochain::monomial(t, 1, 1, 2)));
    EXPECT_THROW(derivation_identity_check(xa(3, 1, 0), xa(3, 1, 1), xa(3, 1, 1)), DomainError);
}

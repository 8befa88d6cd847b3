#include "gerst/diagonal.hpp"
#include "gerst/homotopy.hpp"
#include "gerst/resolution.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace gerst;
using namespace gerst::testing;

namespace {

SmallComplex::Ptr A(int p) { return SmallComplex::get(SmallKind::SmallA, p); }
SmallComplex::Ptr T(int p) { return SmallComplex::get(SmallKind::SmallTaft, p); }

}  // namespace

TEST(Resolution, BoundaryShapes)
{
    auto cx = A(3);
    ResElem d1 = differential(ResElem::generator(cx, 1));
    ResElem u = ResElem::generator(cx, 0, 1) - ResElem::generator(cx, 0, 0, 1);
    EXPECT_EQ(d1, u);
    ResElem d2 = differential(ResElem::generator(cx, 2));
    ResElem v = ResElem::generator(cx, 1, 0, 2) + ResElem::generator(cx, 1, 1, 1) + ResElem::generator(cx, 1, 2, 0);
    EXPECT_EQ(d2, v);
    EXPECT_THROW(differential(ResElem::generator(cx, 0)), DomainError);
}

TEST(Resolution, RejectsBadParameters)
{
    EXPECT_THROW(SmallComplex::get(SmallKind::SmallA, 2), DomainError);
    EXPECT_THROW(ResElem::generator(A(3), -1), DomainError);
}

TEST(Resolution, AugmentKillsBoundaries)
{
    for (int p : {3, 5, 7})
        for (auto cx : {A(p), T(p)})
            for (const auto& e : singles(cx, 1))
                EXPECT_TRUE(augment(differential(e)).is_zero());
}

TEST(Resolution, TaftTwist)
{
    int p = 3;
    auto cx = T(p);
    int g = taft_index(p, 0, 1), x = taft_index(p, 1, 0);
    // g . xi_1 = w xi_1 g ; g . xi_2 = xi_2 g ; g . x xi_2 = w x xi_2 g
    EXPECT_EQ(left_mul_basis(g, ResElem::generator(cx, 1)), Cyc::omega_power(p, 1) * ResElem::generator(cx, 1, 0, g));
    EXPECT_EQ(left_mul_basis(g, ResElem::generator(cx, 2)), ResElem::generator(cx, 2, 0, g));
    EXPECT_EQ(left_mul_basis(g, ResElem::generator(cx, 2, 1)), Cyc::omega_power(p, 1) * ResElem::generator(cx, 2, 1, g));
    EXPECT_EQ(right_mul_basis(ResElem::generator(cx, 2, 0, g), x),
              Cyc::omega_power(p, 1) * ResElem::generator(cx, 2, 0, taft_index(p, 1, 1)));
}

TEST(Resolution, DifferentialIsBimoduleLinear)
{
    for (int p : {3, 5}) {
        auto cx = T(p);
        for (int n = 1; n <= 6; ++n)
            for (const auto& e : singles(cx, n))
                for (int t = 0; t < cx->coef()->dim(); ++t) {
                    EXPECT_EQ(differential(left_mul_basis(t, e)), left_mul_basis(t, differential(e)));
                    EXPECT_EQ(differential(right_mul_basis(e, t)), right_mul_basis(differential(e), t));
                }
    }
}

TEST(Resolution, DSquaredZero)
{
    for (int p : {3, 5, 7})
        for (auto cx : {A(p), T(p)}) {
            for (int n = 2; n <= 8; ++n)
                for (const auto& e : singles(cx, n))
                    EXPECT_TRUE(differential(differential(e)).is_zero()) << cx->name() << " p=" << p << " n=" << n;
            for (int n = 2; n <= 8; ++n)
                for (const auto& e : pairs(cx, n, p == 3))
                    EXPECT_TRUE(differential(differential(e)).is_zero()) << "pair " << cx->name() << " n=" << n;
        }
}

TEST(Resolution, FExamples)
{
    auto cx = A(3);
    EXPECT_EQ(F_map(ResElem::pair(cx, 0, 1, 1)), ResElem::generator(cx, 1, 1));
    EXPECT_EQ(F_map(ResElem::pair(cx, 1, 1, 0)), -ResElem::generator(cx, 1, 0, 1));
    EXPECT_TRUE(F_map(ResElem::pair(cx, 1, 1, 1)).is_zero());
    EXPECT_EQ(F_map(ResElem::pair(cx, 0, 2, 0)), ResElem::generator(cx, 0, 2) - ResElem::generator(cx, 0, 0, 2));
}

TEST(Resolution, FIsChainMap)
{
    for (int p : {3, 5, 7})
        for (auto cx : {A(p), T(p)})
            for (int n = 1; n <= 6; ++n)
                for (const auto& e : pairs(cx, n, p == 3))
                    EXPECT_EQ(differential(F_map(e)), F_map(differential(e)));
}

TEST(Resolution, PsiExamples)
{
    int p = 3;
    auto cx = T(p);
    TaftTensorElem e{{TaftTensorTerm{0, 0, 0, 1, 0, 1, 0, 0}, Cyc(p, 1)}};
    EXPECT_EQ(psi_apply(cx, e), Cyc::omega_power(p, 1) * ResElem::pair(cx, 0, 1, 0, 0, taft_index(p, 0, 1)));
    TaftTensorElem one{{TaftTensorTerm{}, Cyc(p, 1)}};
    EXPECT_EQ(psi_apply(cx, one), ResElem::pair(cx, 0, 0, 0));
    // odd right generator picks up the twist
    TaftTensorElem odd{{TaftTensorTerm{0, 0, 0, 1, 1, 0, 0, 0}, Cyc(p, 1)}};
    EXPECT_EQ(psi_apply(cx, odd), Cyc::omega_power(p, 1) * ResElem::pair(cx, 0, 0, 1, 0, taft_index(p, 0, 1)));
}

namespace {

TaftTensorElem random_taft_tensor(std::mt19937& rng, int p, int deg)
{
    std::uniform_int_distribution<int> e(0, p - 1), a(0, deg), c(-2, 2);
    TaftTensorElem out;
    for (int k = 0; k < 3; ++k) {
        TaftTensorTerm t;
        t.a = a(rng);
        t.b = deg - t.a;
        t.i1 = e(rng), t.j1 = e(rng), t.k1 = e(rng), t.i2 = e(rng), t.j2 = e(rng), t.k2 = e(rng);
        Cyc v(p, c(rng));
        if (!v.is_zero())
            out[t] += v;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

}  // namespace

TEST(Resolution, PsiRoundTripAndLinearity)
{
    std::mt19937 rng(1234);
    for (int p : {3, 5}) {
        auto cx = T(p);
        for (int trial = 0; trial < 60; ++trial) {
            int deg = trial % 5;
            auto e = random_taft_tensor(rng, p, deg);
            if (e.empty())
                continue;
            ResElem pe = psi_apply(cx, e);
            EXPECT_EQ(psi_apply(cx, psi_inverse(pe)), pe);
            int t = std::uniform_int_distribution<int>(0, p * p - 1)(rng);
            int s = std::uniform_int_distribution<int>(0, p * p - 1)(rng);
            auto moved = taft_tensor_right_mul(p, taft_tensor_left_mul(p, t, e), s);
            EXPECT_EQ(psi_apply(cx, moved), right_mul_basis(left_mul_basis(t, pe), s));
        }
    }
}

TEST(Resolution, PsiBalancedOverTaft)
{
    // (y g) (x) y' and y (x) (g y') have the same image
    int p = 5;
    auto cx = T(p);
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> e(0, p - 1);
    for (int trial = 0; trial < 80; ++trial) {
        TaftTensorTerm t;
        t.a = e(rng) % 3, t.b = e(rng) % 3;
        t.i1 = e(rng), t.j1 = e(rng), t.k1 = e(rng), t.i2 = e(rng), t.j2 = e(rng), t.k2 = e(rng);
        int kk = t.k1;
        // move g^{k1} onto the right factor by the Taft-side action
        TaftTensorElem right{{TaftTensorTerm{t.b, t.i2, t.j2, t.k2, 0, 0, 0, 0}, Cyc(p, 1)}};
        auto moved = taft_tensor_left_mul(p, taft_index(p, 0, kk), right);
        TaftTensorElem lhs{{t, Cyc(p, 1)}}, rhs;
        for (const auto& [m, c] : moved)
            rhs[TaftTensorTerm{t.a, t.i1, t.j1, 0, m.a, m.i1, m.j1, m.k1}] += c;
        EXPECT_EQ(psi_apply(cx, lhs), psi_apply(cx, rhs));
    }
}

TEST(Resolution, TransportOfF)
{
    for (int p : {3, 5, 7}) {
        auto cx = T(p);
        std::mt19937 rng(static_cast<unsigned>(p) * 17);
        for (int deg = 0; deg <= 6; ++deg)
            for (int trial = 0; trial < (p == 3 ? 60 : 25); ++trial) {
                auto e = random_taft_tensor(rng, p, deg);
                if (e.empty())
                    continue;
                EXPECT_EQ(taft_side_F(cx, e), F_map(psi_apply(cx, e))) << "p=" << p << " deg=" << deg;
                if (deg >= 1)
                    EXPECT_EQ(psi_apply(cx, taft_side_differential(p, e)), differential(psi_apply(cx, e)));
            }
    }
}

TEST(Homotopy, Examples)
{
    auto cx = A(3);
    EXPECT_EQ(h_apply(ResElem::generator(cx, 0, 1)), ResElem::generator(cx, 1));
    EXPECT_EQ(h_apply(ResElem::generator(cx, 1, 2)), ResElem::generator(cx, 2));
    EXPECT_TRUE(h_apply(ResElem::generator(cx, 1, 1)).is_zero());
    AlgElem x = AlgElem::basis(cx->coef(), 1);
    EXPECT_EQ(h_minus1(cx, x), ResElem::generator(cx, 0, 0, 1));
}

TEST(Homotopy, ContractingIdentity)
{
    for (int p : {3, 5, 7})
        for (auto cx : {A(p), T(p)}) {
            // degree -1: mu h_{-1} = id
            for (int t = 0; t < cx->coef()->dim(); ++t) {
                AlgElem a = AlgElem::basis(cx->coef(), t);
                EXPECT_EQ(augment(h_minus1(cx, a)), a);
            }
            for (const auto& e : singles(cx, 0))
                EXPECT_EQ(h_minus1(cx, augment(e)) + differential(h_apply(e)), e) << cx->name() << " p=" << p;
            for (int n = 1; n <= 8; ++n)
                for (const auto& e : singles(cx, n))
                    EXPECT_EQ(h_apply(differential(e)) + differential(h_apply(e)), e)
                        << cx->name() << " p=" << p << " n=" << n << " e=" << e.str();
        }
}

TEST(Homotopy, PhiClosedForms)
{
    for (int p : {3, 5, 7}) {
        auto cx = A(p);
        auto phi = phi_table(cx, 2);
        for (int i = 0; i < p; ++i) {
            ResElem f0(cx, 1, 1);
            for (int l = 0; l < i; ++l)
                f0 += ResElem::generator(cx, 1, l, i - 1 - l);
            EXPECT_EQ(phi->on_generator(0, i, 0), f0);
            ResElem f10(cx, 1, 2), f01(cx, 1, 2);
            if (i == p - 1) {
                f10 = -ResElem::generator(cx, 2);
                f01 = ResElem::generator(cx, 2);
            }
            EXPECT_EQ(phi->on_generator(1, i, 0), f10);
            EXPECT_EQ(phi->on_generator(0, i, 1), f01);
        }
    }
}

TEST(Homotopy, PhiIdentity)
{
    for (int p : {3, 5, 7})
        for (auto cx : {A(p), T(p)}) {
            auto phi = phi_table(cx, 6);
            for (int n = 0; n <= 6; ++n)
                for (const auto& e : pairs(cx, n, p == 3)) {
                    ResElem lhs = differential(phi->apply(e));
                    if (n >= 1)
                        lhs += phi->apply(differential(e));
                    EXPECT_EQ(lhs, F_map(e)) << cx->name() << " p=" << p << " e=" << e.str();
                }
        }
}

TEST(Homotopy, TaftPhiMatchesDirectRecursion)
{
    for (int p : {3, 5}) {
        auto cx = T(p);
        auto direct = phi_table(cx, 4);
        std::mt19937 rng(555 + p);
        for (int deg = 0; deg <= 4; ++deg)
            for (int trial = 0; trial < 30; ++trial) {
                auto e = random_taft_tensor(rng, p, deg);
                if (e.empty())
                    continue;
                EXPECT_EQ(taft_phi(cx, e), direct->apply(psi_apply(cx, e)));
            }
        // displayed low-degree values
        TaftTensorElem g0{{TaftTensorTerm{0, 0, 0, 0, 0, 1, 0, 0}, Cyc(p, 1)}};
        EXPECT_EQ(taft_phi(cx, g0), ResElem::generator(cx, 1));
        TaftTensorElem g1{{TaftTensorTerm{1, 0, 0, 0, 0, p - 1, 0, 0}, Cyc(p, 1)}};
        EXPECT_EQ(taft_phi(cx, g1), -ResElem::generator(cx, 2));
        TaftTensorElem g2{{TaftTensorTerm{0, 0, 0, 0, 1, p - 1, 0, 0}, Cyc(p, 1)}};
        EXPECT_EQ(taft_phi(cx, g2), ResElem::generator(cx, 2));
    }
}

TEST(Diagonal, Examples)
{
    auto cx = A(3);
    EXPECT_EQ(diag(cx, 1), ResElem::pair(cx, 1, 0, 0) + ResElem::pair(cx, 0, 0, 1));
    EXPECT_EQ(diag(cx, 2).terms().size(), 5u);
    ResElem d3(cx, 2, 3);
    for (int i = 0; i <= 3; ++i)
        d3 += ResElem::pair(cx, i, 0, 3 - i);
    EXPECT_EQ(diag(cx, 3), d3);
    ResElem t1 = diag2(cx, 1);
    EXPECT_EQ(t1.terms().size(), 3u);
    EXPECT_EQ(diag2(cx, 0).terms().size(), 1u);
}

TEST(Diagonal, TaftDiag2OfXi2)
{
    int p = 5;
    auto cx = T(p);
    ResElem t = diag2(cx, 2);
    // three single words and three families indexed by a+b+c = p-2
    int fam = (p - 1) * p / 2;
    EXPECT_EQ(t.terms().size(), static_cast<size_t>(3 + 3 * fam));
    for (const auto& [wd, c] : t.terms())
        EXPECT_EQ(taft_gdeg(p, wd.right), 0);
}

TEST(Diagonal, ChainMap)
{
    for (int p : {3, 5, 7})
        for (auto cx : {A(p), T(p)})
            for (int n = 1; n <= 8; ++n) {
                ResElem gen = ResElem::generator(cx, n);
                EXPECT_EQ(differential(diag(cx, n)), diag_apply(differential(gen))) << cx->name() << " n=" << n;
            }
}

TEST(Diagonal, CounitLaw)
{
    for (int p : {3, 5})
        for (auto cx : {A(p), T(p)})
            for (int n = 0; n <= 6; ++n) {
                ResElem left(cx, 1, n), right(cx, 1, n);
                ResElem dn = diag(cx, n);
                for (const auto& [wd, c] : dn.terms()) {
                    if (wd.deg[0] == 0 && wd.xs[0] + wd.xs[1] < p)
                        left += c * ResElem::generator(cx, wd.deg[1], wd.xs[0] + wd.xs[1], wd.right);
                    if (wd.deg[1] == 0)
                        right += c * right_mul_basis(right_mul_basis(ResElem::generator(cx, wd.deg[0], wd.xs[0]),
                                                                     cx->coef_index(wd.xs[1], 0)),
                                                     wd.right);
                }
                EXPECT_EQ(left, ResElem::generator(cx, n)) << cx->name() << " n=" << n;
                EXPECT_EQ(right, ResElem::generator(cx, n)) << cx->name() << " n=" << n;
            }
}

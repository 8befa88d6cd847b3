#pragma once

#include "gerst/oracle.hpp"

#include <vector>

namespace gerst {

/* Cochains on the bar resolution P of the trivial module k over T_p. A
 * left-module map on P_n = T_p (x) T_p^{(x)n} is fixed by its values on the
 * generators 1 (x) c^1 (x) ... (x) c^n, stored as a dense table indexed like
 * BarCochain. TrivialCochain takes values in k. */
class TrivialCochain {
public:
    TrivialCochain() = default;
    TrivialCochain(Algebra::Ptr alg, int degree);

    const Algebra::Ptr& algebra() const { return alg_; }
    int degree() const { return degree_; }
    long size() const { return static_cast<long>(table_.size()); }
    const Cyc& at(long tuple) const { return table_[tuple]; }
    Cyc& at(long tuple) { return table_[tuple]; }

    bool is_zero() const;
    TrivialCochain& operator+=(const TrivialCochain& o);
    TrivialCochain& operator-=(const TrivialCochain& o);
    friend TrivialCochain operator+(TrivialCochain a, const TrivialCochain& b) { return a += b; }
    friend TrivialCochain operator-(TrivialCochain a, const TrivialCochain& b) { return a -= b; }
    friend TrivialCochain operator*(const Cyc& c, TrivialCochain f);
    friend bool operator==(const TrivialCochain& a, const TrivialCochain& b);

private:
    Algebra::Ptr alg_;
    int degree_ = 0;
    std::vector<Cyc> table_;
};

/// Values in T_p under the left adjoint action a.b = a_1 b S(a_2); same table layout as BarCochain.
using AdjointCochain = BarCochain;

/* Elements of X_n = T_p^e (x)_{T_p} P_n. The basis element
 * (a (x) b) (x) (1 (x) c^1 (x) ... (x) c^n) uses the BarElem key of (a, c^1..c^n, b). */
using XElem = BarElem;

/// A bimodule map X_n -> T_p, stored by its values on (1 (x) 1) (x) (1 (x) c).
struct XCochain {
    BarCochain gen;
};

/// Sum of coeff * a F(c) b over the terms (a, c, b) of e.
AlgElem bar_eval(const BarCochain& F, const BarElem& e);
AlgElem x_eval(const XCochain& f, const XElem& e);

/// theta((a(x)b)(x)(1(x)c)) = a (x) c^1_1 (x) .. (x) c^n_1 (x) S(c^1_2 .. c^n_2) b
BarElem theta(const XElem& e);
/// psi(a (x) c (x) b) = (a (x) c^1_2 .. c^n_2 b) (x) (1 (x) c^1_1 (x) .. (x) c^n_1)
XElem psi_X(const BarElem& e);
XElem x_differential(const XElem& e);

/// Shapiro transfer between left-module maps on P and bimodule maps on X.
XCochain sigma(const AdjointCochain& f);
AdjointCochain tau(const XCochain& f);

/// psi^* (precomposition with psi) and theta^* (precomposition with theta).
BarCochain psi_star(const XCochain& f);
XCochain theta_star(const BarCochain& F);

/// [f,g]_X = [psi^* f, psi^* g] theta.
XCochain x_bracket(const XCochain& f, const XCochain& g);

/// Closed Sweedler formula for f o_P g.
AdjointCochain circle_P(const AdjointCochain& f, const AdjointCochain& g);
/// tau((psi^* sigma f o psi^* sigma g) theta), the defining composite.
AdjointCochain circle_P_composite(const AdjointCochain& f, const AdjointCochain& g);
AdjointCochain bracket_P(const AdjointCochain& f, const AdjointCochain& g);

AdjointCochain eta_star(const TrivialCochain& f);
TrivialCochain epsilon_star(const AdjointCochain& f);

TrivialCochain trivial_differential(const TrivialCochain& f);
AdjointCochain adjoint_differential(const AdjointCochain& f);
bool is_trivial_coboundary(const TrivialCochain& f);
bool is_adjoint_coboundary(const AdjointCochain& f);

/// [f,g] = eps_*[eta_* f, eta_* g]_P on cocycles of Hom(P, k).
TrivialCochain hopf_bracket(const TrivialCochain& f, const TrivialCochain& g);

/// dim H^n(T_p, k) for n = 0..max_degree.
std::vector<int> hopf_cohomology_dims(int p, int max_degree);
/// Cocycles representing a basis of H^n(T_p, k).
std::vector<TrivialCochain> hopf_cohomology_basis(int p, int degree);

/* Image of a Hopf cocycle in Hochschild cohomology: eta_*, then sigma and
 * psi^* into the bar complex, then back to the small Taft complex. */
CohomClass hopf_to_hochschild(const ComparisonMaps& cm, const TrivialCochain& f);

}  // namespace gerst

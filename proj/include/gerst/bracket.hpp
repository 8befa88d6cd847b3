#pragma once

#include "gerst/resolution.hpp"

#include <string>
#include <vector>

namespace gerst {

/* A cochain on the small complex: the bimodule map sending xi_n to value.
 * On the Taft side only values x^{n mod 2} g^k are compatible with the
 * bimodule structure, so the Hom space in degree n is spanned by those. */
class SmallCochain {
public:
    SmallCochain() = default;
    SmallCochain(SmallComplex::Ptr cx, int degree, AlgElem value);

    /// x^i xi_n^* on the A side, f_{x^i g^k} on the Taft side.
    static SmallCochain monomial(SmallComplex::Ptr cx, int degree, int xdeg, int gdeg = 0);
    static SmallCochain zero(SmallComplex::Ptr cx, int degree);

    const SmallComplex::Ptr& complex() const { return cx_; }
    int degree() const { return degree_; }
    const AlgElem& value() const { return value_; }
    int p() const { return cx_->p(); }

    /// Value on an element of the small complex of matching degree.
    AlgElem eval(const ResElem& e) const;

    SmallCochain& operator+=(const SmallCochain& o);
    SmallCochain& operator-=(const SmallCochain& o);
    friend SmallCochain operator+(SmallCochain a, const SmallCochain& b) { return a += b; }
    friend SmallCochain operator-(SmallCochain a, const SmallCochain& b) { return a -= b; }
    friend SmallCochain operator*(const Cyc& c, SmallCochain f);
    friend bool operator==(const SmallCochain& a, const SmallCochain& b);

    std::string str() const;

private:
    void check(const SmallCochain& o) const;
    SmallComplex::Ptr cx_;
    int degree_ = 0;
    AlgElem value_;
};

/// Monomial indices spanning the Hom space in the given degree.
std::vector<int> hom_basis(const SmallComplex& cx, int degree);

/// f o d_{n+1}.
SmallCochain coboundary(const SmallCochain& f);
bool is_cocycle(const SmallCochain& f);

/// f o_phi g = f phi (id (x) g (x) id) D^(2) with the Koszul sign on g.
SmallCochain circle_phi(const SmallCochain& f, const SmallCochain& g);
SmallCochain bracket_phi(const SmallCochain& f, const SmallCochain& g);

/// (f u g)(xi_{m+n}) = (-1)^{mn} (f (x) g) applied to the (m,n) part of D(xi_{m+n}).
SmallCochain cup(const SmallCochain& f, const SmallCochain& g);

/* Cohomology class: the value reduced modulo the coboundaries of the Hom
 * complex. The reduction is canonical, so classes compare by equality. */
struct CohomClass {
    SmallComplex::Ptr complex;
    int degree = 0;
    AlgElem reduced;

    bool is_zero() const { return reduced.is_zero(); }
    std::string str() const;
    friend bool operator==(const CohomClass& a, const CohomClass& b)
    {
        return a.degree == b.degree && a.reduced == b.reduced;
    }
};

/// Reduction modulo coboundaries; defined for any cochain.
CohomClass reduce_mod_coboundaries(const SmallCochain& f);
/// Same, but rejects non-cocycles.
CohomClass to_class(const SmallCochain& f);

/// Reduced cocycle values representing a basis of HH^n.
std::vector<AlgElem> cohomology_basis(const SmallComplex::Ptr& cx, int degree);
int hh_dimension(const SmallComplex::Ptr& cx, int degree);

/// [f u g, h] = [f,h] u g + (-1)^{|f|(|h|-1)} f u [g,h] on classes.
bool derivation_identity_check(const SmallCochain& f, const SmallCochain& g, const SmallCochain& h);

}  // namespace gerst

#pragma once

#include "gerst/resolution.hpp"

#include <map>
#include <memory>
#include <tuple>

namespace gerst {

/* Contracting homotopy of the augmented small complex.
 *   h_{-1}(x^i)          = xi_0 x^i
 *   h_0(x^i xi_0 x^j)    = sum_{l<i} x^l xi_1 x^{i+j-1-l}
 *   h_1(x^i xi_1 x^j)    = [i = p-1] x^j xi_2
 *   h_2n(x^i xi_2n x^j)  = -sum_{l<j} x^{i+j-1-l} xi_{2n+1} x^l      (n >= 1)
 *   h_2n+1(...)          = [j = p-1] x^i xi_{2n+2}                     (n >= 1)
 * On the Taft side the group part of the right coefficient is carried along.
 * Only k-linear. */
ResElem h_minus1(const SmallComplex::Ptr& cx, const AlgElem& a);
ResElem h_apply(const ResElem& e);

/* A^e-linear (resp. T_p^e-linear) homotopy phi for F on the tensor square,
 * stored on generators xi_a (x) x^m xi_b and built degree by degree from
 *   phi_i = h_i (F - phi_{i-1} d). */
class PhiTable {
public:
    PhiTable() = default;
    PhiTable(SmallComplex::Ptr cx, int max_degree);

    const SmallComplex::Ptr& complex() const { return cx_; }
    int max_degree() const { return max_degree_; }

    /// Value on the generator xi_a (x) x^m xi_b.
    const ResElem& on_generator(int a, int m, int b) const;
    /// Extension to any tensor-square element of total degree <= max_degree.
    ResElem apply(const ResElem& e) const;

private:
    SmallComplex::Ptr cx_;
    int max_degree_ = -1;
    std::map<std::tuple<int, int, int>, ResElem> table_;
};

PhiTable build_phi(const SmallComplex::Ptr& cx, int max_degree);

/// Cached tables, grown on demand.
std::shared_ptr<const PhiTable> phi_table(const SmallComplex::Ptr& cx, int max_degree);

/* Taft homotopy transported from the SmallA one: (phi (x) id_kG) psi. The
 * input is a Taft-side tensor; the result lives in the SmallTaft complex. */
ResElem taft_phi(const SmallComplex::Ptr& taft_cx, const TaftTensorElem& e);

/// Re-reads a SmallA element as a SmallTaft element with group part g^k.
ResElem lift_to_taft(const SmallComplex::Ptr& taft_cx, const ResElem& e, int gdeg = 0);

}  // namespace gerst

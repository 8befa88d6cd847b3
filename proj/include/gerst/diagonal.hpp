#pragma once

#include "gerst/resolution.hpp"

namespace gerst {

/* Diagonal chain map into the tensor square, on the generator xi_n:
 *   D(xi_2n)   = sum_i xi_2i (x) xi_{2n-2i}
 *              + sum_{i<n} sum_{a+b+c=p-2} x^a xi_{2i+1} (x) x^b xi_{2n-2i-1} x^c
 *   D(xi_2n+1) = sum_i xi_i (x) xi_{2n+1-i}
 * The Taft diagonal carries the same words with trivial group part. */
ResElem diag(const SmallComplex::Ptr& cx, int n);

/// Bimodule extension of diag to any element of the small complex.
ResElem diag_apply(const ResElem& e);

/// (id (x) D) on a tensor-square element, landing in the tensor cube.
ResElem diag_right(const ResElem& e);

/// Iterated diagonal (id (x) D) D on xi_n.
ResElem diag2(const SmallComplex::Ptr& cx, int n);

}  // namespace gerst

#pragma once

#include "gerst/resolution.hpp"

#include <random>
#include <vector>

namespace gerst::testing {

inline std::vector<ResElem> singles(const SmallComplex::Ptr& cx, int n)
{
    std::vector<ResElem> r;
    for (int i = 0; i < cx->p(); ++i)
        for (int t = 0; t < cx->coef()->dim(); ++t)
            r.push_back(ResElem::generator(cx, n, i, t));
    return r;
}

/// Tensor-square basis words of total degree n; every left/interior/right coefficient.
inline std::vector<ResElem> pairs(const SmallComplex::Ptr& cx, int n, bool full = true)
{
    std::vector<ResElem> r;
    int p = cx->p();
    for (int a = 0; a <= n; ++a)
        for (int m = 0; m < p; ++m) {
            if (!full) {
                r.push_back(ResElem::pair(cx, a, m, n - a));
                continue;
            }
            for (int i = 0; i < p; ++i)
                for (int t = 0; t < cx->coef()->dim(); ++t)
                    r.push_back(ResElem::pair(cx, a, m, n - a, i, t));
        }
    return r;
}

inline ResElem random_single(std::mt19937& rng, const SmallComplex::Ptr& cx, int n, int terms = 4)
{
    std::uniform_int_distribution<int> xi(0, cx->p() - 1), ri(0, cx->coef()->dim() - 1), c(-3, 3);
    ResElem e(cx, 1, n);
    for (int k = 0; k < terms; ++k)
        e.add(ResElem::generator(cx, n, xi(rng), ri(rng)), Cyc(cx->p(), c(rng)));
    return e;
}

}  // namespace gerst::testing

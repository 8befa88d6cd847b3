#include "gerst/diagonal.hpp"

namespace gerst {

ResElem diag(const SmallComplex::Ptr& cx, int n)
{
    if (n < 0)
        throw DomainError("diag: negative degree");
    int p = cx->p();
    ResElem out(cx, 2, n);
    Cyc one(p, 1);
    if (n % 2) {
        for (int i = 0; i <= n; ++i)
            out += ResElem::pair(cx, i, 0, n - i);
        return out;
    }
    int half = n / 2;
    for (int i = 0; i <= half; ++i)
        out += ResElem::pair(cx, 2 * i, 0, n - 2 * i);
    for (int i = 0; i < half; ++i)
        for (int a = 0; a <= p - 2; ++a)
            for (int b = 0; a + b <= p - 2; ++b) {
                int c = p - 2 - a - b;
                out += ResElem::pair(cx, 2 * i + 1, b, n - 2 * i - 1, a, cx->coef_index(c, 0));
            }
    return out;
}

ResElem diag_apply(const ResElem& e)
{
    if (e.factors() != 1)
        throw DomainError("diag_apply: element of the small complex required");
    const auto& cx = e.complex();
    ResElem out(cx, 2, e.degree());
    ResElem d = diag(cx, e.degree());
    for (const auto& [w, c] : e.terms())
        out.add(right_mul_basis(left_mul_basis(cx->coef_index(w.xs[0], 0), d), w.right), c);
    return out;
}

ResElem diag_right(const ResElem& e)
{
    if (e.factors() != 2)
        throw DomainError("diag_right: tensor square element required");
    const auto& cx = e.complex();
    int p = cx->p();
    ResElem out(cx, 3, e.degree());
    for (const auto& [w, c] : e.terms()) {
        ResElem d = diag(cx, w.deg[1]);
        for (const auto& [v, k] : d.terms()) {
            if (w.xs[1] + v.xs[0] >= p)
                continue;
            auto pr = cx->coef()->mul_basis(v.right, w.right);
            if (pr.index < 0)
                continue;
            auto nw = normalize_word(*cx, {w.deg[0], v.deg[0], v.deg[1]},
                                     {cx->coef_index(w.xs[0], 0), cx->coef_index(w.xs[1] + v.xs[0], 0),
                                      cx->coef_index(v.xs[1], 0), pr.index});
            if (nw)
                out.add(nw->second, c * k * pr.coeff * nw->first);
        }
    }
    return out;
}

ResElem diag2(const SmallComplex::Ptr& cx, int n) { return diag_right(diag(cx, n)); }

}  // namespace gerst

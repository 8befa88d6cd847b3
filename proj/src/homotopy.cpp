#include "gerst/homotopy.hpp"

#include <algorithm>
#include <mutex>

namespace gerst {

namespace {

Word single(int n, int i, int right)
{
    Word w;
    w.deg[0] = static_cast<int8_t>(n);
    w.xs[0] = static_cast<int8_t>(i);
    w.right = static_cast<int16_t>(right);
    return w;
}

}  // namespace

ResElem h_minus1(const SmallComplex::Ptr& cx, const AlgElem& a)
{
    ResElem out(cx, 1, 0);
    for (const auto& [idx, c] : a.terms())
        out.add(single(0, 0, idx), c);
    return out;
}

ResElem h_apply(const ResElem& e)
{
    if (e.factors() != 1)
        throw DomainError("h_apply: element of the small complex required");
    const auto& cx = *e.complex();
    int p = cx.p();
    int n = e.degree();
    ResElem out(e.complex(), 1, n + 1);
    for (const auto& [w, c] : e.terms()) {
        int i = w.xs[0];
        int j = cx.coef_x(w.right);
        int k = cx.coef_g(w.right);
        auto put = [&](int left, int rightx, const Cyc& s) {
            if (left < p && rightx < p)
                out.add(single(n + 1, left, cx.coef_index(rightx, k)), s);
        };
        if (n == 0) {
            for (int l = 0; l < i; ++l)
                put(l, i + j - 1 - l, c);
        } else if (n == 1) {
            if (i == p - 1)
                put(j, 0, c);
        } else if (n % 2 == 0) {
            for (int l = 0; l < j; ++l)
                put(i + j - 1 - l, l, -c);
        } else {
            if (j == p - 1)
                put(i, 0, c);
        }
    }
    return out;
}

PhiTable::PhiTable(SmallComplex::Ptr cx, int max_degree) : cx_(std::move(cx)), max_degree_(max_degree)
{
    int p = cx_->p();
    for (int deg = 0; deg <= max_degree; ++deg) {
        for (int a = 0; a <= deg; ++a) {
            int b = deg - a;
            for (int m = 0; m < p; ++m) {
                ResElem gen = ResElem::pair(cx_, a, m, b);
                ResElem rhs = F_map(gen);
                if (deg >= 1)
                    rhs -= apply(differential(gen));
                ResElem val = h_apply(rhs);
                if (val.is_zero())
                    val = ResElem(cx_, 1, deg + 1);
                table_.emplace(std::make_tuple(a, m, b), std::move(val));
            }
        }
    }
}

const ResElem& PhiTable::on_generator(int a, int m, int b) const
{
    auto it = table_.find({a, m, b});
    if (it == table_.end())
        throw DomainError("PhiTable: generator beyond the built degree");
    return it->second;
}

ResElem PhiTable::apply(const ResElem& e) const
{
    if (e.factors() != 2)
        throw DomainError("PhiTable::apply: tensor square element required");
    ResElem out(cx_, 1, e.degree() + 1);
    for (const auto& [w, c] : e.terms()) {
        const ResElem& v = on_generator(w.deg[0], w.xs[1], w.deg[1]);
        ResElem t = right_mul_basis(left_mul_basis(cx_->coef_index(w.xs[0], 0), v), w.right);
        out.add(t, c);
    }
    return out;
}

PhiTable build_phi(const SmallComplex::Ptr& cx, int max_degree) { return PhiTable(cx, max_degree); }

std::shared_ptr<const PhiTable> phi_table(const SmallComplex::Ptr& cx, int max_degree)
{
    static std::mutex mu;
    static std::map<const SmallComplex*, std::shared_ptr<const PhiTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[cx.get()];
    if (!slot || slot->max_degree() < max_degree)
        slot = std::make_shared<const PhiTable>(cx, max_degree);
    return slot;
}

ResElem lift_to_taft(const SmallComplex::Ptr& taft_cx, const ResElem& e, int gdeg)
{
    int p = taft_cx->p();
    ResElem out(taft_cx, e.factors(), e.degree());
    for (const auto& [w, c] : e.terms()) {
        Word v = w;
        v.right = static_cast<int16_t>(taft_index(p, w.right, gdeg));
        out.add(v, c);
    }
    return out;
}

ResElem taft_phi(const SmallComplex::Ptr& taft_cx, const TaftTensorElem& e)
{
    ResElem normal = psi_apply(taft_cx, e);
    int p = taft_cx->p();
    auto acx = SmallComplex::get(SmallKind::SmallA, p);
    auto phi = phi_table(acx, std::max(normal.degree(), 1));
    ResElem out(taft_cx, 1, normal.degree() + 1);
    for (const auto& [w, c] : normal.terms()) {
        ResElem v = phi->on_generator(w.deg[0], w.xs[1], w.deg[1]);
        v = right_mul_basis(left_mul_basis(w.xs[0], v), taft_xdeg(p, w.right));
        out.add(lift_to_taft(taft_cx, v, taft_gdeg(p, w.right)), c);
    }
    return out;
}

}  // namespace gerst

#include "gerst/bracket.hpp"

#include "gerst/diagonal.hpp"
#include "gerst/homotopy.hpp"
#include "gerst/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace gerst {

namespace {

bool allowed(const SmallComplex& cx, int degree, int idx)
{
    return !cx.taft() || taft_xdeg(cx.p(), idx) == degree % 2;
}

Cyc sign(int p, int e) { return Cyc(p, (e % 2) ? -1 : 1); }

void add_product(AlgElem& out, const Algebra& alg, int a, int b, int c, const Cyc& k)
{
    auto ab = alg.mul_basis(a, b);
    if (ab.index < 0)
        return;
    auto abc = alg.mul_basis(ab.index, c);
    if (abc.index < 0)
        return;
    out.add_term(abc.index, k * ab.coeff * abc.coeff);
}

}  // namespace

SmallCochain::SmallCochain(SmallComplex::Ptr cx, int degree, AlgElem value)
    : cx_(std::move(cx)), degree_(degree), value_(std::move(value))
{
    if (degree_ < 0)
        throw DomainError("cochain degree must be non-negative");
    if (!value_.algebra())
        value_ = AlgElem(cx_->coef());
    if (!value_.algebra()->same_as(*cx_->coef()))
        throw DomainError("cochain value lives in the wrong algebra");
    for (const auto& [idx, c] : value_.terms())
        if (!allowed(*cx_, degree_, idx))
            throw DomainError("cochain value is not compatible with the bimodule structure: " + value_.str());
}

SmallCochain SmallCochain::monomial(SmallComplex::Ptr cx, int degree, int xdeg, int gdeg)
{
    int idx = cx->coef_index(xdeg, gdeg);
    return SmallCochain(cx, degree, AlgElem::basis(cx->coef(), idx));
}

SmallCochain SmallCochain::zero(SmallComplex::Ptr cx, int degree)
{
    auto alg = cx->coef();
    return SmallCochain(std::move(cx), degree, AlgElem(alg));
}

AlgElem SmallCochain::eval(const ResElem& e) const
{
    if (e.factors() != 1 || e.degree() != degree_)
        throw DomainError("cochain evaluated on an element of the wrong degree");
    const auto& alg = *cx_->coef();
    AlgElem out(cx_->coef());
    for (const auto& [w, c] : e.terms())
        for (const auto& [v, k] : value_.terms())
            add_product(out, alg, cx_->coef_index(w.xs[0], 0), v, w.right, c * k);
    return out;
}

void SmallCochain::check(const SmallCochain& o) const
{
    if (cx_ != o.cx_ || degree_ != o.degree_)
        throw DomainError("cochains from different Hom spaces");
}

SmallCochain& SmallCochain::operator+=(const SmallCochain& o)
{
    check(o);
    value_ += o.value_;
    return *this;
}

SmallCochain& SmallCochain::operator-=(const SmallCochain& o)
{
    check(o);
    value_ -= o.value_;
    return *this;
}

SmallCochain operator*(const Cyc& c, SmallCochain f)
{
    f.value_ *= c;
    return f;
}

bool operator==(const SmallCochain& a, const SmallCochain& b)
{
    return a.degree_ == b.degree_ && a.value_ == b.value_;
}

std::string SmallCochain::str() const
{
    std::ostringstream os;
    os << "[" << value_.str() << "]ξ" << degree_ << "*";
    return os.str();
}

std::vector<int> hom_basis(const SmallComplex& cx, int degree)
{
    std::vector<int> r;
    for (int idx = 0; idx < cx.coef()->dim(); ++idx)
        if (allowed(cx, degree, idx))
            r.push_back(idx);
    return r;
}

SmallCochain coboundary(const SmallCochain& f)
{
    const auto& cx = f.complex();
    AlgElem v = f.eval(boundary_of_generator(cx, f.degree() + 1));
    return SmallCochain(cx, f.degree() + 1, v);
}

bool is_cocycle(const SmallCochain& f) { return coboundary(f).value().is_zero(); }

SmallCochain circle_phi(const SmallCochain& f, const SmallCochain& g)
{
    if (f.complex() != g.complex())
        throw DomainError("circle_phi: cochains on different complexes");
    const auto& cx = f.complex();
    int m = f.degree(), n = g.degree();
    int N = m + n - 1;
    if (N < 0)
        throw DomainError("circle_phi: total degree must be at least 1");
    int p = cx->p();
    if (m == 0)
        return SmallCochain::zero(cx, N);
    auto phi = phi_table(cx, m - 1);
    const auto& alg = *cx->coef();
    ResElem inner(cx, 2, m - 1);
    ResElem t = diag2(cx, N);
    for (const auto& [w, c] : t.terms()) {
        if (w.deg[1] != n)
            continue;
        Cyc s = c * sign(p, n * w.deg[0]);
        for (const auto& [v, k] : g.value().terms()) {
            // x^{i1} v x^{i2} becomes the left coefficient of the right factor
            AlgElem mid(cx->coef());
            add_product(mid, alg, cx->coef_index(w.xs[1], 0), v, cx->coef_index(w.xs[2], 0), s * k);
            for (const auto& [mi, mc] : mid.terms()) {
                auto nw = normalize_word(*cx, {w.deg[0], w.deg[2]}, {cx->coef_index(w.xs[0], 0), mi, w.right});
                if (nw)
                    inner.add(nw->second, mc * nw->first);
            }
        }
    }
    return SmallCochain(cx, N, f.eval(phi->apply(inner)));
}

SmallCochain bracket_phi(const SmallCochain& f, const SmallCochain& g)
{
    int e = (f.degree() - 1) * (g.degree() - 1);
    return circle_phi(f, g) - sign(f.p(), e) * circle_phi(g, f);
}

SmallCochain cup(const SmallCochain& f, const SmallCochain& g)
{
    if (f.complex() != g.complex())
        throw DomainError("cup: cochains on different complexes");
    const auto& cx = f.complex();
    int m = f.degree(), n = g.degree();
    int p = cx->p();
    const auto& alg = *cx->coef();
    AlgElem out(cx->coef());
    ResElem d = diag(cx, m + n);
    for (const auto& [w, c] : d.terms()) {
        if (w.deg[0] != m)
            continue;
        // x^{i0} f x^{i1} g r
        AlgElem left(cx->coef());
        for (const auto& [a, ka] : f.value().terms())
            add_product(left, alg, cx->coef_index(w.xs[0], 0), a, cx->coef_index(w.xs[1], 0), ka);
        for (const auto& [l, kl] : left.terms())
            for (const auto& [b, kb] : g.value().terms())
                add_product(out, alg, l, b, w.right, c * kl * kb);
    }
    return SmallCochain(cx, m + n, out * sign(p, m * n));
}

namespace {

SparseVec to_vec(const AlgElem& a) { return sparse_from_map(a.terms()); }

AlgElem from_vec(const Algebra::Ptr& alg, const SparseVec& v)
{
    AlgElem r(alg);
    for (const auto& [i, c] : v)
        r.add_term(i, c);
    return r;
}

EchelonBasis coboundary_space(const SmallComplex::Ptr& cx, int degree)
{
    EchelonBasis eb;
    if (degree == 0)
        return eb;
    for (int idx : hom_basis(*cx, degree - 1)) {
        SmallCochain w(cx, degree - 1, AlgElem::basis(cx->coef(), idx));
        eb.insert(to_vec(coboundary(w).value()));
    }
    return eb;
}

}  // namespace

std::string CohomClass::str() const
{
    std::ostringstream os;
    os << "[" << reduced.str() << "]ξ" << degree << "*";
    return os.str();
}

CohomClass reduce_mod_coboundaries(const SmallCochain& f)
{
    EchelonBasis b = coboundary_space(f.complex(), f.degree());
    return CohomClass{f.complex(), f.degree(), from_vec(f.complex()->coef(), b.reduce(to_vec(f.value())))};
}

CohomClass to_class(const SmallCochain& f)
{
    if (!is_cocycle(f))
        throw DomainError("to_class: not a cocycle: " + f.str());
    return reduce_mod_coboundaries(f);
}

std::vector<AlgElem> cohomology_basis(const SmallComplex::Ptr& cx, int degree)
{
    auto basis = hom_basis(*cx, degree);
    int n = static_cast<int>(basis.size());
    ExactMatrix dm(cx->coef()->dim(), n, cx->p());
    for (int c = 0; c < n; ++c) {
        SmallCochain w(cx, degree, AlgElem::basis(cx->coef(), basis[c]));
        SmallCochain dw = coboundary(w);
        for (const auto& [r, v] : dw.value().terms())
            dm.set(r, c, v);
    }
    EchelonBasis span = coboundary_space(cx, degree);
    std::vector<AlgElem> reps;
    for (const auto& k : kernel_basis(dm)) {
        SparseVec v;
        for (const auto& [c, val] : k)
            v.emplace_back(basis[c], val);
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        SparseVec red = span.reduce(v);
        if (red.empty())
            continue;
        span.insert(red);
        reps.push_back(from_vec(cx->coef(), red));
    }
    return reps;
}

int hh_dimension(const SmallComplex::Ptr& cx, int degree)
{
    return static_cast<int>(cohomology_basis(cx, degree).size());
}

bool derivation_identity_check(const SmallCochain& f, const SmallCochain& g, const SmallCochain& h)
{
    for (const auto* c : {&f, &g, &h})
        if (!is_cocycle(*c))
            throw DomainError("derivation_identity_check: inputs must be cocycles");
    int p = f.p();
    SmallCochain lhs = bracket_phi(cup(f, g), h);
    SmallCochain rhs = cup(bracket_phi(f, h), g) + sign(p, f.degree() * (h.degree() - 1)) * cup(f, bracket_phi(g, h));
    return reduce_mod_coboundaries(lhs) == reduce_mod_coboundaries(rhs);
}

}  // namespace gerst

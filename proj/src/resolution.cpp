#include "gerst/resolution.hpp"

#include <mutex>
#include <ostream>
#include <sstream>

namespace gerst {

SmallComplex::SmallComplex(SmallKind kind, int p)
    : kind_(kind), p_(p), coef_(kind == SmallKind::SmallTaft ? Algebra::taft(p) : Algebra::trunc_poly(p))
{
}

SmallComplex::Ptr SmallComplex::get(SmallKind kind, int p)
{
    if (p <= 2)
        throw DomainError("resolution parameter p must exceed 2");
    static std::mutex mu;
    static std::map<std::pair<int, int>, Ptr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{static_cast<int>(kind), p}];
    if (!slot)
        slot = Ptr(new SmallComplex(kind, p));
    return slot;
}

int SmallComplex::coef_index(int xdeg, int gdeg) const
{
    if (xdeg < 0 || xdeg >= p_)
        throw DomainError("x exponent out of range");
    return taft() ? taft_index(p_, xdeg, gdeg) : xdeg;
}

int SmallComplex::coef_x(int idx) const { return taft() ? taft_xdeg(p_, idx) : idx; }
int SmallComplex::coef_g(int idx) const { return taft() ? taft_gdeg(p_, idx) : 0; }

std::string SmallComplex::name() const { return taft() ? "SmallTaft" : "SmallA"; }

int Word::degree() const
{
    int s = 0;
    for (int r = 0; r < nf; ++r)
        s += deg[r];
    return s;
}

ResElem ResElem::generator(SmallComplex::Ptr cx, int n, int left_x, int right)
{
    if (n < 0)
        throw DomainError("negative resolution degree");
    Word w;
    w.deg[0] = static_cast<int8_t>(n);
    w.xs[0] = static_cast<int8_t>(left_x);
    w.right = static_cast<int16_t>(right);
    ResElem e(cx, 1, n);
    e.add(w, Cyc(cx->p(), 1));
    return e;
}

ResElem ResElem::pair(SmallComplex::Ptr cx, int a, int m, int b, int left_x, int right)
{
    if (a < 0 || b < 0)
        throw DomainError("negative resolution degree");
    Word w;
    w.nf = 2;
    w.deg = {static_cast<int8_t>(a), static_cast<int8_t>(b), 0};
    w.xs = {static_cast<int8_t>(left_x), static_cast<int8_t>(m), 0};
    w.right = static_cast<int16_t>(right);
    ResElem e(cx, 2, a + b);
    e.add(w, Cyc(cx->p(), 1));
    return e;
}

void ResElem::add(const Word& w, const Cyc& c)
{
    if (c.is_zero())
        return;
    auto [it, ins] = terms_.try_emplace(w, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void ResElem::add(const ResElem& o, const Cyc& c)
{
    check(o);
    for (const auto& [w, d] : o.terms_)
        add(w, c * d);
}

void ResElem::check(const ResElem& o) const
{
    if (o.cx_ && cx_ && (o.cx_ != cx_ || o.nf_ != nf_ || o.degree_ != degree_))
        throw DomainError("ResElem: incompatible operands");
}

ResElem& ResElem::operator+=(const ResElem& o)
{
    if (!cx_)
        return *this = o;
    check(o);
    for (const auto& [w, c] : o.terms_)
        add(w, c);
    return *this;
}

ResElem& ResElem::operator-=(const ResElem& o)
{
    if (!cx_)
        return *this = -o;
    check(o);
    for (const auto& [w, c] : o.terms_)
        add(w, -c);
    return *this;
}

ResElem ResElem::operator-() const
{
    ResElem r(cx_, nf_, degree_);
    for (const auto& [w, c] : terms_)
        r.terms_.emplace(w, -c);
    return r;
}

ResElem operator*(const Cyc& c, const ResElem& e)
{
    ResElem r(e.cx_, e.nf_, e.degree_);
    if (c.is_zero())
        return r;
    for (const auto& [w, d] : e.terms_)
        r.terms_.emplace(w, c * d);
    return r;
}

bool operator==(const ResElem& a, const ResElem& b)
{
    return a.terms_ == b.terms_ && (a.terms_.empty() || (a.nf_ == b.nf_ && a.degree_ == b.degree_));
}

std::string ResElem::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int r = 0; r < w.nf; ++r) {
            if (r)
                os << "⊗";
            if (w.xs[r])
                os << "x^" << int(w.xs[r]);
            os << "ξ" << int(w.deg[r]);
        }
        os << cx_->coef()->monomial_str(w.right);
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ResElem& e) { return os << e.str(); }

std::optional<std::pair<Cyc, Word>> normalize_word(const SmallComplex& cx, const std::vector<int>& degs,
                                                   const std::vector<int>& coefs)
{
    int p = cx.p();
    int k = static_cast<int>(degs.size());
    if (k < 1 || k > 3 || static_cast<int>(coefs.size()) != k + 1)
        throw DomainError("normalize_word: bad shape");
    Word w;
    w.nf = static_cast<int8_t>(k);
    long twist = 0;
    int G = 0;
    for (int j = 0; j < k; ++j) {
        int a = cx.coef_x(coefs[j]);
        twist += static_cast<long>(G) * a;
        w.xs[j] = static_cast<int8_t>(a);
        G += cx.coef_g(coefs[j]);
        w.deg[j] = static_cast<int8_t>(degs[j]);
        if (degs[j] % 2)
            twist += G;
    }
    int a = cx.coef_x(coefs[k]);
    twist += static_cast<long>(G) * a;
    w.right = static_cast<int16_t>(cx.coef_index(a, G + cx.coef_g(coefs[k])));
    Cyc c = cx.taft() ? Cyc::omega_power(p, twist) : Cyc(p, 1);
    return std::make_pair(c, w);
}

namespace {

struct Shape {
    std::vector<int> degs;
    std::vector<int> coefs;
};

Shape shape_of(const SmallComplex& cx, const Word& w)
{
    Shape s;
    for (int r = 0; r < w.nf; ++r) {
        s.degs.push_back(w.deg[r]);
        s.coefs.push_back(cx.coef_index(w.xs[r], 0));
    }
    s.coefs.push_back(w.right);
    return s;
}

void add_normalized(ResElem& out, const SmallComplex& cx, const Shape& s, const Cyc& c)
{
    auto nw = normalize_word(cx, s.degs, s.coefs);
    if (nw)
        out.add(nw->second, c * nw->first);
}

/// coefficient-algebra product of basis monomials; false when zero
bool mono_mul(const SmallComplex& cx, int a, int b, int& idx, Cyc& c)
{
    auto pr = cx.coef()->mul_basis(a, b);
    if (pr.index < 0)
        return false;
    idx = pr.index;
    c *= pr.coeff;
    return true;
}

}  // namespace

ResElem left_mul_basis(int mono, const ResElem& e)
{
    const auto& cx = *e.complex();
    ResElem out(e.complex(), e.factors(), e.degree());
    for (const auto& [w, c] : e.terms()) {
        Shape s = shape_of(cx, w);
        Cyc k = c;
        if (!mono_mul(cx, mono, s.coefs[0], s.coefs[0], k))
            continue;
        add_normalized(out, cx, s, k);
    }
    return out;
}

ResElem right_mul_basis(const ResElem& e, int mono)
{
    const auto& cx = *e.complex();
    ResElem out(e.complex(), e.factors(), e.degree());
    for (const auto& [w, c] : e.terms()) {
        Word v = w;
        Cyc k = c;
        int idx;
        if (!mono_mul(cx, w.right, mono, idx, k))
            continue;
        v.right = static_cast<int16_t>(idx);
        out.add(v, k);
    }
    return out;
}

ResElem left_mul(const AlgElem& a, const ResElem& e)
{
    ResElem out(e.complex(), e.factors(), e.degree());
    for (const auto& [m, c] : a.terms())
        out.add(left_mul_basis(m, e), c);
    return out;
}

ResElem right_mul(const ResElem& e, const AlgElem& a)
{
    ResElem out(e.complex(), e.factors(), e.degree());
    for (const auto& [m, c] : a.terms())
        out.add(right_mul_basis(e, m), c);
    return out;
}

namespace {

struct BoundaryTerm {
    int left, right, sign;
};

std::vector<BoundaryTerm> boundary_terms(int p, int n)
{
    if (n % 2)
        return {{1, 0, 1}, {0, 1, -1}};
    std::vector<BoundaryTerm> t;
    for (int l = 0; l < p; ++l)
        t.push_back({l, p - 1 - l, 1});
    return t;
}

}  // namespace

ResElem boundary_of_generator(const SmallComplex::Ptr& cx, int n)
{
    if (n < 1)
        throw DomainError("boundary_of_generator: degree must be >= 1");
    ResElem out(cx, 1, n - 1);
    for (const auto& t : boundary_terms(cx->p(), n)) {
        Word w;
        w.deg[0] = static_cast<int8_t>(n - 1);
        w.xs[0] = static_cast<int8_t>(t.left);
        w.right = static_cast<int16_t>(cx->coef_index(t.right, 0));
        out.add(w, Cyc(cx->p(), t.sign));
    }
    return out;
}

ResElem differential(const ResElem& e)
{
    if (e.degree() < 1)
        throw DomainError("differential: degree must be >= 1");
    const auto& cx = *e.complex();
    int p = cx.p();
    ResElem out(e.complex(), e.factors(), e.degree() - 1);
    for (const auto& [w, c] : e.terms()) {
        int before = 0;
        for (int r = 0; r < w.nf; ++r) {
            int n = w.deg[r];
            if (n >= 1) {
                Cyc sc = (before % 2) ? -c : c;
                for (const auto& t : boundary_terms(p, n)) {
                    if (w.xs[r] + t.left >= p)
                        continue;
                    Shape s = shape_of(cx, w);
                    s.degs[r] = n - 1;
                    s.coefs[r] = cx.coef_index(w.xs[r] + t.left, 0);
                    Cyc k = sc * Rational(t.sign);
                    if (!mono_mul(cx, cx.coef_index(t.right, 0), s.coefs[r + 1], s.coefs[r + 1], k))
                        continue;
                    add_normalized(out, cx, s, k);
                }
            }
            before += n;
        }
    }
    return out;
}

AlgElem augment(const ResElem& e)
{
    if (e.factors() != 1 || e.degree() != 0)
        throw DomainError("augment: degree-0 element of the small complex required");
    const auto& cx = *e.complex();
    AlgElem out(cx.coef());
    for (const auto& [w, c] : e.terms()) {
        Cyc k = c;
        int idx;
        if (mono_mul(cx, cx.coef_index(w.xs[0], 0), w.right, idx, k))
            out.add_term(idx, k);
    }
    return out;
}

ResElem F_map(const ResElem& e)
{
    if (e.factors() != 2)
        throw DomainError("F_map: tensor square element required");
    const auto& cx = *e.complex();
    int p = cx.p();
    ResElem out(e.complex(), 1, e.degree());
    for (const auto& [w, c] : e.terms()) {
        if (w.deg[0] == 0 && w.xs[0] + w.xs[1] < p) {
            Word v;
            v.deg[0] = w.deg[1];
            v.xs[0] = static_cast<int8_t>(w.xs[0] + w.xs[1]);
            v.right = w.right;
            out.add(v, c);
        }
        if (w.deg[1] == 0) {
            Word v;
            v.deg[0] = w.deg[0];
            v.xs[0] = w.xs[0];
            Cyc k = -c;
            int idx;
            if (!mono_mul(cx, cx.coef_index(w.xs[1], 0), w.right, idx, k))
                continue;
            v.right = static_cast<int16_t>(idx);
            out.add(v, k);
        }
    }
    return out;
}

ResElem taft_factor(const SmallComplex::Ptr& taft_cx, int n, int i, int j, int k)
{
    if (!taft_cx->taft())
        throw DomainError("taft_factor: Taft complex required");
    return ResElem::generator(taft_cx, n, i, taft_cx->coef_index(j, k));
}

namespace {

void add_term(TaftTensorElem& e, const TaftTensorTerm& t, const Cyc& c)
{
    if (c.is_zero())
        return;
    auto [it, ins] = e.try_emplace(t, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero())
            e.erase(it);
    }
}

int taft_tensor_degree(const TaftTensorElem& e)
{
    return e.empty() ? 0 : e.begin()->first.a + e.begin()->first.b;
}

}  // namespace

ResElem psi_apply(const SmallComplex::Ptr& cx, const TaftTensorElem& e)
{
    if (!cx->taft())
        throw DomainError("psi_apply: Taft complex required");
    int p = cx->p();
    ResElem out(cx, 2, taft_tensor_degree(e));
    for (const auto& [t, c] : e) {
        // (x^{i1} xi_a x^{j1} g^{k1}) (x) (x^{i2} xi_b x^{j2} g^{k2})
        Cyc k = c;
        int mid;
        if (!mono_mul(*cx, taft_index(p, t.j1, t.k1), taft_index(p, t.i2, 0), mid, k))
            continue;
        auto nw = normalize_word(*cx, {t.a, t.b}, {taft_index(p, t.i1, 0), mid, taft_index(p, t.j2, t.k2)});
        if (nw)
            out.add(nw->second, k * nw->first);
    }
    return out;
}

TaftTensorElem psi_inverse(const ResElem& e)
{
    if (e.factors() != 2 || !e.complex()->taft())
        throw DomainError("psi_inverse: Taft tensor square element required");
    int p = e.p();
    TaftTensorElem out;
    for (const auto& [w, c] : e.terms()) {
        TaftTensorTerm t;
        t.a = w.deg[0];
        t.i1 = w.xs[0];
        t.b = w.deg[1];
        t.i2 = w.xs[1];
        t.j2 = taft_xdeg(p, w.right);
        t.k2 = taft_gdeg(p, w.right);
        add_term(out, t, c);
    }
    return out;
}

TaftTensorElem taft_tensor_left_mul(int p, int mono, const TaftTensorElem& e)
{
    // x^a g^b . x^{i1} xi_a x^{j1} g^{k1}
    int xa = taft_xdeg(p, mono), gb = taft_gdeg(p, mono);
    TaftTensorElem out;
    for (const auto& [t, c] : e) {
        if (xa + t.i1 >= p)
            continue;
        TaftTensorTerm u = t;
        u.i1 = xa + t.i1;
        u.k1 = (t.k1 + gb) % p;
        long tw = static_cast<long>(gb) * (t.i1 + t.j1 + (t.a % 2));
        add_term(out, u, c * Cyc::omega_power(p, tw));
    }
    return out;
}

TaftTensorElem taft_tensor_right_mul(int p, const TaftTensorElem& e, int mono)
{
    int xa = taft_xdeg(p, mono), gb = taft_gdeg(p, mono);
    TaftTensorElem out;
    for (const auto& [t, c] : e) {
        if (t.j2 + xa >= p)
            continue;
        TaftTensorTerm u = t;
        u.j2 = t.j2 + xa;
        u.k2 = (t.k2 + gb) % p;
        add_term(out, u, c * Cyc::omega_power(p, static_cast<long>(t.k2) * xa));
    }
    return out;
}

ResElem taft_side_F(const SmallComplex::Ptr& cx, const TaftTensorElem& e)
{
    int p = cx->p();
    ResElem out(cx, 1, taft_tensor_degree(e));
    for (const auto& [t, c] : e) {
        ResElem y1 = taft_factor(cx, t.a, t.i1, t.j1, t.k1);
        ResElem y2 = taft_factor(cx, t.b, t.i2, t.j2, t.k2);
        if (t.a == 0 && t.i1 + t.j1 < p)
            out.add(left_mul_basis(taft_index(p, t.i1 + t.j1, t.k1), y2), c);
        if (t.b == 0 && t.i2 + t.j2 < p)
            out.add(right_mul_basis(y1, taft_index(p, t.i2 + t.j2, t.k2)), -c);
    }
    return out;
}

TaftTensorElem taft_side_differential(int p, const TaftTensorElem& e)
{
    TaftTensorElem out;
    for (const auto& [t, c] : e) {
        if (t.a >= 1) {
            for (const auto& bt : boundary_terms(p, t.a)) {
                if (t.i1 + bt.left >= p || bt.right + t.j1 >= p)
                    continue;
                TaftTensorTerm u = t;
                u.a = t.a - 1;
                u.i1 = t.i1 + bt.left;
                u.j1 = bt.right + t.j1;
                add_term(out, u, c * Rational(bt.sign));
            }
        }
        if (t.b >= 1) {
            Cyc sc = (t.a % 2) ? -c : c;
            for (const auto& bt : boundary_terms(p, t.b)) {
                if (t.i2 + bt.left >= p || bt.right + t.j2 >= p)
                    continue;
                TaftTensorTerm u = t;
                u.b = t.b - 1;
                u.i2 = t.i2 + bt.left;
                u.j2 = bt.right + t.j2;
                add_term(out, u, sc * Rational(bt.sign));
            }
        }
    }
    return out;
}

}  // namespace gerst

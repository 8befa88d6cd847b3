#include "gerst/algebras.hpp"

#include <mutex>
#include <sstream>

namespace gerst {

namespace {

void check_p(int p)
{
    if (p <= 2)
        throw DomainError("algebra parameter p must exceed 2");
}

}  // namespace

Algebra::Ptr Algebra::trunc_poly(int p)
{
    check_p(p);
    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->kind_ = AlgebraKind::TruncPoly;
    a->p_ = p;
    a->dim_ = p;
    a->build_table();
    return a;
}

Algebra::Ptr Algebra::group_alg(int p)
{
    check_p(p);
    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->kind_ = AlgebraKind::GroupAlg;
    a->p_ = p;
    a->dim_ = p;
    a->build_table();
    return a;
}

Algebra::Ptr Algebra::taft(int p)
{
    check_p(p);
    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->kind_ = AlgebraKind::Taft;
    a->p_ = p;
    a->dim_ = p * p;
    a->build_table();
    return a;
}

Algebra::Ptr Algebra::tensor(Ptr first, Ptr second, bool opposite_second)
{
    if (first->p() != second->p())
        throw DomainError("tensor factors must share p");
    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->kind_ = AlgebraKind::TensorPair;
    a->p_ = first->p();
    a->dim_ = first->dim() * second->dim();
    a->first_ = std::move(first);
    a->second_ = std::move(second);
    a->opposite_ = opposite_second;
    return a;
}

void Algebra::build_table()
{
    table_.assign(static_cast<size_t>(dim_) * dim_, Product{});
    for (int a = 0; a < dim_; ++a) {
        for (int b = 0; b < dim_; ++b) {
            Product& r = table_[a * dim_ + b];
            switch (kind_) {
            case AlgebraKind::TruncPoly:
                if (a + b < p_)
                    r = {a + b, Cyc(p_, 1)};
                break;
            case AlgebraKind::GroupAlg:
                r = {(a + b) % p_, Cyc(p_, 1)};
                break;
            case AlgebraKind::Taft: {
                // (x^i g^k)(x^j g^l) = w^{kj} x^{i+j} g^{k+l}
                int i = taft_xdeg(p_, a), k = taft_gdeg(p_, a);
                int j = taft_xdeg(p_, b), l = taft_gdeg(p_, b);
                if (i + j < p_)
                    r = {taft_index(p_, i + j, k + l), Cyc::omega_power(p_, static_cast<long>(k) * j)};
                break;
            }
            case AlgebraKind::TensorPair:
                break;
            }
        }
    }
}

std::vector<int> Algebra::exponents(int index) const
{
    switch (kind_) {
    case AlgebraKind::TruncPoly:
    case AlgebraKind::GroupAlg:
        return {index};
    case AlgebraKind::Taft:
        return {taft_xdeg(p_, index), taft_gdeg(p_, index)};
    case AlgebraKind::TensorPair: {
        auto e = first_->exponents(index / second_->dim());
        auto f = second_->exponents(index % second_->dim());
        e.insert(e.end(), f.begin(), f.end());
        return e;
    }
    }
    return {};
}

int Algebra::index(const std::vector<int>& exps) const
{
    auto in_range = [&](int v) {
        if (v < 0 || v >= p_)
            throw DomainError("monomial exponent out of range");
        return v;
    };
    switch (kind_) {
    case AlgebraKind::TruncPoly:
    case AlgebraKind::GroupAlg:
        return in_range(exps.at(0));
    case AlgebraKind::Taft:
        return taft_index(p_, in_range(exps.at(0)), in_range(exps.at(1)));
    case AlgebraKind::TensorPair: {
        size_t n1 = first_->kind() == AlgebraKind::Taft ? 2 : first_->kind() == AlgebraKind::TensorPair ? 0 : 1;
        if (n1 == 0)
            throw DomainError("nested tensor indices are not supported");
        std::vector<int> a(exps.begin(), exps.begin() + n1), b(exps.begin() + n1, exps.end());
        return first_->index(a) * second_->dim() + second_->index(b);
    }
    }
    return -1;
}

Algebra::Product Algebra::mul_basis(int a, int b) const
{
    if (kind_ != AlgebraKind::TensorPair)
        return table_[a * dim_ + b];
    int d2 = second_->dim();
    auto l = first_->mul_basis(a / d2, b / d2);
    if (l.index < 0)
        return {};
    auto r = opposite_ ? second_->mul_basis(b % d2, a % d2) : second_->mul_basis(a % d2, b % d2);
    if (r.index < 0)
        return {};
    return {l.index * d2 + r.index, l.coeff * r.coeff};
}

std::string Algebra::monomial_str(int index) const
{
    std::ostringstream os;
    auto pw = [&](const char* v, int e) {
        if (e == 0)
            return;
        os << v;
        if (e > 1)
            os << "^" << e;
    };
    switch (kind_) {
    case AlgebraKind::TruncPoly:
        if (index == 0)
            return "1";
        pw("x", index);
        break;
    case AlgebraKind::GroupAlg:
        if (index == 0)
            return "1";
        pw("g", index);
        break;
    case AlgebraKind::Taft: {
        int i = taft_xdeg(p_, index), k = taft_gdeg(p_, index);
        if (i == 0 && k == 0)
            return "1";
        pw("x", i);
        pw("g", k);
        break;
    }
    case AlgebraKind::TensorPair:
        os << first_->monomial_str(index / second_->dim()) << "⊗" << second_->monomial_str(index % second_->dim());
        break;
    }
    return os.str();
}

bool Algebra::same_as(const Algebra& o) const
{
    if (this == &o)
        return true;
    if (kind_ != o.kind_ || p_ != o.p_)
        return false;
    if (kind_ != AlgebraKind::TensorPair)
        return true;
    return opposite_ == o.opposite_ && first_->same_as(*o.first_) && second_->same_as(*o.second_);
}

AlgElem AlgElem::basis(Algebra::Ptr alg, int index, Cyc coeff)
{
    AlgElem e(std::move(alg));
    e.add_term(index, coeff);
    return e;
}

AlgElem AlgElem::basis(Algebra::Ptr alg, int index)
{
    int p = alg->p();
    return basis(std::move(alg), index, Cyc(p, 1));
}

AlgElem AlgElem::scalar(Algebra::Ptr alg, const Cyc& c)
{
    return basis(std::move(alg), 0, c);
}

Cyc AlgElem::coeff(int index) const
{
    auto it = terms_.find(index);
    if (it == terms_.end())
        return alg_ ? Cyc(alg_->p()) : Cyc();
    return it->second;
}

void AlgElem::add_term(int index, const Cyc& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void AlgElem::check_same(const AlgElem& o) const
{
    if (alg_ && o.alg_ && !alg_->same_as(*o.alg_))
        throw DomainError("algebra mismatch");
}

AlgElem& AlgElem::operator+=(const AlgElem& o)
{
    check_same(o);
    if (!alg_)
        alg_ = o.alg_;
    for (const auto& [i, c] : o.terms_)
        add_term(i, c);
    return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o)
{
    check_same(o);
    if (!alg_)
        alg_ = o.alg_;
    for (const auto& [i, c] : o.terms_)
        add_term(i, -c);
    return *this;
}

AlgElem& AlgElem::operator*=(const Cyc& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [i, v] : terms_)
        v *= c;
    return *this;
}

AlgElem AlgElem::operator-() const
{
    AlgElem r = *this;
    for (auto& [i, v] : r.terms_)
        v = -v;
    return r;
}

bool operator==(const AlgElem& a, const AlgElem& b)
{
    if (a.alg_ && b.alg_ && !a.alg_->same_as(*b.alg_))
        return false;
    return a.terms_ == b.terms_;
}

std::string AlgElem::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        std::string m = alg_->monomial_str(i);
        if (c.is_one())
            os << m;
        else if (m == "1")
            os << "(" << c.str() << ")";
        else
            os << "(" << c.str() << ")" << m;
    }
    return os.str();
}

AlgElem alg_mul(const AlgElem& a, const AlgElem& b)
{
    if (!a.algebra() || !b.algebra())
        return AlgElem(a.algebra() ? a.algebra() : b.algebra());
    if (!a.algebra()->same_as(*b.algebra()))
        throw DomainError("alg_mul: algebra mismatch");
    const auto& alg = *a.algebra();
    AlgElem r(a.algebra());
    for (const auto& [i, c] : a.terms()) {
        for (const auto& [j, d] : b.terms()) {
            auto pr = alg.mul_basis(i, j);
            if (pr.index >= 0)
                r.add_term(pr.index, c * d * pr.coeff);
        }
    }
    return r;
}

AlgElem alg_pow(const AlgElem& a, int e)
{
    AlgElem r = AlgElem::basis(a.algebra(), a.algebra()->unit_index());
    for (int i = 0; i < e; ++i)
        r = alg_mul(r, a);
    return r;
}

AlgElem tensor_elem(const Algebra::Ptr& tensor_alg, const AlgElem& a, const AlgElem& b)
{
    int d2 = tensor_alg->second()->dim();
    AlgElem r(tensor_alg);
    for (const auto& [i, c] : a.terms())
        for (const auto& [j, d] : b.terms())
            r.add_term(i * d2 + j, c * d);
    return r;
}

Algebra::Ptr taft_tensor_square(int p)
{
    static std::mutex mu;
    static std::map<int, Algebra::Ptr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[p];
    if (!slot) {
        auto t = Algebra::taft(p);
        slot = Algebra::tensor(t, t, false);
    }
    return slot;
}

namespace {

void require_taft(const AlgElem& a, const char* what)
{
    if (!a.algebra() || a.algebra()->kind() != AlgebraKind::Taft)
        throw DomainError(std::string(what) + ": Taft element required");
}

}  // namespace

Cyc counit(const AlgElem& a)
{
    require_taft(a, "counit");
    int p = a.algebra()->p();
    Cyc r(p);
    for (const auto& [i, c] : a.terms())
        if (taft_xdeg(p, i) == 0)
            r += c;
    return r;
}

AlgElem comultiply(const AlgElem& a)
{
    require_taft(a, "comultiply");
    const auto& T = a.algebra();
    int p = T->p();
    auto TT = taft_tensor_square(p);
    AlgElem one = AlgElem::basis(T, 0);
    AlgElem x = AlgElem::basis(T, taft_index(p, 1, 0));
    AlgElem g = AlgElem::basis(T, taft_index(p, 0, 1));
    AlgElem dx = tensor_elem(TT, one, x) + tensor_elem(TT, x, g);
    AlgElem dg = tensor_elem(TT, g, g);
    AlgElem r(TT);
    for (const auto& [idx, c] : a.terms()) {
        AlgElem m = alg_mul(alg_pow(dx, taft_xdeg(p, idx)), alg_pow(dg, taft_gdeg(p, idx)));
        r += m * c;
    }
    return r;
}

AlgElem antipode(const AlgElem& a)
{
    require_taft(a, "antipode");
    const auto& T = a.algebra();
    int p = T->p();
    AlgElem sg = AlgElem::basis(T, taft_index(p, 0, p - 1));
    AlgElem sx = AlgElem::basis(T, taft_index(p, 1, p - 1), Cyc(p, -1));
    AlgElem r(T);
    for (const auto& [idx, c] : a.terms()) {
        AlgElem m = alg_mul(alg_pow(sg, taft_gdeg(p, idx)), alg_pow(sx, taft_xdeg(p, idx)));
        r += m * c;
    }
    return r;
}

}  // namespace gerst

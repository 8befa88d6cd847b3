#include "gerst/scalars.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

namespace gerst {

namespace {

void strip(RatPoly& a)
{
    while (!a.empty() && sgn(a.back()) == 0)
        a.pop_back();
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    RatPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    strip(r);
    return r;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    strip(a);
    return a;
}

/* a = q*b + r with deg r < deg b */
void poly_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r)
{
    if (b.empty())
        throw DomainError("polynomial division by zero");
    r = a;
    strip(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    while (!r.empty() && r.size() >= b.size()) {
        size_t shift = r.size() - b.size();
        Rational c = r.back() / b.back();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            r[i + shift] -= c * b[i];
        strip(r);
    }
    strip(q);
}

}  // namespace

RatPoly cyclotomic_polynomial(int p)
{
    if (p < 1)
        throw DomainError("cyclotomic_polynomial: p must be positive");
    if (p < 2)
        throw DomainError("cyclotomic_polynomial: p must be at least 2");
    RatPoly num(p + 1, 0);
    num[0] = -1;
    num[p] = 1;
    RatPoly den{1};
    den[0] = 1;
    for (int d = 1; d < p; ++d) {
        if (p % d != 0)
            continue;
        RatPoly phi_d;
        if (d == 1)
            phi_d = {Rational(-1), Rational(1)};
        else
            phi_d = cyclotomic_polynomial(d);
        den = poly_mul(den, phi_d);
    }
    RatPoly q, r;
    poly_divmod(num, den, q, r);
    if (!r.empty())
        throw std::logic_error("cyclotomic_polynomial: inexact division");
    return q;
}

CyclotomicField::CyclotomicField(int p) : p_(p)
{
    if (p < 2)
        throw DomainError("cyclotomic field needs p >= 2");
    phi_ = cyclotomic_polynomial(p);
    degree_ = static_cast<int>(phi_.size()) - 1;
    int top = std::max(2 * degree_ - 1, 1);
    powers_.resize(top);
    for (int k = 0; k < top; ++k) {
        RatPoly tk(k + 1, 0);
        tk[k] = 1;
        RatPoly q, r;
        poly_divmod(tk, phi_, q, r);
        r.resize(degree_, 0);
        powers_[k] = std::move(r);
    }
}

const CyclotomicField& CyclotomicField::get(int p)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CyclotomicField>> fields;
    std::lock_guard<std::mutex> lock(mu);
    auto it = fields.find(p);
    if (it == fields.end())
        it = fields.emplace(p, std::unique_ptr<CyclotomicField>(new CyclotomicField(p))).first;
    return *it->second;
}

Cyc::Cyc(int p) : field_(&CyclotomicField::get(p)), c_(field_->degree(), 0) {}

Cyc::Cyc(int p, const Rational& r) : Cyc(p)
{
    c_[0] = r;
    c_[0].canonicalize();
}

Cyc::Cyc(int p, std::vector<Rational> coeffs) : field_(&CyclotomicField::get(p))
{
    // accepts any length; reduces modulo Phi_p
    RatPoly a = std::move(coeffs);
    for (auto& v : a)
        v.canonicalize();
    strip(a);
    RatPoly q, r;
    poly_divmod(a, field_->modulus(), q, r);
    r.resize(field_->degree(), 0);
    c_ = std::move(r);
}

Cyc Cyc::omega_power(int p, long e)
{
    long m = ((e % p) + p) % p;
    std::vector<Rational> t(m + 1, 0);
    t[m] = 1;
    return Cyc(p, std::move(t));
}

bool Cyc::is_zero() const
{
    for (const auto& x : c_)
        if (sgn(x) != 0)
            return false;
    return true;
}

bool Cyc::is_one() const
{
    if (c_.empty() || c_[0] != 1)
        return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0)
            return false;
    return true;
}

bool Cyc::is_rational() const
{
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0)
            return false;
    return true;
}

void Cyc::adopt(const Cyc& o)
{
    if (!o.field_)
        return;
    if (!field_) {
        field_ = o.field_;
        c_.assign(field_->degree(), 0);
        return;
    }
    if (field_ != o.field_)
        throw DomainError("cyclotomic scalars from different fields");
}

Cyc& Cyc::operator+=(const Cyc& o)
{
    adopt(o);
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o)
{
    adopt(o);
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

Cyc& Cyc::operator*=(const Cyc& o)
{
    *this = *this * o;
    return *this;
}

Cyc& Cyc::operator*=(const Rational& r)
{
    for (auto& x : c_)
        x *= r;
    return *this;
}

Cyc Cyc::operator-() const
{
    Cyc r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

Cyc operator*(const Cyc& a, const Cyc& b)
{
    if (!a.field_ || !b.field_) {
        Cyc z;
        z.adopt(a.field_ ? a : b);
        return z;
    }
    if (a.field_ != b.field_)
        throw DomainError("cyclotomic scalars from different fields");
    const auto& F = *a.field_;
    int d = F.degree();
    Cyc r;
    r.field_ = a.field_;
    r.c_.assign(d, 0);
    if (d == 1) {
        r.c_[0] = a.c_[0] * b.c_[0];
        return r;
    }
    std::vector<Rational> prod(2 * d - 1, 0);
    bool any = false;
    for (int i = 0; i < d; ++i) {
        if (sgn(a.c_[i]) == 0)
            continue;
        for (int j = 0; j < d; ++j) {
            if (sgn(b.c_[j]) == 0)
                continue;
            prod[i + j] += a.c_[i] * b.c_[j];
            any = true;
        }
    }
    if (!any)
        return r;
    for (int k = 0; k < d; ++k)
        r.c_[k] = prod[k];
    for (int k = d; k < 2 * d - 1; ++k) {
        if (sgn(prod[k]) == 0)
            continue;
        const auto& red = F.reduced_power(k);
        for (int i = 0; i < d; ++i)
            if (sgn(red[i]) != 0)
                r.c_[i] += prod[k] * red[i];
    }
    return r;
}

bool operator==(const Cyc& a, const Cyc& b)
{
    if (a.field_ && b.field_ && a.field_ != b.field_)
        return false;
    if (!a.field_ || !b.field_) {
        return (a.field_ ? a : b).is_zero();
    }
    return a.c_ == b.c_;
}

Cyc Cyc::inverse() const
{
    if (is_zero())
        throw DomainError("inverse of zero");
    // extended Euclid: find s with s*a = 1 mod Phi
    RatPoly r0 = field_->modulus(), r1 = c_;
    strip(r1);
    RatPoly s0, s1{Rational(1)};
    while (!r1.empty()) {
        RatPoly q, r;
        poly_divmod(r0, r1, q, r);
        RatPoly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 is a nonzero constant
    Rational inv = 1 / r0[0];
    for (auto& x : s0)
        x *= inv;
    return Cyc(p(), s0);
}

std::string Cyc::str() const
{
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0)
            continue;
        Rational v = c_[i];
        if (!first)
            os << (sgn(v) < 0 ? " - " : " + ");
        else if (sgn(v) < 0)
            os << "-";
        Rational a = abs(v);
        if (i == 0)
            os << a.get_str();
        else {
            if (a != 1)
                os << a.get_str();
            os << "ω";
            if (i > 1)
                os << "^" << i;
        }
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyc& c) { return os << c.str(); }

}  // namespace gerst

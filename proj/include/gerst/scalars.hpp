#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace gerst {

using Rational = mpq_class;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Dense univariate polynomial over Q, coefficient i multiplies t^i.
/// Trailing zeros are stripped; the zero polynomial is empty.
using RatPoly = std::vector<Rational>;

RatPoly cyclotomic_polynomial(int p);

/* The field Q(w), w a primitive p-th root of unity, realised as Q[t]/Phi_p.
 * One instance per p, shared by every scalar of that field. */
class CyclotomicField {
public:
    static const CyclotomicField& get(int p);

    int p() const { return p_; }
    int degree() const { return degree_; }
    const RatPoly& modulus() const { return phi_; }
    /// t^k mod Phi_p for 0 <= k <= 2*degree-2.
    const std::vector<Rational>& reduced_power(int k) const { return powers_[k]; }

private:
    explicit CyclotomicField(int p);

    int p_;
    int degree_;
    RatPoly phi_;
    std::vector<std::vector<Rational>> powers_;
};

/// Element of Q(w) in canonical coordinates against 1, w, ..., w^{d-1}.
class Cyc {
public:
    Cyc() = default;  // detached zero; adopts a field on first mixed operation
    explicit Cyc(int p);
    Cyc(int p, const Rational& r);
    Cyc(int p, std::vector<Rational> coeffs);

    static Cyc omega_power(int p, long e);

    int p() const { return field_ ? field_->p() : 0; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const CyclotomicField* field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    Cyc& operator*=(const Rational& r);
    Cyc operator-() const;

    Cyc inverse() const;

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    friend Cyc operator*(Cyc a, const Rational& r) { return a *= r; }
    friend Cyc operator*(const Rational& r, Cyc a) { return a *= r; }
    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }
    friend bool operator==(const Cyc& a, const Cyc& b);

    /// Human readable, e.g. "-1/2 + 3w^2" (w written as the unicode omega).
    std::string str() const;

private:
    void adopt(const Cyc& o);

    const CyclotomicField* field_ = nullptr;
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyc& c);

}  // namespace gerst

#pragma once

#include "gerst/scalars.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace gerst {

enum class AlgebraKind { TruncPoly, GroupAlg, Taft, TensorPair };

/* A finite-dimensional algebra with a monomial basis.
 *
 * TruncPoly  k[x]/(x^p), basis x^i
 * GroupAlg   kG, G cyclic of order p, basis g^k
 * Taft       T_p, basis x^i g^k with g x = w x g
 * TensorPair A (x) B, or A (x) B^op when the second factor is opposite
 *
 * Basis elements are addressed by a flat index; exponents() recovers the
 * monomial tuple (concatenated for tensor pairs). */
class Algebra {
public:
    using Ptr = std::shared_ptr<const Algebra>;

    static Ptr trunc_poly(int p);
    static Ptr group_alg(int p);
    static Ptr taft(int p);
    static Ptr tensor(Ptr first, Ptr second, bool opposite_second = false);

    AlgebraKind kind() const { return kind_; }
    int p() const { return p_; }
    int dim() const { return dim_; }
    const Ptr& first() const { return first_; }
    const Ptr& second() const { return second_; }
    bool opposite_second() const { return opposite_; }

    std::vector<int> exponents(int index) const;
    int index(const std::vector<int>& exps) const;
    int unit_index() const { return 0; }

    /// Product of two basis monomials: coefficient * basis[index], or index < 0 for zero.
    struct Product {
        int index = -1;
        Cyc coeff;
    };
    Product mul_basis(int a, int b) const;

    std::string monomial_str(int index) const;
    bool same_as(const Algebra& o) const;

private:
    Algebra() = default;
    void build_table();

    AlgebraKind kind_ = AlgebraKind::TruncPoly;
    int p_ = 0;
    int dim_ = 0;
    Ptr first_, second_;
    bool opposite_ = false;
    std::vector<Product> table_;  // base kinds only
};

/// Taft basis helpers: index = i*p + k for x^i g^k.
inline int taft_index(int p, int i, int k) { return i * p + ((k % p) + p) % p; }
inline int taft_xdeg(int p, int idx) { return idx / p; }
inline int taft_gdeg(int p, int idx) { return idx % p; }

class AlgElem {
public:
    AlgElem() = default;
    explicit AlgElem(Algebra::Ptr alg) : alg_(std::move(alg)) {}

    static AlgElem basis(Algebra::Ptr alg, int index, Cyc coeff);
    static AlgElem basis(Algebra::Ptr alg, int index);
    static AlgElem scalar(Algebra::Ptr alg, const Cyc& c);

    const Algebra::Ptr& algebra() const { return alg_; }
    const std::map<int, Cyc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Cyc coeff(int index) const;

    void add_term(int index, const Cyc& c);

    AlgElem& operator+=(const AlgElem& o);
    AlgElem& operator-=(const AlgElem& o);
    AlgElem& operator*=(const Cyc& c);
    AlgElem operator-() const;

    friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
    friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
    friend AlgElem operator*(AlgElem a, const Cyc& c) { return a *= c; }
    friend AlgElem operator*(const Cyc& c, AlgElem a) { return a *= c; }
    friend bool operator==(const AlgElem& a, const AlgElem& b);

    std::string str() const;

private:
    void check_same(const AlgElem& o) const;

    Algebra::Ptr alg_;
    std::map<int, Cyc> terms_;  // no stored zeros
};

AlgElem alg_mul(const AlgElem& a, const AlgElem& b);
AlgElem alg_pow(const AlgElem& a, int e);

/// Tensor of two elements as an element of the given tensor algebra.
AlgElem tensor_elem(const Algebra::Ptr& tensor_alg, const AlgElem& a, const AlgElem& b);

// Hopf structure of T_p.
Cyc counit(const AlgElem& a);
AlgElem comultiply(const AlgElem& a);
AlgElem antipode(const AlgElem& a);

/// The algebra T_p (x) T_p used as the target of comultiply.
Algebra::Ptr taft_tensor_square(int p);

}  // namespace gerst

#pragma once

#include "gerst/algebras.hpp"

#include <array>
#include <compare>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gerst {

enum class SmallKind { SmallA, SmallTaft };

/* The periodic resolutions of A = k[x]/(x^p) (kind SmallA) and of T_p (kind
 * SmallTaft). In degree n both are spanned over k by x^i xi_n r where r runs
 * over the basis of the coefficient algebra: A for SmallA, T_p for SmallTaft
 * (so A (x) T_p in the Taft case). Differentials alternate u = x(x)1 - 1(x)x
 * and v = sum x^l (x) x^{p-1-l}.
 *
 * Bimodule structure on the Taft side: g x = w x g and g xi_n = w^{n mod 2} xi_n g.
 * All group elements are kept at the far right of a word. */
class SmallComplex {
public:
    using Ptr = std::shared_ptr<const SmallComplex>;
    static Ptr get(SmallKind kind, int p);

    SmallKind kind() const { return kind_; }
    int p() const { return p_; }
    bool taft() const { return kind_ == SmallKind::SmallTaft; }
    /// Algebra of right coefficients and of cochain values.
    const Algebra::Ptr& coef() const { return coef_; }
    /// Algebra whose enveloping algebra acts (A or T_p); equals coef().
    int coef_index(int xdeg, int gdeg) const;
    int coef_x(int idx) const;
    int coef_g(int idx) const;
    std::string name() const;

private:
    SmallComplex(SmallKind kind, int p);
    SmallKind kind_;
    int p_;
    Algebra::Ptr coef_;
};

/* One basis word of an n-fold tensor power over the coefficient algebra:
 *   x^{xs[0]} xi_{deg[0]} (x) x^{xs[1]} xi_{deg[1]} (x) ... (x) x^{xs[k-1]} xi_{deg[k-1]} . right
 * Interior coefficients always live on the left of the following generator;
 * right is a basis index of SmallComplex::coef(). */
struct Word {
    int8_t nf = 1;
    std::array<int8_t, 3> deg{0, 0, 0};
    std::array<int8_t, 3> xs{0, 0, 0};
    int16_t right = 0;

    int degree() const;
    auto operator<=>(const Word&) const = default;
};

/* Element of a fixed degree of the small complex (nf = 1), its tensor square
 * over the coefficient algebra (nf = 2) or tensor cube (nf = 3). */
class ResElem {
public:
    ResElem() = default;
    ResElem(SmallComplex::Ptr cx, int nf, int degree) : cx_(std::move(cx)), nf_(nf), degree_(degree) {}

    /// x^i xi_n r
    static ResElem generator(SmallComplex::Ptr cx, int n, int left_x = 0, int right = 0);
    /// x^i xi_a (x) x^m xi_b r
    static ResElem pair(SmallComplex::Ptr cx, int a, int m, int b, int left_x = 0, int right = 0);

    const SmallComplex::Ptr& complex() const { return cx_; }
    int factors() const { return nf_; }
    int degree() const { return degree_; }
    const std::map<Word, Cyc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int p() const { return cx_->p(); }

    void add(const Word& w, const Cyc& c);
    void add(const ResElem& o, const Cyc& c);

    ResElem& operator+=(const ResElem& o);
    ResElem& operator-=(const ResElem& o);
    ResElem operator-() const;
    friend ResElem operator+(ResElem a, const ResElem& b) { return a += b; }
    friend ResElem operator-(ResElem a, const ResElem& b) { return a -= b; }
    friend ResElem operator*(const Cyc& c, const ResElem& e);
    friend bool operator==(const ResElem& a, const ResElem& b);

    std::string str() const;

private:
    void check(const ResElem& o) const;
    SmallComplex::Ptr cx_;
    int nf_ = 1;
    int degree_ = 0;
    std::map<Word, Cyc> terms_;
};

std::ostream& operator<<(std::ostream& os, const ResElem& e);

/* Builds the normal form of r_0 xi_{d_0} r_1 xi_{d_1} ... xi_{d_{k-1}} r_k for
 * coefficient monomials r_j, moving every group element to the right. Returns
 * nullopt when an x-power overflows. */
std::optional<std::pair<Cyc, Word>> normalize_word(const SmallComplex& cx, const std::vector<int>& degs,
                                                   const std::vector<int>& coefs);

/// Left and right action of the coefficient algebra.
ResElem left_mul(const AlgElem& a, const ResElem& e);
ResElem right_mul(const ResElem& e, const AlgElem& a);
ResElem left_mul_basis(int mono, const ResElem& e);
ResElem right_mul_basis(const ResElem& e, int mono);

/// Boundary of xi_n in degree n-1 (n >= 1).
ResElem boundary_of_generator(const SmallComplex::Ptr& cx, int n);

/// Differential with the Koszul sign on tensor factors. Degree must be >= 1.
ResElem differential(const ResElem& e);

/// Augmentation of a degree-0 element of the small complex.
AlgElem augment(const ResElem& e);

/// F = mu (x) id - id (x) mu on the tensor square.
ResElem F_map(const ResElem& e);

/* Transport isomorphism for the Taft tensor square. An element of
 * (A (x) T_p) (x)_{T_p} (A (x) T_p) is given factorwise as
 *   (x^{i1} xi_a x^{j1} g^{k1}) (x) (x^{i2} xi_b x^{j2} g^{k2})
 * and lands in the normal form (A (x) A) (x)_A (A (x) A) (x) kG. */
struct TaftTensorTerm {
    int a = 0, i1 = 0, j1 = 0, k1 = 0;
    int b = 0, i2 = 0, j2 = 0, k2 = 0;
    auto operator<=>(const TaftTensorTerm&) const = default;
};
using TaftTensorElem = std::map<TaftTensorTerm, Cyc>;

ResElem psi_apply(const SmallComplex::Ptr& taft_cx, const TaftTensorElem& e);
TaftTensorElem psi_inverse(const ResElem& e);

/// Taft-side evaluations used to check the transport identities.
TaftTensorElem taft_tensor_left_mul(int p, int mono, const TaftTensorElem& e);
TaftTensorElem taft_tensor_right_mul(int p, const TaftTensorElem& e, int mono);
ResElem taft_side_F(const SmallComplex::Ptr& taft_cx, const TaftTensorElem& e);
TaftTensorElem taft_side_differential(int p, const TaftTensorElem& e);

/// Component of A (x) T_p: x^i xi_n x^j g^k with the T_p-bimodule action.
ResElem taft_factor(const SmallComplex::Ptr& taft_cx, int n, int i, int j, int k);

}  // namespace gerst

#pragma once

#include "gerst/bracket.hpp"

#include <map>
#include <vector>

namespace gerst {

/* Cochains on the bar resolution: k-multilinear maps R^{(x)n} -> R stored as a
 * dense table over basis tuples. Tuple (a_1..a_n) has index
 * sum a_k D^{n-k}, D = dim R. */
class BarCochain {
public:
    BarCochain() = default;
    BarCochain(Algebra::Ptr alg, int degree);

    const Algebra::Ptr& algebra() const { return alg_; }
    int degree() const { return degree_; }
    long size() const { return static_cast<long>(table_.size()); }

    const AlgElem& at(long tuple) const { return table_[tuple]; }
    AlgElem& at(long tuple) { return table_[tuple]; }
    std::vector<int> tuple(long index) const;
    long index(const std::vector<int>& tuple) const;

    /// Multilinear evaluation on arbitrary arguments.
    AlgElem eval(const std::vector<AlgElem>& args) const;

    bool is_zero() const;
    BarCochain& operator+=(const BarCochain& o);
    BarCochain& operator-=(const BarCochain& o);
    friend BarCochain operator+(BarCochain a, const BarCochain& b) { return a += b; }
    friend BarCochain operator-(BarCochain a, const BarCochain& b) { return a -= b; }
    friend BarCochain operator*(const Cyc& c, BarCochain f);
    friend bool operator==(const BarCochain& a, const BarCochain& b);

private:
    Algebra::Ptr alg_;
    int degree_ = 0;
    std::vector<AlgElem> table_;
};

BarCochain hochschild_differential(const BarCochain& f);
BarCochain circle_bar(const BarCochain& f, const BarCochain& g);
BarCochain bracket_bar(const BarCochain& f, const BarCochain& g);
BarCochain cup_bar(const BarCochain& f, const BarCochain& g);

/// f - g in the image of the Hochschild differential; both must be cocycles.
bool class_equal(const BarCochain& f, const BarCochain& g);

/// dim HH^n from ranks of the bar Hom complex, blocked by the x and g gradings.
int bar_hh_dimension(const Algebra::Ptr& alg, int degree);

/* Elements of B_n = R (x) R^{(x)n} (x) R, keyed by the flattened tuple
 * (a_0, a_1, ..., a_n, a_{n+1}). */
struct BarElem {
    Algebra::Ptr alg;
    int degree = 0;
    std::map<long, Cyc> terms;

    void add(long key, const Cyc& c);
    bool is_zero() const { return terms.empty(); }
};

std::vector<int> bar_tuple(const Algebra& alg, int degree, long key);
long bar_key(const Algebra& alg, const std::vector<int>& tuple);
BarElem bar_generator(const Algebra::Ptr& alg, const std::vector<int>& interior);
BarElem bar_differential(const BarElem& e);
BarElem bar_left_mul(int mono, const BarElem& e);
BarElem bar_right_mul(const BarElem& e, int mono);

/* Comparison maps between a small complex and the bar resolution of its
 * coefficient algebra. pi is lifted with the small homotopy, iota with the
 * bar homotopy s(b) = 1 (x) b; on the Taft side iota is averaged over the
 * group so that it respects the twisted bimodule structure. */
class ComparisonMaps {
public:
    ComparisonMaps(SmallComplex::Ptr cx, int max_degree);

    const SmallComplex::Ptr& complex() const { return cx_; }
    int max_degree() const { return max_degree_; }

    /// pi on a bar generator 1 (x) a_1..a_n (x) 1, and bimodule-linearly on any element.
    const ResElem& pi_generator(int degree, long interior) const;
    ResElem pi(const BarElem& e) const;
    /// iota on xi_n, and bimodule-linearly on any element.
    const BarElem& iota_generator(int degree) const { return iota_.at(degree); }
    BarElem iota(const ResElem& e) const;

private:
    SmallComplex::Ptr cx_;
    int max_degree_;
    std::vector<std::vector<ResElem>> pi_;
    std::vector<BarElem> iota_;
};

ComparisonMaps build_comparison(const SmallComplex::Ptr& cx, int max_degree);

/// pi^* f, a bar cochain.
BarCochain pull_to_bar(const ComparisonMaps& cm, const SmallCochain& f);
/// iota^* F, a small cochain.
SmallCochain push_to_small(const ComparisonMaps& cm, const BarCochain& F);

struct OracleComparison {
    CohomClass engine;
    CohomClass oracle;
    bool agree = false;
};

/// Class of [f,g]_phi against the class of iota^*[pi^* f, pi^* g] in the small complex.
OracleComparison oracle_compare(const ComparisonMaps& cm, const SmallCochain& f, const SmallCochain& g);

/// Level at which pi iota agrees with the identity through max_degree.
enum class PiIotaLevel { OnTheNose, OnCohomology, Fails };
PiIotaLevel pi_iota_level(const ComparisonMaps& cm);

}  // namespace gerst

#pragma once

#include "gerst/scalars.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace gerst {

/// Sparse vector over Q(w): strictly increasing indices, no stored zeros.
using SparseVec = std::vector<std::pair<int, Cyc>>;

SparseVec sparse_from_map(const std::map<int, Cyc>& m);

/* Incremental row echelon basis of a subspace.
 *
 * Every stored row is monic at its pivot and pivots are distinct, so a vector
 * is reduced by sweeping its entries in increasing column order. With
 * tracking enabled each row also remembers itself as a combination of the
 * inserted vectors, which is what membership solves need. */
class EchelonBasis {
public:
    explicit EchelonBasis(bool track = false) : track_(track) {}

    /// Returns true when v was independent of the rows so far.
    bool insert(const SparseVec& v);

    /// Remainder of v after elimination; zero iff v lies in the span.
    SparseVec reduce(const SparseVec& v) const;

    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    /// Coefficients c with sum c_i * inserted_i = v, if v is in the span.
    std::optional<SparseVec> solve(const SparseVec& v) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    int inserted() const { return n_inserted_; }
    std::vector<int> pivots() const;

private:
    void eliminate(std::map<int, Cyc>& acc, std::map<int, Cyc>* combo) const;

    bool track_;
    int n_inserted_ = 0;
    std::map<int, size_t> pivot_row_;
    std::vector<SparseVec> rows_;
    std::vector<SparseVec> combos_;
};

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p), data_(rows) {}

    static ExactMatrix identity(int n, int p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int p() const { return p_; }

    Cyc at(int r, int c) const;
    void set(int r, int c, const Cyc& v);
    const std::map<int, Cyc>& row(int r) const { return data_[r]; }

    SparseVec column(int c) const;
    SparseVec apply(const SparseVec& x) const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

private:
    int rows_ = 0, cols_ = 0, p_ = 3;
    std::vector<std::map<int, Cyc>> data_;
};

struct RrefResult {
    ExactMatrix reduced;
    std::vector<int> pivots;
    ExactMatrix transform;  // transform * input == reduced
};

RrefResult rref(const ExactMatrix& m);
int rank(const ExactMatrix& m);
std::vector<SparseVec> kernel_basis(const ExactMatrix& m);
std::optional<SparseVec> solve_membership(const ExactMatrix& m, const SparseVec& v);

}  // namespace gerst

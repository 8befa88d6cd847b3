#include "gerst/linalg.hpp"

#include <algorithm>

namespace gerst {

SparseVec sparse_from_map(const std::map<int, Cyc>& m)
{
    SparseVec v;
    v.reserve(m.size());
    for (const auto& [i, c] : m)
        if (!c.is_zero())
            v.emplace_back(i, c);
    return v;
}

namespace {

void axpy(std::map<int, Cyc>& acc, const Cyc& a, const SparseVec& row)
{
    for (const auto& [i, c] : row) {
        auto [it, inserted] = acc.try_emplace(i, a * c);
        if (!inserted) {
            it->second += a * c;
            if (it->second.is_zero())
                acc.erase(it);
        }
    }
}

}  // namespace

void EchelonBasis::eliminate(std::map<int, Cyc>& acc, std::map<int, Cyc>* combo) const
{
    auto it = acc.begin();
    while (it != acc.end()) {
        auto pr = pivot_row_.find(it->first);
        if (pr == pivot_row_.end()) {
            ++it;
            continue;
        }
        int col = it->first;
        Cyc factor = -it->second;
        axpy(acc, factor, rows_[pr->second]);
        if (combo)
            axpy(*combo, factor, combos_[pr->second]);
        it = acc.upper_bound(col);
    }
}

bool EchelonBasis::insert(const SparseVec& v)
{
    int id = n_inserted_++;
    std::map<int, Cyc> acc(v.begin(), v.end());
    if (v.empty())
        return false;
    std::map<int, Cyc> combo;
    if (track_)
        combo.emplace(id, Cyc(v.front().second.p(), 1));
    eliminate(acc, track_ ? &combo : nullptr);
    if (acc.empty())
        return false;
    Cyc inv = acc.begin()->second.inverse();
    SparseVec row;
    row.reserve(acc.size());
    for (auto& [i, c] : acc)
        row.emplace_back(i, c * inv);
    if (track_) {
        for (auto& [i, c] : combo)
            c *= inv;
        combos_.push_back(sparse_from_map(combo));
    }
    pivot_row_.emplace(row.front().first, rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

SparseVec EchelonBasis::reduce(const SparseVec& v) const
{
    std::map<int, Cyc> acc(v.begin(), v.end());
    eliminate(acc, nullptr);
    return sparse_from_map(acc);
}

std::optional<SparseVec> EchelonBasis::solve(const SparseVec& v) const
{
    if (!track_)
        throw std::logic_error("EchelonBasis::solve needs tracking");
    std::map<int, Cyc> acc(v.begin(), v.end());
    std::map<int, Cyc> combo;
    // eliminate while recording: v - sum f_k row_k = 0  =>  v = sum f_k combo_k
    auto it = acc.begin();
    while (it != acc.end()) {
        auto pr = pivot_row_.find(it->first);
        if (pr == pivot_row_.end()) {
            ++it;
            continue;
        }
        int col = it->first;
        Cyc f = it->second;
        axpy(acc, -f, rows_[pr->second]);
        axpy(combo, f, combos_[pr->second]);
        it = acc.upper_bound(col);
    }
    if (!acc.empty())
        return std::nullopt;
    return sparse_from_map(combo);
}

std::vector<int> EchelonBasis::pivots() const
{
    std::vector<int> r;
    for (const auto& [c, _] : pivot_row_)
        r.push_back(c);
    return r;
}

ExactMatrix ExactMatrix::identity(int n, int p)
{
    ExactMatrix m(n, n, p);
    for (int i = 0; i < n; ++i)
        m.set(i, i, Cyc(p, 1));
    return m;
}

Cyc ExactMatrix::at(int r, int c) const
{
    auto it = data_.at(r).find(c);
    return it == data_[r].end() ? Cyc(p_) : it->second;
}

void ExactMatrix::set(int r, int c, const Cyc& v)
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw DomainError("ExactMatrix index out of range");
    if (v.is_zero())
        data_[r].erase(c);
    else
        data_[r][c] = v;
}

SparseVec ExactMatrix::column(int c) const
{
    SparseVec v;
    for (int r = 0; r < rows_; ++r) {
        auto it = data_[r].find(c);
        if (it != data_[r].end())
            v.emplace_back(r, it->second);
    }
    return v;
}

SparseVec ExactMatrix::apply(const SparseVec& x) const
{
    std::map<int, Cyc> out;
    for (int r = 0; r < rows_; ++r) {
        Cyc s(p_);
        for (const auto& [c, xv] : x) {
            auto it = data_[r].find(c);
            if (it != data_[r].end())
                s += it->second * xv;
        }
        if (!s.is_zero())
            out.emplace(r, s);
    }
    return sparse_from_map(out);
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(const ExactMatrix& m)
{
    int p = m.p();
    std::vector<std::map<int, Cyc>> rows(m.rows()), tr(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        rows[r] = m.row(r);
        tr[r][r] = Cyc(p, 1);
    }
    auto add_scaled = [](std::map<int, Cyc>& dst, const Cyc& a, const std::map<int, Cyc>& src) {
        for (const auto& [i, c] : src) {
            auto [it, ins] = dst.try_emplace(i, a * c);
            if (!ins) {
                it->second += a * c;
                if (it->second.is_zero())
                    dst.erase(it);
            }
        }
    };
    std::vector<int> pivots;
    int next = 0;
    for (int col = 0; col < m.cols() && next < m.rows(); ++col) {
        // sparsest candidate row, then lowest index
        int best = -1;
        for (int r = next; r < m.rows(); ++r) {
            if (!rows[r].count(col))
                continue;
            if (best < 0 || rows[r].size() < rows[best].size())
                best = r;
        }
        if (best < 0)
            continue;
        std::swap(rows[next], rows[best]);
        std::swap(tr[next], tr[best]);
        Cyc inv = rows[next].at(col).inverse();
        for (auto& [i, c] : rows[next])
            c *= inv;
        for (auto& [i, c] : tr[next])
            c *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == next)
                continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end())
                continue;
            Cyc f = -it->second;
            add_scaled(rows[r], f, rows[next]);
            add_scaled(tr[r], f, tr[next]);
        }
        pivots.push_back(col);
        ++next;
    }
    RrefResult res{ExactMatrix(m.rows(), m.cols(), p), pivots, ExactMatrix(m.rows(), m.rows(), p)};
    for (int r = 0; r < m.rows(); ++r) {
        for (const auto& [c, v] : rows[r])
            res.reduced.set(r, c, v);
        for (const auto& [c, v] : tr[r])
            res.transform.set(r, c, v);
    }
    return res;
}

int rank(const ExactMatrix& m)
{
    EchelonBasis eb;
    for (int r = 0; r < m.rows(); ++r)
        eb.insert(sparse_from_map(m.row(r)));
    return eb.rank();
}

std::vector<SparseVec> kernel_basis(const ExactMatrix& m)
{
    auto rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : rr.pivots)
        is_pivot[c] = true;
    std::vector<SparseVec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::map<int, Cyc> v;
        v[free] = Cyc(m.p(), 1);
        for (size_t r = 0; r < rr.pivots.size(); ++r) {
            Cyc c = rr.reduced.at(static_cast<int>(r), free);
            if (!c.is_zero())
                v[rr.pivots[r]] = -c;
        }
        basis.push_back(sparse_from_map(v));
    }
    return basis;
}

std::optional<SparseVec> solve_membership(const ExactMatrix& m, const SparseVec& v)
{
    EchelonBasis eb(true);
    for (int c = 0; c < m.cols(); ++c)
        eb.insert(m.column(c));
    return eb.solve(v);
}

}  // namespace gerst

#include "gerst/hopf.hpp"

#include "gerst/linalg.hpp"

#include <functional>
#include <map>

namespace gerst {

namespace {

long ipow(long b, int e)
{
    long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

Cyc sign(int p, int e) { return Cyc(p, (e % 2) ? -1 : 1); }

struct Split2 {
    int a, b;
    Cyc k;
};

struct Split3 {
    int a, b, c;
    Cyc k;
};

/// Sweedler data, antipode, counit and adjoint action of T_p on basis monomials.
struct HopfTables {
    Algebra::Ptr alg;
    int p = 0, D = 0;
    std::vector<std::vector<Split2>> delta;
    std::vector<std::vector<Split3>> delta2;
    std::vector<AlgElem> S;
    std::vector<Cyc> eps;
    std::vector<std::vector<AlgElem>> ad;

    Algebra::Product mul(int a, int b) const { return alg->mul_basis(a, b); }
};

const HopfTables& tables(const Algebra::Ptr& alg)
{
    if (alg->kind() != AlgebraKind::Taft)
        throw DomainError("Hopf structure is only available for T_p");
    static std::map<int, HopfTables> cache;
    int p = alg->p();
    auto it = cache.find(p);
    if (it != cache.end())
        return it->second;
    HopfTables t;
    t.alg = alg;
    t.p = p;
    t.D = alg->dim();
    for (int c = 0; c < t.D; ++c) {
        AlgElem e = AlgElem::basis(alg, c);
        std::vector<Split2> d;
        AlgElem dc = comultiply(e);
        for (const auto& [idx, k] : dc.terms())
            d.push_back({idx / t.D, idx % t.D, k});
        t.delta.push_back(std::move(d));
        t.S.push_back(antipode(e));
        t.eps.push_back(counit(e));
    }
    for (int c = 0; c < t.D; ++c) {
        std::map<std::tuple<int, int, int>, Cyc> acc;
        for (const auto& [a, b, k] : t.delta[c])
            for (const auto& [b1, b2, k2] : t.delta[b]) {
                auto [it2, ins] = acc.try_emplace({a, b1, b2}, k * k2);
                if (!ins)
                    it2->second += k * k2;
            }
        std::vector<Split3> d2;
        for (const auto& [key, k] : acc)
            if (!k.is_zero())
                d2.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), k});
        t.delta2.push_back(std::move(d2));
    }
    t.ad.assign(t.D, std::vector<AlgElem>(t.D, AlgElem(alg)));
    for (int c = 0; c < t.D; ++c)
        for (int b = 0; b < t.D; ++b)
            for (const auto& [c1, c2, k] : t.delta[c]) {
                AlgElem left = alg_mul(AlgElem::basis(alg, c1, k), AlgElem::basis(alg, b));
                t.ad[c][b] += alg_mul(left, t.S[c2]);
            }
    return cache.emplace(p, std::move(t)).first->second;
}

std::vector<int> decode(long index, int len, int D)
{
    std::vector<int> t(len);
    for (int k = len - 1; k >= 0; --k) {
        t[k] = static_cast<int>(index % D);
        index /= D;
    }
    return t;
}

long encode(const std::vector<int>& t, int D)
{
    long r = 0;
    for (int v : t)
        r = r * D + v;
    return r;
}

AlgElem sandwich(const Algebra::Ptr& alg, int a, const AlgElem& v, int b)
{
    AlgElem out(alg);
    for (const auto& [i, k] : v.terms()) {
        auto l = alg->mul_basis(a, i);
        if (l.index < 0)
            continue;
        auto r = alg->mul_basis(l.index, b);
        if (r.index < 0)
            continue;
        out.add_term(r.index, k * l.coeff * r.coeff);
    }
    return out;
}

/* Walks every choice of one Sweedler term per factor of c, tracking the
 * first legs and the running product of the second legs. */
void split_each(const HopfTables& t, const std::vector<int>& c, size_t j, std::vector<int>& firsts, int prod, Cyc coeff,
                const std::function<void(const std::vector<int>&, int, const Cyc&)>& leaf)
{
    if (j == c.size()) {
        leaf(firsts, prod, coeff);
        return;
    }
    for (const auto& [a, b, k] : t.delta[c[j]]) {
        auto pr = t.mul(prod, b);
        if (pr.index < 0)
            continue;
        firsts[j] = a;
        split_each(t, c, j + 1, firsts, pr.index, coeff * k * pr.coeff, leaf);
    }
}

/* Hom_{T_p}(P_n, M) for M = k or the adjoint module, as sparse vectors over
 * cells tuple * dim M + m. The differential preserves the x-weight
 * (x-degrees of the inputs minus that of the value), which gives the blocks. */
class ModuleHom {
public:
    ModuleHom(const HopfTables& t, bool adjoint) : t_(t), adjoint_(adjoint), M_(adjoint ? t.D : 1)
    {
        pre_.resize(t_.D);
        for (int u = 0; u < t_.D; ++u)
            for (int v = 0; v < t_.D; ++v) {
                auto pr = t_.mul(u, v);
                if (pr.index >= 0)
                    pre_[pr.index].push_back({u, v, pr.coeff});
            }
    }

    static const ModuleHom& get(const Algebra::Ptr& alg, bool adjoint)
    {
        static std::map<std::pair<int, bool>, std::unique_ptr<ModuleHom>> cache;
        auto& slot = cache[{alg->p(), adjoint}];
        if (!slot)
            slot = std::make_unique<ModuleHom>(tables(alg), adjoint);
        return *slot;
    }

    int M() const { return M_; }
    long cells(int n) const { return ipow(t_.D, n) * M_; }

    int grading(int n, long cell) const
    {
        int m = static_cast<int>(cell % M_);
        long tup = cell / M_;
        int w = adjoint_ ? -taft_xdeg(t_.p, m) : 0;
        for (int k = 0; k < n; ++k) {
            w += taft_xdeg(t_.p, static_cast<int>(tup % t_.D));
            tup /= t_.D;
        }
        return w;
    }

    /// Coboundary of the basis cochain at cell, in degree n + 1.
    SparseVec column(int n, long cell) const
    {
        int D = t_.D, p = t_.p;
        int m = static_cast<int>(cell % M_);
        auto tu = decode(cell / M_, n, D);
        std::map<int, Cyc> acc;
        std::vector<int> args(n + 1);
        auto put = [&](int out, const Cyc& c) {
            int key = static_cast<int>(encode(args, D) * M_ + out);
            auto [it, ins] = acc.try_emplace(key, c);
            if (!ins) {
                it->second += c;
                if (it->second.is_zero())
                    acc.erase(it);
            }
        };
        for (int a = 0; a < D; ++a) {
            args[0] = a;
            std::copy(tu.begin(), tu.end(), args.begin() + 1);
            if (adjoint_) {
                for (const auto& [o, k] : t_.ad[a][m].terms())
                    put(o, k);
            } else if (!t_.eps[a].is_zero()) {
                put(0, t_.eps[a]);
            }
        }
        for (int i = 0; i < n; ++i)
            for (const auto& [u, v, c] : pre_[tu[i]]) {
                std::copy(tu.begin(), tu.begin() + i, args.begin());
                args[i] = u;
                args[i + 1] = v;
                std::copy(tu.begin() + i + 1, tu.end(), args.begin() + i + 2);
                put(m, c * sign(p, i + 1));
            }
        for (int a = 0; a < D; ++a) {
            if (t_.eps[a].is_zero())
                continue;
            std::copy(tu.begin(), tu.end(), args.begin());
            args[n] = a;
            put(m, t_.eps[a] * sign(p, n + 1));
        }
        return sparse_from_map(acc);
    }

    SparseVec apply(int n, const SparseVec& f) const
    {
        std::map<int, Cyc> acc;
        for (const auto& [cell, c] : f)
            for (const auto& [k, v] : column(n, cell)) {
                auto [it, ins] = acc.try_emplace(k, c * v);
                if (!ins) {
                    it->second += c * v;
                    if (it->second.is_zero())
                        acc.erase(it);
                }
            }
        return sparse_from_map(acc);
    }

    /// Span of the coboundaries landing in degree n, per block.
    const std::map<int, EchelonBasis>& image_blocks(int n) const
    {
        auto it = images_.find(n);
        if (it != images_.end())
            return it->second;
        std::map<int, EchelonBasis> blocks;
        if (n > 0)
            for (long cell = 0; cell < cells(n - 1); ++cell)
                blocks[grading(n - 1, cell)].insert(column(n - 1, cell));
        return images_.emplace(n, std::move(blocks)).first->second;
    }

    int rank_into(int n) const
    {
        int r = 0;
        for (const auto& [w, eb] : image_blocks(n))
            r += eb.rank();
        return r;
    }

    int dimension(int n) const { return static_cast<int>(cells(n)) - rank_into(n + 1) - rank_into(n); }

    bool is_coboundary(int n, const SparseVec& f) const
    {
        std::map<int, SparseVec> parts;
        for (const auto& [cell, c] : f)
            parts[grading(n, cell)].emplace_back(cell, c);
        if (parts.empty())
            return true;
        const auto& blocks = image_blocks(n);
        for (const auto& [w, v] : parts) {
            auto it = blocks.find(w);
            if (it == blocks.end() || !it->second.contains(v))
                return false;
        }
        return true;
    }

    /// Cocycles completing the coboundaries to the cocycle space, block by block.
    std::vector<SparseVec> cohomology_reps(int n) const
    {
        std::map<int, std::vector<long>> by_block;
        for (long cell = 0; cell < cells(n); ++cell)
            by_block[grading(n, cell)].push_back(cell);
        const auto& images = image_blocks(n);
        const auto& outgoing = image_blocks(n + 1);
        auto block_rank = [](const std::map<int, EchelonBasis>& m, int w) {
            auto it = m.find(w);
            return it == m.end() ? 0 : it->second.rank();
        };
        std::vector<SparseVec> reps;
        for (const auto& [w, block] : by_block) {
            if (static_cast<int>(block.size()) == block_rank(outgoing, w) + block_rank(images, w))
                continue;
            EchelonBasis cols(true);
            std::vector<SparseVec> kernel;
            for (long cell : block) {
                SparseVec v = column(n, cell);
                if (auto combo = cols.solve(v); combo || v.empty()) {
                    std::map<int, Cyc> k{{static_cast<int>(cell), Cyc(t_.p, 1)}};
                    if (combo)
                        for (const auto& [id, c] : *combo)
                            k[static_cast<int>(block[id])] -= c;
                    for (auto it = k.begin(); it != k.end();)
                        it = it->second.is_zero() ? k.erase(it) : std::next(it);
                    kernel.push_back(sparse_from_map(k));
                }
                cols.insert(v);
            }
            auto im = images.find(w);
            EchelonBasis span = im == images.end() ? EchelonBasis() : im->second;
            for (const auto& k : kernel)
                if (span.insert(k))
                    reps.push_back(k);
        }
        return reps;
    }

private:
    struct Pre {
        int u, v;
        Cyc c;
    };
    const HopfTables& t_;
    bool adjoint_;
    int M_;
    std::vector<std::vector<Pre>> pre_;
    mutable std::map<int, std::map<int, EchelonBasis>> images_;
};

SparseVec to_vec(const TrivialCochain& f)
{
    SparseVec v;
    for (long t = 0; t < f.size(); ++t)
        if (!f.at(t).is_zero())
            v.emplace_back(static_cast<int>(t), f.at(t));
    return v;
}

SparseVec to_vec(const AdjointCochain& f)
{
    SparseVec v;
    int D = f.algebra()->dim();
    for (long t = 0; t < f.size(); ++t)
        for (const auto& [b, c] : f.at(t).terms())
            v.emplace_back(static_cast<int>(t * D + b), c);
    return v;
}

}  // namespace

TrivialCochain::TrivialCochain(Algebra::Ptr alg, int degree) : alg_(std::move(alg)), degree_(degree)
{
    if (degree < 0)
        throw DomainError("cochain degree must be non-negative");
    table_.assign(static_cast<size_t>(ipow(alg_->dim(), degree)), Cyc(alg_->p()));
}

bool TrivialCochain::is_zero() const
{
    for (const auto& c : table_)
        if (!c.is_zero())
            return false;
    return true;
}

TrivialCochain& TrivialCochain::operator+=(const TrivialCochain& o)
{
    if (o.degree_ != degree_ || o.alg_->p() != alg_->p())
        throw DomainError("trivial cochains from different Hom spaces");
    for (size_t i = 0; i < table_.size(); ++i)
        table_[i] += o.table_[i];
    return *this;
}

TrivialCochain& TrivialCochain::operator-=(const TrivialCochain& o)
{
    if (o.degree_ != degree_ || o.alg_->p() != alg_->p())
        throw DomainError("trivial cochains from different Hom spaces");
    for (size_t i = 0; i < table_.size(); ++i)
        table_[i] -= o.table_[i];
    return *this;
}

TrivialCochain operator*(const Cyc& c, TrivialCochain f)
{
    for (auto& v : f.table_)
        v *= c;
    return f;
}

bool operator==(const TrivialCochain& a, const TrivialCochain& b)
{
    return a.degree_ == b.degree_ && a.table_ == b.table_;
}

AlgElem bar_eval(const BarCochain& F, const BarElem& e)
{
    const auto& alg = F.algebra();
    int D = alg->dim();
    int n = e.degree;
    if (n != F.degree())
        throw DomainError("bar_eval: degree mismatch");
    AlgElem out(alg);
    for (const auto& [key, k] : e.terms) {
        auto t = decode(key, n + 2, D);
        long inner = encode(std::vector<int>(t.begin() + 1, t.end() - 1), D);
        AlgElem v = sandwich(alg, t.front(), F.at(inner), t.back());
        v *= k;
        out += v;
    }
    return out;
}

AlgElem x_eval(const XCochain& f, const XElem& e) { return bar_eval(f.gen, e); }

BarElem theta(const XElem& e)
{
    const auto& t = tables(e.alg);
    int n = e.degree, D = t.D;
    BarElem out{e.alg, n, {}};
    std::vector<int> firsts(n);
    for (const auto& [key, kappa] : e.terms) {
        auto tu = decode(key, n + 2, D);
        std::vector<int> c(tu.begin() + 1, tu.end() - 1);
        int a = tu.front(), b = tu.back();
        split_each(t, c, 0, firsts, 0, kappa, [&](const std::vector<int>& c1, int prod, const Cyc& k) {
            for (const auto& [s, ks] : t.S[prod].terms()) {
                auto r = t.mul(s, b);
                if (r.index < 0)
                    continue;
                std::vector<int> key2{a};
                key2.insert(key2.end(), c1.begin(), c1.end());
                key2.push_back(r.index);
                out.add(encode(key2, D), k * ks * r.coeff);
            }
        });
    }
    return out;
}

XElem psi_X(const BarElem& e)
{
    const auto& t = tables(e.alg);
    int n = e.degree, D = t.D;
    XElem out{e.alg, n, {}};
    std::vector<int> firsts(n);
    for (const auto& [key, kappa] : e.terms) {
        auto tu = decode(key, n + 2, D);
        std::vector<int> c(tu.begin() + 1, tu.end() - 1);
        int a = tu.front(), b = tu.back();
        split_each(t, c, 0, firsts, 0, kappa, [&](const std::vector<int>& c1, int prod, const Cyc& k) {
            auto r = t.mul(prod, b);
            if (r.index < 0)
                return;
            std::vector<int> key2{a};
            key2.insert(key2.end(), c1.begin(), c1.end());
            key2.push_back(r.index);
            out.add(encode(key2, D), k * r.coeff);
        });
    }
    return out;
}

XElem x_differential(const XElem& e)
{
    if (e.degree < 1)
        throw DomainError("x_differential: degree must be >= 1");
    const auto& t = tables(e.alg);
    int n = e.degree, D = t.D, p = t.p;
    XElem out{e.alg, n - 1, {}};
    for (const auto& [key, kappa] : e.terms) {
        auto tu = decode(key, n + 2, D);
        int a = tu.front(), b = tu.back();
        // (a (x) b) c^1 = a c^1_1 (x) S(c^1_2) b
        for (const auto& [h1, h2, k] : t.delta[tu[1]]) {
            auto l = t.mul(a, h1);
            if (l.index < 0)
                continue;
            for (const auto& [s, ks] : t.S[h2].terms()) {
                auto r = t.mul(s, b);
                if (r.index < 0)
                    continue;
                std::vector<int> key2{l.index};
                key2.insert(key2.end(), tu.begin() + 2, tu.end() - 1);
                key2.push_back(r.index);
                out.add(encode(key2, D), kappa * k * l.coeff * ks * r.coeff);
            }
        }
        for (int i = 1; i < n; ++i) {
            auto pr = t.mul(tu[i], tu[i + 1]);
            if (pr.index < 0)
                continue;
            std::vector<int> key2(tu.begin(), tu.begin() + i);
            key2.push_back(pr.index);
            key2.insert(key2.end(), tu.begin() + i + 2, tu.end());
            out.add(encode(key2, D), kappa * pr.coeff * sign(p, i));
        }
        if (!t.eps[tu[n]].is_zero()) {
            std::vector<int> key2(tu.begin(), tu.begin() + n);
            key2.push_back(b);
            out.add(encode(key2, D), kappa * t.eps[tu[n]] * sign(p, n));
        }
    }
    return out;
}

XCochain sigma(const AdjointCochain& f) { return XCochain{f}; }

AdjointCochain tau(const XCochain& f)
{
    AdjointCochain out(f.gen.algebra(), f.gen.degree());
    for (long t = 0; t < out.size(); ++t)
        out.at(t) = x_eval(f, bar_generator(out.algebra(), out.tuple(t)));
    return out;
}

BarCochain psi_star(const XCochain& f)
{
    BarCochain out(f.gen.algebra(), f.gen.degree());
    for (long t = 0; t < out.size(); ++t)
        out.at(t) = x_eval(f, psi_X(bar_generator(out.algebra(), out.tuple(t))));
    return out;
}

XCochain theta_star(const BarCochain& F)
{
    BarCochain out(F.algebra(), F.degree());
    for (long t = 0; t < out.size(); ++t)
        out.at(t) = bar_eval(F, theta(bar_generator(out.algebra(), out.tuple(t))));
    return XCochain{out};
}

XCochain x_bracket(const XCochain& f, const XCochain& g) { return theta_star(bracket_bar(psi_star(f), psi_star(g))); }

AdjointCochain circle_P(const AdjointCochain& f, const AdjointCochain& g)
{
    const auto& alg = f.algebra();
    const auto& t = tables(alg);
    int m = f.degree(), n = g.degree(), N = m + n - 1;
    if (N < 0)
        throw DomainError("circle_P: total degree must be at least 0");
    int D = t.D, p = t.p;
    AdjointCochain out(alg, N);
    if (m == 0)
        return out;
    std::vector<const Split3*> pick(N);
    for (long idx = 0; idx < out.size(); ++idx) {
        auto c = out.tuple(idx);
        AlgElem& value = out.at(idx);
        for (int i = 0; i < m; ++i) {
            Cyc sg = sign(p, (n - 1) * i);
            // one Delta^(2) term per factor: first legs feed f or g, second legs the middle, third legs S
            std::function<void(int, const Cyc&)> walk = [&](int j, const Cyc& coeff) {
                if (j < N) {
                    for (const auto& s : t.delta2[c[j]]) {
                        pick[j] = &s;
                        walk(j + 1, coeff * s.k);
                    }
                    return;
                }
                std::vector<int> gin(n);
                int block = 0, before = 0, after = 0, third = 0;
                Cyc k = coeff;
                auto step = [&](int& acc, int x) {
                    auto pr = t.mul(acc, x);
                    if (pr.index < 0)
                        return false;
                    acc = pr.index;
                    k *= pr.coeff;
                    return true;
                };
                for (int q = 0; q < n; ++q) {
                    gin[q] = pick[i + q]->a;
                    if (!step(block, pick[i + q]->b))
                        return;
                }
                for (int q = 0; q < i; ++q)
                    if (!step(before, pick[q]->b))
                        return;
                for (int q = i + n; q < N; ++q)
                    if (!step(after, pick[q]->b))
                        return;
                for (int q = 0; q < N; ++q)
                    if (!step(third, pick[q]->c))
                        return;
                const AlgElem& gv = g.at(encode(gin, D));
                if (gv.is_zero())
                    return;
                std::vector<int> fin(m);
                for (int q = 0; q < i; ++q)
                    fin[q] = pick[q]->a;
                for (int q = i + n; q < N; ++q)
                    fin[q - n + 1] = pick[q]->a;
                for (const auto& [gm, gk] : gv.terms()) {
                    auto cs = t.mul(gm, block);
                    if (cs.index < 0)
                        continue;
                    for (const auto& [s1, s2, k2] : t.delta[cs.index]) {
                        fin[i] = s1;
                        const AlgElem& fv = f.at(encode(fin, D));
                        if (fv.is_zero())
                            continue;
                        auto mid = t.mul(before, s2);
                        if (mid.index < 0)
                            continue;
                        auto mid2 = t.mul(mid.index, after);
                        if (mid2.index < 0)
                            continue;
                        Cyc scal = sg * k * gk * cs.coeff * k2 * mid.coeff * mid2.coeff;
                        for (const auto& [s, ks] : t.S[third].terms()) {
                            auto tail = t.mul(mid2.index, s);
                            if (tail.index < 0)
                                continue;
                            for (const auto& [fm, fk] : fv.terms()) {
                                auto r = t.mul(fm, tail.index);
                                if (r.index >= 0)
                                    value.add_term(r.index, scal * ks * tail.coeff * fk * r.coeff);
                            }
                        }
                    }
                }
            };
            walk(0, Cyc(p, 1));
        }
    }
    return out;
}

AdjointCochain circle_P_composite(const AdjointCochain& f, const AdjointCochain& g)
{
    return tau(theta_star(circle_bar(psi_star(sigma(f)), psi_star(sigma(g)))));
}

AdjointCochain bracket_P(const AdjointCochain& f, const AdjointCochain& g)
{
    int e = (f.degree() - 1) * (g.degree() - 1);
    return circle_P(f, g) - sign(f.algebra()->p(), e) * circle_P(g, f);
}

AdjointCochain eta_star(const TrivialCochain& f)
{
    AdjointCochain out(f.algebra(), f.degree());
    for (long t = 0; t < f.size(); ++t)
        out.at(t) = AlgElem::scalar(f.algebra(), f.at(t));
    return out;
}

TrivialCochain epsilon_star(const AdjointCochain& f)
{
    TrivialCochain out(f.algebra(), f.degree());
    for (long t = 0; t < f.size(); ++t)
        out.at(t) = counit(f.at(t));
    return out;
}

TrivialCochain trivial_differential(const TrivialCochain& f)
{
    const auto& hom = ModuleHom::get(f.algebra(), false);
    TrivialCochain out(f.algebra(), f.degree() + 1);
    for (const auto& [cell, c] : hom.apply(f.degree(), to_vec(f)))
        out.at(cell) = c;
    return out;
}

AdjointCochain adjoint_differential(const AdjointCochain& f)
{
    const auto& hom = ModuleHom::get(f.algebra(), true);
    int D = f.algebra()->dim();
    AdjointCochain out(f.algebra(), f.degree() + 1);
    for (const auto& [cell, c] : hom.apply(f.degree(), to_vec(f)))
        out.at(cell / D).add_term(cell % D, c);
    return out;
}

bool is_trivial_coboundary(const TrivialCochain& f)
{
    return ModuleHom::get(f.algebra(), false).is_coboundary(f.degree(), to_vec(f));
}

bool is_adjoint_coboundary(const AdjointCochain& f)
{
    return ModuleHom::get(f.algebra(), true).is_coboundary(f.degree(), to_vec(f));
}

TrivialCochain hopf_bracket(const TrivialCochain& f, const TrivialCochain& g)
{
    if (!trivial_differential(f).is_zero() || !trivial_differential(g).is_zero())
        throw DomainError("hopf_bracket: inputs must be cocycles");
    return epsilon_star(bracket_P(eta_star(f), eta_star(g)));
}

std::vector<int> hopf_cohomology_dims(int p, int max_degree)
{
    const auto& hom = ModuleHom::get(Algebra::taft(p), false);
    std::vector<int> dims;
    for (int n = 0; n <= max_degree; ++n)
        dims.push_back(hom.dimension(n));
    return dims;
}

std::vector<TrivialCochain> hopf_cohomology_basis(int p, int degree)
{
    auto alg = Algebra::taft(p);
    std::vector<TrivialCochain> out;
    for (const auto& v : ModuleHom::get(alg, false).cohomology_reps(degree)) {
        TrivialCochain f(alg, degree);
        for (const auto& [cell, c] : v)
            f.at(cell) = c;
        out.push_back(std::move(f));
    }
    return out;
}

CohomClass hopf_to_hochschild(const ComparisonMaps& cm, const TrivialCochain& f)
{
    if (!cm.complex()->taft() || cm.complex()->p() != f.algebra()->p())
        throw DomainError("hopf_to_hochschild: comparison maps for the matching Taft complex required");
    BarCochain F = psi_star(sigma(eta_star(f)));
    return reduce_mod_coboundaries(push_to_small(cm, F));
}

}  // namespace gerst

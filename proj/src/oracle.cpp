#include "gerst/oracle.hpp"

#include "gerst/homotopy.hpp"
#include "gerst/linalg.hpp"

#include <tuple>

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

void add_to(AlgElem& out, const AlgElem& v, const Cyc& c)
{
    if (c.is_zero())
        return;
    for (const auto& [i, k] : v.terms())
        out.add_term(i, c * k);
}

AlgElem mono_times(const Algebra& alg, const Algebra::Ptr& ptr, int a, const AlgElem& v, int b)
{
    AlgElem out(ptr);
    for (const auto& [i, k] : v.terms()) {
        auto l = alg.mul_basis(a, i);
        if (l.index < 0)
            continue;
        auto r = alg.mul_basis(l.index, b);
        if (r.index < 0)
            continue;
        out.add_term(r.index, k * l.coeff * r.coeff);
    }
    return out;
}

}  // namespace

BarCochain::BarCochain(Algebra::Ptr alg, int degree) : alg_(std::move(alg)), degree_(degree)
{
    if (degree < 0)
        throw DomainError("bar cochain degree must be non-negative");
    table_.assign(static_cast<size_t>(ipow(alg_->dim(), degree)), AlgElem(alg_));
}

std::vector<int> BarCochain::tuple(long index) const
{
    std::vector<int> t(degree_);
    int D = alg_->dim();
    for (int k = degree_ - 1; k >= 0; --k) {
        t[k] = static_cast<int>(index % D);
        index /= D;
    }
    return t;
}

long BarCochain::index(const std::vector<int>& t) const
{
    long r = 0;
    for (int v : t)
        r = r * alg_->dim() + v;
    return r;
}

AlgElem BarCochain::eval(const std::vector<AlgElem>& args) const
{
    if (static_cast<int>(args.size()) != degree_)
        throw DomainError("bar cochain evaluated on the wrong number of arguments");
    AlgElem out(alg_);
    std::vector<std::pair<int, Cyc>> cur;
    // expand multilinearly, one slot at a time
    std::vector<std::pair<long, Cyc>> partial{{0, Cyc(alg_->p(), 1)}};
    for (const auto& a : args) {
        std::vector<std::pair<long, Cyc>> next;
        for (const auto& [idx, c] : partial)
            for (const auto& [b, k] : a.terms())
                next.emplace_back(idx * alg_->dim() + b, c * k);
        partial = std::move(next);
    }
    for (const auto& [idx, c] : partial)
        add_to(out, table_[idx], c);
    return out;
}

bool BarCochain::is_zero() const
{
    for (const auto& v : table_)
        if (!v.is_zero())
            return false;
    return true;
}

BarCochain& BarCochain::operator+=(const BarCochain& o)
{
    if (o.degree_ != degree_ || !o.alg_->same_as(*alg_))
        throw DomainError("bar cochains from different Hom spaces");
    for (size_t i = 0; i < table_.size(); ++i)
        table_[i] += o.table_[i];
    return *this;
}

BarCochain& BarCochain::operator-=(const BarCochain& o)
{
    if (o.degree_ != degree_ || !o.alg_->same_as(*alg_))
        throw DomainError("bar cochains from different Hom spaces");
    for (size_t i = 0; i < table_.size(); ++i)
        table_[i] -= o.table_[i];
    return *this;
}

BarCochain operator*(const Cyc& c, BarCochain f)
{
    for (auto& v : f.table_)
        v *= c;
    return f;
}

bool operator==(const BarCochain& a, const BarCochain& b)
{
    return a.degree_ == b.degree_ && a.table_ == b.table_;
}

BarCochain hochschild_differential(const BarCochain& f)
{
    const auto& alg = *f.algebra();
    int n = f.degree();
    int p = alg.p();
    BarCochain out(f.algebra(), n + 1);
    for (long idx = 0; idx < out.size(); ++idx) {
        auto t = out.tuple(idx);
        AlgElem& v = out.at(idx);
        std::vector<int> rest(t.begin() + 1, t.end());
        v += mono_times(alg, f.algebra(), t[0], f.at(f.index(rest)), 0);
        for (int i = 0; i < n; ++i) {
            auto pr = alg.mul_basis(t[i], t[i + 1]);
            if (pr.index < 0)
                continue;
            std::vector<int> m(t.begin(), t.begin() + i);
            m.push_back(pr.index);
            m.insert(m.end(), t.begin() + i + 2, t.end());
            add_to(v, f.at(f.index(m)), pr.coeff * sign(p, i + 1));
        }
        std::vector<int> head(t.begin(), t.end() - 1);
        add_to(v, mono_times(alg, f.algebra(), 0, f.at(f.index(head)), t[n]), sign(p, n + 1));
    }
    return out;
}

BarCochain circle_bar(const BarCochain& f, const BarCochain& g)
{
    int m = f.degree(), n = g.degree();
    int N = m + n - 1;
    if (N < 0)
        throw DomainError("circle_bar: total degree must be at least 0");
    int p = f.algebra()->p();
    BarCochain out(f.algebra(), N);
    if (m == 0)
        return out;
    for (long idx = 0; idx < out.size(); ++idx) {
        auto t = out.tuple(idx);
        AlgElem& v = out.at(idx);
        for (int i = 0; i < m; ++i) {
            std::vector<int> inner(t.begin() + i, t.begin() + i + n);
            const AlgElem& gv = g.at(g.index(inner));
            if (gv.is_zero())
                continue;
            Cyc s = sign(p, (n - 1) * i);
            std::vector<int> outer(t.begin(), t.begin() + i);
            outer.push_back(0);
            outer.insert(outer.end(), t.begin() + i + n, t.end());
            for (const auto& [b, k] : gv.terms()) {
                outer[i] = b;
                add_to(v, f.at(f.index(outer)), s * k);
            }
        }
    }
    return out;
}

BarCochain bracket_bar(const BarCochain& f, const BarCochain& g)
{
    int e = (f.degree() - 1) * (g.degree() - 1);
    return circle_bar(f, g) - sign(f.algebra()->p(), e) * circle_bar(g, f);
}

BarCochain cup_bar(const BarCochain& f, const BarCochain& g)
{
    const auto& alg = *f.algebra();
    int m = f.degree(), n = g.degree();
    BarCochain out(f.algebra(), m + n);
    long gs = g.size();
    Cyc s = sign(alg.p(), m * n);
    for (long idx = 0; idx < out.size(); ++idx) {
        const AlgElem& a = f.at(idx / gs);
        const AlgElem& b = g.at(idx % gs);
        if (a.is_zero() || b.is_zero())
            continue;
        out.at(idx) = alg_mul(a, b) * s;
    }
    return out;
}

namespace {

/* Sparse coboundary columns of the bar Hom complex, grouped by the gradings
 * (sum of input x-degrees - output x-degree, same for g mod p) which the
 * Hochschild differential preserves. */
class BarHomComplex {
public:
    explicit BarHomComplex(Algebra::Ptr alg) : alg_(std::move(alg)), D_(alg_->dim())
    {
        preimages_.resize(D_);
        for (int u = 0; u < D_; ++u)
            for (int v = 0; v < D_; ++v) {
                auto pr = alg_->mul_basis(u, v);
                if (pr.index >= 0)
                    preimages_[pr.index].push_back({u, v, pr.coeff});
            }
    }

    std::pair<int, int> weight(int mono) const
    {
        auto e = alg_->exponents(mono);
        return {e[0], alg_->kind() == AlgebraKind::Taft ? e[1] : 0};
    }

    std::pair<int, int> grading(int degree, long cell) const
    {
        long tup = cell / D_;
        int out = static_cast<int>(cell % D_);
        int xs = 0, gs = 0;
        for (int k = 0; k < degree; ++k) {
            auto [x, g] = weight(static_cast<int>(tup % D_));
            xs += x;
            gs += g;
            tup /= D_;
        }
        auto [xo, go] = weight(out);
        int p = alg_->p();
        return {xs - xo, (((gs - go) % p) + p) % p};
    }

    long cells(int degree) const { return ipow(D_, degree) * D_; }

    /// d of the basis cochain sending tuple t to out (cell = t*D + out), as a sparse vector in degree+1.
    SparseVec column(int degree, long cell) const
    {
        int n = degree;
        int p = alg_->p();
        long tup = cell / D_;
        int b = static_cast<int>(cell % D_);
        std::vector<int> t(n);
        for (int k = n - 1; k >= 0; --k) {
            t[k] = static_cast<int>(tup % D_);
            tup /= D_;
        }
        std::map<int, Cyc> acc;
        auto put = [&](const std::vector<int>& args, int outm, const Cyc& c) {
            long key = 0;
            for (int a : args)
                key = key * D_ + a;
            key = key * D_ + outm;
            auto [it, ins] = acc.try_emplace(static_cast<int>(key), c);
            if (!ins) {
                it->second += c;
                if (it->second.is_zero())
                    acc.erase(it);
            }
        };
        std::vector<int> args(n + 1);
        for (int a = 0; a < D_; ++a) {
            auto pr = alg_->mul_basis(a, b);
            if (pr.index < 0)
                continue;
            args[0] = a;
            std::copy(t.begin(), t.end(), args.begin() + 1);
            put(args, pr.index, pr.coeff);
        }
        for (int i = 0; i < n; ++i)
            for (const auto& [u, v, c] : preimages_[t[i]]) {
                std::copy(t.begin(), t.begin() + i, args.begin());
                args[i] = u;
                args[i + 1] = v;
                std::copy(t.begin() + i + 1, t.end(), args.begin() + i + 2);
                put(args, b, c * sign(p, i + 1));
            }
        for (int a = 0; a < D_; ++a) {
            auto pr = alg_->mul_basis(b, a);
            if (pr.index < 0)
                continue;
            std::copy(t.begin(), t.end(), args.begin());
            args[n] = a;
            put(args, pr.index, pr.coeff * sign(p, n + 1));
        }
        return sparse_from_map(acc);
    }

    /// Coboundary spans of degree-1 cochains into the given degree, per grading block.
    std::map<std::pair<int, int>, EchelonBasis> image_blocks(int degree) const
    {
        std::map<std::pair<int, int>, EchelonBasis> blocks;
        if (degree == 0)
            return blocks;
        for (long cell = 0; cell < cells(degree - 1); ++cell)
            blocks[grading(degree - 1, cell)].insert(column(degree - 1, cell));
        return blocks;
    }

    int rank(int degree) const
    {
        int r = 0;
        for (auto& [g, eb] : image_blocks(degree + 1))
            r += eb.rank();
        return r;
    }

    const Algebra::Ptr& alg() const { return alg_; }
    int D() const { return D_; }

private:
    struct Pre {
        int u, v;
        Cyc c;
    };
    Algebra::Ptr alg_;
    int D_;
    std::vector<std::vector<Pre>> preimages_;
};

SparseVec cochain_vector(const BarCochain& f)
{
    SparseVec v;
    int D = f.algebra()->dim();
    for (long t = 0; t < f.size(); ++t)
        for (const auto& [b, c] : f.at(t).terms())
            v.emplace_back(static_cast<int>(t * D + b), c);
    return v;
}

}  // namespace

bool class_equal(const BarCochain& f, const BarCochain& g)
{
    if (!hochschild_differential(f).is_zero() || !hochschild_differential(g).is_zero())
        throw DomainError("class_equal: inputs must be cocycles");
    BarCochain diff = f - g;
    if (diff.degree() == 0)
        return diff.is_zero();
    BarHomComplex hc(f.algebra());
    std::map<std::pair<int, int>, SparseVec> parts;
    for (const auto& [cell, c] : cochain_vector(diff))
        parts[hc.grading(diff.degree(), cell)].emplace_back(cell, c);
    if (parts.empty())
        return true;
    auto blocks = hc.image_blocks(diff.degree());
    for (const auto& [gr, v] : parts) {
        auto it = blocks.find(gr);
        if (it == blocks.end() || !it->second.contains(v))
            return false;
    }
    return true;
}

int bar_hh_dimension(const Algebra::Ptr& alg, int degree)
{
    BarHomComplex hc(alg);
    long cells = hc.cells(degree);
    int rk_out = hc.rank(degree);
    int rk_in = degree > 0 ? hc.rank(degree - 1) : 0;
    return static_cast<int>(cells) - rk_out - rk_in;
}

void BarElem::add(long key, const Cyc& c)
{
    if (c.is_zero())
        return;
    auto [it, ins] = terms.try_emplace(key, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

std::vector<int> bar_tuple(const Algebra& alg, int degree, long key)
{
    int D = alg.dim();
    std::vector<int> t(degree + 2);
    for (int k = degree + 1; k >= 0; --k) {
        t[k] = static_cast<int>(key % D);
        key /= D;
    }
    return t;
}

long bar_key(const Algebra& alg, const std::vector<int>& t)
{
    long r = 0;
    for (int v : t)
        r = r * alg.dim() + v;
    return r;
}

BarElem bar_generator(const Algebra::Ptr& alg, const std::vector<int>& interior)
{
    std::vector<int> t{0};
    t.insert(t.end(), interior.begin(), interior.end());
    t.push_back(0);
    BarElem e{alg, static_cast<int>(interior.size()), {}};
    e.add(bar_key(*alg, t), Cyc(alg->p(), 1));
    return e;
}

BarElem bar_differential(const BarElem& e)
{
    if (e.degree < 1)
        throw DomainError("bar_differential: degree must be >= 1");
    const auto& alg = *e.alg;
    int p = alg.p();
    BarElem out{e.alg, e.degree - 1, {}};
    for (const auto& [key, c] : e.terms) {
        auto t = bar_tuple(alg, e.degree, key);
        for (int i = 0; i <= e.degree; ++i) {
            auto pr = alg.mul_basis(t[i], t[i + 1]);
            if (pr.index < 0)
                continue;
            std::vector<int> m(t.begin(), t.begin() + i);
            m.push_back(pr.index);
            m.insert(m.end(), t.begin() + i + 2, t.end());
            out.add(bar_key(alg, m), c * pr.coeff * sign(p, i));
        }
    }
    return out;
}

BarElem bar_left_mul(int mono, const BarElem& e)
{
    const auto& alg = *e.alg;
    BarElem out{e.alg, e.degree, {}};
    long tail = ipow(alg.dim(), e.degree + 1);
    for (const auto& [key, c] : e.terms) {
        auto pr = alg.mul_basis(mono, static_cast<int>(key / tail));
        if (pr.index >= 0)
            out.add(pr.index * tail + key % tail, c * pr.coeff);
    }
    return out;
}

BarElem bar_right_mul(const BarElem& e, int mono)
{
    const auto& alg = *e.alg;
    int D = alg.dim();
    BarElem out{e.alg, e.degree, {}};
    for (const auto& [key, c] : e.terms) {
        auto pr = alg.mul_basis(static_cast<int>(key % D), mono);
        if (pr.index >= 0)
            out.add(key - key % D + pr.index, c * pr.coeff);
    }
    return out;
}

ComparisonMaps::ComparisonMaps(SmallComplex::Ptr cx, int max_degree) : cx_(std::move(cx)), max_degree_(max_degree)
{
    const auto& alg = cx_->coef();
    int D = alg->dim();
    int p = cx_->p();
    pi_.resize(max_degree + 1);
    pi_[0].push_back(ResElem::generator(cx_, 0));
    for (int n = 1; n <= max_degree; ++n) {
        long count = ipow(D, n);
        pi_[n].reserve(count);
        for (long t = 0; t < count; ++t) {
            std::vector<int> interior(n);
            long r = t;
            for (int k = n - 1; k >= 0; --k) {
                interior[k] = static_cast<int>(r % D);
                r /= D;
            }
            pi_[n].push_back(h_apply(pi(bar_differential(bar_generator(alg, interior)))));
        }
    }
    // Taft side: average over conjugation by g so that g iota(xi_n) = w^{n mod 2} iota(xi_n) g
    auto equivariant = [&](const BarElem& y, int n) {
        if (!cx_->taft())
            return y;
        BarElem avg{alg, n, {}};
        Cyc inv_p = Cyc(p, Rational(1, p));
        for (int k = 0; k < p; ++k) {
            BarElem conj = bar_right_mul(bar_left_mul(taft_index(p, 0, k), y), taft_index(p, 0, (p - k) % p));
            for (const auto& [key, c] : conj.terms)
                avg.add(key, c * inv_p * Cyc::omega_power(p, -static_cast<long>(k) * (n % 2)));
        }
        return avg;
    };
    iota_.push_back(equivariant(bar_generator(alg, {}), 0));
    for (int n = 1; n <= max_degree; ++n) {
        BarElem lower = iota(boundary_of_generator(cx_, n));
        BarElem y{alg, n, lower.terms};  // s prepends 1, which leaves the key unchanged
        iota_.push_back(equivariant(y, n));
    }
}

const ResElem& ComparisonMaps::pi_generator(int degree, long interior) const
{
    if (degree > max_degree_)
        throw DomainError("comparison map beyond the built degree");
    return pi_[degree].at(interior);
}

ResElem ComparisonMaps::pi(const BarElem& e) const
{
    const auto& alg = *cx_->coef();
    int D = alg.dim();
    ResElem out(cx_, 1, e.degree);
    long tail = ipow(D, e.degree + 1);
    for (const auto& [key, c] : e.terms) {
        int a0 = static_cast<int>(key / tail);
        int last = static_cast<int>(key % D);
        long interior = (key % tail) / D;
        out.add(right_mul_basis(left_mul_basis(a0, pi_generator(e.degree, interior)), last), c);
    }
    return out;
}

BarElem ComparisonMaps::iota(const ResElem& e) const
{
    if (e.factors() != 1)
        throw DomainError("iota: element of the small complex required");
    BarElem out{cx_->coef(), e.degree(), {}};
    const BarElem& gen = iota_.at(e.degree());
    for (const auto& [w, c] : e.terms()) {
        BarElem t = bar_right_mul(bar_left_mul(cx_->coef_index(w.xs[0], 0), gen), w.right);
        for (const auto& [key, k] : t.terms)
            out.add(key, c * k);
    }
    return out;
}

ComparisonMaps build_comparison(const SmallComplex::Ptr& cx, int max_degree)
{
    ComparisonMaps cm(cx, max_degree);
    // chain-map laws, degree by degree
    const auto& alg = cx->coef();
    int D = alg->dim();
    for (int n = 1; n <= max_degree; ++n) {
        ResElem gen = ResElem::generator(cx, n);
        BarElem lhs = bar_differential(cm.iota_generator(n));
        BarElem rhs = cm.iota(boundary_of_generator(cx, n));
        if (lhs.terms != rhs.terms)
            throw std::logic_error("iota fails the chain-map law in degree " + std::to_string(n));
        for (long t = 0; t < ipow(D, n); ++t) {
            std::vector<int> interior(n);
            long r = t;
            for (int k = n - 1; k >= 0; --k) {
                interior[k] = static_cast<int>(r % D);
                r /= D;
            }
            BarElem b = bar_generator(alg, interior);
            if (!(differential(cm.pi(b)) == cm.pi(bar_differential(b))))
                throw std::logic_error("pi fails the chain-map law in degree " + std::to_string(n));
        }
    }
    return cm;
}

BarCochain pull_to_bar(const ComparisonMaps& cm, const SmallCochain& f)
{
    if (f.degree() > cm.max_degree())
        throw DomainError("pull_to_bar: degree beyond the comparison maps");
    BarCochain out(cm.complex()->coef(), f.degree());
    for (long t = 0; t < out.size(); ++t)
        out.at(t) = f.eval(cm.pi_generator(f.degree(), t));
    return out;
}

SmallCochain push_to_small(const ComparisonMaps& cm, const BarCochain& F)
{
    int n = F.degree();
    const auto& alg = *cm.complex()->coef();
    int D = alg.dim();
    long tail = ipow(D, n + 1);
    AlgElem v(cm.complex()->coef());
    for (const auto& [key, c] : cm.iota_generator(n).terms) {
        int a0 = static_cast<int>(key / tail);
        int last = static_cast<int>(key % D);
        long interior = (key % tail) / D;
        add_to(v, mono_times(alg, cm.complex()->coef(), a0, F.at(interior), last), c);
    }
    return SmallCochain(cm.complex(), n, v);
}

OracleComparison oracle_compare(const ComparisonMaps& cm, const SmallCochain& f, const SmallCochain& g)
{
    OracleComparison r;
    r.engine = reduce_mod_coboundaries(bracket_phi(f, g));
    BarCochain F = pull_to_bar(cm, f), G = pull_to_bar(cm, g);
    r.oracle = reduce_mod_coboundaries(push_to_small(cm, bracket_bar(F, G)));
    r.agree = r.engine == r.oracle;
    return r;
}

PiIotaLevel pi_iota_level(const ComparisonMaps& cm)
{
    const auto& cx = cm.complex();
    bool nose = true;
    for (int n = 0; n <= cm.max_degree(); ++n)
        if (!(cm.pi(cm.iota_generator(n)) == ResElem::generator(cx, n)))
            nose = false;
    if (nose)
        return PiIotaLevel::OnTheNose;
    // (pi iota)^* on each cohomology basis class
    for (int n = 0; n <= cm.max_degree(); ++n)
        for (const auto& rep : cohomology_basis(cx, n)) {
            SmallCochain f(cx, n, rep);
            SmallCochain back = push_to_small(cm, pull_to_bar(cm, f));
            if (!(reduce_mod_coboundaries(back) == reduce_mod_coboundaries(f)))
                return PiIotaLevel::Fails;
        }
    return PiIotaLevel::OnCohomology;
}

}  // namespace gerst

#include "gerst/verify.hpp"

#include "gerst/diagonal.hpp"
#include "gerst/homotopy.hpp"
#include "gerst/oracle.hpp"

#include <random>
#include <sstream>

namespace gerst {

void Check::record(bool ok, const std::string& what)
{
    ++cases;
    if (!ok && passed) {
        passed = false;
        failure = what;
    }
}

namespace {

Cyc sign(int p, int e) { return Cyc(p, (e % 2) ? -1 : 1); }

std::string where(const SmallComplex::Ptr& cx, int n, const std::string& extra = "")
{
    std::ostringstream os;
    os << cx->name() << " p=" << cx->p() << " n=" << n;
    if (!extra.empty())
        os << " " << extra;
    return os.str();
}

std::vector<ResElem> singles(const SmallComplex::Ptr& cx, int n)
{
    std::vector<ResElem> r;
    for (int i = 0; i < cx->p(); ++i)
        for (int t = 0; t < cx->coef()->dim(); ++t)
            r.push_back(ResElem::generator(cx, n, i, t));
    return r;
}

/// Tensor-square words of total degree n; every outer coefficient when full, else only interior ones.
std::vector<ResElem> pairs(const SmallComplex::Ptr& cx, int n, bool full)
{
    std::vector<ResElem> r;
    int p = cx->p();
    for (int a = 0; a <= n; ++a)
        for (int m = 0; m < p; ++m) {
            if (!full) {
                r.push_back(ResElem::pair(cx, a, m, n - a));
                continue;
            }
            for (int i = 0; i < p; ++i)
                for (int t = 0; t < cx->coef()->dim(); ++t)
                    r.push_back(ResElem::pair(cx, a, m, n - a, i, t));
        }
    return r;
}

TaftTensorElem random_taft_tensor(std::mt19937& rng, int p, int deg)
{
    std::uniform_int_distribution<int> e(0, p - 1), a(0, deg), c(-2, 2);
    TaftTensorElem out;
    for (int k = 0; k < 3; ++k) {
        TaftTensorTerm t;
        t.a = a(rng);
        t.b = deg - t.a;
        t.i1 = e(rng), t.j1 = e(rng), t.k1 = e(rng), t.i2 = e(rng), t.j2 = e(rng), t.k2 = e(rng);
        Cyc v(p, c(rng));
        if (!v.is_zero())
            out[t] += v;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

SmallCochain random_small(std::mt19937& rng, const SmallComplex::Ptr& cx, int degree)
{
    std::uniform_int_distribution<int> c(-3, 3);
    AlgElem v(cx->coef());
    for (int idx : hom_basis(*cx, degree))
        v.add_term(idx, Cyc(cx->p(), c(rng)));
    return SmallCochain(cx, degree, v);
}

BarCochain random_bar(std::mt19937& rng, const Algebra::Ptr& alg, int degree)
{
    std::uniform_int_distribution<int> c(-2, 2), pick(0, 3), mono(0, alg->dim() - 1);
    BarCochain f(alg, degree);
    for (long t = 0; t < f.size(); ++t)
        if (pick(rng) == 0)
            f.at(t).add_term(mono(rng), Cyc(alg->p(), c(rng)));
    return f;
}

SmallCochain random_cocycle(std::mt19937& rng, const SmallComplex::Ptr& cx, int degree)
{
    std::uniform_int_distribution<int> c(-2, 2);
    AlgElem v(cx->coef());
    for (const auto& rep : cohomology_basis(cx, degree))
        v += rep * Cyc(cx->p(), c(rng));
    return SmallCochain(cx, degree, v);
}

}  // namespace

Check check_d_squared(const SmallComplex::Ptr& cx, int max_degree)
{
    Check c{"d o d = 0 on " + cx->name() + " p=" + std::to_string(cx->p())};
    for (int n = 2; n <= max_degree; ++n) {
        for (const auto& e : singles(cx, n))
            c.record(differential(differential(e)).is_zero(), where(cx, n, e.str()));
        for (const auto& e : pairs(cx, n, cx->p() == 3))
            c.record(differential(differential(e)).is_zero(), where(cx, n, e.str()));
    }
    return c;
}

Check check_contracting_homotopy(const SmallComplex::Ptr& cx, int max_degree)
{
    Check c{"hd + dh = id on " + cx->name() + " p=" + std::to_string(cx->p())};
    for (int t = 0; t < cx->coef()->dim(); ++t) {
        AlgElem a = AlgElem::basis(cx->coef(), t);
        c.record(augment(h_minus1(cx, a)) == a, where(cx, -1));
    }
    for (const auto& e : singles(cx, 0))
        c.record(h_minus1(cx, augment(e)) + differential(h_apply(e)) == e, where(cx, 0, e.str()));
    for (int n = 1; n <= max_degree; ++n)
        for (const auto& e : singles(cx, n))
            c.record(h_apply(differential(e)) + differential(h_apply(e)) == e, where(cx, n, e.str()));
    return c;
}

Check check_phi_identity(const SmallComplex::Ptr& cx, int max_degree)
{
    Check c{"d phi + phi d = F on " + cx->name() + " p=" + std::to_string(cx->p())};
    auto phi = phi_table(cx, max_degree);
    for (int n = 0; n <= max_degree; ++n)
        for (const auto& e : pairs(cx, n, cx->p() == 3)) {
            ResElem lhs = differential(phi->apply(e));
            if (n >= 1)
                lhs += phi->apply(differential(e));
            c.record(lhs == F_map(e), where(cx, n, e.str()));
        }
    return c;
}

Check check_diagonal_chain_map(const SmallComplex::Ptr& cx, int max_degree)
{
    Check c{"d D = D d on " + cx->name() + " p=" + std::to_string(cx->p())};
    for (int n = 1; n <= max_degree; ++n)
        c.record(differential(diag(cx, n)) == diag_apply(differential(ResElem::generator(cx, n))), where(cx, n));
    return c;
}

Check check_transport(int p, int max_degree, unsigned seed)
{
    auto cx = SmallComplex::get(SmallKind::SmallTaft, p);
    Check c{"F transported through psi on T_p p=" + std::to_string(p)};
    std::mt19937 rng(seed + static_cast<unsigned>(p));
    int trials = p == 3 ? 60 : 25;
    for (int deg = 0; deg <= max_degree; ++deg)
        for (int t = 0; t < trials; ++t) {
            auto e = random_taft_tensor(rng, p, deg);
            if (e.empty())
                continue;
            c.record(taft_side_F(cx, e) == F_map(psi_apply(cx, e)), where(cx, deg, "F"));
            if (deg >= 1)
                c.record(psi_apply(cx, taft_side_differential(p, e)) == differential(psi_apply(cx, e)), where(cx, deg, "d"));
        }
    return c;
}

Check check_hopf_axioms(int p)
{
    Check c{"Hopf axioms of T_p p=" + std::to_string(p)};
    auto T = Algebra::taft(p);
    int d = T->dim();
    for (int idx = 0; idx < d; ++idx) {
        AlgElem a = AlgElem::basis(T, idx);
        AlgElem da = comultiply(a);
        AlgElem left(T), right(T), s1(T), s2(T);
        std::map<long, Cyc> lhs, rhs;
        for (const auto& [t, k] : da.terms()) {
            AlgElem a1 = AlgElem::basis(T, t / d), a2 = AlgElem::basis(T, t % d);
            left += a2 * (k * counit(a1));
            right += a1 * (k * counit(a2));
            s1 += alg_mul(antipode(a1), a2) * k;
            s2 += alg_mul(a1, antipode(a2)) * k;
            AlgElem d1 = comultiply(a1), d2 = comultiply(a2);
            for (const auto& [u, e] : d1.terms())
                lhs[static_cast<long>(u) * d + t % d] += k * e;
            for (const auto& [u, e] : d2.terms())
                rhs[static_cast<long>(t / d) * d * d + u] += k * e;
        }
        for (auto* m : {&lhs, &rhs})
            std::erase_if(*m, [](const auto& kv) { return kv.second.is_zero(); });
        std::string at = "monomial " + T->monomial_str(idx);
        c.record(left == a && right == a, "counit, " + at);
        c.record(lhs == rhs, "coassociativity, " + at);
        AlgElem unit = AlgElem::scalar(T, counit(a));
        c.record(s1 == unit && s2 == unit, "antipode, " + at);
    }
    return c;
}

Check check_phi_antisymmetry(const SmallComplex::Ptr& cx, unsigned seed, int trials)
{
    Check c{"graded antisymmetry of the phi bracket on " + cx->name() + " p=" + std::to_string(cx->p())};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> deg(0, 3);
    for (int t = 0; t < trials; ++t) {
        int m = deg(rng), n = deg(rng);
        if (m + n == 0)
            continue;
        auto f = random_small(rng, cx, m), g = random_small(rng, cx, n);
        auto rhs = sign(cx->p(), (m - 1) * (n - 1) + 1) * bracket_phi(g, f);
        c.record(bracket_phi(f, g) == rhs, where(cx, m + n - 1, f.str() + " " + g.str()));
    }
    return c;
}

Check check_bar_antisymmetry(const SmallComplex::Ptr& cx, unsigned seed, int trials)
{
    Check c{"graded antisymmetry of the bar bracket on " + cx->name() + " p=" + std::to_string(cx->p())};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> deg(0, 2);
    for (int t = 0; t < trials; ++t) {
        int m = deg(rng), n = deg(rng);
        if (m + n == 0)
            continue;
        auto f = random_bar(rng, cx->coef(), m), g = random_bar(rng, cx->coef(), n);
        auto rhs = sign(cx->p(), (m - 1) * (n - 1) + 1) * bracket_bar(g, f);
        c.record(bracket_bar(f, g) == rhs, where(cx, m + n - 1));
    }
    return c;
}

Check check_bar_jacobi(const SmallComplex::Ptr& cx, unsigned seed, int trials)
{
    Check c{"graded Jacobi for the bar bracket on " + cx->name() + " p=" + std::to_string(cx->p())};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> deg(1, 2);
    int p = cx->p();
    for (int t = 0; t < trials; ++t) {
        int a = deg(rng), b = deg(rng), d = deg(rng);
        auto f = random_bar(rng, cx->coef(), a), g = random_bar(rng, cx->coef(), b), h = random_bar(rng, cx->coef(), d);
        auto total = sign(p, (a - 1) * (d - 1)) * bracket_bar(f, bracket_bar(g, h)) +
                     sign(p, (b - 1) * (a - 1)) * bracket_bar(g, bracket_bar(h, f)) +
                     sign(p, (d - 1) * (b - 1)) * bracket_bar(h, bracket_bar(f, g));
        c.record(total.is_zero(), where(cx, a + b + d - 2, "degrees " + std::to_string(a) + std::to_string(b) + std::to_string(d)));
    }
    return c;
}

Check check_derivation_identity(const SmallComplex::Ptr& cx, unsigned seed, int trials)
{
    Check c{"bracket is a derivation of cup on classes, " + cx->name() + " p=" + std::to_string(cx->p())};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> deg(0, 2), hdeg(1, 2);
    for (int t = 0; t < trials; ++t) {
        int a = deg(rng), b = deg(rng), d = hdeg(rng);
        auto f = random_cocycle(rng, cx, a), g = random_cocycle(rng, cx, b), h = random_cocycle(rng, cx, d);
        c.record(derivation_identity_check(f, g, h), where(cx, a + b + d - 1, f.str() + " " + g.str() + " " + h.str()));
    }
    return c;
}

namespace {

TableEntry make_entry(const std::string& family, int i, int j, SmallCochain f, SmallCochain g, SmallCochain expected)
{
    TableEntry e;
    e.family = family;
    e.i = i;
    e.j = j;
    e.value = bracket_phi(f, g);
    e.cocycle_inputs = is_cocycle(f) && is_cocycle(g);
    e.cls = reduce_mod_coboundaries(e.value);
    e.expected_cls = reduce_mod_coboundaries(expected);
    e.matches = e.cls == e.expected_cls;
    e.f = std::move(f);
    e.g = std::move(g);
    e.expected = std::move(expected);
    return e;
}

}  // namespace

std::vector<TableEntry> small_a_table(int p)
{
    auto cx = SmallComplex::get(SmallKind::SmallA, p);
    auto mono = [&](int deg, int e, const Cyc& c) {
        AlgElem v(cx->coef());
        if (e >= 0 && e < p)
            v.add_term(e, c);
        return SmallCochain(cx, deg, v);
    };
    std::vector<TableEntry> out;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            out.push_back(make_entry("1,1", i, j, SmallCochain::monomial(cx, 1, i), SmallCochain::monomial(cx, 1, j),
                                     mono(1, i + j - 1, Cyc(p, j - i))));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            out.push_back(make_entry("1,2", i, j, SmallCochain::monomial(cx, 1, i), SmallCochain::monomial(cx, 2, j),
                                     mono(2, i + j - 1, Cyc(p, j - p))));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            out.push_back(make_entry("2,2", i, j, SmallCochain::monomial(cx, 2, i), SmallCochain::monomial(cx, 2, j),
                                     SmallCochain::zero(cx, 3)));
    return out;
}

std::vector<TableEntry> taft_table(int p)
{
    auto cx = SmallComplex::get(SmallKind::SmallTaft, p);
    std::vector<TableEntry> out;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            out.push_back(make_entry("1,1", i, j, SmallCochain::monomial(cx, 1, 1, i), SmallCochain::monomial(cx, 1, 1, j),
                                     SmallCochain::zero(cx, 1)));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            Cyc c = i == 0 ? Cyc(p, -(p - 2)) : Cyc::omega_power(p, -i) + Cyc(p, 1);
            int k = i == 0 ? j : i + j;
            SmallCochain expected(cx, 2, AlgElem::basis(cx->coef(), cx->coef_index(0, k % p), c));
            out.push_back(make_entry("1,2", i, j, SmallCochain::monomial(cx, 1, 1, i), SmallCochain::monomial(cx, 2, 0, j),
                                     expected));
        }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            out.push_back(make_entry("2,2", i, j, SmallCochain::monomial(cx, 2, 0, i), SmallCochain::monomial(cx, 2, 0, j),
                                     SmallCochain::zero(cx, 3)));
    return out;
}

}  // namespace gerst

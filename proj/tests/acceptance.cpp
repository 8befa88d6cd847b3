// Acceptance driver: one pass/fail line per criterion; `--criterion N` runs one.
#include "gerst/hopf.hpp"
#include "gerst/oracle.hpp"
#include "gerst/verify.hpp"

#include "CLI11.hpp"

#include <functional>
#include <iostream>
#include <sstream>

using namespace gerst;

namespace {

constexpr unsigned kSeed = 20261018;

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (passed)
                detail << "first failure: " << what << "; ";
            passed = false;
        }
    }
};

SmallComplex::Ptr A(int p) { return SmallComplex::get(SmallKind::SmallA, p); }
SmallComplex::Ptr T(int p) { return SmallComplex::get(SmallKind::SmallTaft, p); }

void require_check(Outcome& o, const Check& c)
{
    o.require(c.passed, c.name + " (" + c.failure + ")");
}

std::string entry_str(const TableEntry& e)
{
    return "p=" + std::to_string(e.f.complex()->p()) + " family " + e.family + " i=" + std::to_string(e.i) +
           " j=" + std::to_string(e.j) + ": engine " + e.cls.str() + " vs closed form " + e.expected_cls.str();
}

void table_criterion(Outcome& o, const std::vector<TableEntry>& table, long& pairs, long& mismatches, long& skipped)
{
    for (const auto& e : table) {
        if (!e.cocycle_inputs) {
            ++skipped;
            continue;
        }
        ++pairs;
        if (!e.matches)
            ++mismatches;
        o.require(e.matches, entry_str(e));
    }
}

Outcome criterion1()
{
    Outcome o;
    long pairs = 0, mismatches = 0, skipped = 0;
    for (int p : {3, 5, 7})
        table_criterion(o, small_a_table(p), pairs, mismatches, skipped);
    o.detail << pairs << " cocycle pairs, " << mismatches << " mismatches; " << skipped
             << " pairs with a non-cocycle input carry no class";
    return o;
}

Outcome criterion2()
{
    Outcome o;
    long pairs = 0, mismatches = 0, skipped = 0;
    for (int p : {3, 5, 7})
        table_criterion(o, taft_table(p), pairs, mismatches, skipped);
    o.detail << pairs << " cocycle pairs, " << mismatches << " mismatches; " << skipped
             << " pairs with a non-cocycle input carry no class";
    return o;
}

Outcome criterion3()
{
    Outcome o;
    long cases = 0;
    for (int p : {3, 5, 7}) {
        for (auto cx : {A(p), T(p)}) {
            for (const auto& c : {check_contracting_homotopy(cx, 8), check_phi_identity(cx, 6),
                                  check_d_squared(cx, 8), check_diagonal_chain_map(cx, 8)}) {
                require_check(o, c);
                cases += c.cases;
            }
        }
        auto t = check_transport(p, 6, kSeed);
        require_check(o, t);
        cases += t.cases;
    }
    o.detail << cases << " identity instances checked";
    return o;
}

Outcome criterion4()
{
    Outcome o;
    long pairs = 0;
    for (auto cx : {A(3), T(3)}) {
        auto cm = build_comparison(cx, 3);
        for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 2}})
            for (int fi : hom_basis(*cx, m))
                for (int gi : hom_basis(*cx, n)) {
                    SmallCochain f(cx, m, AlgElem::basis(cx->coef(), fi)), g(cx, n, AlgElem::basis(cx->coef(), gi));
                    if (!is_cocycle(f) || !is_cocycle(g))
                        continue;
                    ++pairs;
                    auto r = oracle_compare(cm, f, g);
                    o.require(r.agree, cx->name() + " [" + f.value().str() + ", " + g.value().str() + "]: engine " +
                                           r.engine.str() + " vs bar " + r.oracle.str());
                }
    }
    o.detail << pairs << " basis cocycle pairs compared";
    return o;
}

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (int x : v)
        s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

Outcome criterion5()
{
    Outcome o;
    const std::vector<int> want_a{3, 2, 2, 2}, want_t{1, 1, 1, 1}, want_hopf{1, 0, 1, 0, 1};
    for (auto [cx, want] : {std::pair{A(3), want_a}, {T(3), want_t}}) {
        std::vector<int> small, bar;
        for (int n = 0; n <= 3; ++n) {
            small.push_back(hh_dimension(cx, n));
            bar.push_back(bar_hh_dimension(cx->coef(), n));
        }
        o.require(small == want, cx->name() + " small resolution dims " + join(small));
        o.require(bar == want, cx->name() + " bar dims " + join(bar));
        o.detail << cx->name() << " small " << join(small) << " bar " << join(bar) << "; ";
    }
    auto hopf = hopf_cohomology_dims(3, 4);
    o.require(hopf == want_hopf, "Hopf dims " + join(hopf));
    o.detail << "Hopf " << join(hopf);
    return o;
}

Outcome criterion6()
{
    Outcome o;
    std::vector<TrivialCochain> gens;
    for (int n = 0; n <= 4; ++n)
        for (auto& g : hopf_cohomology_basis(3, n))
            gens.push_back(std::move(g));
    long brackets = 0;
    for (const auto& f : gens)
        for (const auto& g : gens) {
            int m = f.degree(), n = g.degree();
            if (m + n > 4 || m + n == 0)
                continue;
            ++brackets;
            o.require(is_trivial_coboundary(hopf_bracket(f, g)),
                      "bracket of generators in degrees " + std::to_string(m) + "," + std::to_string(n));
        }
    o.require(brackets > 0, "no generator pairs found");
    o.detail << gens.size() << " generators, " << brackets << " ordered brackets checked";
    return o;
}

Outcome criterion7()
{
    Outcome o;
    long cases = 0;
    std::vector<Check> checks;
    for (auto cx : {A(3), T(3), A(5), T(5)})
        checks.push_back(check_phi_antisymmetry(cx, kSeed, 40));
    for (auto cx : {A(3), T(3)}) {
        checks.push_back(check_bar_antisymmetry(cx, kSeed, 20));
        checks.push_back(check_bar_jacobi(cx, kSeed, 10));
        checks.push_back(check_derivation_identity(cx, kSeed, 12));
    }
    for (const auto& c : checks) {
        require_check(o, c);
        cases += c.cases;
    }
    o.detail << checks.size() << " suites, " << cases << " sampled instances, seed " << kSeed;
    return o;
}

Outcome criterion8()
{
    Outcome o;
    for (int p : {3, 5}) {
        auto c = check_hopf_axioms(p);
        require_check(o, c);
        o.detail << "p=" << p << " " << c.cases << " cases; ";
    }
    return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> kCriteria{
    {"SmallA bracket table matches the closed forms for p in {3,5,7}", criterion1},
    {"Taft bracket table matches the closed forms for p in {3,5,7}", criterion2},
    {"identity suites hold exactly for p in {3,5,7}", criterion3},
    {"small-resolution brackets agree with bar-resolution brackets at p=3", criterion4},
    {"cohomology dimensions for A, T_3 and Hopf cohomology of T_3", criterion5},
    {"Hopf brackets of generators through total degree 4 are class zero", criterion6},
    {"seeded property suites: antisymmetry, Jacobi, derivation identity", criterion7},
    {"Hopf axioms of T_p for p in {3,5}", criterion8},
};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance criteria"};
    int only = 0;
    app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, static_cast<int>(kCriteria.size())));
    CLI11_PARSE(app, argc, argv);

    bool all = true;
    for (size_t k = 0; k < kCriteria.size(); ++k) {
        if (only && static_cast<int>(k + 1) != only)
            continue;
        Outcome o;
        try {
            o = kCriteria[k].second();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail << "exception: " << e.what();
        }
        std::cout << "criterion " << k + 1 << " " << (o.passed ? "PASS" : "FAIL") << ": " << kCriteria[k].first
                  << " -- " << o.detail.str() << std::endl;
        all = all && o.passed;
    }
    return all ? 0 : 1;
}

#include "gerst/cli.hpp"

#include "gerst/hopf.hpp"
#include "gerst/oracle.hpp"
#include "gerst/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace gerst {

using nlohmann::json;

namespace {

const std::map<std::string, Task> kTasks{{"verify", Task::Verify},           {"bracket-a", Task::BracketA},
                                         {"bracket-taft", Task::BracketTaft}, {"hopf", Task::Hopf},
                                         {"oracle-compare", Task::OracleCompare}, {"dims", Task::Dims}};
const std::map<std::string, Format> kFormats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};

json rational_json(const Rational& r)
{
    auto part = [](const mpz_class& z) -> json {
        if (z.fits_slong_p())
            return z.get_si();
        return z.get_str();
    };
    return json::array({part(r.get_num()), part(r.get_den())});
}

/// Coordinates against 1, w, ..., w^{d-1}, padded to the full degree.
json cyc_json(const Cyc& c, int p)
{
    int d = CyclotomicField::get(p).degree();
    json out = json::array();
    for (int k = 0; k < d; ++k)
        out.push_back(rational_json(k < static_cast<int>(c.coeffs().size()) ? c.coeffs()[k] : Rational(0)));
    return out;
}

std::string monomial_label(const SmallComplex& cx, int idx)
{
    int i = cx.coef_x(idx);
    if (!cx.taft())
        return "x^" + std::to_string(i);
    int k = cx.coef_g(idx);
    return i == 0 ? "g^" + std::to_string(k) : "x^" + std::to_string(i) + " g^" + std::to_string(k);
}

std::string cochain_label(const SmallCochain& f)
{
    const auto& cx = *f.complex();
    std::string xi = " ξ" + std::to_string(f.degree()) + "*";
    const auto& terms = f.value().terms();
    if (terms.size() == 1 && terms.begin()->second.is_one()) {
        if (cx.taft())
            return "f̃_{" + monomial_label(cx, terms.begin()->first) + "}" + xi;
        return monomial_label(cx, terms.begin()->first) + xi;
    }
    std::string s;
    for (const auto& [idx, c] : terms)
        s += (s.empty() ? "" : " + ") + ("(" + c.str() + ")·" + monomial_label(cx, idx));
    return (s.empty() ? "0" : "(" + s + ")") + xi;
}

std::string class_label(const CohomClass& c)
{
    if (c.is_zero())
        return "0";
    std::string s;
    for (const auto& [idx, k] : c.reduced.terms())
        s += (s.empty() ? "" : " + ") + ("(" + k.str() + ")·" + monomial_label(*c.complex, idx) + " ξ" +
                                         std::to_string(c.degree) + "*");
    return s;
}

json elem_json(const SmallComplex& cx, const AlgElem& v)
{
    json out = json::object();
    for (const auto& [idx, c] : v.terms())
        out[monomial_label(cx, idx)] = cyc_json(c, cx.p());
    return out;
}

/// Nonzero entries keyed by the argument tuple, most significant slot first.
json trivial_json(const TrivialCochain& f)
{
    const auto& alg = *f.algebra();
    json out = json::object();
    for (long t = 0; t < f.size(); ++t) {
        if (f.at(t).is_zero())
            continue;
        std::string key;
        long rest = t;
        for (int k = 0; k < f.degree(); ++k) {
            key = alg.monomial_str(static_cast<int>(rest % alg.dim())) + (k ? "|" + key : "");
            rest /= alg.dim();
        }
        out[key.empty() ? "()" : key] = cyc_json(f.at(t), alg.p());
    }
    return out;
}

json class_json(const CohomClass& c)
{
    return json{{"label", class_label(c)}, {"coordinates", elem_json(*c.complex, c.reduced)}};
}

json check_json(const Check& c)
{
    json j{{"kind", "check"}, {"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.passed)
        j["failure"] = c.failure;
    return j;
}

struct Builder {
    json results = json::array();
    bool ok = true;

    void check(const Check& c)
    {
        results.push_back(check_json(c));
        ok = ok && c.passed;
    }
    void check(const std::string& name, bool passed, const std::string& detail = "")
    {
        Check c{name, true, 0, {}};
        c.record(passed, detail);
        check(c);
    }
};

void run_verify(const RunConfig& cfg, Builder& b)
{
    for (auto kind : {SmallKind::SmallA, SmallKind::SmallTaft}) {
        auto cx = SmallComplex::get(kind, cfg.p);
        b.check(check_d_squared(cx, cfg.max_degree));
        b.check(check_contracting_homotopy(cx, cfg.max_degree));
        b.check(check_phi_identity(cx, cfg.max_degree));
        b.check(check_diagonal_chain_map(cx, cfg.max_degree));
        b.check(check_phi_antisymmetry(cx, cfg.seed, 20));
        b.check(check_derivation_identity(cx, cfg.seed, 10));
    }
    b.check(check_transport(cfg.p, cfg.max_degree, cfg.seed));
    b.check(check_hopf_axioms(cfg.p));
}

void run_table(const std::vector<TableEntry>& table, Builder& b)
{
    for (const auto& e : table) {
        b.results.push_back(json{{"kind", "bracket"},
                                 {"family", e.family},
                                 {"i", e.i},
                                 {"j", e.j},
                                 {"f", cochain_label(e.f)},
                                 {"g", cochain_label(e.g)},
                                 {"value", elem_json(*e.value.complex(), e.value.value())},
                                 {"class", class_label(e.cls)},
                                 {"class_coordinates", elem_json(*e.cls.complex, e.cls.reduced)},
                                 {"closed_form_class", class_label(e.expected_cls)},
                                 {"cocycle_inputs", e.cocycle_inputs},
                                 {"matches_closed_form", e.matches}});
    }
}

void run_hopf(const RunConfig& cfg, Builder& b)
{
    int top = cfg.p == 3 ? cfg.max_degree : std::min(cfg.max_degree, 2);
    auto dims = hopf_cohomology_dims(cfg.p, top);
    b.results.push_back(json{{"kind", "hopf_dims"}, {"dims", dims}});
    std::vector<TrivialCochain> gens;
    for (int n = 0; n <= top; ++n)
        for (auto& g : hopf_cohomology_basis(cfg.p, n))
            gens.push_back(std::move(g));
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t c = a; c < gens.size(); ++c) {
            int m = gens[a].degree(), n = gens[c].degree();
            if (m + n - 1 > top || m + n == 0)
                continue;
            auto r = hopf_bracket(gens[a], gens[c]);
            bool zero = is_trivial_coboundary(r);
            b.results.push_back(json{{"kind", "hopf_bracket"},
                                     {"f_degree", m},
                                     {"g_degree", n},
                                     {"f", trivial_json(gens[a])},
                                     {"g", trivial_json(gens[c])},
                                     {"value", trivial_json(r)},
                                     {"cochain_zero", r.is_zero()},
                                     {"class_zero", zero}});
            b.check("hopf bracket of generators in degrees " + std::to_string(m) + "," + std::to_string(n) + " is class zero",
                    zero);
        }
    if (cfg.p == 3) {
        auto cm = build_comparison(SmallComplex::get(SmallKind::SmallTaft, cfg.p), top);
        for (const auto& g : gens)
            b.results.push_back(json{{"kind", "hopf_embedding"},
                                     {"degree", g.degree()},
                                     {"generator", trivial_json(g)},
                                     {"hochschild_class", class_json(hopf_to_hochschild(cm, g))}});
    }
}

void run_oracle(const RunConfig& cfg, Builder& b)
{
    for (auto kind : {SmallKind::SmallA, SmallKind::SmallTaft}) {
        auto cx = SmallComplex::get(kind, cfg.p);
        int top = std::min(cfg.max_degree, 3);
        auto cm = build_comparison(cx, top);
        b.results.push_back(json{{"kind", "comparison_maps"},
                                 {"complex", cx->name()},
                                 {"pi_iota", pi_iota_level(cm) == PiIotaLevel::OnTheNose      ? "identity"
                                             : pi_iota_level(cm) == PiIotaLevel::OnCohomology ? "identity on cohomology"
                                                                                              : "fails"}});
        for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
            if (m + n - 1 > top)
                continue;
            for (int fi : hom_basis(*cx, m))
                for (int gi : hom_basis(*cx, n)) {
                    SmallCochain f(cx, m, AlgElem::basis(cx->coef(), fi)), g(cx, n, AlgElem::basis(cx->coef(), gi));
                    if (!is_cocycle(f) || !is_cocycle(g))
                        continue;
                    auto r = oracle_compare(cm, f, g);
                    b.results.push_back(json{{"kind", "oracle_comparison"},
                                             {"f", cochain_label(f)},
                                             {"g", cochain_label(g)},
                                             {"engine", class_json(r.engine)},
                                             {"oracle", class_json(r.oracle)},
                                             {"agree", r.agree}});
                    b.ok = b.ok && r.agree;
                }
        }
    }
}

void run_dims(const RunConfig& cfg, Builder& b)
{
    for (auto kind : {SmallKind::SmallA, SmallKind::SmallTaft}) {
        auto cx = SmallComplex::get(kind, cfg.p);
        std::vector<int> engine, bar;
        for (int n = 0; n <= cfg.max_degree; ++n)
            engine.push_back(hh_dimension(cx, n));
        int top = std::min(cfg.max_degree, cfg.p == 3 ? 3 : 2);
        for (int n = 0; n <= top; ++n)
            bar.push_back(bar_hh_dimension(cx->coef(), n));
        b.results.push_back(json{{"kind", "hh_dims"}, {"complex", cx->name()}, {"small", engine}, {"bar", bar}});
        for (int n = 0; n <= top; ++n)
            b.check("HH^" + std::to_string(n) + " of " + cx->name() + " agrees with the bar complex", engine[n] == bar[n]);
    }
    int top = cfg.p == 3 ? std::min(cfg.max_degree, 4) : std::min(cfg.max_degree, 2);
    b.results.push_back(json{{"kind", "hopf_dims"}, {"dims", hopf_cohomology_dims(cfg.p, top)}});
}

json phi_json(int p)
{
    json out = json::array();
    for (const auto& c : cyclotomic_polynomial(p))
        out.push_back(rational_json(c));
    return out;
}

json notes()
{
    return json::array({
        "Taft product: (x^a g^b)(x^c g^d) = w^{bc} x^{a+c} g^{b+d}; Delta(x) = 1(x)x + x(x)g",
        "cyclotomic values are [num, den] pairs against 1, w, ..., w^{d-1} with d = deg Phi_p",
        "classes are values reduced modulo coboundaries; reduction is canonical",
        "cup product carries the global sign (-1)^{mn}",
        "bracket tables compare against the closed forms; cocycle_inputs marks pairs that define cohomology classes",
    });
}

}  // namespace

void validate(const RunConfig& cfg)
{
    if (cfg.p <= 2)
        throw UsageError("p must be an integer > 2");
    if (cfg.max_degree < 1)
        throw UsageError("max-degree must be at least 1");
    if (cfg.task == Task::Verify && cfg.max_degree > 12)
        throw UsageError("max-degree above 12 is not supported for verify");
}

Report run(const RunConfig& cfg)
{
    validate(cfg);
    Builder b;
    switch (cfg.task) {
    case Task::Verify:
        run_verify(cfg, b);
        break;
    case Task::BracketA:
        run_table(small_a_table(cfg.p), b);
        break;
    case Task::BracketTaft:
        run_table(taft_table(cfg.p), b);
        break;
    case Task::Hopf:
        run_hopf(cfg, b);
        break;
    case Task::OracleCompare:
        run_oracle(cfg, b);
        break;
    case Task::Dims:
        run_dims(cfg, b);
        break;
    }
    Report r;
    r.doc = json{{"p", cfg.p}, {"phi_p_coefficients", phi_json(cfg.p)}, {"paper_convention_notes", notes()},
                 {"results", std::move(b.results)}};
    r.exit_code = b.ok ? 0 : 1;
    return r;
}

namespace {

std::string csv_field(std::string s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string summary(const json& r)
{
    const std::string kind = r.at("kind");
    if (kind == "check")
        return r.at("name").get<std::string>();
    if (kind == "bracket")
        return "[" + r.at("f").get<std::string>() + ", " + r.at("g").get<std::string>() + "]";
    if (kind == "oracle_comparison")
        return "[" + r.at("f").get<std::string>() + ", " + r.at("g").get<std::string>() + "] engine vs oracle";
    if (kind == "hopf_bracket")
        return "hopf bracket degrees " + std::to_string(r.at("f_degree").get<int>()) + "," +
               std::to_string(r.at("g_degree").get<int>());
    if (kind == "hopf_embedding")
        return "hopf class of degree " + std::to_string(r.at("degree").get<int>());
    if (r.contains("complex"))
        return kind + " " + r.at("complex").get<std::string>();
    return kind;
}

std::string outcome(const json& r)
{
    const std::string kind = r.at("kind");
    if (kind == "check")
        return r.at("passed").get<bool>() ? "pass" : "FAIL";
    if (kind == "bracket") {
        std::string s = r.at("class").get<std::string>();
        if (!r.at("cocycle_inputs").get<bool>())
            return s + " (inputs are not both cocycles)";
        if (!r.at("matches_closed_form").get<bool>())
            return s + " (closed form gives " + r.at("closed_form_class").get<std::string>() + ")";
        return s;
    }
    if (kind == "oracle_comparison")
        return r.at("engine").at("label").get<std::string>() + (r.at("agree").get<bool>() ? " (agree)" : " (DISAGREE)");
    if (kind == "hopf_bracket")
        return r.at("class_zero").get<bool>() ? "class zero" : "class nonzero";
    if (kind == "hopf_embedding")
        return r.at("hochschild_class").at("label").get<std::string>();
    if (kind == "comparison_maps")
        return "pi iota: " + r.at("pi_iota").get<std::string>();
    json rest = r;
    rest.erase("kind");
    rest.erase("complex");
    return rest.dump();
}

}  // namespace

std::string render(const Report& r, Format format)
{
    std::ostringstream os;
    switch (format) {
    case Format::Json:
        os << r.doc.dump(2) << "\n";
        break;
    case Format::Csv:
        os << "# lossy: class coordinates and outcomes only; use --format json for cochain values\n";
        os << "kind,item,outcome\n";
        for (const auto& e : r.doc.at("results"))
            os << csv_field(e.at("kind")) << "," << csv_field(summary(e)) << "," << csv_field(outcome(e)) << "\n";
        break;
    case Format::Text:
        os << "p = " << r.doc.at("p").get<int>() << "\n";
        for (const auto& e : r.doc.at("results"))
            os << summary(e) << ": " << outcome(e) << "\n";
        break;
    }
    return os.str();
}

int cli_main(int argc, char** argv)
{
    CLI::App app{"Gerstenhaber brackets on Hochschild and Hopf cohomology of k[x]/(x^p) and Taft algebras"};
    RunConfig cfg;
    std::string task_name, flag_task;
    app.add_option("task_pos", task_name, "task to run")->check(CLI::IsMember(kTasks));
    app.add_option("--task", flag_task, "task to run (alternative to the positional form)")->check(CLI::IsMember(kTasks));
    app.add_option("--p", cfg.p, "order of the root of unity, > 2");
    app.add_option("--max-degree", cfg.max_degree, "degree cap for tables and suites");
    app.add_option("--format", cfg.format, "json, csv or text")->transform(CLI::CheckedTransformer(kFormats));
    app.add_option("--out", cfg.out, "write the report here instead of stdout");
    app.add_option("--seed", cfg.seed, "seed for randomized suites");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (task_name.empty() && flag_task.empty()) {
        std::cerr << "error: a task is required (" << app.get_display_name() << " --help)\n";
        return 2;
    }
    if (!task_name.empty() && !flag_task.empty() && task_name != flag_task) {
        std::cerr << "error: conflicting tasks '" << task_name << "' and '" << flag_task << "'\n";
        return 2;
    }
    cfg.task = kTasks.at(task_name.empty() ? flag_task : task_name);
    Report report;
    try {
        report = run(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    }
    std::string text = render(report, cfg.format);
    if (cfg.out) {
        std::ofstream f(*cfg.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << *cfg.out << "\n";
            return 2;
        }
        f << text;
    } else {
        std::cout << text;
    }
    if (report.exit_code != 0)
        for (const auto& e : report.doc.at("results"))
            if ((e.at("kind") == "check" && !e.at("passed").get<bool>()) ||
                (e.at("kind") == "oracle_comparison" && !e.at("agree").get<bool>()))
                std::cerr << "failed: " << summary(e) << "\n";
    return report.exit_code;
}

}  // namespace gerst

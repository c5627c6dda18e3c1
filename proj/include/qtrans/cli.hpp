#ifndef QTRANS_CLI_HPP
#define QTRANS_CLI_HPP

// The qtrans command line: parse, dispatch, report. Needs CLI11 and
// nlohmann/json on the include path.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catalog.hpp"
#include "json.hpp"

namespace qtrans::cli {

enum ExitCode : int {
    ok = 0,
    assertion_failed = 1,
    usage = 2,
    internal = 70,
};

inline const std::vector<std::string>& verbs()
{
    static const std::vector<std::string> v{"check",         "invariant", "nu",    "iterate",  "strip-gcd",
                                            "conjugate",     "homogenize", "find-relation", "from-hessian",
                                            "hesse",         "span",      "classify", "paper-examples"};
    return v;
}

struct Options
{
    std::string verb;
    std::string map, poly, f, g, relation;
    int dim = 0;
    int deg_cap = 6;
    bool homogeneous = false;
    std::string mode;
    std::uint64_t seed = 0;
    bool json = false;
    std::string out;
    std::optional<int> degree;
    unsigned times = 2;
    bool affine = false;
};

class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

// "@path" reads the file; newlines separate components like ';', and '#'
// starts a comment.
inline std::string load(const std::string& value)
{
    if (value.empty() || value.front() != '@') return value;
    std::ifstream in(value.substr(1));
    if (!in) throw UsageError("cannot read " + value.substr(1));
    std::string text, line;
    while (std::getline(in, line)) {
        line = line.substr(0, line.find('#'));
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!text.empty()) text += ';';
        text += line;
    }
    return text;
}

inline int highest_index(const std::string& text, char prefix)
{
    static const std::regex x_var(R"(x(\d+))"), y_var(R"(y(\d+))");
    int best = 0;
    const std::regex& re = prefix == 'x' ? x_var : y_var;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), re); it != std::sregex_iterator(); ++it)
        best = std::max(best, std::stoi((*it)[1].str()));
    return best;
}

inline int component_count(const std::string& text)
{
    return text.empty() ? 0 : static_cast<int>(std::count(text.begin(), text.end(), ';')) + 1;
}

struct Context
{
    Options opt;
    int n = 0;
    RankMode mode = RankMode::certified;
    RankOptions rank;
    json::Json doc;
    std::ostringstream text;
    bool ok = true;

    void line(const std::string& key, const std::string& value) { text << key << ": " << value << '\n'; }
    void require(const std::string& value, const char* flag) const
    {
        if (value.empty()) throw UsageError(opt.verb + " needs " + flag);
    }
    PolyMap map(const std::string& s) const { return parse_map(s, indexed_names(n)); }
    Poly poly(const std::string& s) const { return parse(s, indexed_names(n)); }
};

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string vec_str(const RatVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

inline void report_text(Context& c, const QtReport& r)
{
    c.line("quasi-translation", yes_no(r.passed()));
    c.line("(x-H)o(x+H) = x", yes_no(r.cond_inverse));
    c.line("H(x+tH) = H", yes_no(r.cond_deform));
    c.line("JH*H = 0", yes_no(r.cond_jhh));
    c.line("conditions agree", yes_no(r.conditions_agree()));
    c.line("nilpotency index", r.nilpotency_index ? std::to_string(*r.nilpotency_index) : "none");
    c.line("series identity", yes_no(r.series_identity));
}

inline void check(Context& c)
{
    c.require(c.opt.map, "--map");
    QtReport r = check_qt(c.map(c.opt.map));
    c.doc = json::report(r);
    report_text(c, r);
    c.ok = r.passed() && r.conditions_agree() && (!r.nilpotency_index || r.series_identity);
}

inline void invariant(Context& c)
{
    c.require(c.opt.map, "--map");
    c.require(c.opt.poly, "--poly");
    QuasiTranslation qt(c.map(c.opt.map));
    Poly f = c.poly(c.opt.poly);
    const bool inv = is_invariant(f, qt);
    c.doc["invariant"] = inv;
    c.doc["nu"] = quasi_degree(f, qt).to_string();
    c.line("invariant", yes_no(inv));
    c.line("nu", quasi_degree(f, qt).to_string());
    c.ok = inv;
}

inline void nu(Context& c)
{
    c.require(c.opt.map, "--map");
    c.require(c.opt.poly, "--poly");
    QuasiTranslation qt(c.map(c.opt.map));
    Poly f = c.poly(c.opt.poly);
    const std::string v = quasi_degree(f, qt).to_string();
    c.doc["nu"] = v;
    c.doc["deformation"] = print(deform(f, qt), names_with_t(c.n));
    c.line("nu", v);
    c.line("f(x+tH)", print(deform(f, qt), names_with_t(c.n)));
}

inline void iterate_verb(Context& c)
{
    c.require(c.opt.map, "--map");
    PolyMap it = iterate(QuasiTranslation(c.map(c.opt.map)), c.opt.times);
    c.doc["times"] = c.opt.times;
    c.doc["map"] = json::map(it);
    c.line("times", std::to_string(c.opt.times));
    c.line("x + mH", print(it));
}

inline void strip(Context& c)
{
    c.require(c.opt.map, "--map");
    StripResult s = strip_gcd(QuasiTranslation(c.map(c.opt.map)));
    c.doc["g"] = print(s.g);
    c.doc["reduced"] = json::map(s.reduced);
    c.line("g", print(s.g));
    c.line("H/g", print(s.reduced));
}

inline void conjugate_verb(Context& c)
{
    c.require(c.opt.map, "--map");
    c.require(c.opt.f, "--F");
    c.require(c.opt.g, "--G");
    PolyMap ht = conjugate(QuasiTranslation(c.map(c.opt.map)), c.map(c.opt.f), c.map(c.opt.g));
    QtReport r = check_qt(ht);
    c.doc["map"] = json::map(ht);
    c.doc["report"] = json::report(r);
    c.line("H~", print(ht));
    report_text(c, r);
    c.ok = r.passed();
}

inline void homogenize_verb(Context& c)
{
    c.require(c.opt.map, "--map");
    QuasiTranslation qt(c.map(c.opt.map));
    const int d = c.opt.degree.value_or(std::max(qt.map().degree(), 0));
    HomogenizeResult h = homogenize(qt, d, c.mode, c.rank);
    QtReport r = check_qt(h.map);
    c.doc["degree"] = d;
    c.doc["map"] = json::map(h.map);
    c.doc["rank_before"] = h.rank_before;
    c.doc["rank_after"] = h.rank_after;
    c.doc["mode"] = std::string(to_string(c.mode));
    c.doc["report"] = json::report(r);
    c.line("degree", std::to_string(d));
    c.line("H~", print(h.map));
    c.line("rank JH", std::to_string(h.rank_before));
    c.line("rank JH~", std::to_string(h.rank_after));
    c.line("mode", std::string(to_string(c.mode)));
    report_text(c, r);
    c.ok = r.passed();
}

inline void search_text(Context& c, const RelationSearch& s)
{
    c.line("status", std::string(to_string(s.status)));
    c.line("degree cap", std::to_string(s.degree_cap));
    if (s.relation) {
        c.line("R", print(s.relation->r, indexed_names(c.n, "y")));
        c.line("degree", std::to_string(s.relation->degree));
        c.line("minimal", yes_no(s.relation->minimal));
    }
}

inline void find(Context& c)
{
    c.require(c.opt.map, "--map");
    PolyMap g = c.map(c.opt.map);
    RelationSearch s = find_relation(g, c.opt.deg_cap, c.opt.homogeneous, c.mode, c.rank);
    c.doc = json::search(s);
    search_text(c, s);
}

inline void from_hessian(Context& c)
{
    c.require(c.opt.poly, "--poly");
    Poly h = c.poly(c.opt.poly);
    const PolyMap grad = gradient(h);
    Relation rel;
    if (!c.opt.relation.empty()) {
        Poly r = parse(c.opt.relation, indexed_names(c.n, "y"));
        if (!compose(r, grad).is_zero()) throw UsageError("R(grad h) != 0");
        rel = Relation{r, grad, r.degree(), false};
        c.doc["search"] = nullptr;
        c.line("R", print(r, indexed_names(c.n, "y")) + " (given)");
    } else {
        const bool homogeneous = c.opt.homogeneous || is_homogeneous(h);
        RelationSearch s = find_relation(grad, c.opt.deg_cap, homogeneous, c.mode, c.rank);
        c.doc["search"] = json::search(s);
        search_text(c, s);
        if (!s.relation) {
            c.doc["result"] = nullptr;
            return;
        }
        rel = *s.relation;
    }
    RelationMap m = qt_from_relation(h, rel);
    c.doc["result"] = json::relation_map(m);
    c.line("H", print(m.h));
    c.line("H^t Hess(h) = 0", yes_no(m.row_dependence));
    if (m.report) report_text(c, *m.report);
    c.ok = m.row_dependence && m.column_dependence && m.report && m.report->passed();
}

inline void hesse(Context& c)
{
    c.require(c.opt.poly, "--poly");
    auto cert = hesse_check(c.poly(c.opt.poly), c.opt.affine);
    c.doc["certificate"] = cert ? json::certificate(*cert) : json::Json(nullptr);
    if (cert) {
        c.line("c", vec_str(cert->c));
        c.line("c0", to_string(cert->c0));
    } else {
        c.line("certificate", "none");
    }
}

inline void span_verb(Context& c)
{
    c.require(c.opt.map, "--map");
    SpanReport s = image_span(c.map(c.opt.map));
    c.doc = json::span(s);
    c.line("dim", std::to_string(s.dim));
    for (const auto& v : s.basis) c.line("basis", vec_str(v));
    for (const auto& v : s.annihilators) c.line("annihilator", vec_str(v));
}

inline void classify_verb(Context& c)
{
    c.require(c.opt.map, "--map");
    Classification k = classify_small(QuasiTranslation(c.map(c.opt.map)), c.rank);
    c.doc = json::classification(k);
    c.line("kind", k.kind == FormKind::translation ? "translation" : "two-tail");
    for (int i = 0; i < k.t.rows(); ++i) {
        RatVector row;
        for (int j = 0; j < k.t.cols(); ++j) row.push_back(k.t(i, j));
        c.line("T", vec_str(row));
    }
    c.line("s", std::to_string(k.s));
    c.line("normal form", print(k.normal_form));
    c.line("g", print(k.decomposition.g));
    c.line("a", print(k.decomposition.a));
    c.line("b", print(k.decomposition.b));
    for (const auto& [deg, p] : k.decomposition.parts) c.line("c_" + std::to_string(deg), print(p));
    if (k.rank_one) c.line("rank one", print(k.rank_one->g) + " * " + vec_str(k.rank_one->c));
}

} // namespace detail

struct ExampleOutcome
{
    std::string name;
    bool passed = false;
    std::string detail;
};

// The worked examples end to end, every step verified.
inline std::vector<ExampleOutcome> paper_examples(const RankOptions& rank = {})
{
    std::vector<ExampleOutcome> out;
    auto run = [&](std::string name, const std::function<std::string()>& body) {
        ExampleOutcome e{std::move(name), false, ""};
        try {
            e.detail = body();
            e.passed = true;
        } catch (const std::exception& ex) {
            e.detail = ex.what();
        }
        out.push_back(std::move(e));
    };
    auto need = [](bool cond, const char* what) {
        if (!cond) throw VerificationError(what);
    };

    run("power h = p^2", [&] {
        auto e = catalog::power_example(2);
        RelationSearch s = find_relation(gradient(e.h), 4, true, RankMode::certified, rank);
        need(s.relation && s.relation->degree == 2, "no degree-2 relation");
        need(normalize(s.relation->r) == normalize(e.relation), "relation is not y3 y5 - y4^2");
        RelationMap m = qt_from_relation(e.h, *s.relation);
        // R = lambda (y3 y5 - y4^2), so H = lambda 2p (0, 0, x2^2, -2 x1 x2, x1^2).
        const Rat lambda = normalization_unit(s.relation->r) / normalization_unit(e.relation);
        need(m.h == lambda * e.expected, "H differs from 2p (0, 0, x2^2, -2x1x2, x1^2)");
        need(check_qt(m.h).passed(), "check failed");
        QuasiTranslation qt(m.h);
        need(is_invariant(Poly::variable(5, 0), qt) && is_invariant(Poly::variable(5, 1), qt)
                 && is_invariant(e.p, qt),
             "x1, x2 or p not invariant");
        return "R = " + print(s.relation->r, indexed_names(5, "y")) + ", H = " + print(m.h);
    });

    run("paired squares n = 6", [&] {
        auto r = catalog::paired_rational(1, 1);
        need(matmul(hessian(r.h), r.map).is_zero(), "Hess(h) H != 0");
        need(compose(r.relation, r.g).is_zero(), "R(grad h) != 0");
        need(check_qt(r.map).passed(), "check failed (A = B = 1)");
        auto p = catalog::paired_polynomial(catalog::paired_a(), catalog::paired_b());
        need(matmul(jacobian(p.g), p.map).is_zero(), "JG H~ != 0");
        need(check_qt(p.map).passed(), "check failed (polynomial A, B)");
        need(image_span(p.map).dim == 6, "image span of H~ is not 6-dimensional");
        return std::string("A = B = 1 and A = x1x4 - x2x3, B = x3x6 - x4x5 verified; span dim 6");
    });

    run("conjugation", [&] {
        auto e = catalog::conjugation_example();
        need(check_qt(e.h).passed(), "check failed for (0, x1, x1^2, x1^3)");
        PolyMap ht = conjugate(QuasiTranslation(e.h), e.F, e.G);
        need(ht == e.expected, "H~ differs from (-(f^3x2 - 2f^2x3 + fx4), f, f^2, f^3)");
        need(check_qt(ht).passed(), "check failed for H~");
        need(image_span(ht).dim == 4, "H~ has a linear invariant");
        return "H~ = " + print(ht);
    });

    run("minimal degree h = x3x4", [&] {
        auto e = catalog::product_example();
        RelationSearch s = find_relation(gradient(e.h), 6, true, RankMode::certified, rank);
        need(s.relation && s.relation->degree == 1, "minimal relation is not linear");
        RelationMap m = qt_from_relation(e.h, *s.relation);
        for (const auto& comp : m.h) need(comp.is_constant(), "H from the minimal relation is not constant");
        Relation nonminimal{e.nonminimal_relation, gradient(e.h), 2, false};
        RelationMap w = qt_from_relation(e.h, nonminimal);
        need(w.h == e.nonminimal_map, "H from y1y3 + y2y4 is not (x4, x3, 0, 0)");
        need(image_span(w.h).dim == 2, "image span is not 2-dimensional");
        return "minimal R = " + print(s.relation->r, indexed_names(4, "y")) + ", non-minimal H = " + print(w.h);
    });
    return out;
}

namespace detail {

inline void examples(Context& c)
{
    json::Json list = json::Json::array();
    for (const auto& e : paper_examples(c.rank)) {
        list.push_back({{"name", e.name}, {"passed", e.passed}, {"detail", e.detail}});
        c.text << (e.passed ? "PASS " : "FAIL ") << e.name << ": " << e.detail << '\n';
        c.ok = c.ok && e.passed;
    }
    c.doc["examples"] = std::move(list);
    c.doc["passed"] = c.ok;
}

inline int infer_dimension(const Options& o)
{
    if (o.dim > 0) return o.dim;
    int n = 0;
    for (const std::string* s : {&o.map, &o.f, &o.g}) {
        n = std::max(n, highest_index(*s, 'x'));
        n = std::max(n, component_count(*s));
    }
    n = std::max(n, highest_index(o.poly, 'x'));
    n = std::max(n, highest_index(o.relation, 'y'));
    return std::max(n, 1);
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact computations with quasi-translations x + H over Q", "qtrans"};
    app.add_option("verb", o.verb, "Operation to run")->required()->check(CLI::IsMember(verbs()));
    app.add_option("--map", o.map, "Polynomial map, components separated by ';' (or @file)");
    app.add_option("--poly", o.poly, "Polynomial (or @file)");
    app.add_option("-n,--dim", o.dim, "Number of variables (default: highest index used)")->check(CLI::PositiveNumber);
    app.add_option("--deg-cap", o.deg_cap, "Degree cap for the relation search")->check(CLI::PositiveNumber);
    app.add_flag("--homogeneous", o.homogeneous, "Search homogeneous relations only");
    app.add_option("--mode", o.mode, "Rank mode (default: certified for n <= 5)")
        ->check(CLI::IsMember({"randomized", "certified"}));
    app.add_option("--seed", o.seed, "Seed for randomized rank");
    app.add_flag("--json", o.json, "Print the JSON document instead of text");
    app.add_option("--out", o.out, "Write the output to FILE");
    app.add_option("--F", o.f, "Conjugating map F (conjugate)");
    app.add_option("--G", o.g, "Inverse G of F (conjugate)");
    app.add_option("--relation", o.relation, "Relation R in y1..yn (from-hessian)");
    app.add_option("--degree", o.degree, "Homogenization degree (default: deg H)")->check(CLI::NonNegativeNumber);
    app.add_option("--times", o.times, "Number of iterations (iterate)");
    app.add_flag("--affine", o.affine, "Allow a constant on the right-hand side (hesse)");

    std::vector<const char*> argv{"qtrans"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    detail::Context c;
    try {
        o.map = detail::load(o.map);
        o.poly = detail::load(o.poly);
        o.f = detail::load(o.f);
        o.g = detail::load(o.g);
        o.relation = detail::load(o.relation);
        c.opt = o;
        c.n = detail::infer_dimension(o);
        c.mode = o.mode.empty() ? (c.n <= 5 ? RankMode::certified : RankMode::randomized)
                                : (o.mode == "randomized" ? RankMode::randomized : RankMode::certified);
        c.rank.seed = o.seed;

        const std::string& v = o.verb;
        if (v == "check") detail::check(c);
        else if (v == "invariant") detail::invariant(c);
        else if (v == "nu") detail::nu(c);
        else if (v == "iterate") detail::iterate_verb(c);
        else if (v == "strip-gcd") detail::strip(c);
        else if (v == "conjugate") detail::conjugate_verb(c);
        else if (v == "homogenize") detail::homogenize_verb(c);
        else if (v == "find-relation") detail::find(c);
        else if (v == "from-hessian") detail::from_hessian(c);
        else if (v == "hesse") detail::hesse(c);
        else if (v == "span") detail::span_verb(c);
        else if (v == "classify") detail::classify_verb(c);
        else detail::examples(c);
    } catch (const VerificationError& e) {
        err << "qtrans: verification failed: " << e.what() << '\n';
        return assertion_failed;
    } catch (const std::invalid_argument& e) {
        err << "qtrans: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "qtrans: internal error: " << e.what() << '\n';
        return internal;
    }

    std::string body = o.json ? c.doc.dump(2) + "\n" : c.text.str();
    if (!o.out.empty()) {
        std::ofstream file(o.out, std::ios::binary);
        if (!file || !(file << body)) {
            err << "qtrans: cannot write " << o.out << '\n';
            return usage;
        }
    } else {
        out << body;
    }
    return c.ok ? ok : assertion_failed;
}

} // namespace qtrans::cli

#endif

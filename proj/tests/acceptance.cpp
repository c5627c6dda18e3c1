// Acceptance suite: one PASS/FAIL line per criterion, each with its own
// time limit. Inputs are rebuilt here from their definitions rather than
// taken from the library catalog.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <qtrans/qtrans.hpp>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace qtrans;
using qtrans::testing::Random;

namespace {

struct Tally
{
    int cases = 0;
    int failures = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what)
    {
        ++cases;
        if (ok) return;
        ++failures;
        if (notes.size() < 5) notes.push_back(what);
    }
};

PolyMap M(const char* s, int n) { return parse_map(s, indexed_names(n)); }
Poly P(const char* s, int n) { return parse(s, n); }
Poly X(int n, int i) { return Poly::variable(n, i); }

// r == lambda * base for some rational lambda; returns lambda or 0.
Rat proportional(const Poly& r, const Poly& base)
{
    if (r.is_zero() || base.is_zero()) return 0;
    Rat lambda = r.leading_coefficient() / base.leading_coefficient();
    return r == lambda * base ? lambda : Rat(0);
}

bool invariant_by_jacobian(const Poly& f, const PolyMap& h)
{
    Poly s(h.arity());
    for (int i = 0; i < h.arity(); ++i) s += derive(f, i) * h[i];
    return s.is_zero();
}

// Criterion 1: h = p^2 in five variables.
void power_example(Tally& t)
{
    const int n = 5;
    Poly p = P("x1^2*x3 + x1*x2*x4 + x2^2*x5", n);
    Poly h = p * p;
    RelationSearch s = find_relation(gradient(h), 4, true);
    t.expect(s.status == RelationStatus::found && s.relation, "no relation found");
    if (!s.relation) return;
    t.expect(s.relation->degree == 2, "relation degree is not 2");
    Rat lambda = proportional(s.relation->r, parse("y3*y5 - y4^2", indexed_names(n, "y")));
    t.expect(!is_zero(lambda), "relation is not a multiple of y3 y5 - y4^2");
    RelationMap m = qt_from_relation(h, *s.relation);
    PolyMap expected(n, {Poly(n), Poly(n), X(n, 1) * X(n, 1), Rat(-2) * X(n, 0) * X(n, 1), X(n, 0) * X(n, 0)});
    t.expect(m.h == (lambda * Rat(2)) * (p * expected), "H != 2p (0, 0, x2^2, -2 x1 x2, x1^2)");
    t.expect(check_qt(m.h).passed(), "check_qt failed");
    QuasiTranslation qt(m.h);
    for (const Poly& f : {X(n, 0), X(n, 1), p}) {
        t.expect(is_invariant(f, qt), "invariant not recognized: " + print(f));
        t.expect(invariant_by_jacobian(f, m.h), "Jf H != 0 for " + print(f));
    }
}

// Criterion 2: H = (0, x1, x1^2, x1^3) conjugated by F = (f, x2, x3, x4).
void conjugation_example(Tally& t)
{
    const int n = 4;
    Poly f = P("x1 + x2*x4 - x3^2", n);
    PolyMap h = M("0; x1; x1^2; x1^3", n);
    PolyMap F(n, {f, X(n, 1), X(n, 2), X(n, 3)});
    PolyMap G(n, {Rat(2) * X(n, 0) - f, X(n, 1), X(n, 2), X(n, 3)});
    PolyMap expected(n, {-(pow(f, 3) * X(n, 1) - Rat(2) * pow(f, 2) * X(n, 2) + f * X(n, 3)), f, pow(f, 2), pow(f, 3)});
    PolyMap ht = conjugate(QuasiTranslation(h), F, G);
    t.expect(ht == expected, "H~ differs from the closed form");
    PolyMap direct = compose(G, compose(shift(h, 1), F));
    t.expect(direct == PolyMap::identity(n) + expected, "G o (x + H) o F != x + H~");
    t.expect(check_qt(ht).passed(), "check_qt(H~) failed");
    t.expect(image_span(ht).dim == 4, "H~ has a linear invariant");
}

// Criterion 3: h = sum (A x_{2i-1} - B x_{2i})^2, n = 6, with A = x7, B = x8
// substituted afterwards.
void paired_example(Tally& t)
{
    const int n = 6, m = 8;
    Poly A = X(m, 6), B = X(m, 7);
    Poly h(m);
    std::vector<Poly> hc;
    for (int i = 0; i < n; i += 2) {
        Poly l = A * X(m, i) - B * X(m, i + 1);
        h += l * l;
        hc.push_back(B * l);
        hc.push_back(A * l);
    }
    std::vector<Poly> gc;
    for (int i = 0; i < n; ++i) gc.push_back(derive(h, i));
    PolyMap grad(m, gc), hm(m, hc);

    auto at = [&](const Poly& a, const Poly& b) {
        std::vector<Poly> v;
        for (int i = 0; i < n; ++i) v.push_back(X(n, i));
        v.push_back(a);
        v.push_back(b);
        return PolyMap(n, std::move(v));
    };
    // R = B^2 sum y_odd^2 - A^2 sum y_even^2, up to the factor 1/(4AB).
    auto relation_at = [&](const PolyMap& g, const Poly& a, const Poly& b) {
        Poly odd(n), even(n);
        for (int i = 0; i < n; i += 2) {
            odd += g[i] * g[i];
            even += g[i + 1] * g[i + 1];
        }
        return b * b * odd - a * a * even;
    };

    {
        const Poly one = Poly::constant(n, 1);
        PolyMap sub = at(one, one);
        Poly hr = compose(h, sub);
        PolyMap map = compose(hm, sub);
        t.expect(matmul(hessian(hr), map).is_zero(), "Hess(h) H != 0 (A = B = 1)");
        t.expect(relation_at(gradient(hr), one, one).is_zero(), "R(grad h) != 0 (A = B = 1)");
        t.expect(check_qt(map).passed(), "check_qt failed (A = B = 1)");
    }
    {
        Poly a = P("x1*x4 - x2*x3", n), b = P("x3*x6 - x4*x5", n);
        PolyMap sub = at(a, b);
        PolyMap g = compose(grad, sub), map = compose(hm, sub);
        t.expect(matmul(jacobian(g), map).is_zero(), "JG H~ != 0");
        t.expect(relation_at(g, a, b).is_zero(), "R(G) != 0");
        t.expect(check_qt(map).passed(), "check_qt(H~) failed");
        t.expect(image_span(map).dim == 6, "image span of H~ is not 6-dimensional");
    }
}

// Criterion 4: h = x3 x4.
void minimal_degree(Tally& t)
{
    const int n = 4;
    Poly h = P("x3*x4", n);
    RelationSearch s = find_relation(gradient(h), 6, true);
    t.expect(s.relation && s.relation->degree == 1, "minimal relation is not linear");
    if (!s.relation) return;
    RelationMap m = qt_from_relation(h, *s.relation);
    bool constant = true;
    for (const auto& c : m.h) constant = constant && c.is_constant();
    t.expect(constant, "H from the minimal relation is not constant");
    Relation nonminimal{parse("y1*y3 + y2*y4", indexed_names(n, "y")), gradient(h), 2, false};
    RelationMap w = qt_from_relation(h, nonminimal);
    t.expect(w.h == M("x4; x3; 0; 0", n), "H from y1 y3 + y2 y4 is not (x4, x3, 0, 0)");
    t.expect(image_span(w.h).dim == 2, "image span is not 2-dimensional");
}

const std::vector<testing::CorpusEntry>& corpus()
{
    static const auto c = testing::quasi_translations(100, 1);
    return c;
}

// Criterion 5.
void equivalence(Tally& t)
{
    Random rnd(55);
    const auto& qts = corpus();
    const auto bad = testing::mutants(qts, 100, 2);
    for (const auto* set : {&qts, &bad}) {
        const bool want = set == &qts;
        for (const auto& e : *set) {
            const int n = e.h.arity();
            QtReport r = check_qt(e.h);
            t.expect(r.conditions_agree(), e.recipe + ": flags disagree");
            t.expect(r.passed() == want, e.recipe + ": unexpected verdict");
            t.expect(testing::inverse_at_points(e.h, rnd) == r.cond_inverse, e.recipe + ": pointwise inverse disagrees");
            if (!r.passed()) continue;
            t.expect(matrix_power(jacobian(e.h), unsigned(n)).is_zero(), e.recipe + ": (JH)^n != 0");
            t.expect(r.nilpotency_index && *r.nilpotency_index <= n, e.recipe + ": nilpotency index");
            t.expect(r.series_identity, e.recipe + ": series identity");
        }
    }
}

// Criterion 6.
void nu_laws(Tally& t)
{
    Random rnd(66);
    for (const auto& s : testing::seeds()) {
        QuasiTranslation qt(s.h);
        const int n = s.h.arity();
        for (int k = 0; k < 100; ++k) {
            Poly f = rnd.nonzero_poly(n, 2, 3), g = rnd.nonzero_poly(n, 2, 3);
            QuasiDegree nf = quasi_degree(f, qt), ng = quasi_degree(g, qt);
            t.expect(quasi_degree(f * g, qt) == nf + ng, s.name + ": nu(fg) != nu(f) + nu(g)");
            if (k < 10) {
                const int bound = 2 * std::max(s.h.degree(), 1);
                t.expect(QuasiDegree::of(testing::degree_by_differences(f, s.h, bound)) == nf,
                         s.name + ": nu(f) disagrees with finite differences");
            }
        }
    }
    int multiplied = 0;
    for (const auto& e : corpus()) {
        if (!e.gcd_multiplied) continue;
        ++multiplied;
        StripResult r = strip_gcd(QuasiTranslation(e.h));
        t.expect(r.g * r.reduced == e.h, e.recipe + ": g H' != H");
        t.expect(quasi_degree(r.g, QuasiTranslation(r.reduced)) == QuasiDegree::of(0), e.recipe + ": nu(g) != 0");
        const int bound = r.g.degree() * std::max(r.reduced.degree(), 1);
        t.expect(testing::degree_by_differences(r.g, r.reduced, bound) == 0, e.recipe + ": finite differences of g");
    }
    t.expect(multiplied > 0, "no gcd-multiplied corpus member");
}

void hesse_verify(Tally& t, const Poly& h, const std::string& what)
{
    t.expect(det(hessian(h)).is_zero(), what + ": generated Hessian is not singular");
    auto cert = hesse_check(h);
    t.expect(cert.has_value(), what + ": no certificate for " + print(h));
    if (!cert) return;
    bool nonzero = false;
    Poly s(h.arity());
    for (int j = 0; j < h.arity(); ++j) {
        nonzero = nonzero || !is_zero(cert->c[std::size_t(j)]);
        s += cert->c[std::size_t(j)] * derive(h, j);
    }
    t.expect(nonzero && s.is_zero() && is_zero(cert->c0), what + ": certificate does not verify");
}

// Criterion 7.
void hesse_positive(Tally& t)
{
    Random rnd(77);
    for (int k = 0; k < 50; ++k) {
        const int n = static_cast<int>(rnd.uniform(2, 4));
        const int d = static_cast<int>(rnd.uniform(2, 3));
        Poly h;
        do {
            std::vector<Poly> ls;
            for (int i = 0; i + 1 < n; ++i) {
                RatVector v;
                for (int j = 0; j < n; ++j) v.push_back(rnd.uniform(-3, 3));
                ls.push_back(testing::linear_form(v, n));
            }
            Poly f = rnd.homogeneous(n - 1, d, 4);
            h = compose(f, PolyMap(n, std::move(ls)));
        } while (h.is_zero());
        hesse_verify(t, h, "homogeneous n=" + std::to_string(n));
    }
    for (int k = 0; k < 50; ++k) {
        const int n = 2;
        Poly h;
        do {
            Poly l = Rat(rnd.uniform(-3, 3)) * X(n, 0) + Rat(rnd.uniform(-3, 3)) * X(n, 1);
            h = Poly::constant(n, rnd.uniform(-3, 3));
            for (unsigned e = 2; e <= 4; ++e) h += Rat(rnd.uniform(-3, 3)) * pow(l, e);
        } while (h.is_zero() || is_homogeneous(h));
        hesse_verify(t, h, "n=2");
    }
}

void classification_verify(Tally& t, const PolyMap& h)
{
    const int n = h.arity();
    Classification c = classify_small(QuasiTranslation(h));
    const auto& d = c.decomposition;
    std::vector<Poly> nf(static_cast<std::size_t>(n), Poly(n));
    nf[std::size_t(n - 2)] = d.b * d.g;
    nf[std::size_t(n - 1)] = d.a * d.g;
    PolyMap normal(n, nf);
    t.expect(normal == c.normal_form, "normal form is not (0, .., b g, a g)");
    t.expect(!is_zero(determinant(c.t)), "T is singular");
    PolyMap back = matmul(c.t, compose(normal, linear_map(inverse(c.t))));
    t.expect(back == h, "T N(T^{-1} x) != H for " + print(h));
    auto tail_free = [&](const Poly& p) { return !p.depends_on(n - 2) && !p.depends_on(n - 1); };
    t.expect(tail_free(d.a) && tail_free(d.b), "a or b involves the last two variables");
    t.expect((d.b * derive(d.g, n - 2) + d.a * derive(d.g, n - 1)).is_zero(), "b dg/dx_{n-1} + a dg/dx_n != 0");
    Poly form = d.a * X(n, n - 2) - d.b * X(n, n - 1), sum(n);
    for (const auto& [k, part] : d.parts) {
        t.expect(tail_free(part), "c_k involves the last two variables");
        sum += part * pow(form, unsigned(k));
    }
    t.expect(sum == d.g, "sum c_k (a x_{n-1} - b x_n)^k != g");
}

// Criterion 8.
void classification(Tally& t)
{
    Random rnd(88);
    for (int k = 0; k < 50; ++k) classification_verify(t, testing::two_tail_small(rnd));
    for (int k = 0; k < 50; ++k) {
        PolyMap h = testing::two_tail_homogeneous(rnd);
        t.expect(QuasiTranslation(h).homogeneous_degree().has_value(), "generated map is not homogeneous");
        classification_verify(t, h);
    }
}

// Criterion 9.
void homogenization(Tally& t)
{
    std::vector<PolyMap> maps;
    for (const auto& s : testing::seeds()) maps.push_back(s.h);
    for (const auto& e : corpus()) maps.push_back(e.h);
    RankOptions opt;
    for (const auto& h : maps) {
        const int d = std::max(h.degree(), 0);
        HomogenizeResult r = homogenize(QuasiTranslation(h), d, RankMode::certified);
        const PolyMap& lifted = r.map;
        t.expect(check_qt(lifted).passed(), "check_qt failed on the lift of " + print(h));
        bool homogeneous = lifted.arity() == h.arity() + 1;
        for (const auto& c : lifted) homogeneous = homogeneous && is_homogeneous(c, d);
        t.expect(homogeneous, "lift is not homogeneous of degree deg H");
        const int before = jacobian_rank(h, RankMode::certified), after = jacobian_rank(lifted, RankMode::certified);
        t.expect(before <= after && after <= before + 1, "rank bound violated for " + print(h));
        t.expect(before == jacobian_rank(h, RankMode::randomized, opt)
                     && after == jacobian_rank(lifted, RankMode::randomized, opt),
                 "certified and randomized ranks disagree");
    }
}

struct Criterion
{
    int id;
    const char* title;
    double limit_seconds;
    std::function<void(Tally&)> body;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "power example h = p^2", 5, power_example},
        {2, "conjugation example", 5, conjugation_example},
        {3, "paired squares, rational and polynomial A, B", 30, paired_example},
        {4, "minimal-degree counterexample h = x3 x4", 1, minimal_degree},
        {5, "equivalence of the three conditions on 200 maps", 120, equivalence},
        {6, "quasi-degree laws", 60, nu_laws},
        {7, "Hesse positive cases", 120, hesse_positive},
        {8, "classification round trip", 120, classification},
        {9, "homogenization bounds", 120, homogenization},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Tally t;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(t);
        } catch (const std::exception& e) {
            ++t.failures;
            t.notes.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = t.failures == 0 && in_time;
        failed += pass ? 0 : 1;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, c.limit_seconds);
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << t.cases
                  << " checks, " << t.failures << " failures, " << timing << ")\n";
        if (!in_time) std::cout << "    over the time limit\n";
        for (const auto& n : t.notes) std::cout << "    " << n << '\n';
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - std::size_t(failed) << "/"
              << criteria.size() << '\n';
    return failed ? 1 : 0;
}

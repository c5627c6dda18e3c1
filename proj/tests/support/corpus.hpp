#ifndef QTRANS_TESTS_CORPUS_HPP
#define QTRANS_TESTS_CORPUS_HPP

// Generated quasi-translations and non-examples for the property suites.

#include <string>
#include <vector>

#include <qtrans/qtrans.hpp>

#include "random.hpp"

namespace qtrans::testing {

struct Seed
{
    std::string name;
    PolyMap h;
};

inline std::vector<Seed> seeds()
{
    auto m = [](const char* s, int n) { return parse_map(s, indexed_names(n)); };
    return {
        {"tower", m("0; x1; x1^2; x1^3", 4)},
        {"power", m("0; 0; x2^2; -2*x1*x2; x1^2", 5)},
        {"paired", m("x1 - x2; x1 - x2; x3 - x4; x3 - x4; x5 - x6; x5 - x6", 6)},
        {"swap", m("x4; x3; 0; 0", 4)},
        {"two-tail", m("0; x1*x2 - x3; x1^2*x2 - x1*x3", 3)},
        {"plane", m("0; x1^2 + 1", 2)},
        {"constant", m("1; -2; 1/2", 3)},
    };
}

struct CorpusEntry
{
    std::string recipe;
    PolyMap h;
    // Set when H was multiplied by a non-constant invariant.
    bool gcd_multiplied = false;
};

// Polynomials f with f(x + H) = f: the components of H and the linear forms
// c^t x with c^t H = 0.
inline std::vector<Poly> invariant_generators(const PolyMap& h)
{
    std::vector<Poly> gens;
    for (const auto& c : h)
        if (!c.is_zero() && !c.is_constant()) gens.push_back(c);
    for (const auto& c : image_span(h).annihilators) {
        Poly l(h.arity());
        for (int i = 0; i < h.arity(); ++i) l += c[std::size_t(i)] * Poly::variable(h.arity(), i);
        gens.push_back(l);
    }
    return gens;
}

// A non-constant invariant of degree <= max_degree, or zero if none is found.
inline Poly random_invariant(Random& rnd, const PolyMap& h, int max_degree)
{
    auto gens = invariant_generators(h);
    std::vector<Poly> small;
    for (const auto& g : gens)
        if (g.degree() <= max_degree) small.push_back(g);
    if (small.empty()) return Poly(h.arity());
    const Poly& a = small[std::size_t(rnd.uniform(0, long(small.size()) - 1))];
    Poly f = a + Poly::constant(h.arity(), rnd.uniform(-2, 2));
    if (2 * a.degree() <= max_degree && rnd.coin()) f = f * (a + Poly::constant(h.arity(), rnd.uniform(1, 3)));
    return f;
}

// Quasi-translations built from the seeds by chains of linear conjugation,
// homogenization and multiplication by invariants.
inline std::vector<CorpusEntry> quasi_translations(int count, std::uint64_t seed = 1)
{
    Random rnd(seed);
    const auto base = seeds();
    std::vector<CorpusEntry> out;
    while (static_cast<int>(out.size()) < count) {
        const Seed& s = base[std::size_t(rnd.uniform(0, long(base.size()) - 1))];
        CorpusEntry e{s.name, s.h, false};
        const int steps = static_cast<int>(rnd.uniform(1, 2));
        for (int k = 0; k < steps; ++k) {
            switch (rnd.uniform(0, 2)) {
            case 0: {
                e.h = conjugate_linear(QuasiTranslation(e.h), rnd.unimodular(e.h.arity(), 3));
                e.recipe += " conj";
                break;
            }
            case 1: {
                if (e.h.arity() >= 6 || e.h.degree() > 3) break;
                e.h = homogenize(QuasiTranslation(e.h), std::max(e.h.degree(), 1)).map;
                e.recipe += " homog";
                break;
            }
            default: {
                if (e.h.degree() > 3) break;
                Poly f = random_invariant(rnd, e.h, 2);
                if (f.is_zero() || f.is_constant()) break;
                e.h = f * e.h;
                e.gcd_multiplied = true;
                e.recipe += " mult";
                break;
            }
            }
        }
        if (e.recipe == s.name) continue;
        out.push_back(std::move(e));
    }
    return out;
}

// Quasi-translations with one random monomial added to one component,
// kept only when JH * H != 0.
inline std::vector<CorpusEntry> mutants(const std::vector<CorpusEntry>& qts, int count, std::uint64_t seed = 2)
{
    Random rnd(seed);
    std::vector<CorpusEntry> out;
    while (static_cast<int>(out.size()) < count) {
        const CorpusEntry& src = qts[std::size_t(rnd.uniform(0, long(qts.size()) - 1))];
        const int n = src.h.arity();
        std::vector<Poly> comps = src.h.components();
        const int i = static_cast<int>(rnd.uniform(0, n - 1));
        Poly term = Poly::from_terms(n, {{rnd.monomial(n, static_cast<int>(rnd.uniform(1, 2))), Rat(rnd.uniform(1, 3))}});
        comps[std::size_t(i)] += term;
        PolyMap m(n, std::move(comps));
        if (jh_times_h(m).is_zero()) continue;
        out.push_back({src.recipe + " mutated", std::move(m), false});
    }
    return out;
}

// Classification inputs. (0, b g, a g) in dimension 3 (a, b in Q[x1]) and
// (0, g(x1)) in dimension 2, conjugated by a unimodular T.
inline PolyMap two_tail_small(Random& rnd)
{
    const int n = static_cast<int>(rnd.uniform(2, 3));
    std::vector<Poly> nf(static_cast<std::size_t>(n), Poly(n));
    if (n == 2) {
        nf[1] = rnd.nonzero_poly(1, 3, 3).embed(2);
    } else {
        Poly a = rnd.poly(1, 1, 2).embed(3);
        Poly b = rnd.poly(1, 1, 2).embed(3);
        if (a.is_zero() && b.is_zero()) a = Poly::constant(3, 1);
        Poly form = a * Poly::variable(3, 1) - b * Poly::variable(3, 2);
        Poly g = rnd.poly(1, 2, 2).embed(3) + rnd.poly(1, 1, 2).embed(3) * form;
        if (rnd.coin(0.3)) g += Poly::constant(3, rnd.uniform(1, 3)) * form * form;
        if (g.is_zero()) g = form;
        nf[1] = b * g;
        nf[2] = a * g;
    }
    return conjugate_linear(QuasiTranslation(PolyMap(n, std::move(nf))), rnd.unimodular(n, 4));
}

// Homogeneous (0, 0, b g, a g) in dimension 4, conjugated by a unimodular T.
inline PolyMap two_tail_homogeneous(Random& rnd)
{
    const int n = 4;
    auto in_first_two = [&](int degree) {
        Poly p(n);
        for (int k = 0; k <= degree; ++k)
            p += Rat(rnd.uniform(-3, 3)) * pow(Poly::variable(n, 0), unsigned(k)) * pow(Poly::variable(n, 1), unsigned(degree - k));
        return p;
    };
    Poly a, b, g;
    for (;;) {
        const int e = static_cast<int>(rnd.uniform(0, 1));
        a = in_first_two(e);
        b = in_first_two(e);
        if (a.is_zero() && b.is_zero()) continue;
        Poly form = a * Poly::variable(n, 2) - b * Poly::variable(n, 3);
        if (e == 0)
            g = in_first_two(2) + in_first_two(1) * form + Rat(rnd.uniform(-2, 2)) * form * form;
        else
            g = in_first_two(2) + Rat(rnd.uniform(-2, 2)) * form;
        if (!g.is_zero()) break;
    }
    std::vector<Poly> nf(static_cast<std::size_t>(n), Poly(n));
    nf[2] = b * g;
    nf[3] = a * g;
    return conjugate_linear(QuasiTranslation(PolyMap(n, std::move(nf))), rnd.unimodular(n, 4));
}

} // namespace qtrans::testing

#endif

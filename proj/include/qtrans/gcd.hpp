#ifndef QTRANS_GCD_HPP
#define QTRANS_GCD_HPP

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "poly.hpp"

namespace qtrans {

// f / g when g divides f in Q[x], nullopt otherwise. Leading terms are
// cancelled one at a time; a remainder term that LT(g) does not divide means
// the division is not exact.
inline std::optional<Poly> divide_exact(const Poly& f, const Poly& g)
{
    if (f.arity() != g.arity()) throw std::invalid_argument("divide_exact: arity mismatch");
    if (g.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    if (f.is_zero()) return Poly(f.arity());
    if (g.is_constant()) return f * (1 / g.leading_coefficient());
    if (f.degree() < g.degree() || f.size() < 1) return std::nullopt;

    const Monomial& lead = g.leading_term().mono;
    const Rat lead_inv = 1 / g.leading_coefficient();
    std::map<Monomial, Rat, GrevlexGreater> rem;
    for (const auto& t : f) rem.emplace(t.mono, t.coeff);
    std::vector<Poly::Term> quotient;
    while (!rem.empty()) {
        auto top = rem.begin();
        if (!lead.divides(top->first)) return std::nullopt;
        Monomial qm = top->first / lead;
        Rat qc = top->second * lead_inv;
        rem.erase(top);
        bool first = true;
        for (const auto& t : g) {
            if (first) {
                first = false;
                continue;
            }
            Monomial m = t.mono * qm;
            Rat c = t.coeff * qc;
            auto [it, inserted] = rem.try_emplace(m, -c);
            if (!inserted) {
                it->second -= c;
                if (is_zero(it->second)) rem.erase(it);
            }
        }
        quotient.push_back({qm, qc});
    }
    return Poly::from_terms(f.arity(), std::move(quotient));
}

// Scales f to integer coefficients with gcd 1 and a positive leading
// coefficient. Zero stays zero.
inline Poly normalize(const Poly& f)
{
    if (f.is_zero()) return f;
    Int den_lcm = 1, num_gcd = 0;
    for (const auto& t : f) {
        den_lcm = lcm(den_lcm, t.coeff.get_den());
        num_gcd = gcd(num_gcd, t.coeff.get_num());
    }
    Rat s(den_lcm, num_gcd);
    s.canonicalize();
    if (sgn(f.leading_coefficient()) < 0) s = -s;
    return f * s;
}

// The rational unit u with f = u * normalize(f).
inline Rat normalization_unit(const Poly& f)
{
    if (f.is_zero()) return 0;
    Poly n = normalize(f);
    return f.leading_coefficient() / n.leading_coefficient();
}

namespace detail {

// Coefficients of f viewed as a polynomial in x_var; coefficient k holds
// the terms with x_var-exponent k, with that exponent cleared.
inline std::vector<Poly> coefficients_in(const Poly& f, int var)
{
    std::vector<std::vector<Poly::Term>> buckets(std::size_t(std::max(0, f.degree_in(var)) + 1));
    for (const auto& t : f) {
        Monomial m = t.mono;
        unsigned e = m[var];
        m.set(var, 0);
        buckets[e].push_back({m, t.coeff});
    }
    std::vector<Poly> coeffs;
    for (auto& b : buckets) coeffs.push_back(Poly::from_terms(f.arity(), std::move(b)));
    return coeffs;
}

inline int highest_variable(const Poly& f)
{
    for (int v = f.arity() - 1; v >= 0; --v)
        if (f.depends_on(v)) return v;
    return -1;
}

inline Poly monomial_content(const Poly& f)
{
    Monomial m = f.leading_term().mono;
    for (const auto& t : f) m = Monomial::gcd(m, t.mono);
    return Poly::term(m, 1);
}

Poly gcd_nonzero(const Poly& f, const Poly& g);

// gcd of the coefficients of f with respect to x_var.
inline Poly content_in(const Poly& f, int var)
{
    Poly c(f.arity());
    for (const auto& k : coefficients_in(f, var)) {
        if (k.is_zero()) continue;
        c = c.is_zero() ? normalize(k) : gcd_nonzero(c, k);
        if (c.is_constant()) break;
    }
    return c;
}

inline Poly primitive_part_in(const Poly& f, int var)
{
    Poly c = content_in(f, var);
    return *divide_exact(f, c);
}

// Pseudo-remainder of a by b, both viewed as polynomials in x_var.
inline Poly pseudo_remainder(Poly a, const Poly& b, int var)
{
    const int db = b.degree_in(var);
    std::vector<Poly> bc = coefficients_in(b, var);
    const Poly& lcb = bc.back();
    while (!a.is_zero() && a.degree_in(var) >= db) {
        int da = a.degree_in(var);
        Poly lca = coefficients_in(a, var).back();
        Poly shift = Poly::term(Monomial::unit(a.arity(), var, unsigned(da - db)), 1);
        a = lcb * a - lca * shift * b;
    }
    return a;
}

// Recursive primitive polynomial remainder sequence, one variable at a time.
inline Poly gcd_nonzero(const Poly& f, const Poly& g)
{
    if (f.is_constant() || g.is_constant()) return Poly::constant(f.arity(), 1);
    if (f.is_monomial() || g.is_monomial()) {
        Monomial m = Monomial::gcd(monomial_content(f).leading_term().mono, monomial_content(g).leading_term().mono);
        return Poly::term(m, 1);
    }
    if (g.size() <= f.size()) {
        if (divide_exact(f, g)) return normalize(g);
    } else if (divide_exact(g, f)) {
        return normalize(f);
    }

    int var = std::max(highest_variable(f), highest_variable(g));
    if (!f.depends_on(var)) return gcd_nonzero(f, content_in(g, var));
    if (!g.depends_on(var)) return gcd_nonzero(content_in(f, var), g);

    Poly cf = content_in(f, var);
    Poly cg = content_in(g, var);
    Poly content = gcd_nonzero(cf, cg);
    Poly a = *divide_exact(f, cf);
    Poly b = *divide_exact(g, cg);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (!b.is_zero() && b.degree_in(var) > 0) {
        Poly r = pseudo_remainder(a, b, var);
        a = std::move(b);
        b = r.is_zero() ? r : normalize(primitive_part_in(r, var));
    }
    Poly prim = b.is_zero() ? normalize(primitive_part_in(a, var)) : Poly::constant(f.arity(), 1);
    return normalize(content * prim);
}

} // namespace detail

// Greatest common divisor, normalized (integer coefficients with gcd 1 and a
// positive leading coefficient). gcd(f, 0) = normalize(f); gcd(0, 0) = 0.
inline Poly gcd(const Poly& f, const Poly& g)
{
    if (f.arity() != g.arity()) throw std::invalid_argument("gcd: arity mismatch");
    if (f.is_zero()) return normalize(g);
    if (g.is_zero()) return normalize(f);
    return detail::gcd_nonzero(f, g);
}

inline Poly gcd_list(std::span<const Poly> polys)
{
    if (polys.empty()) throw std::invalid_argument("gcd_list: empty input");
    Poly acc(polys.front().arity());
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        acc = acc.is_zero() ? normalize(p) : gcd(acc, p);
        if (acc.is_constant()) break;
    }
    if (acc.is_zero()) throw std::domain_error("gcd_list: all inputs are zero");
    return acc;
}

} // namespace qtrans

#endif

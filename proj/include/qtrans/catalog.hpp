#ifndef QTRANS_CATALOG_HPP
#define QTRANS_CATALOG_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "classify.hpp"

// Worked examples used by the CLI, the tests and the acceptance suite.
namespace qtrans::catalog {

// p = x1^2 x3 + x1 x2 x4 + x2^2 x5 and h = p^r in five variables.
struct PowerExample
{
    int r = 2;
    Poly p;
    Poly h;
    Poly relation; // y3 y5 - y4^2
    PolyMap expected; // r p^(r-1) (0, 0, x2^2, -2 x1 x2, x1^2)
};

inline PowerExample power_example(int r = 2)
{
    if (r < 1) throw std::invalid_argument("power example: r must be positive");
    PowerExample e;
    e.r = r;
    e.p = parse("x1^2*x3 + x1*x2*x4 + x2^2*x5", 5);
    e.h = pow(e.p, unsigned(r));
    e.relation = parse("y3*y5 - y4^2", indexed_names(5, "y"));
    Poly factor = Rat(r) * pow(e.p, unsigned(r - 1));
    e.expected = factor * parse_map("0; 0; x2^2; -2*x1*x2; x1^2", indexed_names(5));
    return e;
}

// H = (0, x1, x1^2, x1^3) conjugated by F = (f, x2, x3, x4) with
// f = x1 + x2 x4 - x3^2, whose inverse is G = (2 x1 - f, x2, x3, x4).
struct ConjugationExample
{
    Poly f;
    PolyMap h;
    PolyMap F;
    PolyMap G;
    PolyMap expected;
};

inline ConjugationExample conjugation_example()
{
    const VarNames x = indexed_names(4);
    ConjugationExample e;
    e.f = parse("x1 + x2*x4 - x3^2", x);
    e.h = parse_map("0; x1; x1^2; x1^3", x);
    e.F = PolyMap(4, {e.f, Poly::variable(4, 1), Poly::variable(4, 2), Poly::variable(4, 3)});
    e.G = PolyMap(4, {Rat(2) * Poly::variable(4, 0) - e.f, Poly::variable(4, 1), Poly::variable(4, 2),
                      Poly::variable(4, 3)});
    const Poly& f = e.f;
    Poly x2 = Poly::variable(4, 1), x3 = Poly::variable(4, 2), x4 = Poly::variable(4, 3);
    e.expected = PolyMap(4, {-(pow(f, 3) * x2 - Rat(2) * pow(f, 2) * x3 + f * x4), f, pow(f, 2), pow(f, 3)});
    return e;
}

// h = sum_i (A x_{2i-1} - B x_{2i})^2 in n (even) variables, with
// R = (B^2 sum y_odd^2 - A^2 sum y_even^2) / (4AB) and
// H = (B L_1, A L_1, B L_2, A L_2, ...), L_i = A x_{2i-1} - B x_{2i}.
//
// Built symbolically in n + 2 variables with A = x_{n+1}, B = x_{n+2}, then
// specialized, so the rational and the polynomial instances share one source.
struct PairedSquares
{
    int n = 6;
    Poly h;         // n + 2 variables
    PolyMap grad;   // gradient in x_1..x_n only, n + 2 variables
    PolyMap map;    // H, n + 2 variables
    Poly scaled_relation; // 4AB R in 2n + 2 variables: y_1..y_n, x_1..x_n, A, B
};

inline PairedSquares paired_squares(int n = 6)
{
    if (n < 2 || n % 2) throw std::invalid_argument("paired squares: n must be even and positive");
    const int m = n + 2;
    const Poly A = Poly::variable(m, n), B = Poly::variable(m, n + 1);
    PairedSquares e;
    e.n = n;
    e.h = Poly(m);
    std::vector<Poly> grad, map;
    for (int i = 0; i < n; i += 2) {
        Poly l = A * Poly::variable(m, i) - B * Poly::variable(m, i + 1);
        e.h += l * l;
        map.push_back(B * l);
        map.push_back(A * l);
    }
    for (int i = 0; i < n; ++i) grad.push_back(derive(e.h, i));
    e.grad = PolyMap(m, grad);
    e.map = PolyMap(m, map);

    const int w = 2 * n + 2;
    const Poly wa = Poly::variable(w, 2 * n), wb = Poly::variable(w, 2 * n + 1);
    Poly odd(w), even(w);
    for (int i = 0; i < n; i += 2) {
        odd += pow(Poly::variable(w, i), 2);
        even += pow(Poly::variable(w, i + 1), 2);
    }
    e.scaled_relation = wb * wb * odd - wa * wa * even;
    return e;
}

// Substitute x_{n+1} = A, x_{n+2} = B where A, B are polynomials in n variables.
inline PolyMap specialize(const PolyMap& m, int n, const Poly& a, const Poly& b)
{
    std::vector<Poly> v;
    for (int i = 0; i < n; ++i) v.push_back(Poly::variable(n, i));
    v.push_back(a);
    v.push_back(b);
    return compose(m, PolyMap(n, std::move(v)));
}

inline Poly specialize(const Poly& p, int n, const Poly& a, const Poly& b)
{
    return specialize(PolyMap(p.arity(), {p}), n, a, b)[0];
}

struct PairedInstance
{
    Poly h;      // rational instance only; zero for the polynomial instance
    PolyMap g;   // grad h with A, B specialized
    PolyMap map; // H with A, B specialized
    Poly relation; // rational instance only
};

inline PairedInstance paired_rational(const Rat& a, const Rat& b, int n = 6)
{
    if (is_zero(a) || is_zero(b)) throw std::invalid_argument("paired squares: A and B must be nonzero");
    PairedSquares e = paired_squares(n);
    const Poly pa = Poly::constant(n, a), pb = Poly::constant(n, b);
    PairedInstance out;
    out.h = specialize(e.h, n, pa, pb);
    out.g = specialize(e.grad, n, pa, pb);
    out.map = specialize(e.map, n, pa, pb);
    std::vector<Poly> v;
    for (int i = 0; i < n; ++i) v.push_back(Poly::variable(n, i));
    for (int i = 0; i < n; ++i) v.push_back(Poly(n));
    v.push_back(pa);
    v.push_back(pb);
    out.relation = (1 / (4 * a * b)) * compose(e.scaled_relation, PolyMap(n, std::move(v)));
    return out;
}

// A = a, B = b polynomial; H~ = H|_{A=a,B=b} is checked against
// (grad_y R)(G) by exact division of the scaled relation's gradient by 4ab.
inline PairedInstance paired_polynomial(const Poly& a, const Poly& b)
{
    const int n = a.arity();
    PairedSquares e = paired_squares(n);
    PairedInstance out;
    out.g = specialize(e.grad, n, a, b);
    out.map = specialize(e.map, n, a, b);

    // Substitute y = G, x = x, A = a, B = b into 4AB R and its y-gradient.
    std::vector<Poly> v(out.g.begin(), out.g.end());
    for (int i = 0; i < n; ++i) v.push_back(Poly::variable(n, i));
    v.push_back(a);
    v.push_back(b);
    PolyMap at(n, std::move(v));
    if (!compose(e.scaled_relation, at).is_zero()) throw VerificationError("paired squares: R(G) != 0");
    const Poly four_ab = Rat(4) * a * b;
    for (int i = 0; i < n; ++i) {
        auto q = divide_exact(compose(derive(e.scaled_relation, i), at), four_ab);
        if (!q || *q != out.map[i]) throw VerificationError("paired squares: (grad_y R)(G) != H~");
    }
    return out;
}

inline Poly paired_a() { return parse("x1*x4 - x2*x3", 6); }
inline Poly paired_b() { return parse("x3*x6 - x4*x5", 6); }

// h = x3 x4 in four variables: the minimal relation is y1, while the
// non-minimal y1 y3 + y2 y4 produces H = (x4, x3, 0, 0).
struct ProductExample
{
    Poly h;
    Poly nonminimal_relation;
    PolyMap nonminimal_map;
};

inline ProductExample product_example()
{
    ProductExample e;
    e.h = parse("x3*x4", 4);
    e.nonminimal_relation = parse("y1*y3 + y2*y4", indexed_names(4, "y"));
    e.nonminimal_map = parse_map("x4; x3; 0; 0", indexed_names(4));
    return e;
}

} // namespace qtrans::catalog

#endif

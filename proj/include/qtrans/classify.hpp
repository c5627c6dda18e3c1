#ifndef QTRANS_CLASSIFY_HPP
#define QTRANS_CLASSIFY_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hessian.hpp"

namespace qtrans {

// H~ = T^{-1} H(Tx) with H~_1 = ... = H~_s = 0 and the remaining components
// linearly independent.
struct NormalForm
{
    RatMatrix t;
    int s = 0;
    PolyMap map;
};

// Rows of T^{-1} are the annihilators of H (reduced echelon basis) followed by
// the unit vectors with the smallest indices that complete them to a basis.
inline NormalForm normalize_zeros(const QuasiTranslation& qt)
{
    const PolyMap& h = qt.map();
    const int n = h.arity();
    SpanReport span = image_span(h);
    std::vector<RatVector> rows = span.annihilators;
    const int s = static_cast<int>(rows.size());
    for (int i = 0; i < n && static_cast<int>(rows.size()) < n; ++i) {
        RatVector e(static_cast<std::size_t>(n), Rat(0));
        e[std::size_t(i)] = 1;
        rows.push_back(e);
        if (rank(RatMatrix::from_rows(rows, n)) < static_cast<int>(rows.size())) rows.pop_back();
    }
    RatMatrix t = inverse(RatMatrix::from_rows(rows, n));
    NormalForm nf{t, s, conjugate_linear(qt, t)};
    for (int i = 0; i < s; ++i)
        if (!nf.map[i].is_zero()) throw VerificationError("normalize: leading component is not zero");
    std::vector<Poly> tail(nf.map.components().begin() + s, nf.map.components().end());
    if (s < n && image_span(PolyMap(n, tail)).dim != n - s)
        throw VerificationError("normalize: trailing components are linearly dependent");
    return nf;
}

struct RankOne
{
    Poly g;
    RatVector c;
};

// H = g c for a homogeneous quasi-translation of Jacobian rank at most one.
// For higher rank returns nothing after checking 2 <= rank <= n - 2. The zero
// map gives (0, e_1).
inline std::optional<RankOne> rank_one_decompose(const QuasiTranslation& qt, const RankOptions& opt = {})
{
    const PolyMap& h = qt.map();
    const int n = h.arity();
    if (h.is_zero()) {
        RatVector e(static_cast<std::size_t>(n), Rat(0));
        e[0] = 1;
        return RankOne{Poly(n), e};
    }
    if (!qt.homogeneous_degree()) throw std::invalid_argument("rank-one: map is not homogeneous");
    const int r = jacobian_rank(h, RankMode::certified, opt);
    if (r >= 2) {
        if (r > n - 2) throw VerificationError("rank-one: rank " + std::to_string(r) + " exceeds n - 2");
        return std::nullopt;
    }
    Poly g;
    for (const auto& comp : h)
        if (!comp.is_zero()) {
            g = normalize(comp);
            break;
        }
    RankOne out{g, {}};
    for (const auto& comp : h) {
        auto q = divide_exact(comp, g);
        if (!q || !q->is_constant()) throw VerificationError("rank-one: rank <= 1 but H is not g times a constant vector");
        out.c.push_back(q->constant_coefficient());
    }
    return out;
}

// H = (0, ..., 0, b g, a g) with g = sum_k c_k (a x_{n-1} - b x_n)^k.
struct TwoTailDecomposition
{
    Poly g;
    Poly a;
    Poly b;
    std::map<int, Poly> parts;
};

namespace detail {

inline bool free_of_tail(const Poly& p)
{
    const int n = p.arity();
    return !p.depends_on(n - 2) && !p.depends_on(n - 1);
}

inline Poly two_tail_form(int n, const Poly& a, const Poly& b)
{
    return a * Poly::variable(n, n - 2) - b * Poly::variable(n, n - 1);
}

} // namespace detail

inline TwoTailDecomposition decompose_two_tail(const QuasiTranslation& qt)
{
    const PolyMap& h = qt.map();
    const int n = h.arity();
    if (n < 2) throw std::invalid_argument("two-tail: dimension must be at least 2");
    for (int i = 0; i + 2 < n; ++i)
        if (!h[i].is_zero()) throw std::invalid_argument("two-tail: component " + std::to_string(i + 1) + " is not zero");
    const Poly& hb = h[n - 2];
    const Poly& ha = h[n - 1];
    if (hb.is_zero() && ha.is_zero()) throw std::invalid_argument("two-tail: last two components are zero");

    TwoTailDecomposition d;
    d.g = gcd(hb, ha);
    d.b = *divide_exact(hb, d.g);
    d.a = *divide_exact(ha, d.g);
    if (!detail::free_of_tail(d.a) || !detail::free_of_tail(d.b))
        throw VerificationError("two-tail: a or b depends on the last two variables");
    if (!(d.b * derive(d.g, n - 2) + d.a * derive(d.g, n - 1)).is_zero())
        throw VerificationError("two-tail: b dg/dx_{n-1} + a dg/dx_n != 0");

    std::map<int, std::vector<Poly::Term>> pieces;
    for (const auto& t : d.g) pieces[int(t.mono[n - 2] + t.mono[n - 1])].push_back(t);
    const Poly form = detail::two_tail_form(n, d.a, d.b);
    Poly sum(n);
    for (auto& [k, terms] : pieces) {
        Poly piece = Poly::from_terms(n, std::move(terms));
        Poly power = pow(form, unsigned(k));
        auto c = divide_exact(piece, power);
        if (!c || !detail::free_of_tail(*c))
            throw VerificationError("two-tail: degree-" + std::to_string(k)
                                    + " part of g is not a multiple of (a x_{n-1} - b x_n)^k");
        sum += *c * power;
        d.parts.emplace(k, std::move(*c));
    }
    if (sum != d.g) throw VerificationError("two-tail: parts do not sum to g");
    return d;
}

enum class FormKind { translation, two_tail };

struct Classification
{
    FormKind kind = FormKind::two_tail;
    RatMatrix t;
    int s = 0;
    PolyMap normal_form;
    // Meaningful for two_tail; the zero map has g = 0, a = 1, b = 0.
    TwoTailDecomposition decomposition;
    std::optional<RankOne> rank_one;
};

// Normal forms for dimension <= 3, and homogeneous dimension <= 4.
inline Classification classify_small(const QuasiTranslation& qt, const RankOptions& opt = {})
{
    const PolyMap& h = qt.map();
    const int n = h.arity();
    const bool homogeneous = h.is_zero() || qt.homogeneous_degree().has_value();
    if (!(n <= 3 || (n <= 4 && homogeneous)))
        throw std::invalid_argument("classify: needs n <= 3, or n <= 4 and H homogeneous (n = " + std::to_string(n)
                                    + ")");
    Classification out;
    if (n == 1) {
        if (!h[0].is_constant()) throw VerificationError("classify: quasi-translation in dimension 1 is not constant");
        out.kind = FormKind::translation;
        out.t = RatMatrix::identity(1);
        out.s = h.is_zero() ? 1 : 0;
        out.normal_form = h;
        out.decomposition.g = h[0];
        out.decomposition.a = Poly::constant(1, 1);
        out.decomposition.b = Poly(1);
        return out;
    }

    NormalForm nf = normalize_zeros(qt);
    const int dim = n - nf.s;
    const int bound = homogeneous ? std::max(n - 2, 1) : std::max(n - 1, 1);
    if (dim > bound)
        throw VerificationError("classify: image span has dimension " + std::to_string(dim) + " > "
                                + std::to_string(bound));
    if (nf.s < n - 2) throw VerificationError("classify: fewer than n - 2 zero components");
    out.t = nf.t;
    out.s = nf.s;
    out.normal_form = nf.map;
    QuasiTranslation nq(nf.map);
    if (nf.map.is_zero()) {
        out.decomposition = {Poly(n), Poly::constant(n, 1), Poly(n), {}};
    } else {
        out.decomposition = decompose_two_tail(nq);
    }
    if (nf.s >= n - 1 && homogeneous) {
        out.rank_one = rank_one_decompose(nq, opt);
        if (!out.rank_one) throw VerificationError("classify: one nonzero component but rank > 1");
    }

    const auto& d = out.decomposition;
    std::vector<Poly> rebuilt(static_cast<std::size_t>(n), Poly(n));
    rebuilt[std::size_t(n - 2)] = d.b * d.g;
    rebuilt[std::size_t(n - 1)] = d.a * d.g;
    if (PolyMap(n, rebuilt) != nf.map) throw VerificationError("classify: (0, .., b g, a g) differs from T^{-1}H(Tx)");
    // T N(T^{-1} x) must give back H.
    PolyMap back = matmul(out.t, compose(nf.map, linear_map(inverse(out.t))));
    if (back != h) throw VerificationError("classify: reconstruction differs from H");
    return out;
}

} // namespace qtrans

#endif

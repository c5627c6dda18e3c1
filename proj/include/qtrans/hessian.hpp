#ifndef QTRANS_HESSIAN_HPP
#define QTRANS_HESSIAN_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quasitrans.hpp"

namespace qtrans {

// R(G) = 0 with R a polynomial in y_1..y_n.
struct Relation
{
    Poly r;
    PolyMap target;
    int degree = 0;
    // No nonzero relation of smaller degree exists; re-checked on return.
    bool minimal = false;
};

enum class RelationStatus {
    found,
    // Nothing up to the degree cap; a relation of higher degree may exist.
    none_up_to_cap,
    // Nothing up to the cap and rank JG = n (certified), so none exists.
    independent,
};

inline std::string_view to_string(RelationStatus s)
{
    switch (s) {
    case RelationStatus::found: return "found";
    case RelationStatus::none_up_to_cap: return "none-up-to-cap";
    case RelationStatus::independent: return "independent";
    }
    return "?";
}

struct RelationSearch
{
    RelationStatus status = RelationStatus::none_up_to_cap;
    std::optional<Relation> relation;
    int degree_cap = 0;
};

namespace detail {

inline void monomials_of_degree(int arity, int d, std::vector<Monomial>& out)
{
    Monomial m(arity);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == arity - 1) {
            m.set(var, unsigned(left));
            out.push_back(m);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m.set(var, unsigned(e));
            self(self, var + 1, left - e);
        }
        m.set(var, 0);
    };
    if (arity == 0) {
        if (d == 0) out.push_back(m);
        return;
    }
    rec(rec, 0, d);
}

// Products G^alpha, memoized by alpha.
class PowerCache
{
public:
    explicit PowerCache(const PolyMap& g) : g_(g) {}

    const Poly& get(const Monomial& alpha)
    {
        auto it = cache_.find(alpha);
        if (it != cache_.end()) return it->second;
        Poly value = Poly::constant(g_.arity(), 1);
        for (int i = 0; i < alpha.arity(); ++i) {
            if (alpha[i] == 0) continue;
            Monomial rest = alpha;
            rest.set(i, alpha[i] - 1);
            value = get(rest) * g_[i];
            break;
        }
        return cache_.emplace(alpha, std::move(value)).first->second;
    }

private:
    const PolyMap& g_;
    std::unordered_map<Monomial, Poly, MonomialHash> cache_;
};

// Matrix whose columns are the coefficient vectors of the given polynomials,
// rows indexed by the monomials that occur.
inline RatMatrix coefficient_columns(const std::vector<const Poly*>& polys)
{
    std::unordered_map<Monomial, int, MonomialHash> row_of;
    for (const Poly* p : polys)
        for (const auto& t : *p) row_of.try_emplace(t.mono, static_cast<int>(row_of.size()));
    RatMatrix m(static_cast<int>(row_of.size()), static_cast<int>(polys.size()));
    for (std::size_t j = 0; j < polys.size(); ++j)
        for (const auto& t : *polys[j]) m(row_of.at(t.mono), int(j)) = t.coeff;
    return m;
}

inline std::vector<Monomial> relation_basis(int n, int d, bool homogeneous)
{
    std::vector<Monomial> basis;
    for (int k = homogeneous ? d : 0; k <= d; ++k) monomials_of_degree(n, k, basis);
    return basis;
}

// Kernel of alpha -> G^alpha over the given y-monomials.
inline std::vector<RatVector> relation_kernel(PowerCache& cache, const std::vector<Monomial>& basis)
{
    std::vector<const Poly*> cols;
    for (const auto& a : basis) cols.push_back(&cache.get(a));
    return kernel(coefficient_columns(cols));
}

inline Poly assemble(int arity, const std::vector<Monomial>& basis, const RatVector& v)
{
    std::vector<Poly::Term> terms;
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (!is_zero(v[j])) terms.push_back({basis[j], v[j]});
    return Poly::from_terms(arity, std::move(terms));
}

} // namespace detail

// Degree-incremental search for a nonzero R with R(G) = 0. At each degree d
// the coefficients of R over all y-monomials of degree <= d (exactly d when
// `homogeneous`) form the unknowns of a linear system; the first degree with
// a nontrivial kernel yields R, normalized to content 1.
inline RelationSearch find_relation(const PolyMap& g, int deg_cap, bool homogeneous = false,
                                    RankMode mode = RankMode::certified, const RankOptions& opt = {})
{
    if (!g.is_square()) throw std::invalid_argument("find-relation: map is not square");
    if (deg_cap < 1) throw std::invalid_argument("find-relation: degree cap must be at least 1");
    const int n = g.arity();
    detail::PowerCache cache(g);
    RelationSearch out;
    out.degree_cap = deg_cap;
    for (int d = 1; d <= deg_cap; ++d) {
        auto basis = detail::relation_basis(n, d, homogeneous);
        auto ker = detail::relation_kernel(cache, basis);
        if (ker.empty()) continue;
        Relation rel{normalize(detail::assemble(n, basis, ker.front())), g, d, false};
        if (!compose(rel.r, g).is_zero()) throw VerificationError("find-relation: R(G) != 0");
        rel.degree = rel.r.degree();
        rel.minimal = detail::relation_kernel(cache, detail::relation_basis(n, rel.degree - 1, false)).empty();
        out.status = RelationStatus::found;
        out.relation = std::move(rel);
        return out;
    }
    if (mode == RankMode::certified && jacobian_rank(g, RankMode::certified, opt) == n)
        out.status = RelationStatus::independent;
    return out;
}

struct RelationMap
{
    PolyMap h;
    // H^t * JG = 0; always true for a valid relation.
    bool row_dependence = false;
    // JG * H = 0; implies x + H is a quasi-translation.
    bool column_dependence = false;
    std::optional<QtReport> report;
};

// H = (grad_y R)(G). Checks the row dependence, and when H is also a column
// dependence of JG, that x + H is a quasi-translation.
inline RelationMap qt_from_relation(const Relation& rel)
{
    const PolyMap& g = rel.target;
    if (!compose(rel.r, g).is_zero()) throw std::invalid_argument("from-relation: R(G) != 0");
    RelationMap out{compose(gradient(rel.r), g), false, false, std::nullopt};
    const PolyMatrix jg = jacobian(g);
    out.row_dependence = matmul(jg.transpose(), out.h).is_zero();
    out.column_dependence = matmul(jg, out.h).is_zero();
    if (!out.row_dependence) throw VerificationError("from-relation: H is not a dependence between the rows of JG");
    if (rel.minimal && out.h.is_zero()) throw VerificationError("from-relation: minimal R gave the zero map");
    if (out.column_dependence) {
        out.report = check_qt(out.h);
        if (!out.report->passed()) throw VerificationError("from-relation: JG*H = 0 but x+H is not a quasi-translation");
    }
    return out;
}

// Same, for G = grad h; the Hessian is symmetric so H is always a quasi-translation.
inline RelationMap qt_from_relation(const Poly& h, const Relation& rel)
{
    if (rel.target != gradient(h)) throw std::invalid_argument("from-relation: relation target is not grad h");
    return qt_from_relation(rel);
}

// sum_j c_j dh/dx_j = c0, with c != 0.
struct HesseCertificate
{
    RatVector c;
    Rat c0 = 0;
};

// Looks for a constant linear dependence between the partial derivatives of
// h (up to a constant c0 when `allow_affine`). The returned certificate is
// verified by substitution.
inline std::optional<HesseCertificate> hesse_check(const Poly& h, bool allow_affine = false)
{
    const int n = h.arity();
    if (n == 0) return std::nullopt;
    std::vector<Poly> cols;
    for (int j = 0; j < n; ++j) cols.push_back(derive(h, j));
    if (allow_affine) cols.push_back(Poly::constant(n, -1));
    std::vector<const Poly*> ptrs;
    for (const auto& p : cols) ptrs.push_back(&p);
    auto ker = kernel(detail::coefficient_columns(ptrs));
    if (ker.empty()) return std::nullopt;
    const RatVector& v = ker.front();
    HesseCertificate cert{RatVector(v.begin(), v.begin() + n), allow_affine ? v[std::size_t(n)] : Rat(0)};
    Poly lhs(n);
    for (int j = 0; j < n; ++j) lhs += cert.c[std::size_t(j)] * cols[std::size_t(j)];
    if (lhs != Poly::constant(n, cert.c0)) throw VerificationError("hesse: certificate fails substitution");
    bool nonzero = false;
    for (const auto& x : cert.c) nonzero = nonzero || !is_zero(x);
    if (!nonzero) throw VerificationError("hesse: certificate has c = 0");
    return cert;
}

struct SpanReport
{
    int dim = 0;
    // Basis of the linear span of the image of H.
    std::vector<RatVector> basis;
    // Basis of {c : c^t H = 0}, in reduced echelon form.
    std::vector<RatVector> annihilators;
};

// Computed from the coefficient matrix of H (rows = monomials, columns =
// components): its row space is the span of the image, its kernel the
// annihilator.
inline SpanReport image_span(const PolyMap& h)
{
    std::vector<const Poly*> ptrs;
    for (const auto& c : h) ptrs.push_back(&c);
    RatMatrix m = detail::coefficient_columns(ptrs);
    SpanReport r;
    r.basis = row_space_basis(m);
    r.dim = static_cast<int>(r.basis.size());
    r.annihilators = kernel(m);
    for (const auto& c : r.annihilators) {
        Poly acc(h.arity());
        for (int i = 0; i < h.size(); ++i) acc += c[std::size_t(i)] * h[i];
        if (!acc.is_zero()) throw VerificationError("span: annihilator does not annihilate H");
    }
    if (r.dim + static_cast<int>(r.annihilators.size()) != h.size())
        throw VerificationError("span: dimension and annihilator count do not add up");
    return r;
}

// h(Tx + c).
inline Poly substitute_affine(const Poly& h, const RatMatrix& t, const RatVector& c)
{
    return compose(h, affine_map(t, c));
}

struct VariableReduction
{
    RatMatrix t;
    // h(Tx), free of x_n.
    Poly reduced;
};

// T has columns e_i (i != k, ascending) followed by c, where k is the first
// nonzero entry of c; then d/dx_n h(Tx) = (sum c_j dh/dx_j)(Tx) = 0.
inline VariableReduction reduce_variables(const Poly& h, const HesseCertificate& cert)
{
    const int n = h.arity();
    if (static_cast<int>(cert.c.size()) != n) throw std::invalid_argument("reduce: certificate length mismatch");
    if (!is_zero(cert.c0)) throw std::invalid_argument("reduce: certificate must have c0 = 0");
    int k = -1;
    for (int j = 0; j < n && k < 0; ++j)
        if (!is_zero(cert.c[std::size_t(j)])) k = j;
    if (k < 0) throw std::invalid_argument("reduce: c = 0");
    std::vector<RatVector> cols;
    for (int i = 0; i < n; ++i) {
        if (i == k) continue;
        RatVector e(static_cast<std::size_t>(n), Rat(0));
        e[std::size_t(i)] = 1;
        cols.push_back(std::move(e));
    }
    cols.push_back(cert.c);
    RatMatrix t = RatMatrix::from_columns(cols, n);
    Poly reduced = substitute_affine(h, t, RatVector(std::size_t(n), Rat(0)));
    if (!derive(reduced, n - 1).is_zero()) throw VerificationError("reduce: h(Tx) still depends on x_n");
    return {std::move(t), std::move(reduced)};
}

struct Transported
{
    Poly h;
    Poly r;
    PolyMap map;
};

// h~ = h(Tx + c) - c~^t x and R~ = R((T^t)^{-1}(y + c~)), so that
// grad h~ = T^t (grad h)(Tx + c) - c~ and R~(grad h~) = 0. H~ is computed as
// (grad_y R~)(grad h~) and as T^{-1} H(Tx + c) and the two are compared.
inline Transported affine_transport(const Poly& h, const Poly& r, const RatMatrix& t, const RatVector& c,
                                    const RatVector& c_tilde)
{
    const int n = h.arity();
    if (r.arity() != n || t.rows() != n || t.cols() != n || int(c.size()) != n || int(c_tilde.size()) != n)
        throw std::invalid_argument("transport: dimension mismatch");
    if (is_zero(determinant(t))) throw std::invalid_argument("transport: T is not invertible");
    const PolyMap grad = gradient(h);
    if (!compose(r, grad).is_zero()) throw std::invalid_argument("transport: R(grad h) != 0");

    Transported out;
    out.h = substitute_affine(h, t, c);
    for (int i = 0; i < n; ++i) out.h -= Poly::constant(n, c_tilde[std::size_t(i)]) * Poly::variable(n, i);
    out.r = substitute_affine(r, inverse(t.transpose()), inverse(t.transpose()) * c_tilde);

    const PolyMap grad_t = gradient(out.h);
    if (!compose(out.r, grad_t).is_zero()) throw VerificationError("transport: R~(grad h~) != 0");
    out.map = compose(gradient(out.r), grad_t);
    PolyMap original = compose(gradient(r), grad);
    PolyMap other = matmul(inverse(t), compose(original, affine_map(t, c)));
    if (out.map != other) throw VerificationError("transport: (grad R~)(grad h~) != T^{-1} H(Tx + c)");
    if (n <= 4 && det(hessian(out.h)).is_zero() != det(hessian(h)).is_zero())
        throw VerificationError("transport: Hessian singularity not preserved");
    return out;
}

} // namespace qtrans

#endif

#ifndef QTRANS_QUASITRANS_HPP
#define QTRANS_QUASITRANS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "poly_matrix.hpp"
#include "rank.hpp"

namespace qtrans {

// Raised when an identity that the theory guarantees fails to hold. Reaching
// this means either a bug or an input that violates a precondition in a way
// the cheap checks did not catch.
class VerificationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class NotQuasiTranslation : public std::invalid_argument
{
public:
    NotQuasiTranslation() : std::invalid_argument("map is not a quasi-translation (JH*H != 0)") {}
};

// Polynomial map of arity n+1 whose last variable is t.
inline int t_index(int n) { return n; }

// x + s*H.
inline PolyMap shift(const PolyMap& h, const Rat& s)
{
    if (!h.is_square()) throw std::invalid_argument("shift: map is not square");
    return PolyMap::identity(h.arity()) + s * h;
}

// x + s*t*H as a map from n+1 variables (x, t) to n components.
inline PolyMap deformation_map(const PolyMap& h, const Rat& s = 1)
{
    if (!h.is_square()) throw std::invalid_argument("deformation: map is not square");
    const int n = h.arity();
    const Poly t = Rat(s) * Poly::variable(n + 1, t_index(n));
    std::vector<Poly> c;
    for (int i = 0; i < n; ++i) c.push_back(Poly::variable(n + 1, i) + t * h[i].embed(n + 1));
    return PolyMap(n + 1, std::move(c));
}

// The coefficient of t^k in f, where t is the last variable; the result drops t.
inline Poly t_coefficient(const Poly& f, unsigned k)
{
    const int n = f.arity() - 1;
    if (n < 0) throw std::invalid_argument("t_coefficient: arity 0");
    std::vector<Poly::Term> out;
    for (const auto& term : f) {
        if (term.mono[n] != k) continue;
        Monomial m(n);
        for (int i = 0; i < n; ++i) m.set(i, term.mono[i]);
        out.push_back({m, term.coeff});
    }
    return Poly::from_terms(n, std::move(out));
}

// Jf * H for a scalar f.
inline Poly directional(const Poly& f, const PolyMap& h)
{
    Poly acc(f.arity());
    for (int i = 0; i < h.size(); ++i)
        if (!h[i].is_zero()) acc += derive(f, i) * h[i];
    return acc;
}

inline PolyMap jh_times_h(const PolyMap& h) { return matmul(jacobian(h), h); }

// The three equivalent characterizations, each evaluated independently.
struct QtReport
{
    bool cond_inverse = false; // (x - H) o (x + H) = x
    bool cond_deform = false;  // H(x + tH) = H
    bool cond_jhh = false;     // JH * H = 0
    // Least k with (JH)^k = 0, searched up to k = n.
    std::optional<int> nilpotency_index;
    // JH(x - tH) = sum_k t^k (JH)^(k+1); only evaluated when JH is nilpotent.
    bool series_identity = false;

    bool conditions_agree() const { return cond_inverse == cond_deform && cond_deform == cond_jhh; }
    bool passed() const { return cond_inverse && cond_deform && cond_jhh; }
};

namespace detail {

inline bool check_series_identity(const PolyMatrix& jh, const PolyMap& h, int nilpotency)
{
    const int n = h.arity();
    PolyMatrix lhs = compose(jh, deformation_map(h, -1));
    PolyMatrix rhs(n, n, n + 1);
    PolyMatrix power = jh;
    Poly tk = Poly::constant(n + 1, 1);
    const Poly t = Poly::variable(n + 1, t_index(n));
    for (int k = 0; k + 1 < nilpotency; ++k) {
        PolyMatrix lifted(n, n, n + 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) lifted(i, j) = power(i, j).embed(n + 1);
        rhs = rhs + tk * lifted;
        power = matmul(power, jh);
        tk = tk * t;
    }
    return lhs == rhs;
}

} // namespace detail

inline QtReport check_qt(const PolyMap& h)
{
    if (!h.is_square())
        throw std::invalid_argument("check: map has " + std::to_string(h.size()) + " components in "
                                    + std::to_string(h.arity()) + " variables");
    const int n = h.arity();
    QtReport r;
    r.cond_inverse = compose(shift(h, -1), shift(h, 1)) == PolyMap::identity(n);
    r.cond_deform = compose(h, deformation_map(h)) == h.embed(n + 1);
    r.cond_jhh = jh_times_h(h).is_zero();

    const PolyMatrix jh = jacobian(h);
    PolyMatrix power = jh;
    for (int k = 1; k <= n; ++k) {
        if (power.is_zero()) {
            r.nilpotency_index = k;
            break;
        }
        if (k < n) power = matmul(power, jh);
    }
    if (r.nilpotency_index) r.series_identity = detail::check_series_identity(jh, h, *r.nilpotency_index);
    return r;
}

// A map verified to satisfy JH * H = 0.
class QuasiTranslation
{
public:
    explicit QuasiTranslation(PolyMap h) : h_(std::move(h))
    {
        if (!h_.is_square()) throw std::invalid_argument("quasi-translation: map is not square");
        if (!jh_times_h(h_).is_zero()) throw NotQuasiTranslation();
        int d = -1;
        bool mixed = false;
        for (const auto& c : h_) {
            if (c.is_zero()) continue;
            if (!is_homogeneous(c) || (d >= 0 && c.degree() != d)) mixed = true;
            d = c.degree();
        }
        if (!mixed && d >= 0) degree_ = d;
    }

    const PolyMap& map() const { return h_; }
    int dim() const { return h_.arity(); }
    // Common degree when every nonzero component is homogeneous of that
    // degree; empty for the zero map and for mixed maps.
    std::optional<int> homogeneous_degree() const { return degree_; }

private:
    PolyMap h_;
    std::optional<int> degree_;
};

// deg_t f(x + tH); the zero polynomial has quasi-degree minus infinity.
class QuasiDegree
{
public:
    static QuasiDegree minus_infinity() { return QuasiDegree(); }
    static QuasiDegree of(int d) { return QuasiDegree(d); }

    bool is_minus_infinity() const { return !value_; }
    int value() const
    {
        if (!value_) throw std::logic_error("quasi-degree is minus infinity");
        return *value_;
    }

    std::string to_string() const { return value_ ? std::to_string(*value_) : "minus infinity"; }

    friend QuasiDegree operator+(QuasiDegree a, QuasiDegree b)
    {
        if (!a.value_ || !b.value_) return minus_infinity();
        return of(*a.value_ + *b.value_);
    }
    friend bool operator==(const QuasiDegree&, const QuasiDegree&) = default;
    // Minus infinity is below every integer.
    friend bool operator<=(const QuasiDegree& a, int b) { return !a.value_ || *a.value_ <= b; }

private:
    QuasiDegree() = default;
    explicit QuasiDegree(int d) : value_(d) {}
    std::optional<int> value_;
};

// f(x + tH), arity n+1 with t last.
inline Poly deform(const Poly& f, const QuasiTranslation& qt)
{
    if (f.arity() != qt.dim()) throw std::invalid_argument("deform: arity mismatch");
    return compose(f, deformation_map(qt.map()));
}

inline QuasiDegree quasi_degree(const Poly& f, const QuasiTranslation& qt)
{
    Poly d = deform(f, qt);
    if (d.is_zero()) return QuasiDegree::minus_infinity();
    return QuasiDegree::of(d.degree_in(t_index(qt.dim())));
}

// x + mH, checked against the m-fold composition of x + H.
inline PolyMap iterate(const QuasiTranslation& qt, unsigned m)
{
    const PolyMap& h = qt.map();
    PolyMap closed = shift(h, Rat(m));
    PolyMap step = shift(h, 1);
    PolyMap acc = PolyMap::identity(h.arity());
    for (unsigned i = 0; i < m; ++i) acc = compose(step, acc);
    if (acc != closed) throw VerificationError("iterate: m-fold composition differs from x + mH");
    return closed;
}

// Jf * H = 0, cross-checked against f(x + H) = f and nu(f) <= 0.
inline bool is_invariant(const Poly& f, const QuasiTranslation& qt)
{
    const PolyMap& h = qt.map();
    if (f.arity() != h.arity()) throw std::invalid_argument("invariant: arity mismatch");
    const bool by_jacobian = directional(f, h).is_zero();
    const bool by_shift = compose(f, shift(h, 1)) == f;
    const bool by_degree = quasi_degree(f, qt) <= 0;
    if (by_jacobian != by_shift || by_shift != by_degree)
        throw VerificationError("invariant: Jf*H = 0, f(x+H) = f and nu(f) <= 0 disagree");
    return by_jacobian;
}

struct StripResult
{
    Poly g;
    PolyMap reduced;
};

// Writes H = g * H' with g the normalized gcd of the components. x + H' is a
// quasi-translation, nu(g) = 0 with respect to H', and both maps have the same
// invariants; all three are checked, the last on a battery of candidates.
inline StripResult strip_gcd(const QuasiTranslation& qt)
{
    const PolyMap& h = qt.map();
    if (h.is_zero()) throw std::invalid_argument("strip-gcd: zero map");
    Poly g = gcd_list(h.components());
    std::vector<Poly> parts;
    for (const auto& c : h) {
        auto q = divide_exact(c, g);
        if (!q) throw VerificationError("strip-gcd: gcd does not divide a component");
        parts.push_back(std::move(*q));
    }
    PolyMap reduced(h.arity(), std::move(parts));
    if (!jh_times_h(reduced).is_zero()) throw VerificationError("strip-gcd: H/g is not a quasi-translation");
    QuasiTranslation qr(reduced);
    if (!(quasi_degree(g, qr) == QuasiDegree::of(0))) throw VerificationError("strip-gcd: nu(g) != 0");

    std::vector<Poly> battery;
    for (const auto& c : h) battery.push_back(c);
    for (const auto& c : reduced) battery.push_back(c);
    for (int i = 0; i < h.arity(); ++i) battery.push_back(Poly::variable(h.arity(), i));
    battery.push_back(g);
    for (const auto& f : battery)
        if (is_invariant(f, qt) != is_invariant(f, qr))
            throw VerificationError("strip-gcd: invariants of x+H and x+H/g differ");
    return {std::move(g), std::move(reduced)};
}

class QuasiDegreeViolation : public std::invalid_argument
{
public:
    QuasiDegreeViolation(int index, QuasiDegree nu)
        : std::invalid_argument("conjugate: nu(G_" + std::to_string(index + 1) + ") = " + nu.to_string()
                                + " exceeds 1"),
          index_(index), nu_(nu)
    {}
    int index() const { return index_; }
    QuasiDegree nu() const { return nu_; }

private:
    int index_;
    QuasiDegree nu_;
};

// x + H~ = G o (x + H) o F for mutually inverse F, G. H~ is computed as the
// t-linear part of G(x + tH) evaluated at F, and compared with the direct
// composition.
inline PolyMap conjugate(const QuasiTranslation& qt, const PolyMap& f, const PolyMap& g)
{
    const PolyMap& h = qt.map();
    const int n = h.arity();
    if (f.arity() != n || f.size() != n || g.arity() != n || g.size() != n)
        throw std::invalid_argument("conjugate: F and G must be maps in dimension " + std::to_string(n));
    const PolyMap x = PolyMap::identity(n);
    if (compose(g, f) != x || compose(f, g) != x) throw std::invalid_argument("conjugate: F and G are not mutually inverse");

    PolyMap gt = compose(g, deformation_map(h));
    std::vector<Poly> linear;
    for (int i = 0; i < n; ++i) {
        const Poly& gi = gt[i];
        const int nu = gi.is_zero() ? -1 : gi.degree_in(t_index(n));
        if (nu > 1) throw QuasiDegreeViolation(i, QuasiDegree::of(nu));
        linear.push_back(t_coefficient(gi, 1));
    }
    PolyMap dual = compose(PolyMap(n, std::move(linear)), f);
    PolyMap direct = compose(compose(g, shift(h, 1)), f) - x;
    if (dual != direct) throw VerificationError("conjugate: G^(1)(F) differs from G o (x+H) o F - x");
    if (!jh_times_h(dual).is_zero()) throw VerificationError("conjugate: result is not a quasi-translation");
    return dual;
}

// Tx + c as a polynomial map.
inline PolyMap affine_map(const RatMatrix& t, const RatVector& c)
{
    const int n = t.rows();
    if (t.cols() != n || static_cast<int>(c.size()) != n) throw std::invalid_argument("affine map: shape mismatch");
    std::vector<Poly> comps;
    for (int i = 0; i < n; ++i) {
        Poly p = Poly::constant(n, c[std::size_t(i)]);
        for (int j = 0; j < n; ++j)
            if (!is_zero(t(i, j))) p += Poly::constant(n, t(i, j)) * Poly::variable(n, j);
        comps.push_back(std::move(p));
    }
    return PolyMap(n, std::move(comps));
}

inline PolyMap linear_map(const RatMatrix& t) { return affine_map(t, RatVector(std::size_t(t.rows()), Rat(0))); }

// T^{-1} H(Tx + c): conjugation by F = Tx + c, G = T^{-1}(x - c).
inline PolyMap conjugate_affine(const QuasiTranslation& qt, const RatMatrix& t, const RatVector& c)
{
    RatMatrix ti = inverse(t);
    RatVector back = ti * c;
    for (auto& v : back) v = -v;
    return conjugate(qt, affine_map(t, c), affine_map(ti, back));
}

inline PolyMap conjugate_linear(const QuasiTranslation& qt, const RatMatrix& t)
{
    return conjugate_affine(qt, t, RatVector(std::size_t(t.rows()), Rat(0)));
}

struct HomogenizeResult
{
    PolyMap map;
    int rank_before = 0;
    int rank_after = 0;
};

// x_{n+1}^d (H(x / x_{n+1}), 0), checked to be a homogeneous quasi-translation
// whose Jacobian rank exceeds that of H by at most one.
inline HomogenizeResult homogenize(const QuasiTranslation& qt, int d, RankMode mode = RankMode::certified,
                                   const RankOptions& opt = {})
{
    const PolyMap& h = qt.map();
    const int n = h.arity();
    if (d < 0 || d < h.degree())
        throw std::invalid_argument("homogenize: degree " + std::to_string(d) + " is below deg H = "
                                    + std::to_string(h.degree()));
    std::vector<Poly> comps;
    for (const auto& c : h) {
        std::vector<Poly::Term> terms;
        for (const auto& term : c) {
            Monomial m = term.mono.embedded(n + 1);
            m.set(n, unsigned(d) - term.mono.degree());
            terms.push_back({m, term.coeff});
        }
        comps.push_back(Poly::from_terms(n + 1, std::move(terms)));
    }
    comps.push_back(Poly(n + 1));
    PolyMap lifted(n + 1, std::move(comps));

    for (const auto& c : lifted)
        if (!is_homogeneous(c, d)) throw VerificationError("homogenize: component is not homogeneous");
    if (!jh_times_h(lifted).is_zero()) throw VerificationError("homogenize: lift is not a quasi-translation");
    HomogenizeResult r{lifted, jacobian_rank(h, mode, opt), jacobian_rank(lifted, mode, opt)};
    if (r.rank_after < r.rank_before || r.rank_after > r.rank_before + 1)
        throw VerificationError("homogenize: rank bound violated (" + std::to_string(r.rank_before) + " -> "
                                + std::to_string(r.rank_after) + ")");
    return r;
}

// H(tH) = 0 for a homogeneous quasi-translation of degree d >= 1, checked by
// direct substitution and against the t^d coefficient of H(x + tH).
inline bool check_homog_vanish(const QuasiTranslation& qt)
{
    const PolyMap& h = qt.map();
    if (h.is_zero()) return true;
    auto d = qt.homogeneous_degree();
    if (!d) throw std::invalid_argument("homog-vanish: map is not homogeneous");
    if (*d < 1) throw std::invalid_argument("homog-vanish: degree 0 (a translation) is excluded");
    const int n = h.arity();
    const Poly t = Poly::variable(n + 1, t_index(n));
    std::vector<Poly> scaled;
    for (const auto& c : h) scaled.push_back(t * c.embed(n + 1));
    const bool direct = compose(h, PolyMap(n + 1, std::move(scaled))).is_zero();

    PolyMap deformed = compose(h, deformation_map(h));
    bool leading = true;
    for (const auto& c : deformed)
        if (!t_coefficient(c, unsigned(*d)).is_zero()) leading = false;
    if (direct != leading) throw VerificationError("homog-vanish: H(tH) and the t^d coefficient disagree");
    return direct;
}

} // namespace qtrans

#endif

#ifndef QTRANS_POLY_HPP
#define QTRANS_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"

namespace qtrans {

// Sparse multivariate polynomial over Q in a fixed number of variables.
//
// Terms are kept sorted in decreasing grevlex order with no zero
// coefficients, so structural equality is mathematical equality.
class Poly
{
public:
    struct Term
    {
        Monomial mono;
        Rat coeff;

        friend bool operator==(const Term&, const Term&) = default;
    };

    Poly() = default;
    explicit Poly(int arity) : arity_(arity)
    {
        if (arity < 0 || arity > kMaxArity) throw std::invalid_argument("poly: bad arity");
    }

    static Poly constant(int arity, const Rat& c)
    {
        Poly p(arity);
        if (!qtrans::is_zero(c)) p.terms_.push_back({Monomial(arity), c});
        return p;
    }

    static Poly variable(int arity, int var)
    {
        Poly p(arity);
        p.terms_.push_back({Monomial::unit(arity, var), Rat(1)});
        return p;
    }

    static Poly term(const Monomial& m, const Rat& c)
    {
        Poly p(m.arity());
        if (!qtrans::is_zero(c)) p.terms_.push_back({m, c});
        return p;
    }

    // Accepts terms in any order, merges duplicates and drops zeros.
    static Poly from_terms(int arity, std::vector<Term> terms)
    {
        Poly p(arity);
        for (const auto& t : terms)
            if (t.mono.arity() != arity) throw std::invalid_argument("poly: term arity mismatch");
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return GrevlexGreater{}(a.mono, b.mono); });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
                p.terms_.back().coeff += t.coeff;
            else
                p.terms_.push_back(std::move(t));
            if (qtrans::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
        }
        return p;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    // Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree()); }

    int degree_in(int var) const
    {
        check_var(var);
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono[var]));
        return d;
    }

    int min_degree() const
    {
        return terms_.empty() ? -1 : static_cast<int>(terms_.back().mono.degree());
    }

    bool depends_on(int var) const
    {
        check_var(var);
        for (const auto& t : terms_)
            if (t.mono[var] != 0) return true;
        return false;
    }

    const Term& leading_term() const
    {
        if (terms_.empty()) throw std::domain_error("poly: zero polynomial has no leading term");
        return terms_.front();
    }

    Rat leading_coefficient() const { return terms_.empty() ? Rat(0) : terms_.front().coeff; }

    Rat coefficient(const Monomial& m) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
            return GrevlexGreater{}(t.mono, key);
        });
        return (it != terms_.end() && it->mono == m) ? it->coeff : Rat(0);
    }

    Rat constant_coefficient() const { return coefficient(Monomial(arity_)); }

    Rat evaluate(std::span<const Rat> point) const
    {
        if (static_cast<int>(point.size()) != arity_) throw std::invalid_argument("poly: evaluation point arity");
        Rat sum = 0;
        std::vector<std::vector<Rat>> powers(static_cast<std::size_t>(arity_));
        for (const auto& t : terms_) {
            Rat v = t.coeff;
            for (int i = 0; i < arity_; ++i) {
                unsigned e = t.mono[i];
                if (e == 0) continue;
                auto& pw = powers[std::size_t(i)];
                if (pw.empty()) pw.push_back(Rat(1));
                while (pw.size() <= e) pw.push_back(pw.back() * point[std::size_t(i)]);
                v *= pw[e];
            }
            sum += v;
        }
        return sum;
    }

    // Reinterpret in `arity` >= arity() variables; new variables are appended.
    Poly embed(int arity) const
    {
        if (arity < arity_) throw std::invalid_argument("poly: embed into smaller arity");
        Poly p(arity);
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.mono.embedded(arity), t.coeff});
        // Appending zero exponents preserves the grevlex order.
        return p;
    }

    Poly operator-() const
    {
        Poly p = *this;
        for (auto& t : p.terms_) t.coeff = -t.coeff;
        return p;
    }

    Poly& operator+=(const Poly& o) { return *this = add(*this, o, false); }
    Poly& operator-=(const Poly& o) { return *this = add(*this, o, true); }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rat& c)
    {
        if (qtrans::is_zero(c)) {
            terms_.clear();
        } else {
            for (auto& t : terms_) t.coeff *= c;
        }
        return *this;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return add(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return add(a, b, true); }
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return Poly(a.arity_);
        if (a.size() == 1 || b.size() == 1) {
            const Poly& single = a.size() == 1 ? a : b;
            const Poly& other = a.size() == 1 ? b : a;
            Poly p(a.arity_);
            p.terms_.reserve(other.size());
            // Multiplying by one monomial preserves the order.
            for (const auto& t : other.terms_)
                p.terms_.push_back({t.mono * single.terms_[0].mono, t.coeff * single.terms_[0].coeff});
            return p;
        }
        std::unordered_map<Monomial, Rat, MonomialHash> acc;
        acc.reserve(a.size() * b.size());
        Rat prod;
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) {
                prod = s.coeff * t.coeff;
                auto [it, inserted] = acc.try_emplace(s.mono * t.mono, prod);
                if (!inserted) it->second += prod;
            }
        Poly p(a.arity_);
        p.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!qtrans::is_zero(c)) p.terms_.push_back({m, std::move(c)});
        std::sort(p.terms_.begin(), p.terms_.end(),
                  [](const Term& x, const Term& y) { return GrevlexGreater{}(x.mono, y.mono); });
        return p;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.arity_ == b.arity_ && a.terms_ == b.terms_; }

private:
    void check_var(int var) const
    {
        if (var < 0 || var >= arity_)
            throw std::out_of_range("poly: variable index " + std::to_string(var) + " out of range for arity "
                                    + std::to_string(arity_));
    }

    static void check_same(const Poly& a, const Poly& b)
    {
        if (a.arity_ != b.arity_)
            throw std::invalid_argument("poly: arity mismatch (" + std::to_string(a.arity_) + " vs "
                                        + std::to_string(b.arity_) + ")");
    }

    static Poly add(const Poly& a, const Poly& b, bool negate_b)
    {
        check_same(a, b);
        Poly p(a.arity_);
        p.terms_.reserve(a.size() + b.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && GrevlexGreater{}(i->mono, j->mono))) {
                p.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || GrevlexGreater{}(j->mono, i->mono)) {
                p.terms_.push_back({j->mono, negate_b ? Rat(-j->coeff) : j->coeff});
                ++j;
            } else {
                Rat c = negate_b ? Rat(i->coeff - j->coeff) : Rat(i->coeff + j->coeff);
                if (!qtrans::is_zero(c)) p.terms_.push_back({i->mono, std::move(c)});
                ++i;
                ++j;
            }
        }
        return p;
    }

    std::vector<Term> terms_;
    int arity_ = 0;
};

inline Poly pow(const Poly& base, unsigned k)
{
    Poly result = Poly::constant(base.arity(), 1);
    Poly b = base;
    while (k > 0) {
        if (k & 1u) result *= b;
        k >>= 1;
        if (k > 0) b = b * b;
    }
    return result;
}

inline Poly scale(const Poly& p, const Rat& c) { return p * c; }

// Partial derivative with respect to variable `var` (0-based).
inline Poly derive(const Poly& f, int var)
{
    if (var < 0 || var >= f.arity())
        throw std::out_of_range("derive: variable index " + std::to_string(var) + " out of range");
    std::vector<Poly::Term> out;
    out.reserve(f.size());
    for (const auto& t : f) {
        unsigned e = t.mono[var];
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set(var, e - 1);
        out.push_back({m, t.coeff * e});
    }
    return Poly::from_terms(f.arity(), std::move(out));
}

inline bool is_homogeneous(const Poly& f, int d)
{
    for (const auto& t : f)
        if (static_cast<int>(t.mono.degree()) != d) return false;
    return true;
}

// Homogeneous f (zero counts as homogeneous of every degree).
inline bool is_homogeneous(const Poly& f)
{
    return f.is_zero() || is_homogeneous(f, f.degree());
}

inline std::map<int, Poly> homogeneous_parts(const Poly& f)
{
    std::map<int, std::vector<Poly::Term>> buckets;
    for (const auto& t : f) buckets[static_cast<int>(t.mono.degree())].push_back(t);
    std::map<int, Poly> parts;
    for (auto& [d, terms] : buckets) parts.emplace(d, Poly::from_terms(f.arity(), std::move(terms)));
    return parts;
}

} // namespace qtrans

#endif

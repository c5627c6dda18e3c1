#ifndef QTRANS_POLY_MAP_HPP
#define QTRANS_POLY_MAP_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "expr.hpp"
#include "poly.hpp"

namespace qtrans {

// Column vector of polynomials sharing one arity.
class PolyMap
{
public:
    PolyMap() = default;

    PolyMap(int arity, std::vector<Poly> components) : arity_(arity), comps_(std::move(components))
    {
        if (comps_.empty()) throw std::invalid_argument("polymap: empty map");
        for (const auto& c : comps_)
            if (c.arity() != arity_) throw std::invalid_argument("polymap: component arity mismatch");
    }

    explicit PolyMap(std::vector<Poly> components)
        : PolyMap(components.empty() ? 0 : components.front().arity(), std::move(components))
    {}

    static PolyMap identity(int n)
    {
        std::vector<Poly> c;
        for (int i = 0; i < n; ++i) c.push_back(Poly::variable(n, i));
        return PolyMap(n, std::move(c));
    }

    static PolyMap zero(int components, int arity) { return PolyMap(arity, std::vector<Poly>(std::size_t(components), Poly(arity))); }

    static PolyMap constant(int arity, std::span<const Rat> values)
    {
        std::vector<Poly> c;
        for (const auto& v : values) c.push_back(Poly::constant(arity, v));
        return PolyMap(arity, std::move(c));
    }

    int arity() const { return arity_; }
    int size() const { return static_cast<int>(comps_.size()); }
    bool is_square() const { return size() == arity_; }
    const Poly& operator[](int i) const { return comps_.at(std::size_t(i)); }
    Poly& operator[](int i) { return comps_.at(std::size_t(i)); }
    const std::vector<Poly>& components() const { return comps_; }
    auto begin() const { return comps_.begin(); }
    auto end() const { return comps_.end(); }

    bool is_zero() const
    {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    int degree() const
    {
        int d = -1;
        for (const auto& c : comps_) d = std::max(d, c.degree());
        return d;
    }

    PolyMap embed(int arity) const
    {
        std::vector<Poly> c;
        for (const auto& p : comps_) c.push_back(p.embed(arity));
        return PolyMap(arity, std::move(c));
    }

    friend PolyMap operator+(const PolyMap& a, const PolyMap& b) { return zip(a, b, false); }
    friend PolyMap operator-(const PolyMap& a, const PolyMap& b) { return zip(a, b, true); }

    friend PolyMap operator*(const Poly& g, const PolyMap& m)
    {
        std::vector<Poly> c;
        for (const auto& p : m.comps_) c.push_back(g * p);
        return PolyMap(m.arity_, std::move(c));
    }

    friend PolyMap operator*(const Rat& s, const PolyMap& m)
    {
        std::vector<Poly> c;
        for (const auto& p : m.comps_) c.push_back(s * p);
        return PolyMap(m.arity_, std::move(c));
    }

    PolyMap operator-() const { return Rat(-1) * *this; }

    friend bool operator==(const PolyMap& a, const PolyMap& b) = default;

private:
    static PolyMap zip(const PolyMap& a, const PolyMap& b, bool sub)
    {
        if (a.size() != b.size() || a.arity_ != b.arity_) throw std::invalid_argument("polymap: shape mismatch");
        std::vector<Poly> c;
        for (int i = 0; i < a.size(); ++i) c.push_back(sub ? a[i] - b[i] : a[i] + b[i]);
        return PolyMap(a.arity_, std::move(c));
    }

    int arity_ = 0;
    std::vector<Poly> comps_;
};

// Substitutes the components of `values` for the variables of polynomials of
// arity values.size(). Powers of the substituted components are cached, so
// one Substitution should be reused for all components of a map.
class Substitution
{
public:
    explicit Substitution(const PolyMap& values)
        : values_(values), powers_(std::size_t(values.size()))
    {}

    Poly operator()(const Poly& f)
    {
        if (f.arity() != values_.size())
            throw std::invalid_argument("compose: polynomial has arity " + std::to_string(f.arity())
                                        + " but " + std::to_string(values_.size()) + " values given");
        const int out_arity = values_.arity();
        Poly acc(out_arity);
        for (const auto& t : f) {
            Poly term = Poly::constant(out_arity, t.coeff);
            for (int i = 0; i < f.arity(); ++i) {
                unsigned e = t.mono[i];
                if (e != 0) term = term * power(i, e);
            }
            acc += term;
        }
        return acc;
    }

    PolyMap operator()(const PolyMap& f)
    {
        std::vector<Poly> c;
        for (const auto& p : f) c.push_back((*this)(p));
        return PolyMap(values_.arity(), std::move(c));
    }

private:
    const Poly& power(int var, unsigned e)
    {
        auto& pw = powers_[std::size_t(var)];
        if (pw.empty()) pw.push_back(values_[var]);
        while (pw.size() < e) pw.push_back(pw.back() * values_[var]);
        return pw[e - 1];
    }

    const PolyMap& values_;
    std::vector<std::vector<Poly>> powers_;
};

// f(G): substitute G_i for x_i.
inline Poly compose(const Poly& f, const PolyMap& g) { return Substitution(g)(f); }

// F(G). The arity of F must equal the number of components of G.
inline PolyMap compose(const PolyMap& f, const PolyMap& g)
{
    if (f.arity() != g.size())
        throw std::invalid_argument("compose: map of arity " + std::to_string(f.arity()) + " cannot take "
                                    + std::to_string(g.size()) + " components");
    return Substitution(g)(f);
}

inline PolyMap parse_map(std::string_view text, const VarNames& vars, char separator = ';')
{
    std::vector<Poly> comps;
    std::size_t start = 0;
    for (;;) {
        std::size_t end = text.find(separator, start);
        std::string_view piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        try {
            comps.push_back(parse(piece, vars));
        } catch (const ParseError& e) {
            throw ParseError("component " + std::to_string(comps.size() + 1) + ": " + e.message(),
                             start + e.position());
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return PolyMap(static_cast<int>(vars.size()), std::move(comps));
}

inline std::string print(const PolyMap& m, const VarNames& vars)
{
    std::string s;
    for (int i = 0; i < m.size(); ++i) {
        if (i) s += "; ";
        s += print(m[i], vars);
    }
    return s;
}

inline std::string print(const PolyMap& m) { return print(m, indexed_names(m.arity())); }

} // namespace qtrans

#endif

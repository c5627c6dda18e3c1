#ifndef QTRANS_MONOMIAL_HPP
#define QTRANS_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>

namespace qtrans {

// Hard upper bound on the number of variables of any polynomial.
inline constexpr int kMaxArity = 16;

// Exponent vector of fixed capacity. The arity is part of the value: two
// monomials with different arity never compare equal.
class Monomial
{
public:
    using exponent_type = std::uint16_t;

    Monomial() = default;

    explicit Monomial(int arity) : arity_(check_arity(arity)) {}

    Monomial(int arity, std::initializer_list<unsigned> exps) : Monomial(arity)
    {
        if (static_cast<int>(exps.size()) != arity)
            throw std::invalid_argument("monomial: exponent count differs from arity");
        int i = 0;
        for (unsigned e : exps) set(i++, e);
    }

    static Monomial from_exponents(std::span<const unsigned> exps)
    {
        Monomial m(static_cast<int>(exps.size()));
        for (std::size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
        return m;
    }

    static Monomial unit(int arity, int var, unsigned e = 1)
    {
        Monomial m(arity);
        m.set(var, e);
        return m;
    }

    int arity() const { return arity_; }
    unsigned degree() const { return degree_; }
    unsigned operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }

    void set(int i, unsigned e)
    {
        if (i < 0 || i >= arity_) throw std::out_of_range("monomial: variable index out of range");
        if (e > 0xFFFFu) throw std::overflow_error("monomial: exponent overflow");
        degree_ = degree_ - exp_[static_cast<std::size_t>(i)] + e;
        exp_[static_cast<std::size_t>(i)] = static_cast<exponent_type>(e);
    }

    bool is_one() const { return degree_ == 0; }

    Monomial operator*(const Monomial& o) const
    {
        Monomial r(arity_);
        for (int i = 0; i < arity_; ++i) {
            unsigned e = unsigned(exp_[std::size_t(i)]) + o.exp_[std::size_t(i)];
            if (e > 0xFFFFu) throw std::overflow_error("monomial: exponent overflow");
            r.exp_[std::size_t(i)] = static_cast<exponent_type>(e);
        }
        r.degree_ = degree_ + o.degree_;
        return r;
    }

    bool divides(const Monomial& o) const
    {
        for (int i = 0; i < arity_; ++i)
            if (exp_[std::size_t(i)] > o.exp_[std::size_t(i)]) return false;
        return true;
    }

    // Precondition: d.divides(*this).
    Monomial operator/(const Monomial& d) const
    {
        Monomial r(arity_);
        for (int i = 0; i < arity_; ++i)
            r.exp_[std::size_t(i)] = static_cast<exponent_type>(exp_[std::size_t(i)] - d.exp_[std::size_t(i)]);
        r.degree_ = degree_ - d.degree_;
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b)
    {
        Monomial r(a.arity_);
        for (int i = 0; i < a.arity_; ++i) r.set(i, std::min(a[i], b[i]));
        return r;
    }

    // Same exponents in the first `arity` slots, zeros appended.
    Monomial embedded(int arity) const
    {
        Monomial r(arity);
        for (int i = 0; i < std::min(arity, arity_); ++i) r.set(i, exp_[std::size_t(i)]);
        return r;
    }

    std::size_t hash() const
    {
        std::size_t h = 1469598103934665603ull;
        for (int i = 0; i < arity_; ++i) {
            h ^= exp_[std::size_t(i)];
            h *= 1099511628211ull;
        }
        return h;
    }

    friend bool operator==(const Monomial& a, const Monomial& b)
    {
        return a.arity_ == b.arity_ && a.degree_ == b.degree_ && a.exp_ == b.exp_;
    }

private:
    static int check_arity(int arity)
    {
        if (arity < 0 || arity > kMaxArity)
            throw std::invalid_argument("monomial: arity " + std::to_string(arity) + " outside [0, "
                                        + std::to_string(kMaxArity) + "]");
        return arity;
    }

    std::array<exponent_type, kMaxArity> exp_{};
    std::uint32_t degree_ = 0;
    int arity_ = 0;
};

// Graded reverse lexicographic comparison: total degree first, then the
// monomial with the smaller exponent in the last differing variable is larger.
inline std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (int i = a.arity() - 1; i >= 0; --i)
        if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
}

// Strict weak order putting the grevlex-largest monomial first.
struct GrevlexGreater
{
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

struct MonomialHash
{
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace qtrans

#endif

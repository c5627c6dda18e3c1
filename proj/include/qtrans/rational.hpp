#ifndef QTRANS_RATIONAL_HPP
#define QTRANS_RATIONAL_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qtrans {

// Exact rational scalar. GMP keeps every value canonical (reduced, positive
// denominator, zero is 0/1).
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_one(const Rat& r) { return r == 1; }

// "a" for integers, "a/b" otherwise; this is the literal form accepted by the
// expression parser.
inline std::string to_string(const Rat& r) { return r.get_str(); }

// Always "a/b", used by the JSON documents.
inline std::string to_fraction_string(const Rat& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat parse_rational(std::string_view text)
{
    std::string s(text);
    auto ok_digits = [](std::string_view d) {
        if (!d.empty() && (d.front() == '-' || d.front() == '+')) d.remove_prefix(1);
        if (d.empty()) return false;
        for (char c : d)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string_view num = std::string_view(s).substr(0, slash);
    std::string_view den = slash == std::string::npos ? std::string_view("1")
                                                      : std::string_view(s).substr(slash + 1);
    if (!ok_digits(num) || !ok_digits(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational '" + s + "'");
    Int n(std::string(num.front() == '+' ? num.substr(1) : num));
    Int d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Int lcm(const Int& a, const Int& b)
{
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace qtrans

#endif

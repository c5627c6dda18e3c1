#ifndef QTRANS_EXPR_HPP
#define QTRANS_EXPR_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "poly.hpp"

namespace qtrans {

using VarNames = std::vector<std::string>;

// x1..xn, or y1..yn with prefix "y".
inline VarNames indexed_names(int n, std::string_view prefix = "x")
{
    VarNames v;
    for (int i = 1; i <= n; ++i) v.push_back(std::string(prefix) + std::to_string(i));
    return v;
}

// x1..xn followed by t.
inline VarNames names_with_t(int n)
{
    VarNames v = indexed_names(n);
    v.push_back("t");
    return v;
}

class ParseError : public std::invalid_argument
{
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), message_(what),
          position_(position)
    {}

    const std::string& message() const { return message_; }
    std::size_t position() const { return position_; }

private:
    std::string message_;
    std::size_t position_;
};

namespace detail {

// Recursive descent over
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ['^' integer]
//   primary := integer ['/' integer] | identifier | '(' expr ')'
class ExprParser
{
public:
    ExprParser(std::string_view text, const VarNames& vars) : text_(text), vars_(vars) {}

    Poly parse()
    {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    int arity() const { return static_cast<int>(vars_.size()); }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError("syntax error: " + msg, pos_); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr()
    {
        Poly acc(arity());
        bool first = true;
        for (;;) {
            skip_ws();
            bool negate = false;
            if (accept('-')) {
                negate = true;
            } else if (accept('+')) {
            } else if (!first) {
                break;
            }
            Poly t = term();
            acc = negate ? acc - t : acc + t;
            first = false;
        }
        return acc;
    }

    Poly term()
    {
        Poly acc = unary();
        while (accept('*')) acc = acc * unary();
        return acc;
    }

    Poly unary()
    {
        if (accept('-')) return -unary();
        return power();
    }

    Poly power()
    {
        Poly base = primary();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            std::string digits = read_digits();
            if (digits.empty()) fail("expected non-negative integer exponent");
            if (digits.size() > 6) throw ParseError("exponent too large", start);
            return pow(base, static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    std::string read_digits()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Poly primary()
    {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num(read_digits());
            Int den(1);
            std::size_t save = pos_;
            if (accept('/')) {
                skip_ws();
                std::string d = read_digits();
                if (d.empty()) {
                    pos_ = save;
                    fail("expected integer denominator");
                }
                den = Int(d);
                if (den == 0) throw ParseError("zero denominator", save);
            }
            Rat r(num, den);
            r.canonicalize();
            return Poly::constant(arity(), r);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string id(text_.substr(start, pos_ - start));
            auto it = std::find(vars_.begin(), vars_.end(), id);
            if (it == vars_.end()) throw ParseError("unknown identifier '" + id + "'", start);
            return Poly::variable(arity(), static_cast<int>(it - vars_.begin()));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const VarNames& vars_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Poly parse(std::string_view text, const VarNames& vars)
{
    if (static_cast<int>(vars.size()) > kMaxArity) throw std::invalid_argument("parse: too many variables");
    return detail::ExprParser(text, vars).parse();
}

inline Poly parse(std::string_view text, int arity) { return parse(text, indexed_names(arity)); }

// Canonical printer: terms in decreasing grevlex order, "c*x1^2*x3" style.
inline std::string print(const Poly& p, const VarNames& vars)
{
    if (static_cast<int>(vars.size()) != p.arity()) throw std::invalid_argument("print: variable name count");
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p) {
        Rat c = t.coeff;
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        c = abs(c);
        bool need_star = false;
        if (c != 1 || t.mono.is_one()) {
            os << to_string(c);
            need_star = true;
        }
        for (int i = 0; i < p.arity(); ++i) {
            unsigned e = t.mono[i];
            if (e == 0) continue;
            if (need_star) os << '*';
            os << vars[std::size_t(i)];
            if (e > 1) os << '^' << e;
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

inline std::string print(const Poly& p) { return print(p, indexed_names(p.arity())); }

// Highest index N among identifiers x<N> (or y<N>) occurring in `text`.
inline int max_variable_index(std::string_view text)
{
    int best = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        bool boundary = i == 0 || !std::isalnum(static_cast<unsigned char>(text[i - 1]));
        if (boundary && (c == 'x' || c == 'y') && i + 1 < text.size()
            && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j - i - 1 <= 3) best = std::max(best, std::stoi(std::string(text.substr(i + 1, j - i - 1))));
            i = j - 1;
        }
    }
    return best;
}

} // namespace qtrans

#endif

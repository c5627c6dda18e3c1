#ifndef QTRANS_POLY_MATRIX_HPP
#define QTRANS_POLY_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gcd.hpp"
#include "linalg.hpp"
#include "poly_map.hpp"

namespace qtrans {

// Row-major matrix of polynomials of a common arity.
class PolyMatrix
{
public:
    PolyMatrix() = default;

    PolyMatrix(int rows, int cols, int arity)
        : rows_(rows), cols_(cols), arity_(arity), data_(std::size_t(rows) * std::size_t(cols), Poly(arity))
    {
        if (rows < 0 || cols < 0) throw std::invalid_argument("polymatrix: negative dimension");
    }

    static PolyMatrix identity(int n, int arity)
    {
        PolyMatrix m(n, n, arity);
        for (int i = 0; i < n; ++i) m(i, i) = Poly::constant(arity, 1);
        return m;
    }

    static PolyMatrix from_constant(const RatMatrix& c, int arity)
    {
        PolyMatrix m(c.rows(), c.cols(), arity);
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j) m(i, j) = Poly::constant(arity, c(i, j));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int arity() const { return arity_; }
    bool is_square() const { return rows_ == cols_; }

    Poly& operator()(int i, int j) { return data_.at(index(i, j)); }
    const Poly& operator()(int i, int j) const { return data_.at(index(i, j)); }

    bool is_zero() const
    {
        for (const auto& p : data_)
            if (!p.is_zero()) return false;
        return true;
    }

    bool is_symmetric() const
    {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    int max_degree() const
    {
        int d = -1;
        for (const auto& p : data_) d = std::max(d, p.degree());
        return d;
    }

    PolyMatrix transpose() const
    {
        PolyMatrix t(cols_, rows_, arity_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RatMatrix evaluate(std::span<const Rat> point) const
    {
        RatMatrix m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(point);
        return m;
    }

    PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const
    {
        PolyMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()), arity_);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) s(int(i), int(j)) = (*this)(rows[i], cols[j]);
        return s;
    }

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b)
    {
        check_same_shape(a, b);
        PolyMatrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
        return c;
    }

    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b)
    {
        check_same_shape(a, b);
        PolyMatrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
        return c;
    }

    friend PolyMatrix operator*(const Poly& s, const PolyMatrix& a)
    {
        PolyMatrix c = a;
        for (auto& p : c.data_) p = s * p;
        return c;
    }

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t index(int i, int j) const
    {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("polymatrix: index out of range");
        return std::size_t(i) * std::size_t(cols_) + std::size_t(j);
    }

    static void check_same_shape(const PolyMatrix& a, const PolyMatrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.arity_ != b.arity_)
            throw std::invalid_argument("polymatrix: shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    int arity_ = 0;
    std::vector<Poly> data_;
};

// Rows are components, columns are variables.
inline PolyMatrix jacobian(const PolyMap& f)
{
    PolyMatrix j(f.size(), f.arity(), f.arity());
    for (int i = 0; i < f.size(); ++i)
        for (int k = 0; k < f.arity(); ++k) j(i, k) = derive(f[i], k);
    return j;
}

// Jacobian of a single polynomial as a 1 x n row.
inline PolyMatrix jacobian(const Poly& f) { return jacobian(PolyMap(f.arity(), {f})); }

inline PolyMap gradient(const Poly& h)
{
    std::vector<Poly> c;
    for (int k = 0; k < h.arity(); ++k) c.push_back(derive(h, k));
    return PolyMap(h.arity(), std::move(c));
}

inline PolyMatrix hessian(const Poly& h) { return jacobian(gradient(h)); }

inline PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols() != b.rows() || a.arity() != b.arity())
        throw std::invalid_argument("matmul: inner dimensions " + std::to_string(a.cols()) + " and "
                                    + std::to_string(b.rows()) + " differ");
    PolyMatrix c(a.rows(), b.cols(), a.arity());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

inline PolyMap matmul(const PolyMatrix& a, const PolyMap& v)
{
    if (a.cols() != v.size() || a.arity() != v.arity())
        throw std::invalid_argument("matmul: matrix has " + std::to_string(a.cols()) + " columns, vector has "
                                    + std::to_string(v.size()) + " entries");
    std::vector<Poly> out(std::size_t(a.rows()), Poly(a.arity()));
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k)
            if (!a(i, k).is_zero() && !v[k].is_zero()) out[std::size_t(i)] += a(i, k) * v[k];
    return PolyMap(a.arity(), std::move(out));
}

// Constant matrix times a polynomial vector.
inline PolyMap matmul(const RatMatrix& a, const PolyMap& v)
{
    return matmul(PolyMatrix::from_constant(a, v.arity()), v);
}

inline PolyMatrix matrix_power(const PolyMatrix& a, unsigned k)
{
    if (!a.is_square()) throw std::invalid_argument("matrix_power: matrix is not square");
    PolyMatrix r = PolyMatrix::identity(a.rows(), a.arity());
    for (unsigned i = 0; i < k; ++i) r = matmul(r, a);
    return r;
}

// Substitute the components of `values` into every entry.
inline PolyMatrix compose(const PolyMatrix& m, const PolyMap& values)
{
    Substitution sub(values);
    PolyMatrix out(m.rows(), m.cols(), values.arity());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = sub(m(i, j));
    return out;
}

// Determinant by Laplace expansion along the first row.
inline Poly cofactor_determinant(const PolyMatrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("det: matrix is not square");
    const int n = m.rows();
    if (n == 0) return Poly::constant(m.arity(), 1);
    if (n == 1) return m(0, 0);
    Poly acc(m.arity());
    std::vector<int> rows;
    for (int i = 1; i < n; ++i) rows.push_back(i);
    for (int j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        std::vector<int> cols;
        for (int k = 0; k < n; ++k)
            if (k != j) cols.push_back(k);
        Poly minor = cofactor_determinant(m.submatrix(rows, cols));
        Poly term = m(0, j) * minor;
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Determinant by Bareiss fraction-free elimination; every division is exact.
// Sizes up to 3 use cofactor expansion.
inline Poly det(const PolyMatrix& input)
{
    if (!input.is_square()) throw std::invalid_argument("det: matrix is not square");
    const int n = input.rows();
    if (n <= 3) return cofactor_determinant(input);
    PolyMatrix m = input;
    Poly prev = Poly::constant(m.arity(), 1);
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k).is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m(i, k).is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return Poly(m.arity());
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Poly num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = *divide_exact(num, prev);
            }
        prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

} // namespace qtrans

#endif

#ifndef QTRANS_LINALG_HPP
#define QTRANS_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace qtrans {

using RatVector = std::vector<Rat>;

// Dense row-major matrix over Q.
class RatMatrix
{
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * std::size_t(cols)) {}

    RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows)
    {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ratmatrix: ragged rows");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static RatMatrix identity(int n)
    {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static RatMatrix from_rows(const std::vector<RatVector>& rows, int cols)
    {
        RatMatrix m(static_cast<int>(rows.size()), cols);
        for (int i = 0; i < m.rows_; ++i) {
            if (static_cast<int>(rows[std::size_t(i)].size()) != cols) throw std::invalid_argument("ratmatrix: row length");
            for (int j = 0; j < cols; ++j) m(i, j) = rows[std::size_t(i)][std::size_t(j)];
        }
        return m;
    }

    static RatMatrix from_columns(const std::vector<RatVector>& cols, int rows)
    {
        RatMatrix m(rows, static_cast<int>(cols.size()));
        for (int j = 0; j < m.cols_; ++j) {
            if (static_cast<int>(cols[std::size_t(j)].size()) != rows) throw std::invalid_argument("ratmatrix: column length");
            for (int i = 0; i < rows; ++i) m(i, j) = cols[std::size_t(j)][std::size_t(i)];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& operator()(int i, int j) { return data_[std::size_t(i) * std::size_t(cols_) + std::size_t(j)]; }
    const Rat& operator()(int i, int j) const { return data_[std::size_t(i) * std::size_t(cols_) + std::size_t(j)]; }

    RatVector row(int i) const { return RatVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
    RatVector column(int j) const
    {
        RatVector v;
        for (int i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    RatMatrix transpose() const
    {
        RatMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("ratmatrix: product dimension mismatch");
        RatMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend RatVector operator*(const RatMatrix& a, const RatVector& v)
    {
        if (a.cols_ != static_cast<int>(v.size())) throw std::invalid_argument("ratmatrix: vector dimension mismatch");
        RatVector r(std::size_t(a.rows_));
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r[std::size_t(i)] += a(i, j) * v[std::size_t(j)];
        return r;
    }

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> data_;
};

struct EchelonForm
{
    RatMatrix reduced;
    std::vector<int> pivot_columns;
    int rank() const { return static_cast<int>(pivot_columns.size()); }
};

// Reduced row echelon form by Gauss-Jordan elimination.
inline EchelonForm rref(RatMatrix m)
{
    EchelonForm out;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!is_zero(m(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        Rat inv = 1 / m(row, col);
        for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            Rat f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        out.pivot_columns.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

inline int rank(const RatMatrix& m) { return rref(m).rank(); }

// Nonzero rows of the reduced echelon form.
inline std::vector<RatVector> row_space_basis(const RatMatrix& m)
{
    EchelonForm e = rref(m);
    std::vector<RatVector> basis;
    for (int i = 0; i < e.rank(); ++i) basis.push_back(e.reduced.row(i));
    return basis;
}

// Basis of {v : m v = 0}, itself brought to reduced echelon form, so the
// first vector has the earliest possible leading position with entry 1.
inline std::vector<RatVector> kernel(const RatMatrix& m)
{
    EchelonForm e = rref(m);
    std::vector<bool> is_pivot(std::size_t(m.cols()), false);
    for (int c : e.pivot_columns) is_pivot[std::size_t(c)] = true;
    std::vector<RatVector> raw;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[std::size_t(f)]) continue;
        RatVector v(std::size_t(m.cols()));
        v[std::size_t(f)] = 1;
        for (int r = 0; r < e.rank(); ++r) v[std::size_t(e.pivot_columns[std::size_t(r)])] = -e.reduced(r, f);
        raw.push_back(std::move(v));
    }
    if (raw.empty()) return raw;
    return row_space_basis(RatMatrix::from_rows(raw, m.cols()));
}

inline Rat determinant(RatMatrix m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const int n = m.rows();
    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!is_zero(m(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            Rat f = m(i, c) / m(c, c);
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

inline RatMatrix inverse(const RatMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
    const int n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    EchelonForm e = rref(aug);
    if (e.rank() < n || e.pivot_columns[std::size_t(n - 1)] != n - 1)
        throw std::domain_error("inverse: matrix is singular");
    RatMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

// Numeric elimination with full pivoting; records which rows and columns
// carried pivots so that the corresponding minor is nonzero.
struct PivotedRank
{
    int rank = 0;
    std::vector<int> rows;
    std::vector<int> cols;
};

inline PivotedRank pivoted_rank(RatMatrix m)
{
    PivotedRank out;
    std::vector<int> row_id(std::size_t(m.rows())), col_id(std::size_t(m.cols()));
    for (int i = 0; i < m.rows(); ++i) row_id[std::size_t(i)] = i;
    for (int j = 0; j < m.cols(); ++j) col_id[std::size_t(j)] = j;
    for (int k = 0; k < std::min(m.rows(), m.cols()); ++k) {
        int pr = -1, pc = -1;
        for (int i = k; i < m.rows() && pr < 0; ++i)
            for (int j = k; j < m.cols(); ++j)
                if (!is_zero(m(i, j))) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        if (pr != k) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(k, j));
            std::swap(row_id[std::size_t(pr)], row_id[std::size_t(k)]);
        }
        if (pc != k) {
            for (int i = 0; i < m.rows(); ++i) std::swap(m(i, pc), m(i, k));
            std::swap(col_id[std::size_t(pc)], col_id[std::size_t(k)]);
        }
        for (int i = k + 1; i < m.rows(); ++i) {
            if (is_zero(m(i, k))) continue;
            Rat f = m(i, k) / m(k, k);
            for (int j = k; j < m.cols(); ++j) m(i, j) -= f * m(k, j);
        }
        out.rows.push_back(row_id[std::size_t(k)]);
        out.cols.push_back(col_id[std::size_t(k)]);
        ++out.rank;
    }
    return out;
}

} // namespace qtrans

#endif

#ifndef PCOHO_MATRIX_HPP
#define PCOHO_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace pcoho
{

// Dense row-major matrix over Q. A linear map A -> B is stored as a
// dim(B) x dim(A) matrix acting on column vectors.
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto &r : rows)
        {
            if (r.size() != cols_)
                throw StructuralError("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static Matrix from_columns(std::size_t rows, const std::vector<Vec> &cols)
    {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
        {
            if (cols[j].size() != rows)
                throw StructuralError("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) = cols[j][i];
        }
        return m;
    }

    static Matrix from_rows(std::size_t cols, const std::vector<Vec> &rows)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            if (rows[i].size() != cols)
                throw StructuralError("row length mismatch");
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Scalar &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

    Vec col(std::size_t j) const
    {
        Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    void set_col(std::size_t j, const Vec &v)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) = v[i];
    }

    bool is_zero() const
    {
        for (const auto &x : data_)
            if (sgn(x) != 0)
                return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Vec apply(const Vec &x) const
    {
        if (x.size() != cols_)
            throw StructuralError("matrix-vector shape mismatch: " + std::to_string(rows_) + "x" +
                                  std::to_string(cols_) + " * " + std::to_string(x.size()));
        Vec y = zero_vec(rows_);
        for (std::size_t j = 0; j < cols_; ++j)
        {
            if (sgn(x[j]) == 0)
                continue;
            for (std::size_t i = 0; i < rows_; ++i)
                if (sgn((*this)(i, j)) != 0)
                    y[i] += (*this)(i, j) * x[j];
        }
        return y;
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b)
    {
        if (a.cols_ != b.rows_)
            throw StructuralError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                                  std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                  std::to_string(b.cols_));
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
            {
                const Scalar &aik = a(i, k);
                if (sgn(aik) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (sgn(b(k, j)) != 0)
                        c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(Matrix a, const Matrix &b)
    {
        a.check_same(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix &b)
    {
        a.check_same(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] -= b.data_[i];
        return a;
    }

    friend Matrix operator*(const Scalar &s, Matrix a)
    {
        for (auto &x : a.data_)
            x *= s;
        return a;
    }

    friend Matrix operator-(Matrix a)
    {
        for (auto &x : a.data_)
            x = -x;
        return a;
    }

    friend bool operator==(const Matrix &a, const Matrix &b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    const std::vector<Scalar> &data() const noexcept { return data_; }

private:
    void check_same(const Matrix &b) const
    {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw StructuralError("matrix sum shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

// Stack blocks [A B; C D] given as a 2x2 grid (any block may be empty only
// if its row/col counts are implied by neighbours).
inline Matrix block2x2(const Matrix &a, const Matrix &b, const Matrix &c, const Matrix &d)
{
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
        throw StructuralError("block shape mismatch");
    Matrix m(a.rows() + c.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
        {
            bool top = i < a.rows(), left = j < a.cols();
            std::size_t ii = top ? i : i - a.rows(), jj = left ? j : j - a.cols();
            m(i, j) = top ? (left ? a(ii, jj) : b(ii, jj)) : (left ? c(ii, jj) : d(ii, jj));
        }
    return m;
}

inline Matrix hstack(const Matrix &a, const Matrix &b)
{
    if (a.rows() != b.rows())
        throw StructuralError("hstack row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
    {
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

inline Matrix vstack(const Matrix &a, const Matrix &b)
{
    if (a.cols() != b.cols())
        throw StructuralError("vstack column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, j) = b(i, j);
    return m;
}

} // namespace pcoho

#endif

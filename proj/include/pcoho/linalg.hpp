#ifndef PCOHO_LINALG_HPP
#define PCOHO_LINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace pcoho
{

struct Rref
{
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

namespace detail
{
using IntRow = std::vector<mpz_class>;

// Clear denominators row by row so elimination can run over Z.
inline std::vector<IntRow> integer_rows(const Matrix &m)
{
    std::vector<IntRow> rows(m.rows(), IntRow(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
    {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0)
                rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    return rows;
}

inline void exact_divide(mpz_class &x, const mpz_class &d)
{
    if (d == 1)
        return;
    if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
        throw std::logic_error("fraction-free elimination lost exact divisibility");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}
} // namespace detail

// Fraction-free Gauss-Jordan: every intermediate entry stays an integer
// minor of the scaled input, divided exactly by the previous pivot. Pivot is
// the first nonzero entry at or below the current row, columns left to right.
inline Rref rref(const Matrix &m)
{
    auto a = detail::integer_rows(m);
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c)
    {
        std::size_t p = r;
        while (p < R && sgn(a[p][c]) == 0)
            ++p;
        if (p == R)
            continue;
        std::swap(a[p], a[r]);
        const mpz_class piv = a[r][c];
        for (std::size_t i = 0; i < R; ++i)
        {
            if (i == r)
                continue;
            const mpz_class f = a[i][c];
            // every entry, left columns included, stays a minor of the input
            for (std::size_t j = 0; j < C; ++j)
            {
                a[i][j] = piv * a[i][j] - f * a[r][j];
                detail::exact_divide(a[i][j], prev);
            }
        }
        pivots.push_back(c);
        prev = piv;
        ++r;
    }

    Rref out;
    out.reduced = Matrix(R, C);
    out.pivots = pivots;
    out.rank = pivots.size();
    for (std::size_t i = 0; i < out.rank; ++i)
    {
        const mpz_class &d = a[i][pivots[i]];
        for (std::size_t j = 0; j < C; ++j)
            if (sgn(a[i][j]) != 0)
            {
                Scalar q(a[i][j], d);
                q.canonicalize();
                out.reduced(i, j) = q;
            }
    }
    return out;
}

inline std::size_t rank(const Matrix &m) { return rref(m).rank; }

inline std::vector<std::size_t> free_columns(const Rref &r, std::size_t cols)
{
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t j = 0; j < cols; ++j)
    {
        if (k < r.pivots.size() && r.pivots[k] == j)
            ++k;
        else
            out.push_back(j);
    }
    return out;
}

// Columns span the kernel; one column per free variable (ascending), with a
// 1 in that free slot and zeros in the other free slots.
inline Matrix kernel_from_rref(const Rref &r, std::size_t cols)
{
    auto fr = free_columns(r, cols);
    Matrix k(cols, fr.size());
    for (std::size_t t = 0; t < fr.size(); ++t)
    {
        k(fr[t], t) = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            k(r.pivots[i], t) = -r.reduced(i, fr[t]);
    }
    return k;
}

inline Matrix kernel_basis(const Matrix &m) { return kernel_from_rref(rref(m), m.cols()); }

// Particular solution with free variables set to zero.
inline std::optional<Vec> solve(const Matrix &m, const Vec &b)
{
    if (b.size() != m.rows())
        throw StructuralError("solve: right-hand side length mismatch");
    Matrix aug = hstack(m, Matrix::from_columns(m.rows(), {b}));
    Rref r = rref(aug);
    if (r.rank > 0 && r.pivots.back() == m.cols())
        return std::nullopt;
    Vec x = zero_vec(m.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        x[r.pivots[i]] = r.reduced(i, m.cols());
    if (m.apply(x) != b)
        throw std::logic_error("solve: re-substitution failed");
    return x;
}

inline std::optional<Matrix> inverse(const Matrix &m)
{
    if (!m.square())
        throw StructuralError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Rref r = rref(hstack(m, Matrix::identity(n)));
    if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1))
        return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = r.reduced(i, n + j);
    return inv;
}

inline bool is_invertible(const Matrix &m) { return m.square() && rank(m) == m.rows(); }

// Whether v lies in the column span of a.
inline bool in_column_span(const Matrix &a, const Vec &v)
{
    if (a.cols() == 0)
        return is_zero(v);
    return solve(a, v).has_value();
}

// Canonical basis of the column span: the nonzero rows of rref(aᵀ), as columns.
inline Matrix column_space(const Matrix &a)
{
    Rref r = rref(a.transpose());
    Matrix out(a.rows(), r.rank);
    for (std::size_t j = 0; j < r.rank; ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            out(i, j) = r.reduced(j, i);
    return out;
}

inline bool same_column_span(const Matrix &a, const Matrix &b) { return column_space(a) == column_space(b); }

} // namespace pcoho

#endif

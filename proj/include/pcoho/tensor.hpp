#ifndef PCOHO_TENSOR_HPP
#define PCOHO_TENSOR_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace pcoho
{

// Bilinear map A x B -> C with coefficient (i, j, k) = k-th coordinate of
// f(a_i, b_j). Storage is [i][j][k], output index innermost.
class Bilinear
{
public:
    Bilinear() = default;
    Bilinear(std::size_t a, std::size_t b, std::size_t c) : a_(a), b_(b), c_(c), data_(a * b * c, Scalar(0)) {}

    std::size_t left() const noexcept { return a_; }
    std::size_t right() const noexcept { return b_; }
    std::size_t out() const noexcept { return c_; }

    Scalar &operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * b_ + j) * c_ + k]; }
    const Scalar &operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * b_ + j) * c_ + k]; }

    Vec on_basis(std::size_t i, std::size_t j) const
    {
        auto it = data_.begin() + static_cast<std::ptrdiff_t>((i * b_ + j) * c_);
        return Vec(it, it + static_cast<std::ptrdiff_t>(c_));
    }

    void set_basis(std::size_t i, std::size_t j, const Vec &v)
    {
        for (std::size_t k = 0; k < c_; ++k)
            (*this)(i, j, k) = v[k];
    }

    Vec apply(const Vec &x, const Vec &y) const
    {
        if (x.size() != a_ || y.size() != b_)
            throw StructuralError("bilinear argument length mismatch");
        Vec out = zero_vec(c_);
        for (std::size_t i = 0; i < a_; ++i)
        {
            if (sgn(x[i]) == 0)
                continue;
            for (std::size_t j = 0; j < b_; ++j)
            {
                if (sgn(y[j]) == 0)
                    continue;
                Scalar w = x[i] * y[j];
                for (std::size_t k = 0; k < c_; ++k)
                    if (sgn((*this)(i, j, k)) != 0)
                        out[k] += w * (*this)(i, j, k);
            }
        }
        return out;
    }

    // Matrix of y -> f(e_i, y).
    Matrix left_action(std::size_t i) const
    {
        Matrix m(c_, b_);
        for (std::size_t j = 0; j < b_; ++j)
            for (std::size_t k = 0; k < c_; ++k)
                m(k, j) = (*this)(i, j, k);
        return m;
    }

    // Matrix of x -> f(x, e_j).
    Matrix right_action(std::size_t j) const
    {
        Matrix m(c_, a_);
        for (std::size_t i = 0; i < a_; ++i)
            for (std::size_t k = 0; k < c_; ++k)
                m(k, i) = (*this)(i, j, k);
        return m;
    }

    bool is_zero() const
    {
        for (const auto &x : data_)
            if (sgn(x) != 0)
                return false;
        return true;
    }

    bool symmetric() const
    {
        if (a_ != b_)
            return false;
        for (std::size_t i = 0; i < a_; ++i)
            for (std::size_t j = 0; j < a_; ++j)
                for (std::size_t k = 0; k < c_; ++k)
                    if ((*this)(i, j, k) != (*this)(j, i, k))
                        return false;
        return true;
    }

    bool antisymmetric() const
    {
        if (a_ != b_)
            return false;
        for (std::size_t i = 0; i < a_; ++i)
            for (std::size_t j = 0; j < a_; ++j)
                for (std::size_t k = 0; k < c_; ++k)
                    if ((*this)(i, j, k) != -(*this)(j, i, k))
                        return false;
        return true;
    }

    // (x, y) -> g(f(h1 x, h2 y)) for linear maps g: C->C', h1: A'->A, h2: B'->B.
    Bilinear transformed(const Matrix &g, const Matrix &h1, const Matrix &h2) const
    {
        if (g.cols() != c_ || h1.rows() != a_ || h2.rows() != b_)
            throw StructuralError("bilinear transform shape mismatch");
        Bilinear out(h1.cols(), h2.cols(), g.rows());
        for (std::size_t i = 0; i < h1.cols(); ++i)
            for (std::size_t j = 0; j < h2.cols(); ++j)
                out.set_basis(i, j, g.apply(apply(h1.col(i), h2.col(j))));
        return out;
    }

    friend Bilinear operator+(Bilinear x, const Bilinear &y)
    {
        x.check_same(y);
        for (std::size_t i = 0; i < x.data_.size(); ++i)
            x.data_[i] += y.data_[i];
        return x;
    }

    friend Bilinear operator-(Bilinear x, const Bilinear &y)
    {
        x.check_same(y);
        for (std::size_t i = 0; i < x.data_.size(); ++i)
            x.data_[i] -= y.data_[i];
        return x;
    }

    friend Bilinear operator*(const Scalar &s, Bilinear x)
    {
        for (auto &v : x.data_)
            v *= s;
        return x;
    }

    friend bool operator==(const Bilinear &, const Bilinear &) = default;

    const std::vector<Scalar> &data() const noexcept { return data_; }
    std::vector<Scalar> &data() noexcept { return data_; }

private:
    void check_same(const Bilinear &y) const
    {
        if (a_ != y.a_ || b_ != y.b_ || c_ != y.c_)
            throw StructuralError("bilinear shape mismatch");
    }

    std::size_t a_ = 0, b_ = 0, c_ = 0;
    std::vector<Scalar> data_;
};

// Family of matrices x_i -> End-type map, e.g. mu[i] = mu_{e_i}.
using MatrixFamily = std::vector<Matrix>;

// Linear combination sum_i x_i F[i].
inline Matrix combine(const MatrixFamily &f, const Vec &x, std::size_t rows, std::size_t cols)
{
    if (f.size() != x.size())
        throw StructuralError("matrix family length mismatch");
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (sgn(x[i]) != 0)
            out = out + x[i] * f[i];
    return out;
}

// The family x -> F_x viewed as the bilinear map (x, v) -> F_x v.
inline Bilinear family_as_bilinear(const MatrixFamily &f, std::size_t in, std::size_t out)
{
    Bilinear b(f.size(), in, out);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < in; ++j)
            for (std::size_t k = 0; k < out; ++k)
                b(i, j, k) = f[i](k, j);
    return b;
}

inline MatrixFamily bilinear_as_family(const Bilinear &b)
{
    MatrixFamily f;
    for (std::size_t i = 0; i < b.left(); ++i)
        f.push_back(b.left_action(i));
    return f;
}

inline MatrixFamily zero_family(std::size_t count, std::size_t rows, std::size_t cols)
{
    return MatrixFamily(count, Matrix(rows, cols));
}

} // namespace pcoho

#endif

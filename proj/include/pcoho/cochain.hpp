#ifndef PCOHO_COCHAIN_HPP
#define PCOHO_COCHAIN_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "linalg.hpp"

namespace pcoho
{

inline constexpr std::size_t kAmbientCap = 20000;
inline constexpr std::size_t kDefaultMaxDegree = 3;
inline constexpr std::size_t kHardMaxDegree = 4;

// Degree cap, overridable through PCOHO_MAX_DEGREE (1..4).
inline std::size_t max_degree()
{
    const char *env = std::getenv("PCOHO_MAX_DEGREE");
    if (env == nullptr || *env == '\0')
        return kDefaultMaxDegree;
    std::string s(env);
    if (s.size() != 1 || s[0] < '1' || s[0] > '4')
        throw StructuralError("PCOHO_MAX_DEGREE must be an integer in 1..4, got '" + s + "'");
    return static_cast<std::size_t>(s[0] - '0');
}

struct Bidegree
{
    std::size_t m = 0;
    std::size_t n = 0;
    friend bool operator==(const Bidegree &, const Bidegree &) = default;
    friend auto operator<=>(const Bidegree &, const Bidegree &) = default;
};

using Tuple = std::vector<std::size_t>;

inline std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Strictly increasing tuples of length k from {0..n-1}, lexicographic.
inline std::vector<Tuple> increasing_tuples(std::size_t n, std::size_t k)
{
    std::vector<Tuple> out;
    Tuple cur;
    auto rec = [&](auto &self, std::size_t start) -> void {
        if (cur.size() == k)
        {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i)
        {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline Tuple decode_tensor(std::size_t idx, std::size_t base, std::size_t len)
{
    Tuple t(len);
    for (std::size_t s = len; s-- > 0;)
    {
        t[s] = idx % base;
        idx /= base;
    }
    return t;
}

inline std::size_t encode_tensor(const Tuple &t, std::size_t base)
{
    std::size_t idx = 0;
    for (std::size_t a : t)
        idx = idx * base + a;
    return idx;
}

inline std::size_t ipow(std::size_t b, std::size_t e)
{
    std::size_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

// Sorts in place; returns the permutation sign, or 0 on a repeated index.
inline int sort_with_sign(Tuple &t)
{
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i)
        for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j)
        {
            if (t[j - 1] == t[j])
                return 0;
            std::swap(t[j - 1], t[j]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i - 1] == t[i])
            return 0;
    return sign;
}

struct Shuffle
{
    Tuple source; // source[pos] = which original argument sits at pos
    int sign;
};

// (i, m-i)-shuffles: the first i arguments keep their order in the chosen
// positions, the remaining ones fill the rest in order.
inline std::vector<Shuffle> shuffles(std::size_t i, std::size_t m)
{
    std::vector<Shuffle> out;
    for (const Tuple &pos : increasing_tuples(m, i))
    {
        Tuple src(m);
        std::vector<bool> chosen(m, false);
        for (std::size_t t = 0; t < i; ++t)
        {
            src[pos[t]] = t;
            chosen[pos[t]] = true;
        }
        std::size_t next = i;
        for (std::size_t p = 0; p < m; ++p)
            if (!chosen[p])
                src[p] = next++;
        int inv = 0;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                if (src[a] > src[b])
                    ++inv;
        out.push_back({src, inv % 2 == 0 ? 1 : -1});
    }
    return out;
}

// Shuffle constraints on the tensor slots alone: one row per (i, tuple).
inline Matrix tensor_shuffle_constraints(std::size_t m, std::size_t dimP)
{
    const std::size_t T = ipow(dimP, m);
    std::vector<Vec> rows;
    for (std::size_t i = 1; i < m; ++i)
    {
        auto sh = shuffles(i, m);
        for (std::size_t t = 0; t < T; ++t)
        {
            Tuple a = decode_tensor(t, dimP, m);
            Vec row = zero_vec(T);
            for (const auto &s : sh)
            {
                Tuple b(m);
                for (std::size_t p = 0; p < m; ++p)
                    b[p] = a[s.source[p]];
                row[encode_tensor(b, dimP)] += s.sign;
            }
            if (!is_zero(row))
                rows.push_back(std::move(row));
        }
    }
    return Matrix::from_rows(T, rows);
}

inline std::size_t ambient_dim(std::size_t m, std::size_t n, std::size_t dimP, std::size_t dimV)
{
    return ipow(dimP, m) * binomial(dimP, n) * dimV;
}

inline void check_ambient(std::size_t m, std::size_t n, std::size_t dimP, std::size_t dimV)
{
    // guard against overflow before multiplying out
    double approx = 1;
    for (std::size_t i = 0; i < m; ++i)
        approx *= static_cast<double>(dimP);
    approx *= static_cast<double>(binomial(dimP, n)) * static_cast<double>(dimV);
    if (approx > static_cast<double>(kAmbientCap))
        throw CapacityError("cochain space (" + std::to_string(m) + "," + std::to_string(n) +
                            ") has ambient dimension above " + std::to_string(kAmbientCap));
}

// Full shuffle constraint matrix on Hom(P^m (x) wedge^n P, V), ambient order:
// tensor tuple, then wedge tuple, then module index.
inline Matrix shuffle_constraint_matrix(std::size_t m, std::size_t n, std::size_t dimP, std::size_t dimV)
{
    check_ambient(m, n, dimP, dimV);
    const std::size_t inner = binomial(dimP, n) * dimV;
    const std::size_t amb = ambient_dim(m, n, dimP, dimV);
    if (m < 2)
        return Matrix(0, amb);
    Matrix t = tensor_shuffle_constraints(m, dimP);
    Matrix out(t.rows() * inner, amb);
    for (std::size_t r = 0; r < t.rows(); ++r)
        for (std::size_t c = 0; c < t.cols(); ++c)
            if (sgn(t(r, c)) != 0)
                for (std::size_t q = 0; q < inner; ++q)
                    out(r * inner + q, c * inner + q) = t(r, c);
    return out;
}

// Basis of C^{m,n}(P, V). The shuffle condition only involves tensor slots,
// so the kernel is K (x) Id with K the kernel on tensor tuples; coordinate j
// = a * (W v) + w * v + k for kernel column a, wedge tuple w, module index k.
class CochainBasis
{
public:
    CochainBasis() = default;
    CochainBasis(std::size_t m, std::size_t n, std::size_t dimP, std::size_t dimV)
        : bd_{m, n}, dimP_(dimP), dimV_(dimV)
    {
        check_ambient(m, n, dimP, dimV);
        T_ = ipow(dimP, m);
        wedges_ = increasing_tuples(dimP, n);
        for (std::size_t w = 0; w < wedges_.size(); ++w)
            wedge_rank_[wedges_[w]] = w;
        if (m >= 2)
        {
            Rref r = rref(tensor_shuffle_constraints(m, dimP));
            tensor_free_ = free_columns(r, T_);
            kernel_ = kernel_from_rref(r, T_);
        }
        else
        {
            kernel_ = Matrix::identity(T_);
            for (std::size_t t = 0; t < T_; ++t)
                tensor_free_.push_back(t);
        }
        kernel_rows_.resize(T_);
        for (std::size_t t = 0; t < T_; ++t)
            for (std::size_t a = 0; a < kernel_.cols(); ++a)
                if (sgn(kernel_(t, a)) != 0)
                    kernel_rows_[t].push_back({a, kernel_(t, a)});
    }

    Bidegree bidegree() const noexcept { return bd_; }
    std::size_t m() const noexcept { return bd_.m; }
    std::size_t n() const noexcept { return bd_.n; }
    std::size_t dim_p() const noexcept { return dimP_; }
    std::size_t dim_v() const noexcept { return dimV_; }
    std::size_t wedge_count() const noexcept { return wedges_.size(); }
    std::size_t inner() const noexcept { return wedges_.size() * dimV_; }
    std::size_t ambient_dim() const noexcept { return T_ * inner(); }
    std::size_t dim() const noexcept { return kernel_.cols() * inner(); }
    const std::vector<Tuple> &wedges() const noexcept { return wedges_; }
    const std::vector<std::size_t> &tensor_free() const noexcept { return tensor_free_; }
    const Matrix &tensor_kernel() const noexcept { return kernel_; }

    std::size_t wedge_rank(const Tuple &sorted) const { return wedge_rank_.at(sorted); }

    std::size_t ambient_index(const Tuple &a, std::size_t w, std::size_t k) const
    {
        return (encode_tensor(a, dimP_) * wedges_.size() + w) * dimV_ + k;
    }

    Matrix basis_matrix() const
    {
        Matrix b(ambient_dim(), dim());
        const std::size_t in = inner();
        for (std::size_t t = 0; t < T_; ++t)
            for (const auto &[a, c] : kernel_rows_[t])
                for (std::size_t q = 0; q < in; ++q)
                    b(t * in + q, a * in + q) = c;
        return b;
    }

    Vec to_ambient(const Vec &coords) const
    {
        if (coords.size() != dim())
            throw StructuralError("cochain coordinate length mismatch");
        Vec f = zero_vec(ambient_dim());
        const std::size_t in = inner();
        for (std::size_t t = 0; t < T_; ++t)
            for (const auto &[a, c] : kernel_rows_[t])
                for (std::size_t q = 0; q < in; ++q)
                    f[t * in + q] += c * coords[a * in + q];
        return f;
    }

    // Coordinates of an ambient vector known to satisfy the constraints.
    Vec from_ambient(const Vec &f) const
    {
        if (f.size() != ambient_dim())
            throw StructuralError("ambient cochain length mismatch");
        Vec out;
        out.reserve(dim());
        const std::size_t in = inner();
        for (std::size_t t : tensor_free_)
            for (std::size_t q = 0; q < in; ++q)
                out.push_back(f[t * in + q]);
        return out;
    }

    bool contains(const Vec &f) const { return to_ambient(from_ambient(f)) == f; }

    // f(a_1..a_m; x_1..x_n) for an ambient vector f; x in any order.
    Vec evaluate(const Vec &f, const Tuple &a, Tuple x) const
    {
        int s = sort_with_sign(x);
        Vec out = zero_vec(dimV_);
        if (s == 0)
            return out;
        std::size_t base = ambient_index(a, wedge_rank(x), 0);
        for (std::size_t k = 0; k < dimV_; ++k)
            out[k] = s * f[base + k];
        return out;
    }

    // Sparse rows of the tensor kernel: for tuple t, the pairs (column, entry).
    const std::vector<std::pair<std::size_t, Scalar>> &kernel_row(std::size_t t) const { return kernel_rows_[t]; }

private:
    Bidegree bd_;
    std::size_t dimP_ = 0, dimV_ = 0, T_ = 1;
    std::vector<Tuple> wedges_;
    std::map<Tuple, std::size_t> wedge_rank_;
    std::vector<std::size_t> tensor_free_;
    Matrix kernel_;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> kernel_rows_;
};

inline CochainBasis cochain_basis(const PoissonAlgebra &p, const Representation &v, std::size_t m, std::size_t n)
{
    return CochainBasis(m, n, p.dim, v.dim);
}

struct Cochain
{
    Bidegree bidegree;
    Vec coords;
};

struct DegreeSpace
{
    std::size_t k = 0;
    std::vector<CochainBasis> blocks;
    std::vector<std::size_t> offsets;
    std::size_t total_dim = 0;

    const CochainBasis *block(Bidegree bd) const
    {
        for (const auto &b : blocks)
            if (b.bidegree() == bd)
                return &b;
        return nullptr;
    }

    std::size_t offset(Bidegree bd) const
    {
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (blocks[i].bidegree() == bd)
                return offsets[i];
        throw StructuralError("bidegree not in degree space");
    }

    Vec slice(const Vec &x, Bidegree bd) const
    {
        std::size_t o = offset(bd);
        const auto *b = block(bd);
        return Vec(x.begin() + static_cast<std::ptrdiff_t>(o), x.begin() + static_cast<std::ptrdiff_t>(o + b->dim()));
    }
};

inline DegreeSpace degree_space(std::size_t dimP, std::size_t dimV, std::size_t k)
{
    DegreeSpace d;
    d.k = k;
    for (std::size_t m = 0; m <= k; ++m)
    {
        if (m == 1)
            continue;
        d.offsets.push_back(d.total_dim);
        d.blocks.emplace_back(m, k - m, dimP, dimV);
        d.total_dim += d.blocks.back().dim();
    }
    return d;
}

inline DegreeSpace degree_space(const PoissonAlgebra &p, const Representation &v, std::size_t k)
{
    return degree_space(p.dim, v.dim, k);
}

namespace detail
{
// Writes the rows of a coboundary block. Each call to term() adds
// c * M * f(b; y) to the output vector at the current target tuple.
class BlockEmitter
{
public:
    BlockEmitter(Matrix &out, const CochainBasis &src, std::size_t dimV) : out_(out), src_(src), v_(dimV) {}

    void at(std::size_t row_base) { row_ = row_base; }

    void term(const Scalar &c, const Matrix *M, const Tuple &b, Tuple y)
    {
        if (sgn(c) == 0)
            return;
        int s = sort_with_sign(y);
        if (s == 0)
            return;
        const std::size_t t = encode_tensor(b, src_.dim_p());
        const std::size_t w = src_.wedge_rank(y);
        const std::size_t in = src_.inner();
        for (const auto &[a, kc] : src_.kernel_row(t))
        {
            Scalar coef = s * c * kc;
            std::size_t col = a * in + w * v_;
            for (std::size_t k = 0; k < v_; ++k)
            {
                if (M == nullptr)
                    out_(row_ + k, col + k) += coef;
                else
                    for (std::size_t l = 0; l < v_; ++l)
                        if (sgn((*M)(k, l)) != 0)
                            out_(row_ + k, col + l) += coef * (*M)(k, l);
            }
        }
    }

private:
    Matrix &out_;
    const CochainBasis &src_;
    std::size_t v_;
    std::size_t row_ = 0;
};

template <class Fn>
void for_each_target(const CochainBasis &tgt, Fn &&fn)
{
    const std::size_t in = tgt.inner();
    for (std::size_t a = 0; a < tgt.tensor_free().size(); ++a)
    {
        Tuple at = decode_tensor(tgt.tensor_free()[a], tgt.dim_p(), tgt.m());
        for (std::size_t w = 0; w < tgt.wedge_count(); ++w)
            fn(at, tgt.wedges()[w], a * in + w * tgt.dim_v());
    }
}

inline Tuple without(const Tuple &x, std::size_t i)
{
    Tuple r;
    for (std::size_t s = 0; s < x.size(); ++s)
        if (s != i)
            r.push_back(x[s]);
    return r;
}

inline int parity_sign(std::size_t e) { return e % 2 == 0 ? 1 : -1; }
} // namespace detail

// Harrison coboundary C^{m,n} -> C^{m+1,n} (m >= 2), or for m = 0 the
// composite with the inclusion f~(a; x) = f(a ^ x) landing in C^{2,n-1}.
inline Matrix delta_H(const PoissonAlgebra &p, const Representation &v, std::size_t m, std::size_t n)
{
    if (m == 1)
        throw StructuralError("m = 1 is not a source bidegree of the complex");
    if (m == 0 && n == 0)
        throw StructuralError("Harrison coboundary is undefined on C^{0,0}");
    const bool incl = m == 0;
    const std::size_t hm = incl ? 1 : m; // arity of the Harrison formula
    const std::size_t tn = incl ? n - 1 : n;
    CochainBasis src(m, n, p.dim, v.dim), tgt(hm + 1, tn, p.dim, v.dim);
    Matrix out(tgt.dim(), src.dim());
    detail::BlockEmitter em(out, src, v.dim);
    auto F = [&](const Scalar &c, const Matrix *M, const Tuple &b, const Tuple &y) {
        if (!incl)
            return em.term(c, M, b, y);
        Tuple all = b;
        all.insert(all.end(), y.begin(), y.end());
        em.term(c, M, {}, all);
    };
    detail::for_each_target(tgt, [&](const Tuple &a, const Tuple &x, std::size_t row) {
        em.at(row);
        F(1, &v.mu[a.front()], Tuple(a.begin() + 1, a.end()), x);
        for (std::size_t i = 0; i < hm; ++i)
        {
            Scalar s = detail::parity_sign(i + 1);
            for (std::size_t q = 0; q < p.dim; ++q)
            {
                const Scalar &c = p.mult(a[i], a[i + 1], q);
                if (sgn(c) == 0)
                    continue;
                Tuple b;
                for (std::size_t j = 0; j < a.size(); ++j)
                {
                    if (j == i)
                        b.push_back(q);
                    else if (j != i + 1)
                        b.push_back(a[j]);
                }
                F(s * c, nullptr, b, x);
            }
        }
        F(detail::parity_sign(hm + 1), &v.mu[a.back()], Tuple(a.begin(), a.end() - 1), x);
    });
    return out;
}

// Chevalley-Eilenberg coboundary C^{m,n} -> C^{m,n+1}; the bracket also acts
// on the tensor slots.
inline Matrix delta_CE(const PoissonAlgebra &p, const Representation &v, std::size_t m, std::size_t n)
{
    CochainBasis src(m, n, p.dim, v.dim), tgt(m, n + 1, p.dim, v.dim);
    Matrix out(tgt.dim(), src.dim());
    detail::BlockEmitter em(out, src, v.dim);
    detail::for_each_target(tgt, [&](const Tuple &a, const Tuple &x, std::size_t row) {
        em.at(row);
        for (std::size_t i = 0; i < x.size(); ++i)
        {
            Scalar s = detail::parity_sign(i);
            Tuple xi = detail::without(x, i);
            em.term(s, &v.rho[x[i]], a, xi);
            for (std::size_t j = 0; j < a.size(); ++j)
                for (std::size_t q = 0; q < p.dim; ++q)
                {
                    const Scalar &c = p.bracket(x[i], a[j], q);
                    if (sgn(c) == 0)
                        continue;
                    Tuple b = a;
                    b[j] = q;
                    em.term(-s * c, nullptr, b, xi);
                }
        }
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = i + 1; j < x.size(); ++j)
            {
                Scalar s = detail::parity_sign(i + j);
                Tuple rest = detail::without(detail::without(x, j), i);
                for (std::size_t q = 0; q < p.dim; ++q)
                {
                    const Scalar &c = p.bracket(x[i], x[j], q);
                    if (sgn(c) == 0)
                        continue;
                    Tuple y{q};
                    y.insert(y.end(), rest.begin(), rest.end());
                    em.term(s * c, nullptr, a, y);
                }
            }
    });
    return out;
}

struct CoboundaryMatrix
{
    std::size_t k = 0;
    Matrix matrix;
    std::vector<std::pair<Bidegree, Bidegree>> layout;
};

// Total differential C^k -> C^{k+1}: delta_H + (-1)^m delta_CE on each block.
inline CoboundaryMatrix delta_FGV(const PoissonAlgebra &p, const Representation &v, std::size_t k)
{
    if (k > max_degree())
        throw CapacityError("degree " + std::to_string(k) + " exceeds the configured maximum " +
                            std::to_string(max_degree()));
    DegreeSpace src = degree_space(p, v, k), tgt = degree_space(p, v, k + 1);
    CoboundaryMatrix out;
    out.k = k;
    out.matrix = Matrix(tgt.total_dim, src.total_dim);
    auto place = [&](const Matrix &blk, Bidegree from, Bidegree to, const Scalar &sign) {
        std::size_t r0 = tgt.offset(to), c0 = src.offset(from);
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j)
                if (sgn(blk(i, j)) != 0)
                    out.matrix(r0 + i, c0 + j) += sign * blk(i, j);
        out.layout.push_back({from, to});
    };
    for (const auto &b : src.blocks)
    {
        const std::size_t m = b.m(), n = b.n();
        place(delta_CE(p, v, m, n), {m, n}, {m, n + 1}, detail::parity_sign(m));
        if (m >= 2)
            place(delta_H(p, v, m, n), {m, n}, {m + 1, n}, 1);
        else if (m == 0 && n >= 1)
            place(delta_H(p, v, m, n), {m, n}, {2, n - 1}, 1);
    }
    return out;
}

// ---- conversions between bilinear maps and low-degree cochains ----

// h in C^{2,0}: the ambient layout coincides with the bilinear layout.
inline Vec coords_of_symmetric(const CochainBasis &b20, const Bilinear &h) { return b20.from_ambient(h.data()); }

inline Bilinear symmetric_of_coords(const CochainBasis &b20, const Vec &c)
{
    Bilinear h(b20.dim_p(), b20.dim_p(), b20.dim_v());
    h.data() = b20.to_ambient(c);
    return h;
}

inline Vec coords_of_antisymmetric(const CochainBasis &b02, const Bilinear &H)
{
    Vec out;
    for (const auto &w : b02.wedges())
        for (std::size_t k = 0; k < b02.dim_v(); ++k)
            out.push_back(H(w[0], w[1], k));
    return out;
}

inline Bilinear antisymmetric_of_coords(const CochainBasis &b02, const Vec &c)
{
    Bilinear H(b02.dim_p(), b02.dim_p(), b02.dim_v());
    const std::size_t v = b02.dim_v();
    for (std::size_t w = 0; w < b02.wedge_count(); ++w)
        for (std::size_t k = 0; k < v; ++k)
        {
            const auto &t = b02.wedges()[w];
            H(t[0], t[1], k) = c[w * v + k];
            H(t[1], t[0], k) = -c[w * v + k];
        }
    return H;
}

// Degree-2 coordinates are ordered [(0,2) block | (2,0) block].
inline Vec degree2_coords(const PoissonAlgebra &p, const Representation &v, const Bilinear &h, const Bilinear &H)
{
    CochainBasis b02(0, 2, p.dim, v.dim), b20(2, 0, p.dim, v.dim);
    return concat(coords_of_antisymmetric(b02, H), coords_of_symmetric(b20, h));
}

inline std::pair<Bilinear, Bilinear> pair_of_degree2(const PoissonAlgebra &p, const Representation &v, const Vec &c)
{
    CochainBasis b02(0, 2, p.dim, v.dim), b20(2, 0, p.dim, v.dim);
    Vec hc(c.begin() + static_cast<std::ptrdiff_t>(b02.dim()), c.end());
    Vec Hc(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(b02.dim()));
    return {symmetric_of_coords(b20, hc), antisymmetric_of_coords(b02, Hc)};
}

// Degree-1 cochains are linear maps P -> V (v x n matrices).
inline Vec degree1_coords(const Matrix &phi) { return flatten_map(phi); }
inline Matrix map_of_degree1(const Vec &c, std::size_t dimV, std::size_t dimP) { return unflatten_map(c, dimV, dimP); }

struct TwoCocycleResiduals
{
    Bilinear harrison;      // indices (x, y, z): the commutative identity
    Bilinear jacobi_type;   // the cyclic bracket identity
    Bilinear mixed;         // the mixed identity
    bool zero() const { return harrison.is_zero() && jacobi_type.is_zero() && mixed.is_zero(); }
};

namespace detail
{
// Three-index residual tensors are stored as Bilinear(n*n, n, v) with left
// index x*n + y.
inline Bilinear triple_tensor(std::size_t n, std::size_t v) { return Bilinear(n * n, n, v); }
} // namespace detail

// The three identities a pair (h, H) must satisfy to be a 2-cocycle,
// evaluated directly on basis triples (independent of the delta matrices).
inline TwoCocycleResiduals two_cocycle_residuals(const PoissonAlgebra &p, const Representation &v, const Bilinear &h,
                                                 const Bilinear &H)
{
    const std::size_t n = p.dim, w = v.dim;
    for (const Bilinear *t : {&h, &H})
        if (t->left() != n || t->right() != n || t->out() != w)
            throw StructuralError("cocycle component must be a bilinear map P x P -> V");
    if (!h.symmetric())
        throw StructuralError("h must be symmetric");
    if (!H.antisymmetric())
        throw StructuralError("H must be antisymmetric");
    TwoCocycleResiduals r{detail::triple_tensor(n, w), detail::triple_tensor(n, w), detail::triple_tensor(n, w)};
    auto mu = [&](const Vec &x) { return v.mu_of(x); };
    auto rho = [&](const Vec &x) { return v.rho_of(x); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
            {
                Vec x = p.basis(i), y = p.basis(j), z = p.basis(l);
                Vec e1 = mu(x).apply(h.apply(y, z)) - h.apply(p.mul(x, y), z) + h.apply(x, p.mul(y, z)) -
                         mu(z).apply(h.apply(x, y));
                Vec e2 = rho(x).apply(H.apply(y, z)) + H.apply(x, p.br(y, z)) + rho(y).apply(H.apply(z, x)) +
                         H.apply(y, p.br(z, x)) + rho(z).apply(H.apply(x, y)) + H.apply(z, p.br(x, y));
                Vec e3 = rho(x).apply(h.apply(y, z)) - h.apply(p.br(x, y), z) - h.apply(y, p.br(x, z)) +
                         H.apply(x, p.mul(y, z)) - mu(y).apply(H.apply(x, z)) - mu(z).apply(H.apply(x, y));
                r.harrison.set_basis(i * n + j, l, e1);
                r.jacobi_type.set_basis(i * n + j, l, e2);
                r.mixed.set_basis(i * n + j, l, e3);
            }
    return r;
}

inline bool is_two_cocycle(const PoissonAlgebra &p, const Representation &v, const Bilinear &h, const Bilinear &H)
{
    return two_cocycle_residuals(p, v, h, H).zero();
}

// Coboundary of phi: P -> V as the pair (h, H) it induces.
inline std::pair<Bilinear, Bilinear> coboundary_pair(const PoissonAlgebra &p, const Representation &v, const Matrix &phi)
{
    const std::size_t n = p.dim;
    Bilinear h(n, n, v.dim), H(n, n, v.dim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
        {
            Vec fx = phi.col(i), fy = phi.col(j);
            h.set_basis(i, j, v.mu[i].apply(fy) - phi.apply(p.mult.on_basis(i, j)) + v.mu[j].apply(fx));
            H.set_basis(i, j, v.rho[i].apply(fy) - phi.apply(p.bracket.on_basis(i, j)) - v.rho[j].apply(fx));
        }
    return {h, H};
}

// Finds phi with (h, H) - (h', H') equal to the coboundary of phi, by solving
// the defining linear system on basis pairs directly.
inline std::optional<Matrix> cohomologous_witness(const PoissonAlgebra &p, const Representation &v,
                                                  const std::pair<Bilinear, Bilinear> &a,
                                                  const std::pair<Bilinear, Bilinear> &b)
{
    for (const auto *c : {&a, &b})
        if (!is_two_cocycle(p, v, c->first, c->second))
            throw PreconditionError("not-a-cocycle", "cohomologous_witness: input pair is not a 2-cocycle");
    const std::size_t n = p.dim, w = v.dim;
    std::vector<Vec> rows;
    Vec rhs;
    // unknown phi(k, x) at x * w + k
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (int which = 0; which < 2; ++which)
            {
                const Bilinear &op = which == 0 ? p.mult : p.bracket;
                const MatrixFamily &act = which == 0 ? v.mu : v.rho;
                Scalar sj = which == 0 ? Scalar(1) : Scalar(-1);
                const Bilinear &d1 = which == 0 ? a.first : a.second;
                const Bilinear &d2 = which == 0 ? b.first : b.second;
                for (std::size_t k = 0; k < w; ++k)
                {
                    Vec row = zero_vec(n * w);
                    for (std::size_t l = 0; l < w; ++l)
                    {
                        row[j * w + l] += act[i](k, l);
                        row[i * w + l] += sj * act[j](k, l);
                    }
                    for (std::size_t q = 0; q < n; ++q)
                        row[q * w + k] -= op(i, j, q);
                    rows.push_back(std::move(row));
                    rhs.push_back(d1(i, j, k) - d2(i, j, k));
                }
            }
    auto sol = solve(Matrix::from_rows(n * w, rows), rhs);
    if (!sol)
        return std::nullopt;
    Matrix phi = unflatten_map(*sol, w, n);
    auto [dh, dH] = coboundary_pair(p, v, phi);
    if (!(dh == a.first - b.first) || !(dH == a.second - b.second))
        throw std::logic_error("cohomologous_witness: re-substitution failed");
    return phi;
}

} // namespace pcoho

#endif

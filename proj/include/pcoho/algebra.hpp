#ifndef PCOHO_ALGEBRA_HPP
#define PCOHO_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "report.hpp"
#include "tensor.hpp"

namespace pcoho
{

inline constexpr std::size_t kMaxAlgebraDim = 16;

struct PoissonAlgebra
{
    std::size_t dim = 0;
    Bilinear mult;
    Bilinear bracket;
    std::vector<std::string> labels;

    PoissonAlgebra() = default;
    explicit PoissonAlgebra(std::size_t n) : dim(n), mult(n, n, n), bracket(n, n, n) {}
    PoissonAlgebra(Bilinear m, Bilinear b) : dim(m.left()), mult(std::move(m)), bracket(std::move(b)) {}

    Vec mul(const Vec &x, const Vec &y) const { return mult.apply(x, y); }
    Vec br(const Vec &x, const Vec &y) const { return bracket.apply(x, y); }
    Vec basis(std::size_t i) const { return unit_vec(dim, i); }

    // Matrices of left multiplication / adjoint action by e_i.
    Matrix lmul(std::size_t i) const { return mult.left_action(i); }
    Matrix ad(std::size_t i) const { return bracket.left_action(i); }

    friend bool operator==(const PoissonAlgebra &a, const PoissonAlgebra &b)
    {
        return a.dim == b.dim && a.mult == b.mult && a.bracket == b.bracket;
    }
};

struct Representation
{
    std::size_t dim = 0;
    MatrixFamily mu;
    MatrixFamily rho;

    Representation() = default;
    Representation(std::size_t algebra_dim, std::size_t v)
        : dim(v), mu(zero_family(algebra_dim, v, v)), rho(zero_family(algebra_dim, v, v))
    {
    }
    Representation(std::size_t v, MatrixFamily m, MatrixFamily r) : dim(v), mu(std::move(m)), rho(std::move(r)) {}

    Matrix mu_of(const Vec &x) const { return combine(mu, x, dim, dim); }
    Matrix rho_of(const Vec &x) const { return combine(rho, x, dim, dim); }

    friend bool operator==(const Representation &, const Representation &) = default;
};

namespace detail
{
inline Vec flatten(const Matrix &m) { return m.data(); }

inline void check_algebra_shape(const PoissonAlgebra &p)
{
    if (p.dim > kMaxAlgebraDim)
        throw CapacityError("algebra dimension " + std::to_string(p.dim) + " exceeds cap " +
                            std::to_string(kMaxAlgebraDim));
    for (const Bilinear *t : {&p.mult, &p.bracket})
        if (t->left() != p.dim || t->right() != p.dim || t->out() != p.dim)
            throw StructuralError("structure tensor is not " + std::to_string(p.dim) + "x" + std::to_string(p.dim) +
                                  "x" + std::to_string(p.dim));
    if (!p.labels.empty() && p.labels.size() != p.dim)
        throw StructuralError("label count does not match dimension");
}

inline void check_rep_shape(const PoissonAlgebra &p, const Representation &v)
{
    if (v.mu.size() != p.dim || v.rho.size() != p.dim)
        throw StructuralError("representation needs one mu and one rho matrix per algebra basis element");
    for (const MatrixFamily *f : {&v.mu, &v.rho})
        for (const auto &m : *f)
            if (m.rows() != v.dim || m.cols() != v.dim)
                throw StructuralError("representation matrix is not " + std::to_string(v.dim) + "x" +
                                      std::to_string(v.dim));
}
} // namespace detail

inline ValidationReport validate_poisson(const PoissonAlgebra &p)
{
    detail::check_algebra_shape(p);
    const std::size_t n = p.dim;
    ValidationReport rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
        {
            rep.check("commutativity", {i, j}, p.mult.on_basis(i, j) - p.mult.on_basis(j, i));
            rep.check("antisymmetry", {i, j}, p.bracket.on_basis(i, j) + p.bracket.on_basis(j, i));
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
            {
                Vec x = p.basis(i), y = p.basis(j), z = p.basis(l);
                rep.check("associativity", {i, j, l}, p.mul(p.mul(x, y), z) - p.mul(x, p.mul(y, z)));
                rep.check("jacobi", {i, j, l},
                          p.br(x, p.br(y, z)) + p.br(y, p.br(z, x)) + p.br(z, p.br(x, y)));
                rep.check("leibniz", {i, j, l},
                          p.br(x, p.mul(y, z)) - p.mul(p.br(x, y), z) - p.mul(y, p.br(x, z)));
            }
    return rep;
}

inline ValidationReport validate_representation(const PoissonAlgebra &p, const Representation &v)
{
    detail::check_algebra_shape(p);
    detail::check_rep_shape(p, v);
    const std::size_t n = p.dim;
    ValidationReport rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
        {
            Vec xy = p.mult.on_basis(i, j), b = p.bracket.on_basis(i, j);
            const Matrix &mi = v.mu[i], &mj = v.mu[j], &ri = v.rho[i], &rj = v.rho[j];
            rep.check("rep-module", {i, j}, detail::flatten(v.mu_of(xy) - mi * mj));
            rep.check("rep-lie", {i, j}, detail::flatten(v.rho_of(b) - (ri * rj - rj * ri)));
            rep.check("rep-mixed-mu", {i, j}, detail::flatten(v.mu_of(b) - (ri * mj - mj * ri)));
            rep.check("rep-mixed-rho", {i, j}, detail::flatten(v.rho_of(xy) - (mi * rj + mj * ri)));
        }
    return rep;
}

inline void require_valid(const PoissonAlgebra &p)
{
    auto r = validate_poisson(p);
    if (!r.ok())
        throw AxiomError("not a Poisson algebra (" + r.violations.front().axiom + ")", r);
}

inline void require_valid(const PoissonAlgebra &p, const Representation &v)
{
    require_valid(p);
    auto r = validate_representation(p, v);
    if (!r.ok())
        throw AxiomError("not a representation (" + r.violations.front().axiom + ")", r);
}

inline Representation adjoint_rep(const PoissonAlgebra &p)
{
    Representation v(p.dim, p.dim);
    for (std::size_t i = 0; i < p.dim; ++i)
    {
        v.mu[i] = p.lmul(i);
        v.rho[i] = p.ad(i);
    }
    return v;
}

inline Representation coadjoint_rep(const PoissonAlgebra &p)
{
    Representation v(p.dim, p.dim);
    for (std::size_t i = 0; i < p.dim; ++i)
    {
        v.mu[i] = p.lmul(i).transpose();
        v.rho[i] = -p.ad(i).transpose();
    }
    return v;
}

// Zero product and bracket on a space of the given dimension.
inline PoissonAlgebra abelian_algebra(std::size_t n) { return PoissonAlgebra(n); }

inline Representation trivial_rep(const PoissonAlgebra &p, std::size_t v) { return Representation(p.dim, v); }

// Structure constants in the basis given by the columns of g.
inline PoissonAlgebra change_basis(const PoissonAlgebra &p, const Matrix &g)
{
    auto gi = inverse(g);
    if (!gi)
        throw PreconditionError("change of basis matrix is singular");
    return PoissonAlgebra(p.mult.transformed(*gi, g, g), p.bracket.transformed(*gi, g, g));
}

enum class MapKind
{
    PoissonHom,
    PoissonAuto,
    PoissonDerivation
};

inline ValidationReport check_map(MapKind kind, const PoissonAlgebra &src, const PoissonAlgebra &tgt, const Matrix &f)
{
    if (kind == MapKind::PoissonDerivation)
        throw StructuralError("a derivation targets a representation, not an algebra");
    if (f.rows() != tgt.dim || f.cols() != src.dim)
        throw StructuralError("map shape does not match source/target dimensions");
    if (kind == MapKind::PoissonAuto && (!(src == tgt) || !f.square()))
        throw StructuralError("an automorphism needs target = source and a square matrix");
    ValidationReport rep;
    for (std::size_t i = 0; i < src.dim; ++i)
        for (std::size_t j = 0; j < src.dim; ++j)
        {
            Vec fx = f.col(i), fy = f.col(j);
            rep.check("hom-mult", {i, j}, f.apply(src.mult.on_basis(i, j)) - tgt.mul(fx, fy));
            rep.check("hom-bracket", {i, j}, f.apply(src.bracket.on_basis(i, j)) - tgt.br(fx, fy));
        }
    if (kind == MapKind::PoissonAuto && !is_invertible(f))
        rep.add("invertible", {}, {});
    return rep;
}

inline ValidationReport check_map(MapKind kind, const PoissonAlgebra &src, const Representation &tgt, const Matrix &d)
{
    if (kind != MapKind::PoissonDerivation)
        throw StructuralError("a homomorphism targets an algebra, not a representation");
    if (tgt.mu.size() != src.dim)
        throw StructuralError("representation is not over the source algebra");
    if (d.rows() != tgt.dim || d.cols() != src.dim)
        throw StructuralError("derivation shape does not match source/target dimensions");
    ValidationReport rep;
    for (std::size_t i = 0; i < src.dim; ++i)
        for (std::size_t j = 0; j < src.dim; ++j)
        {
            Vec dx = d.col(i), dy = d.col(j);
            rep.check("der-mult", {i, j},
                      d.apply(src.mult.on_basis(i, j)) - (tgt.mu[i].apply(dy) + tgt.mu[j].apply(dx)));
            rep.check("der-bracket", {i, j},
                      d.apply(src.bracket.on_basis(i, j)) - (tgt.rho[i].apply(dy) - tgt.rho[j].apply(dx)));
        }
    return rep;
}

inline bool is_poisson_derivation(const PoissonAlgebra &p, const Matrix &d)
{
    return check_map(MapKind::PoissonDerivation, p, adjoint_rep(p), d).ok();
}

// Linear conditions whose kernel is Der(P, V), in the coordinates d(k, x)
// flattened as x * v + k (column-major over the v x n matrix).
inline Matrix derivation_constraints(const PoissonAlgebra &p, const Representation &v)
{
    const std::size_t n = p.dim, w = v.dim;
    std::vector<Vec> rows;
    auto unknown = [&](std::size_t x, std::size_t k) { return x * w + k; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (int which = 0; which < 2; ++which)
            {
                const Bilinear &op = which == 0 ? p.mult : p.bracket;
                const MatrixFamily &act = which == 0 ? v.mu : v.rho;
                Scalar sj = which == 0 ? Scalar(1) : Scalar(-1);
                for (std::size_t k = 0; k < w; ++k)
                {
                    Vec row = zero_vec(n * w);
                    for (std::size_t q = 0; q < n; ++q)
                        row[unknown(q, k)] += op(i, j, q);
                    for (std::size_t l = 0; l < w; ++l)
                    {
                        row[unknown(j, l)] -= act[i](k, l);
                        row[unknown(i, l)] -= sj * act[j](k, l);
                    }
                    rows.push_back(std::move(row));
                }
            }
    return Matrix::from_rows(n * w, rows);
}

inline Matrix unflatten_map(const Vec &coords, std::size_t rows, std::size_t cols)
{
    Matrix m(rows, cols);
    for (std::size_t x = 0; x < cols; ++x)
        for (std::size_t k = 0; k < rows; ++k)
            m(k, x) = coords[x * rows + k];
    return m;
}

inline Vec flatten_map(const Matrix &m)
{
    Vec out;
    out.reserve(m.rows() * m.cols());
    for (std::size_t x = 0; x < m.cols(); ++x)
        for (std::size_t k = 0; k < m.rows(); ++k)
            out.push_back(m(k, x));
    return out;
}

// Basis of Der(P, V) as v x n matrices.
inline std::vector<Matrix> derivation_basis(const PoissonAlgebra &p, const Representation &v)
{
    Matrix k = kernel_basis(derivation_constraints(p, v));
    std::vector<Matrix> out;
    for (std::size_t c = 0; c < k.cols(); ++c)
        out.push_back(unflatten_map(k.col(c), v.dim, p.dim));
    return out;
}

} // namespace pcoho

#endif

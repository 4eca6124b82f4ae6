#ifndef PCOHO_DEFORMATION_MAP_HPP
#define PCOHO_DEFORMATION_MAP_HPP

#include <cstddef>

#include "prototwilled.hpp"

namespace pcoho
{

namespace detail
{
inline void require_defmap_shape(const ProtoTwilled &pt, const Matrix &r)
{
    if (r.rows() != pt.n1 || r.cols() != pt.n2)
        throw StructuralError("deformation map must be a dim P1 x dim P2 matrix");
}

// Embedding of P2 as the graph of r: u -> (r u, u).
inline Matrix graph_basis(const Matrix &r) { return vstack(r, Matrix::identity(r.cols())); }

// Id + r~ on P1 + P2, with r~(x, u) = (r u, 0).
inline Matrix shift(const Matrix &r, const Scalar &sign)
{
    const std::size_t a = r.rows(), b = r.cols();
    return block2x2(Matrix::identity(a), sign * r, Matrix(b, a), Matrix::identity(b));
}
} // namespace detail

// Both defining equations on basis pairs of P2.
inline ValidationReport is_deformation_map(const ProtoTwilled &pt, const Matrix &r)
{
    detail::check_shapes(pt);
    detail::require_defmap_shape(pt, r);
    ValidationReport rep;
    for (std::size_t u = 0; u < pt.n2; ++u)
        for (std::size_t v = 0; v < pt.n2; ++v)
        {
            Vec ru = r.col(u), rv = r.col(v);
            Vec eu = unit_vec(pt.n2, u), ev = unit_vec(pt.n2, v);
            Vec lhs = pt.dot1.apply(ru, rv) + pt.nu[u].apply(rv) + pt.nu[v].apply(ru) + pt.theta.on_basis(u, v);
            Vec inner = pt.dot2.on_basis(u, v) + combine(pt.mu, ru, pt.n2, pt.n2).apply(ev) +
                        combine(pt.mu, rv, pt.n2, pt.n2).apply(eu) + pt.h.apply(ru, rv);
            rep.check("defmap-product", {u, v}, lhs - r.apply(inner));

            Vec blhs = pt.br1.apply(ru, rv) + pt.psi[u].apply(rv) - pt.psi[v].apply(ru) + pt.Theta.on_basis(u, v);
            Vec binner = pt.br2.on_basis(u, v) + combine(pt.rho, ru, pt.n2, pt.n2).apply(ev) -
                         combine(pt.rho, rv, pt.n2, pt.n2).apply(eu) + pt.Hh.apply(ru, rv);
            rep.check("defmap-bracket", {u, v}, blhs - r.apply(binner));
        }
    return rep;
}

// Closure of Gr(r) under the assembled operations, by span membership.
inline bool graph_closed(const ProtoTwilled &pt, const Matrix &r)
{
    detail::require_defmap_shape(pt, r);
    PoissonAlgebra E = assembled(pt);
    Matrix g = detail::graph_basis(r);
    for (std::size_t u = 0; u < pt.n2; ++u)
        for (std::size_t v = 0; v < pt.n2; ++v)
        {
            if (!in_column_span(g, E.mul(g.col(u), g.col(v))))
                return false;
            if (!in_column_span(g, E.br(g.col(u), g.col(v))))
                return false;
        }
    return true;
}

inline void require_deformation_map(const ProtoTwilled &pt, const Matrix &r)
{
    auto rep = is_deformation_map(pt, r);
    if (!rep.ok())
        throw PreconditionError("not-a-deformation-map", "r is not a deformation map (" +
                                                             rep.violations.front().axiom + ")");
}

// (P2)_r: u .r v = pr2((r u, u) . (r v, v)), bracket likewise.
inline PoissonAlgebra induced_algebra(const ProtoTwilled &pt, const Matrix &r)
{
    require_valid(pt);
    require_deformation_map(pt, r);
    PoissonAlgebra E = assembled(pt);
    Matrix g = detail::graph_basis(r);
    const std::size_t a = pt.n1, b = pt.n2;
    PoissonAlgebra out(b);
    for (std::size_t u = 0; u < b; ++u)
        for (std::size_t v = 0; v < b; ++v)
        {
            Vec m = E.mul(g.col(u), g.col(v)), br = E.br(g.col(u), g.col(v));
            for (std::size_t k = 0; k < b; ++k)
            {
                out.mult(u, v, k) = m[a + k];
                out.bracket(u, v, k) = br[a + k];
            }
        }
    return out;
}

// Transport along Id + r~: the twisted operations are (Id - r~) o op o (Id + r~)^2.
inline ProtoTwilled twist_by(const ProtoTwilled &pt, const Matrix &r)
{
    require_valid(pt);
    detail::require_defmap_shape(pt, r);
    Matrix plus = detail::shift(r, 1), minus = detail::shift(r, -1);
    if (!(plus * minus == Matrix::identity(pt.dim())))
        throw std::logic_error("shift maps are not mutually inverse");
    PoissonAlgebra E = assembled(pt);
    PoissonAlgebra T(E.mult.transformed(minus, plus, plus), E.bracket.transformed(minus, plus, plus));
    if (!check_map(MapKind::PoissonHom, T, E, plus).ok())
        throw std::logic_error("Id + r~ is not a Poisson isomorphism onto the original");
    return decompose(T, pt.n1);
}

// (nu_r)_u x = nu_u x + r(u) x - r(mu_x u + h(r u, x))
// (psi_r)_u x = psi_u x + {r(u), x} - r(-rho_x u + H(r u, x))
inline Representation induced_rep(const ProtoTwilled &pt, const Matrix &r)
{
    require_valid(pt);
    require_deformation_map(pt, r);
    const std::size_t a = pt.n1, b = pt.n2;
    Representation out(b, a);
    for (std::size_t u = 0; u < b; ++u)
    {
        Vec ru = r.col(u), eu = unit_vec(b, u);
        for (std::size_t x = 0; x < a; ++x)
        {
            Vec ex = unit_vec(a, x);
            Vec n = pt.nu[u].col(x) + pt.dot1.apply(ru, ex) - r.apply(pt.mu[x].apply(eu) + pt.h.apply(ru, ex));
            Vec p = pt.psi[u].col(x) + pt.br1.apply(ru, ex) -
                    r.apply(Scalar(-1) * pt.rho[x].apply(eu) + pt.Hh.apply(ru, ex));
            out.mu[u].set_col(x, n);
            out.rho[u].set_col(x, p);
        }
    }
    return out;
}

} // namespace pcoho

#endif

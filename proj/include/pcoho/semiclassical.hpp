#ifndef PCOHO_SEMICLASSICAL_HPP
#define PCOHO_SEMICLASSICAL_HPP

#include <optional>
#include <vector>

#include "deformation_map.hpp"

namespace pcoho
{

inline constexpr std::size_t kDefaultSemiclassicalOrder = 2;

namespace detail
{
inline bool bracket_side_zero(const ProtoTwilled &pt)
{
    auto zero_family_p = [](const MatrixFamily &f) {
        for (const auto &m : f)
            if (!m.is_zero())
                return false;
        return true;
    };
    return pt.br1.is_zero() && pt.br2.is_zero() && pt.Hh.is_zero() && pt.Theta.is_zero() && zero_family_p(pt.rho) &&
           zero_family_p(pt.psi);
}
} // namespace detail

// a o1(b, c) - o1(ab, c) + o1(a, bc) - o1(a, b) c on basis triples.
inline ValidationReport hochschild_report(const Bilinear &m, const Bilinear &o1)
{
    const std::size_t n = m.left();
    ValidationReport rep;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
            {
                Vec ea = unit_vec(n, a), eb = unit_vec(n, b), ec = unit_vec(n, c);
                Vec r = m.apply(ea, o1.on_basis(b, c)) - o1.apply(m.on_basis(a, b), ec) +
                        o1.apply(ea, m.on_basis(b, c)) - m.apply(o1.on_basis(a, b), ec);
                rep.check("hochschild", {a, b, c}, r);
            }
    return rep;
}

// Coefficient of t^k in the associator of sum_i t^i o_i.
inline ValidationReport associativity_report(const std::vector<Bilinear> &terms, std::size_t k)
{
    const std::size_t n = terms.front().left();
    ValidationReport rep;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
            {
                Vec ea = unit_vec(n, a), ec = unit_vec(n, c);
                Vec r = zero_vec(n);
                for (std::size_t i = 0; i <= k && i < terms.size(); ++i)
                {
                    std::size_t j = k - i;
                    if (j >= terms.size())
                        continue;
                    r = r + terms[j].apply(terms[i].on_basis(a, b), ec) - terms[j].apply(ea, terms[i].on_basis(b, c));
                }
                rep.check("associativity-t" + std::to_string(k), {a, b, c}, r);
            }
    return rep;
}

// Semi-classical limit: keep the product, bracket = o1(a, b) - o1(b, a).
// order >= 1 checks o1 against the order-one associativity equation; order >= 2
// with o2 supplied also checks the order-two equation. The output is always
// validated as a Poisson algebra.
inline ProtoTwilled semiclassical(const ProtoTwilled &ptc, const Bilinear &o1,
                                  const std::optional<Bilinear> &o2 = std::nullopt,
                                  std::size_t order = kDefaultSemiclassicalOrder)
{
    if (!detail::bracket_side_zero(ptc))
        throw PreconditionError("bracket-not-zero", "a proto-twilled commutative algebra has no bracket-side maps");
    PoissonAlgebra E = assembled(ptc);
    const std::size_t n = E.dim;
    if (o1.left() != n || o1.right() != n || o1.out() != n)
        throw StructuralError("first-order term has the wrong shape");
    if (o2 && (o2->left() != n || o2->right() != n || o2->out() != n))
        throw StructuralError("second-order term has the wrong shape");
    {
        auto base = validate_poisson(E);
        if (!base.ok())
            throw AxiomError("base product is not commutative and associative", base);
    }
    ValidationReport rep;
    if (order >= 1)
        rep.merge(hochschild_report(E.mult, o1));
    if (order >= 2 && o2)
        rep.merge(associativity_report({E.mult, o1, *o2}, 2));
    if (!rep.ok())
        throw AxiomError("first-order term does not extend to an associative deformation", rep);

    Bilinear br(n, n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            br.set_basis(a, b, o1.on_basis(a, b) - o1.on_basis(b, a));
    PoissonAlgebra out(E.mult, br);
    auto v = validate_poisson(out);
    if (!v.ok())
        throw AxiomError("semi-classical bracket fails the Poisson axioms (" + v.violations.front().axiom + ")", v);
    return decompose(out, ptc.n1);
}

// Gr(r) closed under every supplied term o_0, o_1, ... (the t-linear extension
// of r is then a deformation map modulo the truncation).
inline bool graph_closed_under_terms(std::size_t n1, const std::vector<Bilinear> &terms, const Matrix &r)
{
    Matrix g = detail::graph_basis(r);
    if (g.rows() != n1 + r.cols() || r.rows() != n1)
        throw StructuralError("deformation map shape does not match the split");
    for (const auto &t : terms)
        for (std::size_t u = 0; u < r.cols(); ++u)
            for (std::size_t v = 0; v < r.cols(); ++v)
                if (!in_column_span(g, t.apply(g.col(u), g.col(v))))
                    return false;
    return true;
}

} // namespace pcoho

#endif

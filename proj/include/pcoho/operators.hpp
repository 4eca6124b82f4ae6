#ifndef PCOHO_OPERATORS_HPP
#define PCOHO_OPERATORS_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "deformation_map.hpp"

namespace pcoho
{

enum class OperatorKind
{
    PoissonHom,
    PoissonDerivation,
    RbWeight0,
    RbWeight1,
    CrossedHom,
    TwistedRb,
    Reynolds,
    ModifiedRb
};

inline constexpr std::array<std::pair<OperatorKind, const char *>, 8> kOperatorKinds{{
    {OperatorKind::PoissonHom, "poisson-hom"},
    {OperatorKind::PoissonDerivation, "poisson-derivation"},
    {OperatorKind::RbWeight0, "rb-weight0"},
    {OperatorKind::RbWeight1, "rb-weight1"},
    {OperatorKind::CrossedHom, "crossed-hom"},
    {OperatorKind::TwistedRb, "twisted-rb"},
    {OperatorKind::Reynolds, "reynolds"},
    {OperatorKind::ModifiedRb, "modified-rb"},
}};

inline std::string to_string(OperatorKind k)
{
    for (const auto &[kind, name] : kOperatorKinds)
        if (kind == k)
            return name;
    return "";
}

inline OperatorKind parse_operator_kind(const std::string &s)
{
    for (const auto &[kind, name] : kOperatorKinds)
        if (s == name)
            return kind;
    throw ParseError("unknown operator kind '" + s + "'");
}

// Data per kind:
//   poisson-hom         algebra (source), target (target)
//   poisson-derivation  algebra, rep
//   rb-weight0          algebra, rep
//   rb-weight1          action
//   crossed-hom         action
//   twisted-rb          algebra, rep, cocycle
//   reynolds            algebra
//   modified-rb         algebra
struct OperatorSpec
{
    OperatorKind kind = OperatorKind::Reynolds;
    PoissonAlgebra algebra;
    std::optional<PoissonAlgebra> target;
    std::optional<Representation> rep;
    std::optional<ActionData> action;
    std::optional<std::pair<Bilinear, Bilinear>> cocycle;
};

// ---- defining identities, evaluated on basis pairs ----

namespace detail
{
inline void require_map_shape(const Matrix &r, std::size_t rows, std::size_t cols)
{
    if (r.rows() != rows || r.cols() != cols)
        throw StructuralError("operator matrix has shape " + std::to_string(r.rows()) + "x" +
                              std::to_string(r.cols()) + ", expected " + std::to_string(rows) + "x" +
                              std::to_string(cols));
}
} // namespace detail

// r : V -> P with r(u) r(v) = r(mu_{r u} v + mu_{r v} u + h(r u, r v)) and the bracket analogue.
// h = H = 0 gives the weight-zero relative operator.
inline ValidationReport twisted_rb_report(const PoissonAlgebra &p, const Representation &v, const Bilinear &h,
                                          const Bilinear &H, const Matrix &r)
{
    detail::require_map_shape(r, p.dim, v.dim);
    ValidationReport rep;
    for (std::size_t a = 0; a < v.dim; ++a)
        for (std::size_t b = 0; b < v.dim; ++b)
        {
            Vec ra = r.col(a), rb = r.col(b);
            Vec ea = unit_vec(v.dim, a), eb = unit_vec(v.dim, b);
            rep.check("rb-product", {a, b},
                      p.mul(ra, rb) - r.apply(v.mu_of(ra).apply(eb) + v.mu_of(rb).apply(ea) + h.apply(ra, rb)));
            rep.check("rb-bracket", {a, b},
                      p.br(ra, rb) - r.apply(v.rho_of(ra).apply(eb) - v.rho_of(rb).apply(ea) + H.apply(ra, rb)));
        }
    return rep;
}

inline ValidationReport rb_weight0_report(const PoissonAlgebra &p, const Representation &v, const Matrix &r)
{
    return twisted_rb_report(p, v, Bilinear(p.dim, p.dim, v.dim), Bilinear(p.dim, p.dim, v.dim), r);
}

// r : P2 -> P1 with r(u) r(v) = r(u v + mu_{r u} v + mu_{r v} u), bracket likewise.
inline ValidationReport rb_weight1_report(const ActionData &d, const Matrix &r)
{
    const auto &P1 = d.acting, &P2 = d.acted;
    detail::require_map_shape(r, P1.dim, P2.dim);
    Representation act = d.as_rep();
    ValidationReport rep;
    for (std::size_t a = 0; a < P2.dim; ++a)
        for (std::size_t b = 0; b < P2.dim; ++b)
        {
            Vec ra = r.col(a), rb = r.col(b);
            Vec ea = unit_vec(P2.dim, a), eb = unit_vec(P2.dim, b);
            rep.check("rb1-product", {a, b},
                      P1.mul(ra, rb) -
                          r.apply(P2.mul(ea, eb) + act.mu_of(ra).apply(eb) + act.mu_of(rb).apply(ea)));
            rep.check("rb1-bracket", {a, b},
                      P1.br(ra, rb) -
                          r.apply(P2.br(ea, eb) + act.rho_of(ra).apply(eb) - act.rho_of(rb).apply(ea)));
        }
    return rep;
}

// D : P1 -> P2 with D(x y) = mu_x D y + mu_y D x + D x . D y, bracket likewise.
inline ValidationReport crossed_hom_report(const ActionData &d, const Matrix &D)
{
    const auto &P1 = d.acting, &P2 = d.acted;
    detail::require_map_shape(D, P2.dim, P1.dim);
    ValidationReport rep;
    for (std::size_t x = 0; x < P1.dim; ++x)
        for (std::size_t y = 0; y < P1.dim; ++y)
        {
            Vec dx = D.col(x), dy = D.col(y);
            rep.check("crossed-product", {x, y},
                      D.apply(P1.mult.on_basis(x, y)) -
                          (d.mu[x].apply(dy) + d.mu[y].apply(dx) + P2.mul(dx, dy)));
            rep.check("crossed-bracket", {x, y},
                      D.apply(P1.bracket.on_basis(x, y)) -
                          (d.rho[x].apply(dy) - d.rho[y].apply(dx) + P2.br(dx, dy)));
        }
    return rep;
}

// r(x) r(y) = r(r(x) y + x r(y) - r(x) r(y)), bracket likewise.
inline ValidationReport reynolds_report(const PoissonAlgebra &p, const Matrix &r)
{
    detail::require_map_shape(r, p.dim, p.dim);
    ValidationReport rep;
    for (std::size_t x = 0; x < p.dim; ++x)
        for (std::size_t y = 0; y < p.dim; ++y)
        {
            Vec rx = r.col(x), ry = r.col(y), ex = unit_vec(p.dim, x), ey = unit_vec(p.dim, y);
            rep.check("reynolds-product", {x, y},
                      p.mul(rx, ry) - r.apply(p.mul(rx, ey) + p.mul(ex, ry) - p.mul(rx, ry)));
            rep.check("reynolds-bracket", {x, y},
                      p.br(rx, ry) - r.apply(p.br(rx, ey) + p.br(ex, ry) - p.br(rx, ry)));
        }
    return rep;
}

// r(x) r(y) = r(r(x) y + x r(y)) - x y, bracket likewise.
inline ValidationReport modified_rb_report(const PoissonAlgebra &p, const Matrix &r)
{
    detail::require_map_shape(r, p.dim, p.dim);
    ValidationReport rep;
    for (std::size_t x = 0; x < p.dim; ++x)
        for (std::size_t y = 0; y < p.dim; ++y)
        {
            Vec rx = r.col(x), ry = r.col(y), ex = unit_vec(p.dim, x), ey = unit_vec(p.dim, y);
            rep.check("modified-product", {x, y},
                      p.mul(rx, ry) - r.apply(p.mul(rx, ey) + p.mul(ex, ry)) + p.mult.on_basis(x, y));
            rep.check("modified-bracket", {x, y},
                      p.br(rx, ry) - r.apply(p.br(rx, ey) + p.br(ex, ry)) + p.bracket.on_basis(x, y));
        }
    return rep;
}

// ---- spec handling ----

namespace detail
{
template <class T>
const T &need(const std::optional<T> &x, const char *what, OperatorKind k)
{
    if (!x)
        throw StructuralError("operator kind " + to_string(k) + " requires " + what);
    return *x;
}
} // namespace detail

inline void validate_spec(const OperatorSpec &s)
{
    switch (s.kind)
    {
    case OperatorKind::PoissonHom:
        require_valid(s.algebra);
        require_valid(detail::need(s.target, "a target algebra", s.kind));
        break;
    case OperatorKind::PoissonDerivation:
    case OperatorKind::RbWeight0:
        require_valid(s.algebra, detail::need(s.rep, "a representation", s.kind));
        break;
    case OperatorKind::RbWeight1:
    case OperatorKind::CrossedHom:
        require_valid(detail::need(s.action, "action data", s.kind));
        break;
    case OperatorKind::TwistedRb: {
        const auto &v = detail::need(s.rep, "a representation", s.kind);
        require_valid(s.algebra, v);
        const auto &c = detail::need(s.cocycle, "a cocycle pair", s.kind);
        if (!is_two_cocycle(s.algebra, v, c.first, c.second))
            throw PreconditionError("not-a-cocycle", "twisting pair is not a 2-cocycle");
        break;
    }
    case OperatorKind::Reynolds:
    case OperatorKind::ModifiedRb:
        require_valid(s.algebra);
        break;
    }
}

inline ValidationReport operator_identities(const OperatorSpec &s, const Matrix &r)
{
    switch (s.kind)
    {
    case OperatorKind::PoissonHom:
        detail::require_map_shape(r, s.target->dim, s.algebra.dim);
        return check_map(MapKind::PoissonHom, s.algebra, *s.target, r);
    case OperatorKind::PoissonDerivation:
        detail::require_map_shape(r, s.rep->dim, s.algebra.dim);
        return check_map(MapKind::PoissonDerivation, s.algebra, *s.rep, r);
    case OperatorKind::RbWeight0: return rb_weight0_report(s.algebra, *s.rep, r);
    case OperatorKind::RbWeight1: return rb_weight1_report(*s.action, r);
    case OperatorKind::CrossedHom: return crossed_hom_report(*s.action, r);
    case OperatorKind::TwistedRb: return twisted_rb_report(s.algebra, *s.rep, s.cocycle->first, s.cocycle->second, r);
    case OperatorKind::Reynolds: return reynolds_report(s.algebra, r);
    case OperatorKind::ModifiedRb: return modified_rb_report(s.algebra, r);
    }
    return {};
}

// The proto-twilled algebra in which the kind's operators are the deformation maps.
inline ProtoTwilled matching_construction(const OperatorSpec &s)
{
    validate_spec(s);
    switch (s.kind)
    {
    case OperatorKind::PoissonHom: return construct::direct(*s.target, s.algebra);
    case OperatorKind::PoissonDerivation: return construct::semidirect_right(s.algebra, *s.rep);
    case OperatorKind::RbWeight0: return construct::semidirect_left(s.algebra, *s.rep);
    case OperatorKind::RbWeight1: return construct::action_left(*s.action);
    case OperatorKind::CrossedHom: return construct::action_right(*s.action);
    case OperatorKind::TwistedRb:
        return construct::twisted_left(s.algebra, *s.rep, s.cocycle->first, s.cocycle->second);
    case OperatorKind::Reynolds: return construct::reynolds(s.algebra);
    case OperatorKind::ModifiedRb: return construct::modified(s.algebra);
    }
    return {};
}

struct OperatorVerdict
{
    ValidationReport direct;   // the kind's own identities
    ValidationReport via_graph; // deformation-map equations in the matching construction
    bool graph_closed = false;  // span membership of products of graph vectors
    bool agree() const { return direct.ok() == via_graph.ok() && via_graph.ok() == graph_closed; }
};

inline OperatorVerdict check_operator(const OperatorSpec &s, const Matrix &r)
{
    ProtoTwilled pt = matching_construction(s);
    OperatorVerdict v;
    v.direct = operator_identities(s, r);
    v.via_graph = is_deformation_map(pt, r);
    v.graph_closed = graph_closed(pt, r);
    return v;
}

inline OperatorSpec spec_for(OperatorKind k, const PoissonAlgebra &p)
{
    OperatorSpec s;
    s.kind = k;
    s.algebra = p;
    return s;
}

// ---- relations between operator classes on a single algebra ----

struct OperatorTransforms
{
    bool weight1 = false;          // r is a weight-one Rota-Baxter operator (adjoint action)
    bool negated_weight1 = false;  // -Id - r is one
    bool shifted_modified = false; // Id + 2r is a modified Rota-Baxter operator
    std::optional<bool> reynolds;  // r Reynolds, when r is invertible
    std::optional<bool> inverse_shift_derivation; // r^{-1} - Id a Poisson derivation

    // weight1 implies negated_weight1; weight1 iff shifted_modified; reynolds iff derivation
    bool consistent() const
    {
        bool ok = (!weight1 || negated_weight1) && (weight1 == shifted_modified);
        if (reynolds)
            ok = ok && (*reynolds == *inverse_shift_derivation);
        return ok;
    }
};

inline OperatorTransforms operator_transforms(const PoissonAlgebra &p, const Matrix &r, bool require_inverse = false)
{
    require_valid(p);
    detail::require_map_shape(r, p.dim, p.dim);
    const Matrix I = Matrix::identity(p.dim);
    ActionData ad = adjoint_action(p);
    OperatorTransforms t;
    t.weight1 = rb_weight1_report(ad, r).ok();
    t.negated_weight1 = rb_weight1_report(ad, -I - r).ok();
    t.shifted_modified = modified_rb_report(p, I + Scalar(2) * r).ok();
    auto inv = inverse(r);
    if (inv)
    {
        t.reynolds = reynolds_report(p, r).ok();
        t.inverse_shift_derivation = is_poisson_derivation(p, *inv - I);
    }
    else if (require_inverse)
        throw PreconditionError("not-invertible", "the Reynolds relation needs an invertible operator");
    return t;
}

} // namespace pcoho

#endif

#ifndef PCOHO_PROTOTWILLED_HPP
#define PCOHO_PROTOTWILLED_HPP

#include <cstddef>
#include <string>

#include "algebra.hpp"
#include "cochain.hpp"

namespace pcoho
{

// The twelve structure maps of a Poisson algebra on P1 + P2. P1 occupies
// indices [0, n1) and P2 indices [n1, n1 + n2) of the assembled algebra.
struct ProtoTwilled
{
    std::size_t n1 = 0, n2 = 0;
    Bilinear dot1, dot2;   // P1 x P1 -> P1, P2 x P2 -> P2
    MatrixFamily mu, nu;   // mu_x in End P2 (x in P1), nu_u in End P1 (u in P2)
    Bilinear h, theta;     // P1 x P1 -> P2, P2 x P2 -> P1
    Bilinear br1, br2;
    MatrixFamily rho, psi;
    Bilinear Hh, Theta;

    ProtoTwilled() = default;
    ProtoTwilled(std::size_t a, std::size_t b)
        : n1(a), n2(b), dot1(a, a, a), dot2(b, b, b), mu(zero_family(a, b, b)), nu(zero_family(b, a, a)),
          h(a, a, b), theta(b, b, a), br1(a, a, a), br2(b, b, b), rho(zero_family(a, b, b)),
          psi(zero_family(b, a, a)), Hh(a, a, b), Theta(b, b, a)
    {
    }

    std::size_t dim() const { return n1 + n2; }
    friend bool operator==(const ProtoTwilled &, const ProtoTwilled &) = default;
};

enum class TwilledClass
{
    Proto,
    QuasiP1, // only P1 is a subalgebra
    QuasiP2, // only P2 is a subalgebra
    Twilled
};

inline std::string to_string(TwilledClass c)
{
    switch (c)
    {
    case TwilledClass::Proto: return "proto";
    case TwilledClass::QuasiP1: return "quasi-P1";
    case TwilledClass::QuasiP2: return "quasi-P2";
    case TwilledClass::Twilled: return "twilled";
    }
    return "proto";
}

namespace detail
{
inline void require_family(const MatrixFamily &f, std::size_t count, std::size_t d, const char *name)
{
    if (f.size() != count)
        throw StructuralError(std::string("map ") + name + " has the wrong number of matrices");
    for (const auto &m : f)
        if (m.rows() != d || m.cols() != d)
            throw StructuralError(std::string("map ") + name + " has matrices of the wrong size");
}

inline void require_shape(const Bilinear &b, std::size_t x, std::size_t y, std::size_t z, const char *name)
{
    if (b.left() != x || b.right() != y || b.out() != z)
        throw StructuralError(std::string("map ") + name + " has the wrong shape");
}

inline void check_shapes(const ProtoTwilled &pt)
{
    const std::size_t a = pt.n1, b = pt.n2;
    if (a + b > kMaxAlgebraDim)
        throw CapacityError("proto-twilled dimension exceeds " + std::to_string(kMaxAlgebraDim));
    require_shape(pt.dot1, a, a, a, "dot1");
    require_shape(pt.dot2, b, b, b, "dot2");
    require_shape(pt.br1, a, a, a, "br1");
    require_shape(pt.br2, b, b, b, "br2");
    require_shape(pt.h, a, a, b, "h");
    require_shape(pt.Hh, a, a, b, "Hh");
    require_shape(pt.theta, b, b, a, "theta");
    require_shape(pt.Theta, b, b, a, "Theta");
    require_family(pt.mu, a, b, "mu");
    require_family(pt.rho, a, b, "rho");
    require_family(pt.nu, b, a, "nu");
    require_family(pt.psi, b, a, "psi");
}

inline void check_symmetry(ValidationReport &rep, const Bilinear &b, bool sym, const std::string &tag)
{
    const std::size_t n = b.left();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
        {
            Vec r = sym ? b.on_basis(i, j) - b.on_basis(j, i) : b.on_basis(i, j) + b.on_basis(j, i);
            rep.check(tag, {i, j}, r);
        }
}
} // namespace detail

inline ValidationReport symmetry_report(const ProtoTwilled &pt)
{
    detail::check_shapes(pt);
    ValidationReport rep;
    detail::check_symmetry(rep, pt.dot1, true, "symmetry-dot1");
    detail::check_symmetry(rep, pt.dot2, true, "symmetry-dot2");
    detail::check_symmetry(rep, pt.h, true, "symmetry-h");
    detail::check_symmetry(rep, pt.theta, true, "symmetry-theta");
    detail::check_symmetry(rep, pt.br1, false, "antisymmetry-br1");
    detail::check_symmetry(rep, pt.br2, false, "antisymmetry-br2");
    detail::check_symmetry(rep, pt.Hh, false, "antisymmetry-Hh");
    detail::check_symmetry(rep, pt.Theta, false, "antisymmetry-Theta");
    return rep;
}

// The assembled operations on P1 + P2; no validation.
inline PoissonAlgebra assembled(const ProtoTwilled &pt)
{
    detail::check_shapes(pt);
    const std::size_t a = pt.n1, b = pt.n2;
    PoissonAlgebra E(a + b);
    for (std::size_t x = 0; x < a; ++x)
        for (std::size_t y = 0; y < a; ++y)
        {
            for (std::size_t k = 0; k < a; ++k)
            {
                E.mult(x, y, k) = pt.dot1(x, y, k);
                E.bracket(x, y, k) = pt.br1(x, y, k);
            }
            for (std::size_t k = 0; k < b; ++k)
            {
                E.mult(x, y, a + k) = pt.h(x, y, k);
                E.bracket(x, y, a + k) = pt.Hh(x, y, k);
            }
        }
    for (std::size_t u = 0; u < b; ++u)
        for (std::size_t v = 0; v < b; ++v)
        {
            for (std::size_t k = 0; k < b; ++k)
            {
                E.mult(a + u, a + v, a + k) = pt.dot2(u, v, k);
                E.bracket(a + u, a + v, a + k) = pt.br2(u, v, k);
            }
            for (std::size_t k = 0; k < a; ++k)
            {
                E.mult(a + u, a + v, k) = pt.theta(u, v, k);
                E.bracket(a + u, a + v, k) = pt.Theta(u, v, k);
            }
        }
    // (x, 0) (0, v) = (nu_v x, mu_x v);  {(x, 0), (0, v)} = (-psi_v x, rho_x v)
    for (std::size_t x = 0; x < a; ++x)
        for (std::size_t v = 0; v < b; ++v)
        {
            for (std::size_t k = 0; k < a; ++k)
            {
                E.mult(x, a + v, k) = pt.nu[v](k, x);
                E.mult(a + v, x, k) = pt.nu[v](k, x);
                E.bracket(x, a + v, k) = -pt.psi[v](k, x);
                E.bracket(a + v, x, k) = pt.psi[v](k, x);
            }
            for (std::size_t k = 0; k < b; ++k)
            {
                E.mult(x, a + v, a + k) = pt.mu[x](k, v);
                E.mult(a + v, x, a + k) = pt.mu[x](k, v);
                E.bracket(x, a + v, a + k) = pt.rho[x](k, v);
                E.bracket(a + v, x, a + k) = -pt.rho[x](k, v);
            }
        }
    return E;
}

// Split a Poisson algebra on a space of dimension n1 + n2 into the twelve maps.
inline ProtoTwilled decompose(const PoissonAlgebra &E, std::size_t n1)
{
    if (n1 > E.dim)
        throw StructuralError("split point exceeds the algebra dimension");
    const std::size_t a = n1, b = E.dim - n1;
    ProtoTwilled pt(a, b);
    for (std::size_t x = 0; x < a; ++x)
        for (std::size_t y = 0; y < a; ++y)
        {
            for (std::size_t k = 0; k < a; ++k)
            {
                pt.dot1(x, y, k) = E.mult(x, y, k);
                pt.br1(x, y, k) = E.bracket(x, y, k);
            }
            for (std::size_t k = 0; k < b; ++k)
            {
                pt.h(x, y, k) = E.mult(x, y, a + k);
                pt.Hh(x, y, k) = E.bracket(x, y, a + k);
            }
        }
    for (std::size_t u = 0; u < b; ++u)
        for (std::size_t v = 0; v < b; ++v)
        {
            for (std::size_t k = 0; k < b; ++k)
            {
                pt.dot2(u, v, k) = E.mult(a + u, a + v, a + k);
                pt.br2(u, v, k) = E.bracket(a + u, a + v, a + k);
            }
            for (std::size_t k = 0; k < a; ++k)
            {
                pt.theta(u, v, k) = E.mult(a + u, a + v, k);
                pt.Theta(u, v, k) = E.bracket(a + u, a + v, k);
            }
        }
    for (std::size_t x = 0; x < a; ++x)
        for (std::size_t v = 0; v < b; ++v)
        {
            for (std::size_t k = 0; k < a; ++k)
            {
                pt.nu[v](k, x) = E.mult(x, a + v, k);
                pt.psi[v](k, x) = E.bracket(a + v, x, k);
            }
            for (std::size_t k = 0; k < b; ++k)
            {
                pt.mu[x](k, v) = E.mult(x, a + v, a + k);
                pt.rho[x](k, v) = E.bracket(x, a + v, a + k);
            }
        }
    return pt;
}

inline ValidationReport validate_prototwilled(const ProtoTwilled &pt)
{
    ValidationReport rep = symmetry_report(pt);
    if (!rep.ok())
        return rep;
    return validate_poisson(assembled(pt));
}

inline void require_valid(const ProtoTwilled &pt)
{
    auto r = validate_prototwilled(pt);
    if (!r.ok())
        throw AxiomError("not a proto-twilled Poisson algebra (" + r.violations.front().axiom + ")", r);
}

// Validated assembly from the twelve maps.
inline PoissonAlgebra assemble(const ProtoTwilled &pt)
{
    require_valid(pt);
    return assembled(pt);
}

// Closure of the summands, tested on basis pairs of the assembled algebra.
inline bool p1_closed(const ProtoTwilled &pt)
{
    PoissonAlgebra E = assembled(pt);
    for (std::size_t x = 0; x < pt.n1; ++x)
        for (std::size_t y = 0; y < pt.n1; ++y)
            for (std::size_t k = pt.n1; k < E.dim; ++k)
                if (E.mult(x, y, k) != 0 || E.bracket(x, y, k) != 0)
                    return false;
    return true;
}

inline bool p2_closed(const ProtoTwilled &pt)
{
    PoissonAlgebra E = assembled(pt);
    for (std::size_t u = pt.n1; u < E.dim; ++u)
        for (std::size_t v = pt.n1; v < E.dim; ++v)
            for (std::size_t k = 0; k < pt.n1; ++k)
                if (E.mult(u, v, k) != 0 || E.bracket(u, v, k) != 0)
                    return false;
    return true;
}

inline TwilledClass classify(const ProtoTwilled &pt)
{
    const bool a = p1_closed(pt), b = p2_closed(pt);
    if (a && b)
        return TwilledClass::Twilled;
    if (a)
        return TwilledClass::QuasiP1;
    if (b)
        return TwilledClass::QuasiP2;
    return TwilledClass::Proto;
}

// ---- actions of one Poisson algebra on another ----

struct ActionData
{
    PoissonAlgebra acting; // P1
    PoissonAlgebra acted;  // P2
    MatrixFamily mu, rho;  // P1 -> End(P2)

    Representation as_rep() const
    {
        Representation r(acting.dim, acted.dim);
        r.mu = mu;
        r.rho = rho;
        return r;
    }
};

inline ValidationReport validate_action(const ActionData &d)
{
    const std::size_t a = d.acting.dim, b = d.acted.dim;
    detail::require_family(d.mu, a, b, "mu");
    detail::require_family(d.rho, a, b, "rho");
    ValidationReport rep;
    rep.merge(validate_poisson(d.acting));
    rep.merge(validate_poisson(d.acted));
    if (!rep.ok())
        return rep;
    rep.merge(validate_representation(d.acting, d.as_rep()));
    const auto &Q = d.acted;
    for (std::size_t x = 0; x < a; ++x)
        for (std::size_t u = 0; u < b; ++u)
            for (std::size_t v = 0; v < b; ++v)
            {
                Vec eu = unit_vec(b, u), ev = unit_vec(b, v);
                const Matrix &m = d.mu[x], &r = d.rho[x];
                rep.check("action-mu-mult", {x, u, v}, m.apply(Q.mul(eu, ev)) - Q.mul(m.apply(eu), ev));
                rep.check("action-mu-bracket", {x, u, v},
                          m.apply(Q.br(eu, ev)) - Q.br(m.apply(eu), ev) + Q.mul(eu, r.apply(ev)));
                rep.check("action-rho-mult", {x, u, v},
                          r.apply(Q.mul(eu, ev)) - Q.mul(r.apply(eu), ev) - Q.mul(eu, r.apply(ev)));
                rep.check("action-rho-bracket", {x, u, v},
                          r.apply(Q.br(eu, ev)) - Q.br(r.apply(eu), ev) - Q.br(eu, r.apply(ev)));
            }
    return rep;
}

inline void require_valid(const ActionData &d)
{
    auto r = validate_action(d);
    if (!r.ok())
        throw AxiomError("not a Poisson action (" + r.violations.front().axiom + ")", r);
}

// The adjoint action of P on itself.
inline ActionData adjoint_action(const PoissonAlgebra &p)
{
    auto ad = adjoint_rep(p);
    return {p, p, ad.mu, ad.rho};
}

// ---- constructions ----

namespace construct
{

inline ProtoTwilled direct(const PoissonAlgebra &p1, const PoissonAlgebra &p2)
{
    require_valid(p1);
    require_valid(p2);
    ProtoTwilled pt(p1.dim, p2.dim);
    pt.dot1 = p1.mult;
    pt.br1 = p1.bracket;
    pt.dot2 = p2.mult;
    pt.br2 = p2.bracket;
    return pt;
}

// P + V with P the first summand.
inline ProtoTwilled twisted_left(const PoissonAlgebra &p, const Representation &v, const Bilinear &h,
                                 const Bilinear &H)
{
    require_valid(p, v);
    auto res = two_cocycle_residuals(p, v, h, H);
    if (!res.zero())
    {
        ValidationReport rep;
        rep.add("cocycle", {}, {});
        throw AxiomError("(h, H) is not a 2-cocycle", rep);
    }
    ProtoTwilled pt(p.dim, v.dim);
    pt.dot1 = p.mult;
    pt.br1 = p.bracket;
    pt.mu = v.mu;
    pt.rho = v.rho;
    pt.h = h;
    pt.Hh = H;
    return pt;
}

inline ProtoTwilled semidirect_left(const PoissonAlgebra &p, const Representation &v)
{
    return twisted_left(p, v, Bilinear(p.dim, p.dim, v.dim), Bilinear(p.dim, p.dim, v.dim));
}

// V + P with V the first summand.
inline ProtoTwilled semidirect_right(const PoissonAlgebra &p, const Representation &v)
{
    require_valid(p, v);
    ProtoTwilled pt(v.dim, p.dim);
    pt.dot2 = p.mult;
    pt.br2 = p.bracket;
    pt.nu = v.mu;
    pt.psi = v.rho;
    return pt;
}

inline ProtoTwilled action_left(const ActionData &d)
{
    require_valid(d);
    ProtoTwilled pt(d.acting.dim, d.acted.dim);
    pt.dot1 = d.acting.mult;
    pt.br1 = d.acting.bracket;
    pt.dot2 = d.acted.mult;
    pt.br2 = d.acted.bracket;
    pt.mu = d.mu;
    pt.rho = d.rho;
    return pt;
}

inline ProtoTwilled action_right(const ActionData &d)
{
    require_valid(d);
    ProtoTwilled pt(d.acted.dim, d.acting.dim);
    pt.dot1 = d.acted.mult;
    pt.br1 = d.acted.bracket;
    pt.dot2 = d.acting.mult;
    pt.br2 = d.acting.bracket;
    pt.nu = d.mu;
    pt.psi = d.rho;
    return pt;
}

// (x, u)(y, v) = (xy, xv + uy - xy), bracket likewise.
inline ProtoTwilled reynolds(const PoissonAlgebra &p)
{
    return twisted_left(p, adjoint_rep(p), Scalar(-1) * p.mult, Scalar(-1) * p.bracket);
}

// (x, u)(y, v) = (xy + uv, xv + uy), bracket likewise.
inline ProtoTwilled modified(const PoissonAlgebra &p)
{
    require_valid(p);
    auto ad = adjoint_rep(p);
    ProtoTwilled pt(p.dim, p.dim);
    pt.dot1 = p.mult;
    pt.br1 = p.bracket;
    pt.theta = p.mult;
    pt.Theta = p.bracket;
    pt.mu = ad.mu;
    pt.rho = ad.rho;
    return pt;
}

} // namespace construct

} // namespace pcoho

#endif

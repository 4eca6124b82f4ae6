#ifndef PCOHO_EXTENSION_HPP
#define PCOHO_EXTENSION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "cochain.hpp"
#include "cohomology.hpp"

namespace pcoho
{

// 0 -> V --i--> E --p--> P -> 0 with i(V) square-zero.
struct AbelianExtension
{
    PoissonAlgebra E;
    Matrix i; // dim E x dim V
    Matrix p; // dim P x dim E
    PoissonAlgebra P;
    Representation V;
};

using CocyclePair = std::pair<Bilinear, Bilinear>; // (h, H)

namespace detail
{
inline CocyclePair zero_pair(std::size_t n, std::size_t v) { return {Bilinear(n, n, v), Bilinear(n, n, v)}; }

inline void require_cocycle(const PoissonAlgebra &p, const Representation &v, const Bilinear &h, const Bilinear &H)
{
    auto r = two_cocycle_residuals(p, v, h, H);
    if (r.zero())
        return;
    ValidationReport rep;
    const std::size_t n = p.dim;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
            {
                rep.check("cocycle-commutative", {a, b, c}, r.harrison.on_basis(a * n + b, c));
                rep.check("cocycle-lie", {a, b, c}, r.jacobi_type.on_basis(a * n + b, c));
                rep.check("cocycle-mixed", {a, b, c}, r.mixed.on_basis(a * n + b, c));
            }
    throw AxiomError("(h, H) is not a 2-cocycle", rep);
}

// Left inverse of an injective matrix: rows solve L i = Id.
inline Matrix left_inverse(const Matrix &i)
{
    // L = (i^T i)^{-1} i^T works over Q for full column rank
    auto g = inverse(i.transpose() * i);
    if (!g)
        throw StructuralError("inclusion map is not injective");
    return *g * i.transpose();
}
} // namespace detail

inline std::size_t ext_dim_v(const AbelianExtension &x) { return x.V.dim; }

inline Matrix canonical_section(const AbelianExtension &x)
{
    // x -> (x, 0) for constructed extensions; for general ones, a right inverse of p
    Matrix pt = x.p.transpose();
    auto g = inverse(x.p * pt);
    if (!g)
        throw StructuralError("projection is not surjective");
    return pt * *g;
}

inline ValidationReport validate_extension(const AbelianExtension &x)
{
    ValidationReport rep;
    const std::size_t n = x.P.dim, v = x.V.dim, e = x.E.dim;
    if (x.i.rows() != e || x.i.cols() != v || x.p.rows() != n || x.p.cols() != e)
        throw StructuralError("extension maps have inconsistent shapes");
    if (e != n + v)
        throw StructuralError("dim E must equal dim P + dim V");
    rep.merge(validate_poisson(x.E));
    rep.merge(validate_poisson(x.P));
    rep.merge(validate_representation(x.P, x.V));
    if (!rep.ok())
        return rep;
    Matrix pi = x.p * x.i;
    if (!pi.is_zero())
        rep.add("ext-p-after-i", {}, pi.data());
    if (rank(x.i) != v)
        rep.add("ext-i-injective", {}, {});
    if (rank(x.p) != n)
        rep.add("ext-p-surjective", {}, {});
    if (!rep.ok())
        return rep;
    // exactness follows from p i = 0 plus the rank conditions and dim E = n + v
    for (std::size_t a = 0; a < v; ++a)
        for (std::size_t b = 0; b < v; ++b)
        {
            rep.check("ext-square-zero-mult", {a, b}, x.E.mul(x.i.col(a), x.i.col(b)));
            rep.check("ext-square-zero-bracket", {a, b}, x.E.br(x.i.col(a), x.i.col(b)));
        }
    Matrix s = canonical_section(x);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < v; ++b)
        {
            rep.check("ext-action-mu", {a, b}, x.E.mul(s.col(a), x.i.col(b)) - x.i.apply(x.V.mu[a].col(b)));
            rep.check("ext-action-rho", {a, b}, x.E.br(s.col(a), x.i.col(b)) - x.i.apply(x.V.rho[a].col(b)));
        }
    return rep;
}

inline void require_valid(const AbelianExtension &x)
{
    auto r = validate_extension(x);
    if (!r.ok())
        throw AxiomError("not an abelian extension (" + r.violations.front().axiom + ")", r);
}

inline void require_section(const AbelianExtension &x, const Matrix &s)
{
    if (s.rows() != x.E.dim || s.cols() != x.P.dim)
        throw StructuralError("section has the wrong shape");
    if (!(x.p * s == Matrix::identity(x.P.dim)))
        throw PreconditionError("not-a-section", "p o s is not the identity");
}

inline std::pair<AbelianExtension, Matrix> build_twisted_extension(const PoissonAlgebra &P, const Representation &V,
                                                                   const Bilinear &h, const Bilinear &H)
{
    require_valid(P, V);
    detail::require_cocycle(P, V, h, H);
    const std::size_t n = P.dim, v = V.dim, e = n + v;
    AbelianExtension x;
    x.P = P;
    x.V = V;
    x.E = PoissonAlgebra(e);
    // (x, u)(y, w) = (xy, mu_x w + mu_y u + h(x, y)); bracket with rho_x w - rho_y u + H(x, y)
    for (std::size_t a = 0; a < n; ++a)
    {
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k)
            {
                x.E.mult(a, b, k) = P.mult(a, b, k);
                x.E.bracket(a, b, k) = P.bracket(a, b, k);
            }
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < v; ++k)
            {
                x.E.mult(a, b, n + k) = h(a, b, k);
                x.E.bracket(a, b, n + k) = H(a, b, k);
            }
        for (std::size_t b = 0; b < v; ++b)
            for (std::size_t k = 0; k < v; ++k)
            {
                x.E.mult(a, n + b, n + k) = V.mu[a](k, b);
                x.E.mult(n + b, a, n + k) = V.mu[a](k, b);
                x.E.bracket(a, n + b, n + k) = V.rho[a](k, b);
                x.E.bracket(n + b, a, n + k) = -V.rho[a](k, b);
            }
    }
    x.i = vstack(Matrix(n, v), Matrix::identity(v));
    x.p = hstack(Matrix::identity(n), Matrix(n, v));
    Matrix s = vstack(Matrix::identity(n), Matrix(v, n));
    return {std::move(x), std::move(s)};
}

inline std::pair<AbelianExtension, Matrix> build_split_extension(const PoissonAlgebra &P, const Representation &V)
{
    auto z = detail::zero_pair(P.dim, V.dim);
    return build_twisted_extension(P, V, z.first, z.second);
}

// Pull an element of i(V) back to V.
inline Vec pull_back(const AbelianExtension &x, const Vec &y)
{
    if (!is_zero(x.p.apply(y)))
        throw StructuralError("value does not lie in ker p: extension malformed");
    auto u = solve(x.i, y);
    if (!u)
        throw StructuralError("value in ker p but not in i(V): extension malformed");
    return *u;
}

inline CocyclePair extract_cocycle(const AbelianExtension &x, const Matrix &s)
{
    require_section(x, s);
    const std::size_t n = x.P.dim, v = x.V.dim;
    Bilinear h(n, n, v), H(n, n, v);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
        {
            Vec sa = s.col(a), sb = s.col(b);
            h.set_basis(a, b, pull_back(x, x.E.mul(sa, sb) - s.apply(x.P.mult.on_basis(a, b))));
            H.set_basis(a, b, pull_back(x, x.E.br(sa, sb) - s.apply(x.P.bracket.on_basis(a, b))));
        }
    if (!is_two_cocycle(x.P, x.V, h, H))
        throw std::logic_error("extracted pair is not a cocycle");
    return {h, H};
}

// ---- automorphisms ----

struct AutPair
{
    Matrix beta;  // V -> V
    Matrix alpha; // P -> P
};

struct DerPair
{
    Matrix dV;
    Matrix dP;
};

inline AutPair restrict_and_project_aut(const AbelianExtension &x, const Matrix &s, const Matrix &gamma)
{
    require_section(x, s);
    if (!check_map(MapKind::PoissonAuto, x.E, x.E, gamma).ok())
        throw PreconditionError("not-an-automorphism", "gamma is not an automorphism of E");
    if (!(x.p * gamma * x.i).is_zero())
        throw PreconditionError("does-not-preserve-V", "gamma does not map i(V) into i(V)");
    Matrix L = detail::left_inverse(x.i);
    return {L * gamma * x.i, x.p * gamma * s};
}

// Membership in the compatible set: beta(mu_x v) = mu_{alpha x} beta v and
// the same for rho, on basis elements.
inline ValidationReport compat_report_aut(const AbelianExtension &x, const AutPair &pr)
{
    const std::size_t n = x.P.dim, v = x.V.dim;
    if (pr.beta.rows() != v || pr.beta.cols() != v || pr.alpha.rows() != n || pr.alpha.cols() != n)
        throw StructuralError("automorphism pair has the wrong shape");
    ValidationReport rep;
    for (std::size_t a = 0; a < n; ++a)
    {
        Vec ax = pr.alpha.col(a);
        rep.check("compat-mu", {a}, (pr.beta * x.V.mu[a] - x.V.mu_of(ax) * pr.beta).data());
        rep.check("compat-rho", {a}, (pr.beta * x.V.rho[a] - x.V.rho_of(ax) * pr.beta).data());
    }
    return rep;
}

inline bool compat_pair_aut(const AbelianExtension &x, const AutPair &pr) { return compat_report_aut(x, pr).ok(); }

inline void require_aut_pair(const AbelianExtension &x, const AutPair &pr)
{
    if (!is_invertible(pr.beta))
        throw PreconditionError("beta-not-invertible", "beta is not invertible");
    if (!check_map(MapKind::PoissonAuto, x.P, x.P, pr.alpha).ok())
        throw PreconditionError("alpha-not-automorphism", "alpha is not a Poisson automorphism of P");
}

inline CocyclePair transform_aut(const CocyclePair &c, const AutPair &pr)
{
    Matrix ai = *inverse(pr.alpha);
    return {c.first.transformed(pr.beta, ai, ai), c.second.transformed(pr.beta, ai, ai)};
}

struct WellsClass
{
    CocyclePair representative; // transformed minus original
    Vec coords;                 // degree-2 coordinates of the representative
    Vec class_coords;           // on the H^2 representatives
    bool zero = false;
    std::optional<Matrix> witness; // phi with representative = coboundary of phi, when zero
};

namespace detail
{
inline WellsClass make_class(const PoissonAlgebra &P, const Representation &V, const CocyclePair &diff)
{
    WellsClass w;
    w.representative = diff;
    w.coords = degree2_coords(P, V, diff.first, diff.second);
    auto rep = cohomology(P, V, 2);
    w.class_coords = class_decompose(P, V, rep, 2, w.coords).coefficients;
    w.witness = cohomologous_witness(P, V, diff, zero_pair(P.dim, V.dim));
    w.zero = w.witness.has_value();
    if (w.zero != is_zero(w.class_coords))
        throw std::logic_error("class decomposition and witness disagree");
    return w;
}
} // namespace detail

inline WellsClass wells_aut(const AbelianExtension &x, const AutPair &pr, const Matrix &s)
{
    require_valid(x);
    require_aut_pair(x, pr);
    if (!compat_pair_aut(x, pr))
        throw PreconditionError("pair not in C_{mu,rho}", "pair is not compatible with the representation");
    CocyclePair c = extract_cocycle(x, s);
    CocyclePair t = transform_aut(c, pr);
    return detail::make_class(x.P, x.V, {t.first - c.first, t.second - c.second});
}

inline WellsClass wells_aut(const AbelianExtension &x, const AutPair &pr)
{
    return wells_aut(x, pr, canonical_section(x));
}

struct Inducibility
{
    bool inducible = false;
    std::string reason;
    std::optional<Matrix> lift;
};

inline Inducibility inducible_aut(const AbelianExtension &x, const AutPair &pr, const Matrix &s)
{
    require_valid(x);
    require_aut_pair(x, pr);
    if (!compat_pair_aut(x, pr))
        return {false, "pair not in C_{mu,rho}", std::nullopt};
    CocyclePair c = extract_cocycle(x, s);
    CocyclePair t = transform_aut(c, pr);
    auto phi = cohomologous_witness(x.P, x.V, t, c);
    if (!phi)
        return {false, "Wells class is nonzero", std::nullopt};
    // gamma(s(x) + i(u)) = s(alpha x) + i(beta u) + i(phi(alpha x))
    const std::size_t e = x.E.dim;
    Matrix L = detail::left_inverse(x.i);
    Matrix I = Matrix::identity(e);
    Matrix gamma = s * pr.alpha * x.p + x.i * pr.beta * L * (I - s * x.p) + x.i * *phi * pr.alpha * x.p;
    if (!check_map(MapKind::PoissonAuto, x.E, x.E, gamma).ok())
        throw std::logic_error("constructed lift is not an automorphism");
    AutPair back = restrict_and_project_aut(x, s, gamma);
    if (!(back.beta == pr.beta) || !(back.alpha == pr.alpha))
        throw std::logic_error("constructed lift does not restrict to the pair");
    return {true, "", gamma};
}

inline Inducibility inducible_aut(const AbelianExtension &x, const AutPair &pr)
{
    return inducible_aut(x, pr, canonical_section(x));
}

// ---- derivations ----

inline DerPair restrict_and_project_der(const AbelianExtension &x, const Matrix &s, const Matrix &d)
{
    require_section(x, s);
    if (!is_poisson_derivation(x.E, d))
        throw PreconditionError("not-a-derivation", "d is not a Poisson derivation of E");
    if (!(x.p * d * x.i).is_zero())
        throw PreconditionError("does-not-preserve-V", "d does not map i(V) into i(V)");
    Matrix L = detail::left_inverse(x.i);
    return {L * d * x.i, x.p * d * s};
}

inline ValidationReport compat_report_der(const AbelianExtension &x, const DerPair &pr)
{
    const std::size_t n = x.P.dim, v = x.V.dim;
    if (pr.dV.rows() != v || pr.dV.cols() != v || pr.dP.rows() != n || pr.dP.cols() != n)
        throw StructuralError("derivation pair has the wrong shape");
    ValidationReport rep;
    for (std::size_t a = 0; a < n; ++a)
    {
        Vec dx = pr.dP.col(a);
        rep.check("compat-mu", {a}, (pr.dV * x.V.mu[a] - x.V.mu_of(dx) - x.V.mu[a] * pr.dV).data());
        rep.check("compat-rho", {a}, (pr.dV * x.V.rho[a] - x.V.rho_of(dx) - x.V.rho[a] * pr.dV).data());
    }
    return rep;
}

inline bool compat_pair_der(const AbelianExtension &x, const DerPair &pr) { return compat_report_der(x, pr).ok(); }

inline void require_der_pair(const AbelianExtension &x, const DerPair &pr)
{
    if (!is_poisson_derivation(x.P, pr.dP))
        throw PreconditionError("dP-not-derivation", "d_P is not a Poisson derivation of P");
}

inline CocyclePair transform_der(const CocyclePair &c, const DerPair &pr)
{
    const std::size_t n = pr.dP.rows();
    Matrix I = Matrix::identity(n);
    auto tr = [&](const Bilinear &b) {
        return b.transformed(pr.dV, I, I) - b.transformed(Matrix::identity(pr.dV.rows()), pr.dP, I) -
               b.transformed(Matrix::identity(pr.dV.rows()), I, pr.dP);
    };
    return {tr(c.first), tr(c.second)};
}

inline WellsClass wells_der(const AbelianExtension &x, const DerPair &pr, const Matrix &s)
{
    require_valid(x);
    require_der_pair(x, pr);
    if (!compat_pair_der(x, pr))
        throw PreconditionError("pair not in D_{mu,rho}", "pair is not compatible with the representation");
    return detail::make_class(x.P, x.V, transform_der(extract_cocycle(x, s), pr));
}

inline WellsClass wells_der(const AbelianExtension &x, const DerPair &pr)
{
    return wells_der(x, pr, canonical_section(x));
}

inline Inducibility inducible_der(const AbelianExtension &x, const DerPair &pr, const Matrix &s)
{
    require_valid(x);
    require_der_pair(x, pr);
    if (!compat_pair_der(x, pr))
        return {false, "pair not in D_{mu,rho}", std::nullopt};
    CocyclePair t = transform_der(extract_cocycle(x, s), pr);
    auto phi = cohomologous_witness(x.P, x.V, t, detail::zero_pair(x.P.dim, x.V.dim));
    if (!phi)
        return {false, "Wells class is nonzero", std::nullopt};
    // d(s(x) + i(u)) = s(d_P x) + i(d_V u) + i(phi(x))
    Matrix L = detail::left_inverse(x.i);
    Matrix I = Matrix::identity(x.E.dim);
    Matrix d = s * pr.dP * x.p + x.i * pr.dV * L * (I - s * x.p) + x.i * *phi * x.p;
    if (!is_poisson_derivation(x.E, d))
        throw std::logic_error("constructed lift is not a derivation");
    DerPair back = restrict_and_project_der(x, s, d);
    if (!(back.dV == pr.dV) || !(back.dP == pr.dP))
        throw std::logic_error("constructed lift does not restrict to the pair");
    return {true, "", d};
}

inline Inducibility inducible_der(const AbelianExtension &x, const DerPair &pr)
{
    return inducible_der(x, pr, canonical_section(x));
}

// ---- exact sequences ----

struct SequenceProbe
{
    std::size_t der_PV = 0;      // dim Der(P, V)
    std::size_t der_V_E = 0;     // dim of derivations of E preserving i(V)
    std::size_t image_eta = 0;   // dim of the image of restriction-projection
    std::size_t kernel_eta = 0;
    bool exact_at_middle = false; // im iota = ker eta
    bool iota_injective = false;
    bool image_in_compatible = false; // eta lands in D_{mu,rho}
    bool aut_sequence_ok = false;     // Id + i D p are automorphisms restricting to (Id, Id)
};

inline SequenceProbe derivation_sequence_probe(const AbelianExtension &x)
{
    require_valid(x);
    const std::size_t e = x.E.dim;
    SequenceProbe out;
    Matrix s = canonical_section(x);
    Matrix L = detail::left_inverse(x.i);

    auto der_pv = derivation_basis(x.P, x.V);
    out.der_PV = der_pv.size();

    // Der_V(E): derivations of E with p d i = 0, in flatten_map coordinates
    Matrix cons = derivation_constraints(x.E, adjoint_rep(x.E));
    std::vector<Vec> extra;
    for (std::size_t a = 0; a < x.V.dim; ++a)
        for (std::size_t r = 0; r < x.P.dim; ++r)
        {
            // (p d i)(r, a) = sum_{k,l} p(r, k) d(k, l) i(l, a); d(k, l) sits at l * e + k
            Vec row = zero_vec(e * e);
            for (std::size_t k = 0; k < e; ++k)
                for (std::size_t l = 0; l < e; ++l)
                    row[l * e + k] += x.p(r, k) * x.i(l, a);
            extra.push_back(row);
        }
    Matrix dve_basis = kernel_basis(vstack(cons, Matrix::from_rows(e * e, extra)));
    out.der_V_E = dve_basis.cols();

    // eta as a linear map Der_V(E) -> End(V) x End(P)
    std::vector<Vec> eta_cols;
    out.image_in_compatible = true;
    for (std::size_t c = 0; c < dve_basis.cols(); ++c)
    {
        Matrix d = unflatten_map(dve_basis.col(c), e, e);
        DerPair pr{L * d * x.i, x.p * d * s};
        out.image_in_compatible =
            out.image_in_compatible && compat_pair_der(x, pr) && is_poisson_derivation(x.P, pr.dP);
        eta_cols.push_back(concat(flatten_map(pr.dV), flatten_map(pr.dP)));
    }
    const std::size_t eta_rows = x.V.dim * x.V.dim + x.P.dim * x.P.dim;
    Matrix eta = Matrix::from_columns(eta_rows, eta_cols);
    out.image_eta = rank(eta);
    Matrix ker = kernel_basis(eta); // coordinates in dve_basis
    out.kernel_eta = ker.cols();
    Matrix ker_in_end = dve_basis * ker;

    std::vector<Vec> iota_cols;
    for (const auto &D : der_pv)
        iota_cols.push_back(flatten_map(x.i * D * x.p));
    Matrix iota = Matrix::from_columns(e * e, iota_cols);
    out.iota_injective = rank(iota) == der_pv.size();
    out.exact_at_middle = same_column_span(iota, ker_in_end);

    out.aut_sequence_ok = true;
    for (const auto &D : der_pv)
    {
        Matrix g = Matrix::identity(e) + x.i * D * x.p;
        if (!check_map(MapKind::PoissonAuto, x.E, x.E, g).ok())
        {
            out.aut_sequence_ok = false;
            continue;
        }
        AutPair t = restrict_and_project_aut(x, s, g);
        out.aut_sequence_ok = out.aut_sequence_ok && t.beta == Matrix::identity(x.V.dim) &&
                              t.alpha == Matrix::identity(x.P.dim);
    }
    return out;
}

} // namespace pcoho

#endif

#ifndef PCOHO_DEFORMATION_HPP
#define PCOHO_DEFORMATION_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cohomology.hpp"
#include "deformation_map.hpp"

namespace pcoho
{

inline constexpr std::size_t kDefaultNijenhuisCandidates = 64;

// r_t = terms[0] + t terms[1] + ... + t^N terms[N].
struct FormalDeformation
{
    std::vector<Matrix> terms;

    std::size_t order() const { return terms.empty() ? 0 : terms.size() - 1; }
    const Matrix &base() const { return terms.front(); }

    friend bool operator==(const FormalDeformation &, const FormalDeformation &) = default;
};

namespace detail
{
inline void require_series_shape(const ProtoTwilled &pt, const FormalDeformation &rt)
{
    if (rt.terms.empty())
        throw StructuralError("a formal deformation needs at least its base term");
    for (const auto &m : rt.terms)
        require_defmap_shape(pt, m);
}

inline Vec term_apply(const std::vector<Matrix> &terms, std::size_t i, const Vec &x, std::size_t rows)
{
    return i < terms.size() ? terms[i].apply(x) : zero_vec(rows);
}

// Matrix of x -> B(x0, x).
inline Matrix left_slot(const Bilinear &B, const Vec &x0)
{
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < B.right(); ++j)
        cols.push_back(B.apply(x0, unit_vec(B.right(), j)));
    return Matrix::from_columns(B.out(), cols);
}

// Coefficient of t^n in both defining equations of a deformation map,
// evaluated for r_t = sum t^i terms[i] at basis vectors (u, v) of P2.
struct CoefficientResidual
{
    Vec product, bracket;
};

inline CoefficientResidual defmap_coefficient(const ProtoTwilled &pt, const std::vector<Matrix> &terms, std::size_t n,
                                              std::size_t u, std::size_t v)
{
    const std::size_t a = pt.n1, b = pt.n2;
    Vec eu = unit_vec(b, u), ev = unit_vec(b, v);
    auto R = [&](std::size_t i, const Vec &x) { return term_apply(terms, i, x, a); };
    std::vector<Vec> ru, rv;
    for (std::size_t i = 0; i <= n; ++i)
    {
        ru.push_back(R(i, eu));
        rv.push_back(R(i, ev));
    }
    Vec pl = pt.nu[u].apply(rv[n]) + pt.nu[v].apply(ru[n]);
    Vec bl = pt.psi[u].apply(rv[n]) - pt.psi[v].apply(ru[n]);
    if (n == 0)
    {
        pl = pl + pt.theta.on_basis(u, v);
        bl = bl + pt.Theta.on_basis(u, v);
    }
    Vec pr = R(n, pt.dot2.on_basis(u, v)), br = R(n, pt.br2.on_basis(u, v));
    for (std::size_t i = 0; i <= n; ++i)
    {
        const std::size_t j = n - i;
        pl = pl + pt.dot1.apply(ru[i], rv[j]);
        bl = bl + pt.br1.apply(ru[i], rv[j]);
        pr = pr + R(i, combine(pt.mu, ru[j], b, b).apply(ev) + combine(pt.mu, rv[j], b, b).apply(eu));
        br = br + R(i, combine(pt.rho, ru[j], b, b).apply(ev) - combine(pt.rho, rv[j], b, b).apply(eu));
        for (std::size_t k = 0; i + k <= n; ++k)
        {
            const std::size_t l = n - i - k;
            pr = pr + R(i, pt.h.apply(ru[k], rv[l]));
            br = br + R(i, pt.Hh.apply(ru[k], rv[l]));
        }
    }
    return {pl - pr, bl - br};
}

// Coefficient of t^k in Phi_t(a o b) - Phi_t(a) o Phi_t(b) on basis pairs,
// Phi_t = sum t^i phi[i] with phi[0] the identity.
inline void hom_coefficient(ValidationReport &rep, const std::string &tag, const Bilinear &op,
                            const std::vector<Matrix> &phi, std::size_t k)
{
    const std::size_t n = op.left();
    auto P = [&](std::size_t i, const Vec &x) { return i < phi.size() ? phi[i].apply(x) : zero_vec(n); };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
        {
            Vec ex = unit_vec(n, x), ey = unit_vec(n, y);
            Vec res = P(k, op.on_basis(x, y));
            for (std::size_t i = 0; i <= k; ++i)
                res = res - op.apply(P(i, ex), P(k - i, ey));
            rep.check(tag, {k, x, y}, res);
        }
}

inline Matrix coeff(const std::vector<Matrix> &s, std::size_t i, std::size_t rows, std::size_t cols)
{
    return i < s.size() ? s[i] : Matrix(rows, cols);
}

// Product of two truncated series of matrices, kept up to t^N.
inline std::vector<Matrix> series_mul(const std::vector<Matrix> &a, const std::vector<Matrix> &b, std::size_t N)
{
    const std::size_t rows = a.front().rows(), cols = b.front().cols();
    std::vector<Matrix> out(N + 1, Matrix(rows, cols));
    for (std::size_t i = 0; i < a.size() && i <= N; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= N; ++j)
            out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

inline Matrix block_diag(const Matrix &p, const Matrix &q)
{
    return block2x2(p, Matrix(p.rows(), q.cols()), Matrix(q.rows(), p.cols()), q);
}
} // namespace detail

// ---- cohomology of a deformation map ----

inline CohomologyReport operator_cohomology(const ProtoTwilled &pt, const Matrix &r, std::size_t kmax)
{
    return cohomology(induced_algebra(pt, r), induced_rep(pt, r), kmax);
}

// delta_r(x0) as a map P2 -> P1, through the degree-0 differential of the
// induced complex.
inline Matrix operator_coboundary(const ProtoTwilled &pt, const Matrix &r, const Vec &x0)
{
    if (x0.size() != pt.n1)
        throw StructuralError("element must lie in P1");
    PoissonAlgebra A = induced_algebra(pt, r);
    Representation V = induced_rep(pt, r);
    return map_of_degree1(delta_FGV(A, V, 0).matrix.apply(x0), pt.n1, pt.n2);
}

inline bool is_operator_cocycle(const ProtoTwilled &pt, const Matrix &r, const Matrix &r1)
{
    detail::require_defmap_shape(pt, r1);
    PoissonAlgebra A = induced_algebra(pt, r);
    Representation V = induced_rep(pt, r);
    return is_zero(delta_FGV(A, V, 1).matrix.apply(degree1_coords(r1)));
}

// ---- linear deformations ----

// The six identities for r + t r1: coefficients of t, t^2, t^3 in both
// equations. Cross-checked against interpolation of the full residual at
// t = 0, 1, 2, 3; any disagreement is an internal error.
inline ValidationReport linear_deformation_check(const ProtoTwilled &pt, const Matrix &r, const Matrix &r1)
{
    detail::check_shapes(pt);
    detail::require_defmap_shape(pt, r);
    detail::require_defmap_shape(pt, r1);
    require_deformation_map(pt, r);
    const std::vector<Matrix> terms{r, r1};
    ValidationReport rep;
    std::vector<std::vector<detail::CoefficientResidual>> coeffs(4);
    for (std::size_t n = 0; n <= 3; ++n)
        for (std::size_t u = 0; u < pt.n2; ++u)
            for (std::size_t v = 0; v < pt.n2; ++v)
            {
                auto c = detail::defmap_coefficient(pt, terms, n, u, v);
                if (n > 0)
                {
                    rep.check("linear-product-t" + std::to_string(n), {u, v}, c.product);
                    rep.check("linear-bracket-t" + std::to_string(n), {u, v}, c.bracket);
                }
                coeffs[n].push_back(std::move(c));
            }

    // Sampled residuals R(t) = sum c_n t^n; recover c_n by inverting the
    // Vandermonde matrix on {0, 1, 2, 3}.
    Matrix vander(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
    {
        Scalar p = 1;
        for (std::size_t j = 0; j < 4; ++j, p *= Scalar(static_cast<long>(i)))
            vander(i, j) = p;
    }
    Matrix vinv = *inverse(vander);
    std::vector<std::vector<Vec>> prod_samples(4), br_samples(4);
    for (std::size_t i = 0; i < 4; ++i)
    {
        Matrix rt = r + Scalar(static_cast<long>(i)) * r1;
        for (std::size_t u = 0; u < pt.n2; ++u)
            for (std::size_t v = 0; v < pt.n2; ++v)
            {
                auto c = detail::defmap_coefficient(pt, {rt}, 0, u, v);
                prod_samples[i].push_back(c.product);
                br_samples[i].push_back(c.bracket);
            }
    }
    for (std::size_t n = 0; n <= 3; ++n)
        for (std::size_t idx = 0; idx < coeffs[n].size(); ++idx)
        {
            Vec p = zero_vec(pt.n1), b = zero_vec(pt.n1);
            for (std::size_t i = 0; i < 4; ++i)
            {
                p = p + vinv(n, i) * prod_samples[i][idx];
                b = b + vinv(n, i) * br_samples[i][idx];
            }
            if (p != coeffs[n][idx].product || b != coeffs[n][idx].bracket)
                throw std::logic_error("degreewise identities disagree with sampled residuals");
        }
    return rep;
}

// ---- formal deformations ----

// Both order-n identities for 1 <= n <= N; index (n, u, v).
inline ValidationReport formal_deformation_check(const ProtoTwilled &pt, const FormalDeformation &rt)
{
    detail::check_shapes(pt);
    detail::require_series_shape(pt, rt);
    require_deformation_map(pt, rt.base());
    ValidationReport rep;
    for (std::size_t n = 1; n <= rt.order(); ++n)
        for (std::size_t u = 0; u < pt.n2; ++u)
            for (std::size_t v = 0; v < pt.n2; ++v)
            {
                auto c = detail::defmap_coefficient(pt, rt.terms, n, u, v);
                rep.check("formal-product", {n, u, v}, c.product);
                rep.check("formal-bracket", {n, u, v}, c.bracket);
            }
    return rep;
}

inline void require_formal_deformation(const ProtoTwilled &pt, const FormalDeformation &rt)
{
    auto rep = formal_deformation_check(pt, rt);
    if (!rep.ok())
        throw PreconditionError("not-a-formal-deformation",
                                "series fails the " + rep.violations.front().axiom + " identity at order " +
                                    std::to_string(rep.violations.front().index.front()));
}

struct Infinitesimal
{
    Matrix map;   // r1 : P2 -> P1
    Vec coords;   // degree-1 coordinates in the induced complex
    bool cocycle = false;
};

inline Infinitesimal infinitesimal(const ProtoTwilled &pt, const FormalDeformation &rt)
{
    require_formal_deformation(pt, rt);
    Infinitesimal out;
    out.map = rt.order() >= 1 ? rt.terms[1] : Matrix(pt.n1, pt.n2);
    out.coords = degree1_coords(out.map);
    out.cocycle = is_operator_cocycle(pt, rt.base(), out.map);
    if (!out.cocycle)
        throw std::logic_error("infinitesimal of a formal deformation is not a cocycle");
    return out;
}

// ---- Nijenhuis elements ----

// Linear parts of the maps attached to x0: x -> {x0, x}_1 on P1 and
// u -> rho_{x0} u + H(x0, r u) on P2.
struct NijenhuisMaps
{
    Matrix on_p1, on_p2;
};

inline NijenhuisMaps nijenhuis_maps(const ProtoTwilled &pt, const Matrix &r, const Vec &x0)
{
    if (x0.size() != pt.n1)
        throw StructuralError("element must lie in P1");
    detail::require_defmap_shape(pt, r);
    Matrix a2 = combine(pt.rho, x0, pt.n2, pt.n2);
    for (std::size_t u = 0; u < pt.n2; ++u)
        a2.set_col(u, a2.col(u) + pt.Hh.apply(x0, r.col(u)));
    return {detail::left_slot(pt.br1, x0), a2};
}

// Coefficients t^0, t^1, t^2 of the homomorphism condition for
// Id + t(A1 + A2), then the closing identity on every basis u.
inline ValidationReport nijenhuis_report(const ProtoTwilled &pt, const Matrix &r, const Vec &x0)
{
    require_valid(pt);
    require_deformation_map(pt, r);
    auto [a1, a2] = nijenhuis_maps(pt, r, x0);
    PoissonAlgebra E = assembled(pt);
    std::vector<Matrix> phi{Matrix::identity(pt.dim()), detail::block_diag(a1, a2)};
    ValidationReport rep;
    for (std::size_t k = 0; k <= 2; ++k)
    {
        detail::hom_coefficient(rep, "nijenhuis-hom-product", E.mult, phi, k);
        detail::hom_coefficient(rep, "nijenhuis-hom-bracket", E.bracket, phi, k);
    }
    for (std::size_t u = 0; u < pt.n2; ++u)
    {
        Vec eu = unit_vec(pt.n2, u), ru = r.col(u);
        Vec inner = pt.br1.apply(ru, x0) -
                    r.apply(Scalar(-1) * combine(pt.rho, x0, pt.n2, pt.n2).apply(eu) + pt.Hh.apply(ru, x0));
        rep.check("nijenhuis-closing", {u}, pt.br1.apply(inner, x0));
    }
    return rep;
}

inline bool nijenhuis_check(const ProtoTwilled &pt, const Matrix &r, const Vec &x0)
{
    return nijenhuis_report(pt, r, x0).ok();
}

// Basis of {x0 : {x0, -}_1 = 0, rho_{x0} = 0, H(x0, -) = 0}.
inline Matrix inert_elements(const ProtoTwilled &pt)
{
    detail::check_shapes(pt);
    std::vector<Vec> rows;
    auto add_rows = [&](auto entry, std::size_t count) {
        for (std::size_t q = 0; q < count; ++q)
        {
            Vec row = zero_vec(pt.n1);
            for (std::size_t x = 0; x < pt.n1; ++x)
                row[x] = entry(x, q);
            rows.push_back(std::move(row));
        }
    };
    const std::size_t a = pt.n1, b = pt.n2;
    add_rows([&](std::size_t x, std::size_t q) { return pt.br1(x, q / a, q % a); }, a * a);
    add_rows([&](std::size_t x, std::size_t q) { return pt.rho[x](q / b, q % b); }, b * b);
    add_rows([&](std::size_t x, std::size_t q) { return pt.Hh(x, q / b, q % b); }, a * b);
    return kernel_basis(Matrix::from_rows(a, rows));
}

// ---- equivalences ----

struct EquivalenceReport
{
    ValidationReport report;
    std::vector<Matrix> phi1, phi2; // index i is the t^i coefficient
    std::optional<std::size_t> unsolved_order;

    bool ok() const { return report.ok() && !unsolved_order; }
};

namespace detail
{
// Residual of the order-i equations as a linear function of the unknown
// coefficients (phi1_i, phi2_i), plus the known part from lower orders.
struct OrderSystem
{
    Matrix lhs;
    Vec rhs;
};

inline OrderSystem order_system(const ProtoTwilled &pt, const PoissonAlgebra &E, const std::vector<Matrix> &phi,
                                const std::vector<Matrix> &rt, const std::vector<Matrix> &rt2,
                                const std::vector<Matrix> &phi1, const std::vector<Matrix> &phi2, std::size_t i)
{
    const std::size_t a = pt.n1, b = pt.n2, n = pt.dim();
    auto residual = [&](const Matrix &p1, const Matrix &p2, bool with_known) {
        Vec out;
        Matrix blk = block_diag(p1, p2);
        for (const Bilinear *op : {&E.mult, &E.bracket})
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y)
                {
                    Vec ex = unit_vec(n, x), ey = unit_vec(n, y);
                    Vec res = blk.apply(op->on_basis(x, y)) - op->apply(blk.apply(ex), ey) -
                              op->apply(ex, blk.apply(ey));
                    if (with_known)
                        for (std::size_t j = 1; j < i; ++j)
                            res = res - op->apply(phi[j].apply(ex), phi[i - j].apply(ey));
                    out.insert(out.end(), res.begin(), res.end());
                }
        Matrix inter = p1 * rt[0] - rt2[0] * p2;
        if (with_known)
            for (std::size_t j = 0; j < i; ++j)
                inter = inter + coeff(phi1, j, a, a) * coeff(rt, i - j, a, b) -
                        coeff(rt2, i - j, a, b) * coeff(phi2, j, b, b);
        out.insert(out.end(), inter.data().begin(), inter.data().end());
        return out;
    };
    Vec known = residual(Matrix(a, a), Matrix(b, b), true);
    std::vector<Vec> cols;
    for (std::size_t q = 0; q < a * a; ++q)
    {
        Matrix p1(a, a);
        p1(q / a, q % a) = 1;
        cols.push_back(residual(p1, Matrix(b, b), false));
    }
    for (std::size_t q = 0; q < b * b; ++q)
    {
        Matrix p2(b, b);
        p2(q / b, q % b) = 1;
        cols.push_back(residual(Matrix(a, a), p2, false));
    }
    return {Matrix::from_columns(known.size(), cols), Scalar(-1) * known};
}
} // namespace detail

// Homomorphism of deformation maps from r_t to r_t' whose linear part is fixed
// by x0. Order 1 is checked exactly, as a polynomial identity in t; for higher
// orders the remaining coefficients are solved for order by order and the
// conditions are checked modulo t^{N+1}.
inline EquivalenceReport equivalence_check(const ProtoTwilled &pt, const FormalDeformation &rt,
                                           const FormalDeformation &rt2, const Vec &x0)
{
    require_valid(pt);
    require_formal_deformation(pt, rt);
    require_formal_deformation(pt, rt2);
    if (!(rt.base() == rt2.base()))
        throw PreconditionError("different-base", "deformations must share the base deformation map");
    const Matrix &r = rt.base();
    const std::size_t a = pt.n1, b = pt.n2;
    const std::size_t N = std::max<std::size_t>(std::max(rt.order(), rt2.order()), 1);
    auto [a1, a2] = nijenhuis_maps(pt, r, x0);
    PoissonAlgebra E = assembled(pt);

    EquivalenceReport out;
    out.phi1 = {Matrix::identity(a), a1};
    out.phi2 = {Matrix::identity(b), a2};
    std::vector<Matrix> phi{Matrix::identity(pt.dim()), detail::block_diag(a1, a2)};

    for (std::size_t i = 2; i <= N; ++i)
    {
        auto sys = detail::order_system(pt, E, phi, rt.terms, rt2.terms, out.phi1, out.phi2, i);
        auto sol = solve(sys.lhs, sys.rhs);
        if (!sol)
        {
            out.unsolved_order = i;
            return out;
        }
        Matrix p1(a, a), p2(b, b);
        for (std::size_t q = 0; q < a * a; ++q)
            p1(q / a, q % a) = (*sol)[q];
        for (std::size_t q = 0; q < b * b; ++q)
            p2(q / b, q % b) = (*sol)[a * a + q];
        out.phi1.push_back(p1);
        out.phi2.push_back(p2);
        phi.push_back(detail::block_diag(p1, p2));
    }

    // Exact check for linear data (degree 2 in t), truncated otherwise.
    const std::size_t top = N == 1 ? 2 : N;
    for (std::size_t k = 1; k <= top; ++k)
    {
        detail::hom_coefficient(out.report, "equivalence-hom-product", E.mult, phi, k);
        detail::hom_coefficient(out.report, "equivalence-hom-bracket", E.bracket, phi, k);
    }
    auto left = detail::series_mul(out.phi1, rt.terms, top);
    auto right = detail::series_mul(rt2.terms, out.phi2, top);
    for (std::size_t k = 1; k <= top; ++k)
        for (std::size_t u = 0; u < b; ++u)
        {
            Vec res = left[k].col(u) - right[k].col(u);
            if (N == 1)
                out.report.check(k == 1 ? "equivalence-first-order" : "equivalence-second-order", {u}, res);
            else
                out.report.check("equivalence-intertwining", {k, u}, res);
        }
    return out;
}

// Infinitesimals of equivalent deformations differ by delta_r(x0).
inline bool infinitesimals_cohomologous(const ProtoTwilled &pt, const FormalDeformation &rt,
                                        const FormalDeformation &rt2, const Vec &x0)
{
    Matrix d = infinitesimal(pt, rt).map - infinitesimal(pt, rt2).map;
    return d == operator_coboundary(pt, rt.base(), x0);
}

// ---- rigidity ----

struct RigidityStep
{
    std::size_t order = 0;
    Vec x0;
};

struct RigidityReport
{
    bool trivialized = false;
    std::optional<std::size_t> obstruction_order;
    std::string reason;
    std::vector<RigidityStep> steps;
    FormalDeformation final;
};

namespace detail
{
inline bool psi_zero(const ProtoTwilled &pt)
{
    for (const auto &m : pt.psi)
        if (!m.is_zero())
            return false;
    return true;
}

// r_t' = phi1_t r_t phi2_t^{-1} mod t^{N+1}, with phi_t = Id + t^k A.
inline FormalDeformation trivialization_step(const FormalDeformation &rt, const Matrix &a1, const Matrix &a2,
                                             std::size_t k)
{
    const std::size_t N = rt.order(), a = a1.rows(), b = a2.rows();
    std::vector<Matrix> phi1(N + 1, Matrix(a, a)), inv2(N + 1, Matrix(b, b));
    phi1[0] = Matrix::identity(a);
    if (k <= N)
        phi1[k] = a1;
    Matrix pw = Matrix::identity(b);
    for (std::size_t j = 0; j * k <= N; ++j)
    {
        inv2[j * k] = pw;
        pw = Scalar(-1) * (pw * a2);
    }
    return {series_mul(series_mul(phi1, rt.terms, N), inv2, N)};
}
} // namespace detail

// Repeatedly kills the lowest nonzero term by a Nijenhuis coboundary.
inline RigidityReport rigidity_probe(const ProtoTwilled &pt, const FormalDeformation &rt, std::size_t max_steps,
                                     std::size_t max_candidates = kDefaultNijenhuisCandidates)
{
    require_valid(pt);
    if (!detail::psi_zero(pt))
        throw PreconditionError("hypothesis-violation", "rigidity probe requires psi = 0");
    require_formal_deformation(pt, rt);
    const Matrix &r = rt.base();
    PoissonAlgebra A = induced_algebra(pt, r);
    Representation V = induced_rep(pt, r);
    Matrix d0 = delta_FGV(A, V, 0).matrix;
    Matrix ker = kernel_basis(d0);

    RigidityReport out;
    out.final = rt;
    for (std::size_t step = 0;; ++step)
    {
        std::size_t k = 1;
        while (k <= out.final.order() && out.final.terms[k].is_zero())
            ++k;
        if (k > out.final.order())
        {
            out.trivialized = true;
            out.reason = "trivialized to order " + std::to_string(rt.order());
            return out;
        }
        if (step >= max_steps)
        {
            out.reason = "step limit reached at order " + std::to_string(k);
            return out;
        }
        auto sol = solve(d0, degree1_coords(out.final.terms[k]));
        if (!sol)
        {
            out.obstruction_order = k;
            out.reason = "term of order " + std::to_string(k) + " is not a coboundary";
            return out;
        }
        std::optional<Vec> x0;
        std::vector<Vec> candidates{*sol};
        for (std::size_t c = 0; c < ker.cols() && candidates.size() < max_candidates; ++c)
            candidates.push_back(*sol + ker.col(c));
        for (std::size_t c = 0; c < ker.cols() && candidates.size() < max_candidates; ++c)
            candidates.push_back(*sol - ker.col(c));
        for (const auto &cand : candidates)
            if (nijenhuis_check(pt, r, cand))
            {
                x0 = cand;
                break;
            }
        if (!x0)
        {
            out.obstruction_order = k;
            out.reason = "no Nijenhuis preimage at order " + std::to_string(k);
            return out;
        }
        auto [a1, a2] = nijenhuis_maps(pt, r, *x0);
        FormalDeformation next = detail::trivialization_step(out.final, a1, a2, k);
        if (!formal_deformation_check(pt, next).ok())
            throw std::logic_error("trivialization step left the space of formal deformations");
        if (!next.terms[k].is_zero())
            throw std::logic_error("trivialization step did not clear the lowest term");
        out.steps.push_back({k, *x0});
        out.final = std::move(next);
    }
}

} // namespace pcoho

#endif

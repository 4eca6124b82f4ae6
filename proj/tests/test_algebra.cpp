#include <gtest/gtest.h>

#include <pcoho/algebra.hpp>
#include <pcoho/samples.hpp>

#include "support/generators.hpp"

using namespace pcoho;

TEST(Scalar, ParsesAndNormalizes)
{
    EXPECT_EQ(parse_scalar("3/6"), Scalar(1, 2));
    EXPECT_EQ(parse_scalar("-4"), Scalar(-4));
    EXPECT_EQ(to_string(parse_scalar("3/6")), "1/2");
    EXPECT_EQ(to_string(parse_scalar("10/5")), "2");
    EXPECT_THROW(parse_scalar("-1/-2"), ParseError);
    EXPECT_THROW(parse_scalar("1/0"), ParseError);
    EXPECT_THROW(parse_scalar("1.5"), ParseError);
    EXPECT_THROW(parse_scalar(""), ParseError);
    EXPECT_THROW(parse_scalar("+3"), ParseError);
}

TEST(ValidatePoisson, SampleCatalogIsValid)
{
    using namespace samples;
    for (const auto &p : {abelian_algebra(2), idempotent_line(), sl2_zero(), affine_lie(), heisenberg(),
                          truncated_poly(), dual_numbers(), square_zero_plane(), unital_square_zero_plane(),
                          direct_sum(idempotent_line(), affine_lie())})
        EXPECT_TRUE(validate_poisson(p).ok());
}

TEST(ValidatePoisson, BrokenJacobiReportsResidual)
{
    PoissonAlgebra p = samples::sl2_zero();
    // [e, f] = e instead of h
    p.bracket(1, 2, 0) = 0;
    p.bracket(2, 1, 0) = 0;
    p.bracket(1, 2, 1) = 1;
    p.bracket(2, 1, 1) = -1;
    auto r = validate_poisson(p);
    ASSERT_FALSE(r.ok());
    const Violation *v = r.first("jacobi");
    ASSERT_NE(v, nullptr);
    EXPECT_EQ(v->index, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(v->residual, (Vec{0, 2, 0}));
}

TEST(ValidatePoisson, EachAxiomCanFail)
{
    PoissonAlgebra p(2);
    p.mult(0, 1, 0) = 1; // not commutative
    EXPECT_TRUE(validate_poisson(p).has("commutativity"));

    PoissonAlgebra q(1);
    q.bracket(0, 0, 0) = 1;
    EXPECT_TRUE(validate_poisson(q).has("antisymmetry"));

    // x.x = x^2 but x^2.x = x: not associative
    PoissonAlgebra a = samples::truncated_poly();
    a.mult(1, 0, 0) = 1;
    a.mult(0, 1, 0) = 1;
    EXPECT_TRUE(validate_poisson(a).has("associativity"));

    // idempotent plus a bracket that is not a biderivation
    PoissonAlgebra l = samples::direct_sum(samples::idempotent_line(), samples::idempotent_line());
    l.bracket(0, 1, 0) = 1;
    l.bracket(1, 0, 0) = -1;
    EXPECT_TRUE(validate_poisson(l).has("leibniz"));
}

TEST(ValidatePoisson, ShapeAndCapacity)
{
    PoissonAlgebra p(2);
    p.mult = Bilinear(2, 2, 3);
    EXPECT_THROW(validate_poisson(p), StructuralError);
    EXPECT_THROW(validate_poisson(PoissonAlgebra(17)), CapacityError);
}

TEST(ValidatePoisson, InvariantUnderChangeOfBasis)
{
    gen::Rng r(11);
    for (int trial = 0; trial < 30; ++trial)
    {
        PoissonAlgebra p = gen::algebra(r, 4, false);
        Matrix g = gen::invertible(r, p.dim);
        EXPECT_TRUE(validate_poisson(change_basis(p, g)).ok());
        // a broken algebra stays broken
        PoissonAlgebra bad = p;
        bad.bracket(0, 0, 0) = 1;
        EXPECT_FALSE(validate_poisson(change_basis(bad, g)).ok());
    }
}

TEST(Representations, AdjointAndCoadjointAreValid)
{
    gen::Rng r(12);
    for (int trial = 0; trial < 40; ++trial)
    {
        PoissonAlgebra p = gen::algebra(r, 4);
        EXPECT_TRUE(validate_representation(p, adjoint_rep(p)).ok());
        EXPECT_TRUE(validate_representation(p, coadjoint_rep(p)).ok());
        EXPECT_TRUE(validate_representation(p, trivial_rep(p, 2)).ok());
    }
}

TEST(Representations, ReadOffFromConstants)
{
    auto b = samples::idempotent_line();
    auto ad = adjoint_rep(b);
    EXPECT_EQ(ad.mu[0], (Matrix{{1}}));
    EXPECT_EQ(ad.rho[0], (Matrix{{0}}));
    auto co = coadjoint_rep(b);
    EXPECT_EQ(co.mu[0], (Matrix{{1}}));
    EXPECT_EQ(co.rho[0], (Matrix{{0}}));

    auto s = samples::sl2_zero();
    auto as = adjoint_rep(s);
    // ad_h = diag(0, 2, -2)
    EXPECT_EQ(as.rho[0], (Matrix{{0, 0, 0}, {0, 2, 0}, {0, 0, -2}}));
    for (const auto &m : as.mu)
        EXPECT_TRUE(m.is_zero());
    auto cs = coadjoint_rep(s);
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_EQ(cs.rho[i], -as.rho[i].transpose());
}

TEST(Representations, PerturbedRhoFails)
{
    auto s = samples::sl2_zero();
    auto v = adjoint_rep(s);
    v.rho[1](0, 0) += 1;
    auto r = validate_representation(s, v);
    ASSERT_FALSE(r.ok());
    EXPECT_TRUE(r.has("rep-lie"));
    // zero product keeps the module and mixed-mu axioms intact
    EXPECT_FALSE(r.has("rep-module"));
    EXPECT_FALSE(r.has("rep-mixed-mu"));
}

TEST(Representations, EachAxiomCanFail)
{
    auto b = samples::idempotent_line();
    Representation v(1, 1);
    v.mu[0] = Matrix{{2}}; // mu_e mu_e = 4 != mu_{ee} = 2
    EXPECT_TRUE(validate_representation(b, v).has("rep-module"));

    Representation w(1, 1);
    w.mu[0] = Matrix{{1}};
    w.rho[0] = Matrix{{1}}; // rho_{ee} = 1 but mu rho + mu rho = 2
    EXPECT_TRUE(validate_representation(b, w).has("rep-mixed-rho"));

    auto a = samples::affine_lie();
    Representation u(2, 1);
    u.mu[1] = Matrix{{1}}; // mu_{[e1,e2]} = mu_{e2} = 1, but [rho, mu] = 0
    EXPECT_TRUE(validate_representation(a, u).has("rep-mixed-mu"));

    EXPECT_THROW(validate_representation(a, Representation(1, 1)), StructuralError);
}

TEST(CheckMap, Examples)
{
    auto s = samples::sl2_zero();
    EXPECT_TRUE(check_map(MapKind::PoissonAuto, s, s, Matrix::identity(3)).ok());
    auto b = samples::idempotent_line();
    auto r = check_map(MapKind::PoissonHom, b, b, Matrix{{2}});
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.first("hom-mult")->residual, (Vec{-2})); // f(ee) - f(e)f(e) = 2 - 4

    auto a2 = abelian_algebra(2);
    gen::Rng g(3);
    EXPECT_TRUE(check_map(MapKind::PoissonDerivation, a2, trivial_rep(a2, 2), gen::matrix(g, 2, 2)).ok());

    EXPECT_FALSE(check_map(MapKind::PoissonAuto, s, s, Matrix(3, 3)).ok());
    EXPECT_THROW(check_map(MapKind::PoissonDerivation, s, s, Matrix::identity(3)), StructuralError);
    EXPECT_THROW(check_map(MapKind::PoissonHom, s, adjoint_rep(s), Matrix::identity(3)), StructuralError);
    EXPECT_THROW(check_map(MapKind::PoissonHom, s, b, Matrix::identity(3)), StructuralError);
}

TEST(CheckMap, AutomorphismsCloseUnderCompositionAndInverse)
{
    // sl2: exp of ad_e and ad_f style automorphisms, plus torus scalings
    auto s = samples::sl2_zero();
    auto ok = [&](const Matrix &g) { return check_map(MapKind::PoissonAuto, s, s, g).ok(); };
    Matrix torus{{1, 0, 0}, {0, 2, 0}, {0, 0, Scalar(1, 2)}};
    // exp(ad_e): h -> h - 2e, e -> e, f -> f + h - e
    Matrix ue{{1, 0, 1}, {-2, 1, -1}, {0, 0, 1}};
    // exp(ad_f): h -> h + 2f, e -> e - h - f, f -> f
    Matrix uf{{1, -1, 0}, {0, 1, 0}, {2, -1, 1}};
    std::vector<Matrix> gens{torus, ue, uf};
    for (const auto &g : gens)
        ASSERT_TRUE(ok(g));
    for (const auto &g : gens)
        for (const auto &h : gens)
        {
            EXPECT_TRUE(ok(g * h));
            EXPECT_TRUE(ok(*inverse(g * h)));
        }
}

TEST(Derivations, BasisMatchesCheckMap)
{
    gen::Rng r(21);
    for (int trial = 0; trial < 20; ++trial)
    {
        auto p = gen::algebra(r, 3);
        auto v = gen::rep(r, p, 2);
        for (const auto &d : derivation_basis(p, v))
            EXPECT_TRUE(check_map(MapKind::PoissonDerivation, p, v, d).ok());
    }
    // derivations of the idempotent line are zero
    EXPECT_TRUE(derivation_basis(samples::idempotent_line(), adjoint_rep(samples::idempotent_line())).empty());
}

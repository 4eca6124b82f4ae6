#include <gtest/gtest.h>

#include <pcoho/extension.hpp>
#include <pcoho/samples.hpp>

#include "support/generators.hpp"

using namespace pcoho;

namespace
{

CocyclePair random_cocycle(gen::Rng &r, const PoissonAlgebra &p, const Representation &v)
{
    // coboundary plus a random combination of H^2 representatives
    auto rep = cohomology(p, v, 2);
    Matrix d1 = delta_FGV(p, v, 1).matrix;
    Vec z = d1.apply(gen::vec(r, d1.cols()));
    for (const auto &c : rep.at(2).representatives)
        axpy(z, r.rational(), c);
    return pair_of_degree2(p, v, z);
}

// Automorphisms of sl2 with zero product, generated by unipotents and a torus.
Matrix sl2_auto(gen::Rng &r)
{
    Matrix torus{{1, 0, 0}, {0, 2, 0}, {0, 0, Scalar(1, 2)}};
    Matrix ue{{1, 0, 1}, {-2, 1, -1}, {0, 0, 1}};
    Matrix uf{{1, -1, 0}, {0, 1, 0}, {2, -1, 1}};
    std::vector<Matrix> g{torus, ue, uf, *inverse(torus), *inverse(ue), *inverse(uf)};
    Matrix out = Matrix::identity(3);
    for (int i = 0; i < 3; ++i)
        out = out * g[r.index(g.size())];
    return out;
}

bool same_class(const AbelianExtension &x, const WellsClass &a, const WellsClass &b)
{
    return cohomologous_witness(x.P, x.V, a.representative, b.representative).has_value();
}

} // namespace

TEST(Extension, SplitExamples)
{
    auto b = samples::idempotent_line();
    auto [x, s] = build_split_extension(b, adjoint_rep(b));
    EXPECT_TRUE(validate_extension(x).ok());
    // (x, u)(y, w) = (xy, xw + yu)
    EXPECT_EQ(x.E.mul({1, 0}, {1, 0}), (Vec{1, 0}));
    EXPECT_EQ(x.E.mul({1, 0}, {0, 1}), (Vec{0, 1}));
    EXPECT_EQ(x.E.mul({0, 1}, {0, 1}), (Vec{0, 0}));
    auto c = extract_cocycle(x, s);
    EXPECT_TRUE(c.first.is_zero() && c.second.is_zero());

    auto a2 = abelian_algebra(2);
    auto [y, sy] = build_split_extension(a2, trivial_rep(a2, 1));
    EXPECT_TRUE(y.E.mult.is_zero() && y.E.bracket.is_zero());

    auto sl = samples::sl2_zero();
    auto [z, sz] = build_split_extension(sl, coadjoint_rep(sl));
    EXPECT_EQ(z.E.dim, 6u);
    EXPECT_TRUE(validate_poisson(z.E).ok());
    EXPECT_TRUE(validate_extension(z).ok());
}

TEST(Extension, RejectsNonCocycleAndMalformed)
{
    auto t = samples::truncated_poly();
    auto v = trivial_rep(t, 1);
    Bilinear h(2, 2, 1), H(2, 2, 1);
    h(1, 1, 0) = 1; // h(x^2, x^2) = 1 fails the commutative cocycle identity
    try
    {
        build_twisted_extension(t, v, h, H);
        FAIL() << "expected rejection";
    }
    catch (const AxiomError &e)
    {
        EXPECT_TRUE(e.report().has("cocycle-commutative"));
    }

    auto b = samples::idempotent_line();
    auto [x, s] = build_split_extension(b, adjoint_rep(b));
    AbelianExtension bad = x;
    bad.i = Matrix{{1}, {0}}; // p i != 0
    EXPECT_FALSE(validate_extension(bad).ok());
    EXPECT_THROW(extract_cocycle(x, Matrix{{2}, {0}}), PreconditionError);
}

TEST(Extension, TwistedRoundtrip)
{
    gen::Rng r(41);
    for (int trial = 0; trial < 12; ++trial)
    {
        auto p = gen::algebra(r);
        auto v = gen::rep(r, p, 2);
        auto c = random_cocycle(r, p, v);
        auto [x, s] = build_twisted_extension(p, v, c.first, c.second);
        EXPECT_TRUE(validate_extension(x).ok());
        auto back = extract_cocycle(x, s);
        EXPECT_EQ(back.first, c.first);
        EXPECT_EQ(back.second, c.second);
    }
}

TEST(Extension, PerturbedSectionGivesCohomologousCocycle)
{
    gen::Rng r(42);
    for (int trial = 0; trial < 8; ++trial)
    {
        auto p = gen::algebra(r);
        auto v = gen::rep(r, p, 2);
        auto c = random_cocycle(r, p, v);
        auto [x, s] = build_twisted_extension(p, v, c.first, c.second);
        Matrix psi = gen::matrix(r, v.dim, p.dim);
        Matrix s2 = s + x.i * psi;
        auto c2 = extract_cocycle(x, s2);
        // the new cocycle differs by the coboundary of psi
        auto db = coboundary_pair(p, v, psi);
        EXPECT_EQ(c2.first - c.first, db.first);
        EXPECT_EQ(c2.second - c.second, db.second);
        EXPECT_TRUE(cohomologous_witness(p, v, c2, c).has_value());
    }
}

TEST(Extension, RestrictAndProject)
{
    auto b = samples::idempotent_line();
    auto [x, s] = build_split_extension(b, adjoint_rep(b));
    auto pr = restrict_and_project_aut(x, s, Matrix{{1, 0}, {0, 2}});
    EXPECT_EQ(pr.beta, (Matrix{{2}}));
    EXPECT_EQ(pr.alpha, (Matrix{{1}}));
    auto id = restrict_and_project_aut(x, s, Matrix::identity(2));
    EXPECT_EQ(id.beta, Matrix::identity(1));
    EXPECT_EQ(id.alpha, Matrix::identity(1));
    // swapping the two summands does not preserve V
    auto a2 = abelian_algebra(1);
    auto [y, sy] = build_split_extension(a2, trivial_rep(a2, 1));
    EXPECT_THROW(restrict_and_project_aut(y, sy, Matrix{{0, 1}, {1, 0}}), PreconditionError);
    EXPECT_THROW(restrict_and_project_aut(x, s, Matrix{{2, 0}, {0, 1}}), PreconditionError);
}

TEST(Extension, CompatibilityExamples)
{
    auto b = samples::idempotent_line();
    auto [x, s] = build_split_extension(b, adjoint_rep(b));
    EXPECT_TRUE(compat_pair_aut(x, {Matrix::identity(1), Matrix::identity(1)}));
    EXPECT_TRUE(compat_pair_aut(x, {Matrix{{2}}, Matrix{{1}}}));
    EXPECT_FALSE(compat_pair_aut(x, {Matrix{{1}}, Matrix{{2}}}));
    // alpha = [2] is not an automorphism of the idempotent line
    EXPECT_THROW(inducible_aut(x, {Matrix{{1}}, Matrix{{2}}}), PreconditionError);

    auto sl = samples::sl2_zero();
    auto [y, sy] = build_split_extension(sl, adjoint_rep(sl));
    Matrix torus{{1, 0, 0}, {0, 2, 0}, {0, 0, Scalar(1, 2)}};
    AutPair bad{Matrix::identity(3), torus};
    EXPECT_FALSE(compat_pair_aut(y, bad));
    auto res = inducible_aut(y, bad);
    EXPECT_FALSE(res.inducible);
    EXPECT_EQ(res.reason, "pair not in C_{mu,rho}");
    EXPECT_FALSE(res.lift.has_value());
    EXPECT_THROW(wells_aut(y, bad), PreconditionError);
}

TEST(Wells, SplitExtensionsVanish)
{
    gen::Rng r(43);
    auto sl = samples::sl2_zero();
    auto [x, s] = build_split_extension(sl, adjoint_rep(sl));
    for (int trial = 0; trial < 6; ++trial)
    {
        Matrix a = sl2_auto(r);
        Scalar c = r.rational();
        if (c == 0)
            c = 3;
        AutPair pr{c * a, a};
        ASSERT_TRUE(compat_pair_aut(x, pr));
        auto w = wells_aut(x, pr);
        EXPECT_TRUE(w.zero);
        auto ind = inducible_aut(x, pr);
        ASSERT_TRUE(ind.inducible);
        auto back = restrict_and_project_aut(x, s, *ind.lift);
        EXPECT_EQ(back.beta, pr.beta);
        EXPECT_EQ(back.alpha, pr.alpha);
    }
    auto derivs = derivation_basis(sl, adjoint_rep(sl));
    for (int trial = 0; trial < 6; ++trial)
    {
        Matrix d(3, 3);
        for (const auto &b : derivs)
            d = d + r.rational() * b;
        DerPair pr{d + r.rational() * Matrix::identity(3), d};
        ASSERT_TRUE(compat_pair_der(x, pr));
        EXPECT_TRUE(wells_der(x, pr).zero);
        auto ind = inducible_der(x, pr);
        ASSERT_TRUE(ind.inducible);
        EXPECT_TRUE(is_poisson_derivation(x.E, *ind.lift));
    }
}

TEST(Wells, IdentityPairIsZeroOnTwisted)
{
    gen::Rng r(44);
    for (int trial = 0; trial < 6; ++trial)
    {
        auto p = gen::algebra(r);
        auto v = gen::rep(r, p, 2);
        auto c = random_cocycle(r, p, v);
        auto [x, s] = build_twisted_extension(p, v, c.first, c.second);
        EXPECT_TRUE(wells_aut(x, {Matrix::identity(v.dim), Matrix::identity(p.dim)}).zero);
        DerPair zero{Matrix(v.dim, v.dim), Matrix(p.dim, p.dim)};
        EXPECT_TRUE(wells_der(x, zero).zero);
        auto ind = inducible_der(x, zero);
        ASSERT_TRUE(ind.inducible);
        EXPECT_TRUE(ind.lift->is_zero());
    }
}

TEST(Wells, ScalingObstructionOnAbelianData)
{
    auto a = abelian_algebra(2);
    auto t = trivial_rep(a, 1);
    Bilinear h(2, 2, 1), H(2, 2, 1);
    h(0, 1, 0) = 1;
    h(1, 0, 0) = 1;
    auto [x, s] = build_twisted_extension(a, t, h, H);
    AutPair pr{Matrix{{2}}, Matrix::identity(2)};
    auto w = wells_aut(x, pr);
    EXPECT_FALSE(w.zero);
    // class of (2h - h, 2H - H) = class of (h, H)
    EXPECT_EQ(w.representative.first, h);
    EXPECT_TRUE(w.representative.second.is_zero());
    EXPECT_FALSE(inducible_aut(x, pr).inducible);

    // the derivation analogue: d_V = 1 scales h to itself
    DerPair dp{Matrix{{1}}, Matrix(2, 2)};
    EXPECT_FALSE(wells_der(x, dp).zero);
    EXPECT_FALSE(inducible_der(x, dp).inducible);

    // with h = 0 every pair is inducible
    auto [y, sy] = build_split_extension(a, t);
    EXPECT_TRUE(inducible_aut(y, pr).inducible);
}

TEST(Wells, DerivationLiftAgreesWithBruteForce)
{
    auto b = samples::idempotent_line();
    auto [x, s] = build_split_extension(b, adjoint_rep(b));
    DerPair pr{Matrix{{1}}, Matrix{{0}}};
    ASSERT_TRUE(compat_pair_der(x, pr));
    auto ind = inducible_der(x, pr);
    // ansatz d = [[0, 0], [c, 1]]; search small c
    std::vector<Scalar> hits;
    for (int num = -6; num <= 6; ++num)
        for (int den = 1; den <= 3; ++den)
        {
            Matrix d{{0, 0}, {Scalar(num, den), 1}};
            if (is_poisson_derivation(x.E, d))
                hits.push_back(Scalar(num, den));
        }
    EXPECT_EQ(ind.inducible, !hits.empty());
    ASSERT_TRUE(ind.lift.has_value());
    EXPECT_EQ(*ind.lift, (Matrix{{0, 0}, {hits.front(), 1}}));
}

TEST(Wells, SectionIndependence)
{
    gen::Rng r(45);
    auto a = abelian_algebra(2);
    auto t = trivial_rep(a, 2);
    for (int trial = 0; trial < 6; ++trial)
    {
        Bilinear h = gen::symmetric(r, 2, 2), H = gen::antisymmetric(r, 2, 2);
        auto [x, s] = build_twisted_extension(a, t, h, H);
        AutPair pr{gen::invertible(r, 2), gen::invertible(r, 2)};
        DerPair dp{gen::matrix(r, 2, 2), gen::matrix(r, 2, 2)};
        Matrix s2 = s + x.i * gen::matrix(r, 2, 2);
        EXPECT_TRUE(same_class(x, wells_aut(x, pr, s), wells_aut(x, pr, s2)));
        EXPECT_TRUE(same_class(x, wells_der(x, dp, s), wells_der(x, dp, s2)));
        EXPECT_EQ(inducible_aut(x, pr, s).inducible, inducible_aut(x, pr, s2).inducible);
    }
}

TEST(Wells, InducibleLiftsAreVerified)
{
    gen::Rng r(46);
    auto a = abelian_algebra(2);
    auto t = trivial_rep(a, 1);
    for (int trial = 0; trial < 10; ++trial)
    {
        Bilinear h = gen::symmetric(r, 2, 1), H = gen::antisymmetric(r, 2, 1);
        auto [x, s] = build_twisted_extension(a, t, h, H);
        AutPair pr{gen::invertible(r, 1), gen::invertible(r, 2)};
        auto w = wells_aut(x, pr);
        auto ind = inducible_aut(x, pr);
        EXPECT_EQ(ind.inducible, w.zero);
        if (ind.inducible)
        {
            EXPECT_TRUE(check_map(MapKind::PoissonAuto, x.E, x.E, *ind.lift).ok());
            EXPECT_EQ((*ind.lift) * x.i, x.i * pr.beta);
            EXPECT_EQ(x.p * (*ind.lift) * s, pr.alpha);
        }
    }
}

TEST(Sequence, ExactOnSamples)
{
    gen::Rng r(47);
    std::vector<AbelianExtension> exts;
    auto b = samples::idempotent_line();
    exts.push_back(build_split_extension(b, adjoint_rep(b)).first);
    auto a = abelian_algebra(2);
    exts.push_back(build_split_extension(a, trivial_rep(a, 1)).first);
    auto sl = samples::sl2_zero();
    exts.push_back(build_split_extension(sl, adjoint_rep(sl)).first);
    for (int i = 0; i < 4; ++i)
    {
        auto p = gen::algebra(r);
        auto v = gen::rep(r, p, 2);
        auto c = random_cocycle(r, p, v);
        exts.push_back(build_twisted_extension(p, v, c.first, c.second).first);
    }
    for (const auto &x : exts)
    {
        auto pr = derivation_sequence_probe(x);
        EXPECT_TRUE(pr.exact_at_middle);
        EXPECT_TRUE(pr.iota_injective);
        EXPECT_TRUE(pr.image_in_compatible);
        EXPECT_TRUE(pr.aut_sequence_ok);
        EXPECT_EQ(pr.der_V_E, pr.image_eta + pr.kernel_eta);
        EXPECT_EQ(pr.kernel_eta, pr.der_PV);
    }
    // abelian data: every block-lower-triangular map is a derivation
    auto pa = derivation_sequence_probe(exts[1]);
    EXPECT_EQ(pa.der_V_E, 4u + 1u + 2u);
    EXPECT_EQ(pa.der_PV, 2u);
}

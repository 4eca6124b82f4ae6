#include <gtest/gtest.h>

#include <pcoho/cochain.hpp>
#include <pcoho/samples.hpp>

#include "support/generators.hpp"
#include "support/naive_complex.hpp"
#include "support/oracles.hpp"

using namespace pcoho;

namespace
{
Vec random_coords(gen::Rng &r, std::size_t n) { return gen::vec(r, n); }
} // namespace

TEST(ShuffleConstraints, SymmetricTensorsAtArityTwo)
{
    EXPECT_EQ(kernel_basis(shuffle_constraint_matrix(2, 0, 2, 1)).cols(), 3u);
    EXPECT_EQ(shuffle_constraint_matrix(0, 2, 3, 2).rows(), 0u);
    EXPECT_EQ(kernel_basis(shuffle_constraint_matrix(0, 2, 3, 2)).cols(), 6u);
}

TEST(ShuffleConstraints, ArityThreeMatchesWittDimensions)
{
    for (std::size_t q : {1u, 2u, 3u, 4u})
    {
        long want = oracle::witt(q, 3);
        EXPECT_EQ(static_cast<long>(kernel_basis(shuffle_constraint_matrix(3, 0, q, 1)).cols()), want);
        EXPECT_EQ(static_cast<long>(CochainBasis(3, 0, q, 1).dim()), want);
    }
    EXPECT_EQ(CochainBasis(3, 0, 2, 1).dim(), 2u);
    EXPECT_EQ(CochainBasis(3, 0, 3, 1).dim(), 8u);
    // arity four on two generators: free Lie degree 4 has dimension 3
    EXPECT_EQ(static_cast<long>(CochainBasis(4, 0, 2, 1).dim()), oracle::witt(2, 4));
}

TEST(ShuffleConstraints, CapacityError)
{
    EXPECT_THROW(shuffle_constraint_matrix(4, 0, 16, 1), CapacityError);
    EXPECT_THROW(CochainBasis(3, 2, 16, 3), CapacityError);
}

TEST(CochainBasis, Dimensions)
{
    EXPECT_EQ(CochainBasis(0, 1, 2, 1).dim(), 2u);
    EXPECT_EQ(CochainBasis(2, 0, 2, 1).dim(), 3u);
    EXPECT_EQ(CochainBasis(0, 2, 2, 1).dim(), 1u);
    for (std::size_t p = 1; p <= 3; ++p)
        for (std::size_t v = 1; v <= 2; ++v)
            for (std::size_t n = 0; n <= p; ++n)
            {
                EXPECT_EQ(CochainBasis(2, n, p, v).dim(), v * p * (p + 1) / 2 * binomial(p, n));
                EXPECT_EQ(CochainBasis(0, n, p, v).dim(), v * binomial(p, n));
            }
}

TEST(CochainBasis, MatchesFullConstraintKernelAndIsDeterministic)
{
    for (std::size_t m : {2u, 3u})
        for (std::size_t n : {0u, 1u})
        {
            CochainBasis b(m, n, 2, 2);
            EXPECT_EQ(b.basis_matrix(), kernel_basis(shuffle_constraint_matrix(m, n, 2, 2)));
            EXPECT_EQ(b.basis_matrix(), CochainBasis(m, n, 2, 2).basis_matrix());
        }
}

TEST(CochainBasis, ColumnsSatisfyShufflesByBruteForce)
{
    gen::Rng r(7);
    for (std::size_t m : {2u, 3u, 4u})
        for (std::size_t n : {0u, 1u})
        {
            std::size_t p = m == 4 ? 2 : 3;
            CochainBasis b(m, n, p, 1);
            naive::Space s(m, n, p, 1);
            Vec f = b.to_ambient(random_coords(r, b.dim()));
            EXPECT_TRUE(naive::satisfies_shuffles(s, f));
            EXPECT_EQ(b.from_ambient(f), b.from_ambient(b.to_ambient(b.from_ambient(f))));
            EXPECT_TRUE(b.contains(f));
            Vec bad = f;
            Tuple a(m, 0);
            a.back() = 1;
            bad[b.ambient_index(a, 0, 0)] += 1;
            EXPECT_FALSE(naive::satisfies_shuffles(s, bad));
            EXPECT_FALSE(b.contains(bad));
        }
}

TEST(DeltaH, ZeroOnAbelianTrivial)
{
    auto p = abelian_algebra(2);
    auto v = trivial_rep(p, 2);
    EXPECT_TRUE(delta_H(p, v, 2, 0).is_zero());
    EXPECT_TRUE(delta_H(p, v, 0, 2).is_zero());
    EXPECT_TRUE(delta_H(p, v, 3, 1).is_zero());
    EXPECT_THROW(delta_H(p, v, 1, 0), StructuralError);
    EXPECT_THROW(delta_H(p, v, 0, 0), StructuralError);
}

TEST(DeltaH, ArityOneOnIdempotentLine)
{
    auto b = samples::idempotent_line();
    auto [h, H] = coboundary_pair(b, adjoint_rep(b), Matrix::identity(1));
    EXPECT_EQ(h.on_basis(0, 0), (Vec{1}));
    EXPECT_TRUE(H.is_zero());
}

TEST(DeltaH, ArityTwoIsTheCommutativeCocycleIdentity)
{
    gen::Rng r(8);
    for (int trial = 0; trial < 20; ++trial)
    {
        auto p = gen::algebra(r);
        auto v = gen::rep(r, p);
        Bilinear h = gen::symmetric(r, p.dim, v.dim), H = gen::antisymmetric(r, p.dim, v.dim);
        CochainBasis b20(2, 0, p.dim, v.dim), b30(3, 0, p.dim, v.dim);
        Vec image = b30.to_ambient(delta_H(p, v, 2, 0).apply(coords_of_symmetric(b20, h)));
        EXPECT_EQ(image, two_cocycle_residuals(p, v, h, H).harrison.data());
    }
}

// The restricted matrices agree with the pointwise formulas, and the
// pointwise images satisfy the target shuffle condition.
TEST(Coboundaries, AgreeWithPointwiseFormulasAndPreserveShuffles)
{
    gen::Rng r(9);
    for (int trial = 0; trial < 12; ++trial)
    {
        auto p = gen::algebra(r, 3);
        auto v = gen::rep(r, p, 2);
        for (std::size_t m : {0u, 2u, 3u})
            for (std::size_t n = 0; n + m <= 3; ++n)
            {
                CochainBasis src(m, n, p.dim, v.dim);
                Vec c = random_coords(r, src.dim());
                Vec f = src.to_ambient(c);

                CochainBasis ce_t(m, n + 1, p.dim, v.dim);
                Vec ce = naive::chevalley_eilenberg(p, v, m, n, f);
                EXPECT_TRUE(naive::satisfies_shuffles(naive::Space(m, n + 1, p.dim, v.dim), ce));
                EXPECT_EQ(ce_t.to_ambient(delta_CE(p, v, m, n).apply(c)), ce);

                if (m == 0 && n == 0)
                    continue;
                std::size_t tm = m == 0 ? 2 : m + 1, tn = m == 0 ? n - 1 : n;
                CochainBasis h_t(tm, tn, p.dim, v.dim);
                Vec hv = naive::harrison(p, v, m, n, f);
                EXPECT_TRUE(naive::satisfies_shuffles(naive::Space(tm, tn, p.dim, v.dim), hv));
                EXPECT_EQ(h_t.to_ambient(delta_H(p, v, m, n).apply(c)), hv);
            }
    }
}

TEST(DeltaCE, Examples)
{
    auto a = abelian_algebra(2);
    EXPECT_TRUE(delta_CE(a, trivial_rep(a, 1), 0, 1).is_zero());
    EXPECT_TRUE(delta_CE(a, trivial_rep(a, 1), 2, 0).is_zero());

    auto s = samples::sl2_zero();
    Matrix d = delta_CE(s, trivial_rep(s, 1), 0, 1);
    EXPECT_EQ(kernel_basis(d).cols(), 0u);

    gen::Rng r(10);
    for (int trial = 0; trial < 10; ++trial)
    {
        auto p = gen::algebra(r);
        auto v = gen::rep(r, p);
        Matrix phi = gen::matrix(r, v.dim, p.dim);
        CochainBasis b02(0, 2, p.dim, v.dim);
        Vec got = delta_CE(p, v, 0, 1).apply(degree1_coords(phi));
        EXPECT_EQ(got, coords_of_antisymmetric(b02, coboundary_pair(p, v, phi).second));
    }
}

TEST(DeltaFGV, DegreeZeroAndOne)
{
    gen::Rng r(13);
    for (int trial = 0; trial < 10; ++trial)
    {
        auto p = gen::algebra(r);
        auto v = gen::rep(r, p);
        // k = 0: v -> (x -> rho_x v)
        Vec x = gen::vec(r, v.dim);
        Matrix image = map_of_degree1(delta_FGV(p, v, 0).matrix.apply(x), v.dim, p.dim);
        for (std::size_t i = 0; i < p.dim; ++i)
            EXPECT_EQ(image.col(i), v.rho[i].apply(x));
        // k = 1: phi -> its coboundary pair
        Matrix phi = gen::matrix(r, v.dim, p.dim);
        auto [h, H] = coboundary_pair(p, v, phi);
        EXPECT_EQ(delta_FGV(p, v, 1).matrix.apply(degree1_coords(phi)), degree2_coords(p, v, h, H));
    }
    auto t = abelian_algebra(2);
    EXPECT_TRUE(delta_FGV(t, trivial_rep(t, 1), 0).matrix.is_zero());
}

TEST(DeltaFGV, SquaresToZero)
{
    gen::Rng r(14);
    for (int trial = 0; trial < 15; ++trial)
    {
        auto p = gen::algebra(r);
        auto v = gen::rep(r, p);
        for (std::size_t k = 0; k <= 2; ++k)
            EXPECT_TRUE((delta_FGV(p, v, k + 1).matrix * delta_FGV(p, v, k).matrix).is_zero());
    }
}

TEST(DeltaFGV, DegreeCap)
{
    auto p = abelian_algebra(1);
    auto v = trivial_rep(p, 1);
    EXPECT_THROW(delta_FGV(p, v, 4), CapacityError);
    setenv("PCOHO_MAX_DEGREE", "4", 1);
    EXPECT_NO_THROW(delta_FGV(p, v, 4));
    setenv("PCOHO_MAX_DEGREE", "9", 1);
    EXPECT_THROW(max_degree(), StructuralError);
    unsetenv("PCOHO_MAX_DEGREE");
}

TEST(TwoCocycle, ResidualsVanishIffDeltaKills)
{
    gen::Rng r(15);
    int cocycles = 0, non = 0;
    for (int trial = 0; trial < 40; ++trial)
    {
        auto p = gen::algebra(r);
        auto v = gen::rep(r, p);
        Matrix d2 = delta_FGV(p, v, 2).matrix;
        Bilinear h, H;
        switch (trial % 3)
        {
        case 0: // random pair, usually not a cocycle
            h = gen::symmetric(r, p.dim, v.dim);
            H = gen::antisymmetric(r, p.dim, v.dim);
            break;
        case 1: // a coboundary
            std::tie(h, H) = coboundary_pair(p, v, gen::matrix(r, v.dim, p.dim));
            break;
        default: // a random cocycle drawn from ker delta
        {
            Matrix z = kernel_basis(d2);
            Vec c = zero_vec(d2.cols());
            for (std::size_t j = 0; j < z.cols(); ++j)
                axpy(c, r.scalar(), z.col(j));
            std::tie(h, H) = pair_of_degree2(p, v, c);
        }
        }
        bool by_residual = two_cocycle_residuals(p, v, h, H).zero();
        bool by_delta = is_zero(d2.apply(degree2_coords(p, v, h, H)));
        EXPECT_EQ(by_residual, by_delta);
        (by_delta ? cocycles : non)++;
    }
    EXPECT_GT(cocycles, 0);
    EXPECT_GT(non, 0);
    auto a = abelian_algebra(2);
    gen::Rng q(16);
    EXPECT_TRUE(two_cocycle_residuals(a, trivial_rep(a, 2), gen::symmetric(q, 2, 2), gen::antisymmetric(q, 2, 2)).zero());
    EXPECT_THROW(two_cocycle_residuals(a, trivial_rep(a, 2), gen::antisymmetric(q, 2, 2), gen::antisymmetric(q, 2, 2)),
                 StructuralError);
}

TEST(CohomologousWitness, Examples)
{
    gen::Rng r(17);
    for (int trial = 0; trial < 15; ++trial)
    {
        auto p = gen::algebra(r);
        auto v = gen::rep(r, p);
        Matrix d2 = delta_FGV(p, v, 2).matrix;
        Matrix z = kernel_basis(d2);
        Vec c = zero_vec(d2.cols());
        for (std::size_t j = 0; j < z.cols(); ++j)
            axpy(c, r.scalar(), z.col(j));
        auto base = pair_of_degree2(p, v, c);

        auto same = cohomologous_witness(p, v, base, base);
        ASSERT_TRUE(same.has_value());
        EXPECT_TRUE(same->is_zero());

        Matrix psi = gen::matrix(r, v.dim, p.dim);
        auto [dh, dH] = coboundary_pair(p, v, psi);
        std::pair<Bilinear, Bilinear> shifted{base.first + dh, base.second + dH};
        auto phi = cohomologous_witness(p, v, shifted, base);
        ASSERT_TRUE(phi.has_value());
        auto [eh, eH] = coboundary_pair(p, v, *phi);
        EXPECT_EQ(eh, dh);
        EXPECT_EQ(eH, dH);
    }
    auto a = abelian_algebra(2);
    auto t = trivial_rep(a, 1);
    gen::Rng q(18);
    std::pair<Bilinear, Bilinear> x{gen::symmetric(q, 2, 1), gen::antisymmetric(q, 2, 1)};
    std::pair<Bilinear, Bilinear> zero{Bilinear(2, 2, 1), Bilinear(2, 2, 1)};
    if (!x.first.is_zero() || !x.second.is_zero())
    {
        EXPECT_FALSE(cohomologous_witness(a, t, x, zero).has_value());
    }

    // span{x, x^2}, trivial rep: h(x^2, x^2) = 1 fails at (x, x, x^2)
    auto tp = samples::truncated_poly();
    auto triv = trivial_rep(tp, 1);
    Bilinear h(2, 2, 1), H(2, 2, 1);
    h(1, 1, 0) = 1;
    auto res = two_cocycle_residuals(tp, triv, h, H);
    EXPECT_FALSE(res.zero());
    EXPECT_EQ(res.harrison.on_basis(0 * 2 + 0, 1), (Vec{-1}));
    EXPECT_THROW(cohomologous_witness(tp, triv, {h, H}, {Bilinear(2, 2, 1), H}), PreconditionError);
}

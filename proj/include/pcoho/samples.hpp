#ifndef PCOHO_SAMPLES_HPP
#define PCOHO_SAMPLES_HPP

#include <cstddef>

#include "algebra.hpp"

// Small named Poisson algebras used by tests, the acceptance harness and
// the sample data files.
namespace pcoho::samples
{

// span{e}, e.e = e, zero bracket.
inline PoissonAlgebra idempotent_line()
{
    PoissonAlgebra p(1);
    p.mult(0, 0, 0) = 1;
    p.labels = {"e"};
    return p;
}

// sl2 with zero product; basis h, e, f.
inline PoissonAlgebra sl2_zero()
{
    PoissonAlgebra p(3);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, int c) {
        p.bracket(i, j, k) = c;
        p.bracket(j, i, k) = -c;
    };
    set(0, 1, 1, 2);
    set(0, 2, 2, -2);
    set(1, 2, 0, 1);
    p.labels = {"h", "e", "f"};
    return p;
}

// Nonabelian 2-dim Lie algebra [e1, e2] = e2, zero product.
inline PoissonAlgebra affine_lie()
{
    PoissonAlgebra p(2);
    p.bracket(0, 1, 1) = 1;
    p.bracket(1, 0, 1) = -1;
    return p;
}

// Heisenberg [x, y] = z, zero product.
inline PoissonAlgebra heisenberg()
{
    PoissonAlgebra p(3);
    p.bracket(0, 1, 2) = 1;
    p.bracket(1, 0, 2) = -1;
    return p;
}

// span{x, x^2} with x.x = x^2, zero bracket.
inline PoissonAlgebra truncated_poly()
{
    PoissonAlgebra p(2);
    p.mult(0, 0, 1) = 1;
    return p;
}

// Dual numbers span{1, x}, x.x = 0, zero bracket.
inline PoissonAlgebra dual_numbers()
{
    PoissonAlgebra p(2);
    p.mult(0, 0, 0) = 1;
    p.mult(0, 1, 1) = 1;
    p.mult(1, 0, 1) = 1;
    return p;
}

// span{x, y, xy} inside k[x,y]/(x^2, y^2) with {x, y} = xy. Both operations
// are nonzero.
inline PoissonAlgebra square_zero_plane()
{
    PoissonAlgebra p(3);
    p.mult(0, 1, 2) = 1;
    p.mult(1, 0, 2) = 1;
    p.bracket(0, 1, 2) = 1;
    p.bracket(1, 0, 2) = -1;
    return p;
}

// Unital version span{1, x, y, xy}.
inline PoissonAlgebra unital_square_zero_plane()
{
    PoissonAlgebra p(4);
    for (std::size_t i = 0; i < 4; ++i)
    {
        p.mult(0, i, i) = 1;
        p.mult(i, 0, i) = 1;
    }
    p.mult(1, 2, 3) = 1;
    p.mult(2, 1, 3) = 1;
    p.bracket(1, 2, 3) = 1;
    p.bracket(2, 1, 3) = -1;
    return p;
}

inline PoissonAlgebra direct_sum(const PoissonAlgebra &a, const PoissonAlgebra &b)
{
    const std::size_t n = a.dim + b.dim;
    PoissonAlgebra p(n);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
            {
                p.mult(i, j, k) = a.mult(i, j, k);
                p.bracket(i, j, k) = a.bracket(i, j, k);
            }
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j)
            for (std::size_t k = 0; k < b.dim; ++k)
            {
                p.mult(a.dim + i, a.dim + j, a.dim + k) = b.mult(i, j, k);
                p.bracket(a.dim + i, a.dim + j, a.dim + k) = b.bracket(i, j, k);
            }
    return p;
}

} // namespace pcoho::samples

#endif

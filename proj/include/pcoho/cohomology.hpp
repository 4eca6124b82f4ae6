#ifndef PCOHO_COHOMOLOGY_HPP
#define PCOHO_COHOMOLOGY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cochain.hpp"
#include "linalg.hpp"

namespace pcoho
{

struct DegreeReport
{
    std::size_t k = 0;
    std::size_t cochain_dim = 0;
    std::size_t cocycle_dim = 0;
    std::size_t coboundary_dim = 0;
    std::size_t betti = 0;
    std::vector<Vec> representatives; // in degree-k coordinates

    friend bool operator==(const DegreeReport &, const DegreeReport &) = default;
};

struct CohomologyReport
{
    std::vector<DegreeReport> degrees;

    const DegreeReport &at(std::size_t k) const { return degrees.at(k); }
    friend bool operator==(const CohomologyReport &, const CohomologyReport &) = default;
};

// Cohomology of a complex given by its consecutive differentials d[k]: C^k -> C^{k+1}
// together with dims[k] = dim C^k. Needs d[0..kmax].
inline CohomologyReport complex_cohomology(const std::vector<Matrix> &d, const std::vector<std::size_t> &dims,
                                           std::size_t kmax)
{
    CohomologyReport rep;
    for (std::size_t k = 0; k <= kmax; ++k)
    {
        DegreeReport dr;
        dr.k = k;
        dr.cochain_dim = dims[k];
        Matrix Z = kernel_basis(d[k]);
        dr.cocycle_dim = Z.cols();
        Matrix B = k == 0 ? Matrix(dims[0], 0) : d[k - 1];
        std::size_t rb = rank(B);
        dr.coboundary_dim = rb;
        if (dr.cocycle_dim < rb)
            throw std::logic_error("coboundaries exceed cocycles: differential does not square to zero");
        dr.betti = dr.cocycle_dim - rb;
        // greedy: keep a kernel vector if it raises the rank of span(B, kept)
        Matrix span = B;
        std::size_t cur = rb;
        for (std::size_t c = 0; c < Z.cols() && dr.representatives.size() < dr.betti; ++c)
        {
            Matrix trial = hstack(span, Matrix::from_columns(dims[k], {Z.col(c)}));
            std::size_t r = rank(trial);
            if (r > cur)
            {
                span = std::move(trial);
                cur = r;
                dr.representatives.push_back(Z.col(c));
            }
        }
        rep.degrees.push_back(std::move(dr));
    }
    return rep;
}

inline std::vector<Matrix> differentials(const PoissonAlgebra &p, const Representation &v, std::size_t kmax)
{
    std::vector<Matrix> d;
    for (std::size_t k = 0; k <= kmax; ++k)
        d.push_back(delta_FGV(p, v, k).matrix);
    return d;
}

inline CohomologyReport cohomology(const PoissonAlgebra &p, const Representation &v, std::size_t kmax)
{
    require_valid(p, v);
    if (kmax > max_degree())
        throw CapacityError("degree " + std::to_string(kmax) + " exceeds the configured maximum " +
                            std::to_string(max_degree()));
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k <= kmax; ++k)
        dims.push_back(degree_space(p, v, k).total_dim);
    return complex_cohomology(differentials(p, v, kmax), dims, kmax);
}

struct ClassDecomposition
{
    Vec coefficients; // on the representatives
    Vec preimage;     // w with z = sum c_i rep_i + d(w)
};

// Requires d_k z = 0; d_prev is the differential into degree k (may have 0 columns).
inline ClassDecomposition class_decompose(const DegreeReport &deg, const Matrix &d_prev, const Matrix &d_k,
                                          const Vec &z)
{
    if (!is_zero(d_k.apply(z)))
        throw PreconditionError("not-a-cocycle", "class_decompose: input is not a cocycle");
    Matrix reps = Matrix::from_columns(z.size(), deg.representatives);
    Matrix sys = hstack(reps, d_prev);
    auto sol = solve(sys, z);
    if (!sol)
        throw std::logic_error("class_decompose: cocycle outside span of representatives and coboundaries");
    ClassDecomposition out;
    out.coefficients.assign(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(reps.cols()));
    out.preimage.assign(sol->begin() + static_cast<std::ptrdiff_t>(reps.cols()), sol->end());
    return out;
}

inline ClassDecomposition class_decompose(const PoissonAlgebra &p, const Representation &v, const CohomologyReport &rep,
                                          std::size_t k, const Vec &z)
{
    Matrix dk = delta_FGV(p, v, k).matrix;
    Matrix dprev = k == 0 ? Matrix(z.size(), 0) : delta_FGV(p, v, k - 1).matrix;
    return class_decompose(rep.at(k), dprev, dk, z);
}

// Whether a degree-k cocycle is a coboundary.
inline bool is_coboundary(const Matrix &d_prev, const Vec &z) { return in_column_span(d_prev, z); }

} // namespace pcoho

#endif

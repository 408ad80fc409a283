#pragma once

#include <cstddef>

#include "llens/tensor.hpp"

namespace llens {

inline constexpr double kDefaultRankTol = 1e-12;

// Full singular value decomposition W = U Σ Vᵀ.
//   u      m×m, orthonormal columns (includes the left null-space basis)
//   sigma  min(m,n) values, descending, nonnegative
//   vt     n×n, orthonormal rows (includes the null-space basis)
//   rank   #{i : sigma[i] > rank_tol * sigma[0]}
struct SvdFactors {
    Matrix u;
    Vector sigma;
    Matrix vt;
    std::size_t rank = 0;
    double rank_tol = kDefaultRankTol;
};

// One-sided Jacobi. Deterministic for a fixed input: cyclic pair order,
// stable descending sort, pivoted Gram-Schmidt completion of the null-space
// columns, and the sign convention that the largest-magnitude entry of each
// right singular vector is nonnegative.
SvdFactors svd(const Matrix& w, double rank_tol = kDefaultRankTol);

// sigma[0] / sigma[rank-1]; >= 1 by the descending order.
double condition_number(const SvdFactors& f);

// W⁺ = V diag(1/sigma_i for i < rank, else 0) Uᵀ, the Moore-Penrose inverse.
Matrix pseudoinverse(const SvdFactors& f);
Matrix pseudoinverse(const Matrix& w);

// Count of sigma_i > rank_tol * sigma[0]; 0 when sigma[0] == 0.
std::size_t numerical_rank(const Vector& sigma, double rank_tol);

}  // namespace llens

#pragma once

#include <Eigen/Core>
#include <vector>

#include "dimwall/space.hpp"

// Exact weighted-L2 geometry over finite discrete spaces: inner products,
// Gram matrices, orthonormalization, projection residuals. Every function
// here is pure and safe to call concurrently.
namespace dimwall::hilbert {

/// Weighted inner product sum_x P(x) f(x) g(x), accumulated with
/// compensated (Kahan/Neumaier) summation so spaces up to 2^14 points stay
/// accurate at 1e-12 test tolerances.
double inner_product(const FuncVec& f, const FuncVec& g);

/// inner_product(f, f); always nonnegative.
double norm_sq(const FuncVec& f);

/// Pairwise inner products. Symmetric, positive semidefinite up to roundoff.
Eigen::MatrixXd gram(const std::vector<FuncVec>& fs);

inline constexpr double kDefaultRankTol = 1e-10;

/// Modified Gram-Schmidt with one reorthogonalization pass. Directions whose
/// residual norm falls below rel_tol * (largest input norm) are dropped, so
/// the returned rank is the numerical rank of the input list. An all-zero
/// input yields a rank-0 subspace.
Subspace orthonormalize(const std::vector<FuncVec>& fs, double rel_tol = kDefaultRankTol);

/// Squared distance from f to the subspace, computed by the projection
/// identity norm_sq(f) - sum_k <u_k, f>^2 over the orthonormal basis.
/// Negative values above -1e-12 are clamped to 0; anything more negative
/// throws NumericalConsistencyError (the basis cannot be orthonormal).
double residual_sq(const FuncVec& f, const Subspace& w);

} // namespace dimwall::hilbert

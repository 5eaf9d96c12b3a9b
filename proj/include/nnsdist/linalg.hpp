#pragma once

// Spectral helpers (SVD, Hermitian eigendecomposition) backed by Eigen.

#include <vector>

#include "nnsdist/matrix.hpp"

namespace nnsdist::linalg {

// Descending.
std::vector<double> singular_values(const ComplexMatrix& a);

// Number of singular values above rel_tol * sigma_max.
std::size_t numerical_rank(const ComplexMatrix& a, double rel_tol);

double spectral_norm(const ComplexMatrix& a);

// a = left * right with left rows x k, right k x cols, k the numerical rank
// at rel_tol * sigma_max. Splits sqrt(sigma) evenly between the factors.
struct RankFactorization {
  ComplexMatrix left;
  ComplexMatrix right;
  std::size_t rank = 0;
};
RankFactorization rank_factorize(const ComplexMatrix& a, double rel_tol = 1e-10);

// Ascending eigenvalues of a Hermitian matrix (upper triangle is read).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

// Positive semidefinite square root. Eigenvalues in [-clamp_tol, 0) are set
// to zero; anything more negative throws InvalidArgument.
ComplexMatrix psd_sqrt(const ComplexMatrix& h, double clamp_tol = 1e-12);

// Orthonormal basis (as columns) of {x real : a x = 0}, via SVD with
// threshold rel_tol * sigma_max.
RealMatrix real_null_space(const RealMatrix& a, double rel_tol = 1e-10);

}  // namespace nnsdist::linalg

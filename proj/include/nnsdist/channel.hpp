#pragma once

// Realizes any finite set T of n x n matrices as the span of {E_i^* F_j} for
// two quantum channels with Choi-Kraus operators {E_j}, {F_j}.
//
// Construction: pick a basis A_1..A_m of span T, factor
// A_1 ⊕ ... ⊕ A_m = [B_1 ... B_m]^* [C_1 ... C_m] through its rank k, scale
// by M so that I - (1/M) sum B_j^* B_j = B_0^2 and I - (1/M) sum C_j^* C_j =
// C_0^2 are psd, and pad everything into three blocks of width w = max(k, n):
//   E_j^* = [B_j^*/sqrt(M) | 0 | 0],  E_{m+1}^* = [0 | B_0 | 0]
//   F_j^* = [C_j^*/sqrt(M) | 0 | 0],  F_{m+1}^* = [0 | 0 | C_0]
// Each E_j, F_j maps C^n -> C^{3w}.

#include <cstdint>
#include <span>
#include <vector>

#include "nnsdist/matrix.hpp"
#include "nnsdist/tensor_system.hpp"

namespace nnsdist {

struct SpanSet {
  std::vector<ComplexMatrix> matrices;
  std::vector<ComplexMatrix> basis;
  std::vector<std::size_t> basis_indices;  // positions in `matrices`

  std::size_t dimension() const { return basis.size(); }
  std::size_t n() const { return matrices.empty() ? 0 : matrices.front().rows(); }
};

// Greedy selection: keep T_i when it raises the rank of the vectorized set.
// Throws InvalidArgument on an empty or non-square/mixed-size input and
// AllZero when span T = {0}.
SpanSet extract_basis(std::vector<ComplexMatrix> t, double rel_tol = 1e-10);

struct KrausPair {
  std::vector<ComplexMatrix> e;
  std::vector<ComplexMatrix> f;
  double scale = 0.0;          // M
  std::size_t rank = 0;        // k
  std::size_t block_width = 0; // w = max(k, n)
  std::size_t n = 0;
};

KrausPair realize_channels(const SpanSet& span);

struct KrausCheck {
  bool passed = false;
  double defect = 0.0;  // ||sum E_j^* E_j - I||_F
};

// Throws ShapeMismatch when the operators do not share a column count.
KrausCheck verify_kraus(std::span<const ComplexMatrix> ops, double tol = 1e-10);

// [E_1 ... E_k]^* [F_1 ... F_k]; block (i, j) is E_i^* F_j.
ComplexMatrix stacked_product(std::span<const ComplexMatrix> e,
                              std::span<const ComplexMatrix> f);

// span{E_i^* F_j} == span T, by comparing ranks of the vectorized sets.
bool span_equality(std::span<const ComplexMatrix> e, std::span<const ComplexMatrix> f,
                   std::span<const ComplexMatrix> t, double rel_tol = 1e-9);

// dim span{E_i^* F_j}
std::size_t product_span_dimension(std::span<const ComplexMatrix> e,
                                   std::span<const ComplexMatrix> f,
                                   double rel_tol = 1e-9);

// The two-element set T_alpha = {diag(1, z, 0), diag(0, 1, z)}.
std::vector<ComplexMatrix> t_alpha_set(const PhaseAngle& alpha);

// Complex Gaussian matrices: n in [1, max_n], |T| in [1, max_count].
std::vector<ComplexMatrix> random_span_set(std::uint64_t seed, int max_n = 4,
                                           int max_count = 5);

}  // namespace nnsdist

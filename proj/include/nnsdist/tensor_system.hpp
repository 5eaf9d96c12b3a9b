#pragma once

// Builders for A_alpha, its Kronecker powers, the orbit selector Q_N and the
// reduced systems B_{alpha,N} (2^N x p_N) and C_{alpha,N} ((N+1) x p_N).
//
// B and C are produced from the closed-form entry formula and never
// materialize A^{⊗N}; build_B_by_kronecker is the independent route used to
// cross-check them.

#include <vector>

#include "nnsdist/labels.hpp"
#include "nnsdist/matrix.hpp"

namespace nnsdist {

class PhaseAngle {
 public:
  // Throws InvalidArgument when `radians` is not finite.
  explicit PhaseAngle(double radians);

  // alpha = pi * numerator / denominator
  static PhaseAngle from_pi_fraction(long numerator, long denominator);

  double radians() const { return radians_; }
  // Representative in [0, 2*pi).
  double canonical() const;
  complex z() const { return z_; }

 private:
  double radians_;
  complex z_;
};

enum class MatrixForm { Original, Reduced };

// Powers z^0..z^max_power by repeated multiplication.
class PhasePowers {
 public:
  PhasePowers(complex z, int max_power);
  complex operator[](int k) const { return powers_.at(static_cast<std::size_t>(k)); }
  // (-z^2)^e
  complex neg_z2(int e) const { return (e % 2 == 0 ? 1.0 : -1.0) * (*this)[2 * e]; }

 private:
  std::vector<complex> powers_;
};

// Original: [[1, z, 0], [0, 1, z]]   Reduced: [[1, 0, -z^2], [0, 1, z]]
ComplexMatrix a_alpha(const PhaseAngle& alpha, MatrixForm form);

// 3^N x p_N, entry 1 where the row's ternary label lies in the column's orbit.
ComplexMatrix build_Q(int order, std::size_t budget = kDefaultEntryBudget);

// (B_{alpha,N})_{J;[N0,N1,N2]} for J = 0...0 1...1 with `ones` trailing ones.
complex b_entry_closed_form(int order, int ones, const MultisetLabel& label,
                            const PhaseAngle& alpha);

ComplexMatrix build_B(const PhaseAngle& alpha, int order);

// A_red^{⊗N} * Q_N, materialized.
ComplexMatrix build_B_by_kronecker(const PhaseAngle& alpha, int order,
                                   std::size_t budget = kDefaultEntryBudget);

ComplexMatrix build_C(const PhaseAngle& alpha, int order);

// Upper triangular (n+1)x(n+1) block of the block decomposition of C.
ComplexMatrix gamma(int n, const PhaseAngle& alpha);

// diag(C(k,k), C(k+1,k), ..., C(n,k))
ComplexMatrix d_diag(int n, int k);

// C assembled from the Gamma/D blocks: column group k is zero on its first k
// rows and D_{N,k} Gamma_{N-k} below.
ComplexMatrix build_C_block(const PhaseAngle& alpha, int order);

}  // namespace nnsdist

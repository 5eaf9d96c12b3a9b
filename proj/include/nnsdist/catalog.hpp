#pragma once

// Explicit nonnegative null vectors of C_{alpha,N} for N = 1..10, each valid
// on alpha in [pi/2 + pi/(2N), pi/2 + pi/(2(N-1))) (N = 1: alpha = pi only).

#include <array>
#include <vector>

#include "nnsdist/symmetry.hpp"
#include "nnsdist/tensor_system.hpp"

namespace nnsdist {

inline constexpr int kCatalogMaxOrder = 10;

// Endpoint slack applied by contains(); see catalog_interval.
inline constexpr double kIntervalSlack = 1e-12;

struct AlphaInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool degenerate = false;  // single point {lo}

  bool contains(double alpha) const;
};

AlphaInterval catalog_interval(int order);

// Conjectured feasibility threshold pi/2 + pi/(2N).
double conjectured_threshold(int order);

// Throws AlphaOutOfInterval when alpha is outside catalog_interval(order),
// InvalidArgument when order is outside 1..10.
ReducedVector explicit_nns(int order, const PhaseAngle& alpha);

// Quadrant (1..4) that e^{ik alpha} occupies: Q_{k+1 mod 4} for k < N and
// Q_{N+2 mod 4} for k = N. Requires N >= 2 and alpha in catalog_interval(N).
int quadrant_of(int k, const PhaseAngle& alpha, int order);

struct CatalogTolerances {
  double residual = 1e-9;
  double nonneg = 1e-12;
};

struct VerificationReport {
  int order = 0;
  double alpha = 0.0;
  double residual_inf = 0.0;  // |C y|_inf / |y|_inf
  double min_entry = 0.0;
  bool nonneg = false;
  bool nonzero = false;
  bool palindromic = false;
  bool passed = false;
};

// Residual and sign check of an arbitrary reduced vector against build_C.
VerificationReport verify_reduced(const ReducedVector& y, const PhaseAngle& alpha,
                                  const CatalogTolerances& tol = {});

VerificationReport verify_catalog_entry(int order, const PhaseAngle& alpha,
                                        const CatalogTolerances& tol = {});

// `count` samples lo + (hi - lo) * i / count, i = 0..count-1; the left
// endpoint is always included. For N = 1 the single point pi.
std::vector<double> catalog_samples(int order, int count);

// Orbit average of expand(y) ⊗ e, as an order N+1 reduced vector. Maps null
// vectors of C_{alpha,N} to null vectors of C_{alpha,N+1}.
ReducedVector pad_solution(const ReducedVector& y,
                           const std::array<double, 3>& e = {1.0, 0.0, 0.0});

}  // namespace nnsdist

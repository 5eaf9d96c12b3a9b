#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nnsdist/matrix.hpp"

namespace nnsdist {

struct SimplexOptions {
  double pivot_tol = 1e-9;   // relative to the entering column's largest entry
  double cost_tol = 1e-11;   // relative to |u| |a_j|
  std::size_t max_iterations = 100000;
};

struct PhaseOneSolution {
  // ||b - A x||_1 at the returned x
  double objective = 0.0;
  std::vector<double> x;
  // Optimal duals u in the original row signs: u^T A <= 0 columnwise,
  // |u_i| <= 1 and u^T b = objective (up to rounding).
  std::vector<double> duals;
  std::size_t iterations = 0;
  bool iteration_limit = false;
};

// Phase one of the simplex method for {A x = b, x >= 0} using a pair of
// artificials (+e_i, -e_i) per row, so the phase-one objective is the l1
// infeasibility. Revised form, refactoring the basis every iteration; Bland's
// rule for both the entering column and ratio-test ties.
PhaseOneSolution solve_phase_one(const RealMatrix& a, std::span<const double> b,
                                 const SimplexOptions& options = {});

}  // namespace nnsdist

#pragma once

// Does C_{alpha,N} y = 0 have a nonzero nonnegative solution? Every answer
// carries its own proof: a witness y (y >= 0, sum y = 1, C y ~ 0) or a
// Farkas vector h with h^T M > 0 on every column of the real embedding
// M = [Re C; Im C], which rules out any nonzero y >= 0 with M y = 0.

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "nnsdist/simplex.hpp"
#include "nnsdist/symmetry.hpp"
#include "nnsdist/tensor_system.hpp"

namespace nnsdist {

struct FeasibilityOptions {
  double phase1_tol = 1e-11;   // phase-one l1 infeasibility counted as zero
  double residual_tol = 1e-8;  // witness |C y|_inf
  double margin_tol = 1e-8;    // certificate min_j (h^T M)_j
  double nonneg_tol = 1e-12;   // witness min entry
  SimplexOptions simplex;
};

struct RealizedSystem {
  RealMatrix matrix;  // 2(N+1) x p_N
  PhaseAngle alpha;
  int order;
};

RealizedSystem realize(const PhaseAngle& alpha, int order);

struct Witness {
  ReducedVector y;
  double residual;
};

struct Certificate {
  std::vector<double> h;  // length 2(N+1), unit inf-norm
  double margin;
};

using FeasibilityOutcome = std::variant<Witness, Certificate>;

// Order-free form used on arbitrary real systems (e.g. the 2^N-row embedding
// of B). Self-checked against `m` only.
struct ConeWitness {
  std::vector<double> y;
  double residual;
};
struct ConeCertificate {
  std::vector<double> h;
  double margin;
};
using ConeOutcome = std::variant<ConeWitness, ConeCertificate>;

// Throws NumericalIndeterminate.
ConeOutcome decide_cone(const RealMatrix& m, const FeasibilityOptions& options = {});

// alpha must lie in [pi/2, pi]. Throws NumericalIndeterminate when neither
// proof clears its tolerance.
FeasibilityOutcome nns_exists(const PhaseAngle& alpha, int order,
                              const FeasibilityOptions& options = {});

struct CertificateCheck {
  bool valid = false;
  double margin = 0.0;  // recomputed min_j (h^T M)_j
};

// Rebuilds C from scratch and re-evaluates h^T M.
CertificateCheck verify_certificate(const Certificate& cert, const PhaseAngle& alpha,
                                    int order);

enum class OutcomeKind { Witness, Certificate, Indeterminate };
std::string_view outcome_name(OutcomeKind kind);

// Feasibility predicate used by scans and bisection. Never throws on
// indeterminate points: it falls back to the phase-one decision and reports
// certified = false.
struct Probe {
  double alpha = 0.0;
  OutcomeKind kind = OutcomeKind::Indeterminate;
  bool feasible = false;
  double metric = 0.0;  // residual, margin, or phase-one objective
};
Probe probe(const PhaseAngle& alpha, int order, const FeasibilityOptions& options = {});

struct ThresholdEstimate {
  int order = 0;
  double alpha_star = 0.0;
  double bracket_lo = 0.0;  // infeasible side
  double bracket_hi = 0.0;  // feasible side
  double bracket_width = 0.0;
  double conjectured = 0.0;
  int probes = 0;
  int indeterminate_probes = 0;
};

inline constexpr int kThresholdPrescanPoints = 17;
inline constexpr double kThresholdLowOffset = 1e-4;

// Bisects on `probe` over [pi/2 + 1e-4, pi]. A coarse pre-scan must show a
// single infeasible->feasible switch, else NonMonotonePredicate.
ThresholdEstimate threshold_bisect(int order, double tol_alpha,
                                   const FeasibilityOptions& options = {});

struct NecessityReport {
  int order = 0;
  std::vector<Probe> points;
  std::vector<std::size_t> anomalies;  // indices with anything but a verified certificate
  double min_margin = 0.0;
};

// k cell midpoints of [pi/2, pi/2 + pi/(2N)).
std::vector<double> necessity_grid(int order, int points);

// Every alpha must lie in [pi/2, pi/2 + pi/(2N)). Points run concurrently;
// report order follows the grid.
NecessityReport necessity_scan(int order, std::span<const double> grid,
                               const FeasibilityOptions& options = {});

// `points` evenly spaced alphas over [pi/2, pi], both ends included.
std::vector<Probe> sweep(int order, int points, const FeasibilityOptions& options = {});

}  // namespace nnsdist

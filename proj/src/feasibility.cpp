#include "nnsdist/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "nnsdist/catalog.hpp"
#include "parallel.hpp"

namespace nnsdist {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAlphaSlack = 1e-12;

double min_column_value(std::span<const double> h, const RealMatrix& m) {
  const auto row = left_multiply(h, m);
  return row.empty() ? 0.0 : *std::min_element(row.begin(), row.end());
}

// [M; 1^T] y = (0, 1)
PhaseOneSolution solve_normalized(const RealMatrix& m, const SimplexOptions& options) {
  RealMatrix a(m.rows() + 1, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::copy(m.row(i).begin(), m.row(i).end(), a.row(i).begin());
  }
  std::fill(a.row(m.rows()).begin(), a.row(m.rows()).end(), 1.0);
  std::vector<double> b(m.rows() + 1, 0.0);
  b.back() = 1.0;
  return solve_phase_one(a, b, options);
}

void require_alpha_range(const PhaseAngle& alpha) {
  const double a = alpha.radians();
  if (a < kPi / 2 - kAlphaSlack || a > kPi + kAlphaSlack) {
    throw InvalidArgument("feasibility is decided for alpha in [pi/2, pi], got " +
                          std::to_string(a));
  }
}

}  // namespace

RealizedSystem realize(const PhaseAngle& alpha, int order) {
  return {real_embedding(build_C(alpha, order)), alpha, order};
}

ConeOutcome decide_cone(const RealMatrix& m, const FeasibilityOptions& options) {
  const PhaseOneSolution sol = solve_normalized(m, options.simplex);

  double residual = std::numeric_limits<double>::infinity();
  double margin = -std::numeric_limits<double>::infinity();

  if (!sol.iteration_limit && sol.objective <= options.phase1_tol) {
    // Basic values can drift a few ulps below zero; the clamped vector is the
    // one that gets checked and reported.
    std::vector<double> y = sol.x;
    for (auto& v : y) v = std::max(v, 0.0);
    const double total = std::accumulate(y.begin(), y.end(), 0.0);
    if (total > 0.0) {
      for (auto& v : y) v /= total;
      residual = inf_norm(multiply(m, y));
      const double lowest = *std::min_element(y.begin(), y.end());
      if (residual <= options.residual_tol && lowest >= -options.nonneg_tol) {
        return ConeWitness{std::move(y), residual};
      }
    }
  } else if (!sol.iteration_limit) {
    // Farkas vector for [M; 1^T] y = (0, 1): w = -u, h = w restricted to M.
    std::vector<double> h(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) h[i] = -sol.duals[i];
    const double scale = inf_norm(h);
    if (scale > 0.0) {
      for (auto& v : h) v /= scale;
      margin = min_column_value(h, m);
      if (margin >= options.margin_tol) return ConeCertificate{std::move(h), margin};
    }
  }
  throw NumericalIndeterminate(
      "no witness with residual <= " + std::to_string(options.residual_tol) +
          " and no certificate with margin >= " + std::to_string(options.margin_tol) +
          " (phase-one objective " + std::to_string(sol.objective) + ")",
      sol.objective, residual, margin);
}

FeasibilityOutcome nns_exists(const PhaseAngle& alpha, int order,
                              const FeasibilityOptions& options) {
  require_order(order);
  require_alpha_range(alpha);
  const RealizedSystem system = realize(alpha, order);
  const ConeOutcome outcome = decide_cone(system.matrix, options);

  if (const auto* w = std::get_if<ConeWitness>(&outcome)) {
    // Re-check on the complex system, built again from scratch.
    const auto cy = multiply(build_C(alpha, order), std::span<const double>(w->y));
    const double residual = inf_norm(cy);
    if (residual > options.residual_tol) {
      throw NumericalIndeterminate("witness failed the complex residual re-check", 0.0,
                                   residual, 0.0);
    }
    return Witness{ReducedVector(order, w->y), residual};
  }

  const auto& c = std::get<ConeCertificate>(outcome);
  Certificate cert{c.h, c.margin};
  const CertificateCheck check = verify_certificate(cert, alpha, order);
  if (!check.valid || check.margin < options.margin_tol) {
    throw NumericalIndeterminate("certificate failed re-verification", 0.0, 0.0,
                                 check.margin);
  }
  cert.margin = check.margin;
  return cert;
}

CertificateCheck verify_certificate(const Certificate& cert, const PhaseAngle& alpha,
                                    int order) {
  CertificateCheck check;
  if (order < 1 || order > kMaxOrder ||
      cert.h.size() != 2 * (static_cast<std::size_t>(order) + 1)) {
    return check;
  }
  const RealMatrix m = real_embedding(build_C(alpha, order));
  check.margin = min_column_value(cert.h, m);
  check.valid = check.margin > 0.0 && check.margin >= cert.margin - 1e-12;
  return check;
}

std::string_view outcome_name(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Witness:
      return "witness";
    case OutcomeKind::Certificate:
      return "certificate";
    case OutcomeKind::Indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

Probe probe(const PhaseAngle& alpha, int order, const FeasibilityOptions& options) {
  Probe p;
  p.alpha = alpha.radians();
  try {
    const FeasibilityOutcome outcome = nns_exists(alpha, order, options);
    if (const auto* w = std::get_if<Witness>(&outcome)) {
      p.kind = OutcomeKind::Witness;
      p.feasible = true;
      p.metric = w->residual;
    } else {
      p.kind = OutcomeKind::Certificate;
      p.feasible = false;
      p.metric = std::get<Certificate>(outcome).margin;
    }
  } catch (const NumericalIndeterminate& e) {
    p.kind = OutcomeKind::Indeterminate;
    p.feasible = e.phase_one_objective() <= options.phase1_tol;
    p.metric = e.phase_one_objective();
  }
  return p;
}

ThresholdEstimate threshold_bisect(int order, double tol_alpha,
                                   const FeasibilityOptions& options) {
  require_order(order);
  if (!(tol_alpha >= 1e-8)) throw InvalidArgument("threshold tolerance must be >= 1e-8");

  ThresholdEstimate est;
  est.order = order;
  est.conjectured = conjectured_threshold(order);

  auto run = [&](double a) {
    const Probe p = probe(PhaseAngle(a), order, options);
    ++est.probes;
    if (p.kind == OutcomeKind::Indeterminate) ++est.indeterminate_probes;
    return p.feasible;
  };

  const double lo0 = kPi / 2 + kThresholdLowOffset;
  const double hi0 = kPi;
  std::vector<double> grid(kThresholdPrescanPoints);
  for (int i = 0; i < kThresholdPrescanPoints; ++i) {
    grid[static_cast<std::size_t>(i)] =
        i + 1 == kThresholdPrescanPoints
            ? hi0
            : lo0 + (hi0 - lo0) * i / (kThresholdPrescanPoints - 1);
  }
  std::vector<char> feasible(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) feasible[i] = run(grid[i]);

  if (feasible.front()) {
    throw NonMonotonePredicate("feasible at the infeasible anchor alpha = pi/2 + 1e-4");
  }
  if (!feasible.back()) throw NonMonotonePredicate("infeasible at alpha = pi");
  std::size_t switch_at = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (feasible[i] && !feasible[i - 1]) {
      if (switch_at != 0) {
        throw NonMonotonePredicate("pre-scan shows more than one infeasible->feasible switch");
      }
      switch_at = i;
    }
    if (!feasible[i] && feasible[i - 1]) {
      throw NonMonotonePredicate("feasible at alpha = " + std::to_string(grid[i - 1]) +
                                 " but infeasible at " + std::to_string(grid[i]));
    }
  }

  double lo = grid[switch_at - 1];
  double hi = grid[switch_at];
  while (hi - lo > tol_alpha) {
    const double mid = 0.5 * (lo + hi);
    if (run(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  est.bracket_lo = lo;
  est.bracket_hi = hi;
  est.bracket_width = hi - lo;
  est.alpha_star = 0.5 * (lo + hi);
  return est;
}

std::vector<double> necessity_grid(int order, int points) {
  require_order(order);
  if (points < 0) throw InvalidArgument("grid point count must be nonnegative");
  const double width = kPi / (2.0 * order);
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) grid.push_back(kPi / 2 + (i + 0.5) * width / points);
  return grid;
}

NecessityReport necessity_scan(int order, std::span<const double> grid,
                               const FeasibilityOptions& options) {
  require_order(order);
  const double upper = conjectured_threshold(order);
  for (double a : grid) {
    if (a < kPi / 2 || a >= upper) {
      throw InvalidArgument("necessity grid point " + std::to_string(a) +
                            " is outside [pi/2, pi/2 + pi/(2N))");
    }
  }
  NecessityReport report;
  report.order = order;
  report.points.resize(grid.size());
  detail::parallel_for(grid.size(), [&](std::size_t i) {
    report.points[i] = probe(PhaseAngle(grid[i]), order, options);
  });
  report.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    const Probe& p = report.points[i];
    if (p.kind != OutcomeKind::Certificate || p.metric < options.margin_tol) {
      report.anomalies.push_back(i);
    } else {
      report.min_margin = std::min(report.min_margin, p.metric);
    }
  }
  if (report.points.empty() || report.min_margin == std::numeric_limits<double>::infinity()) {
    report.min_margin = 0.0;
  }
  return report;
}

std::vector<Probe> sweep(int order, int points, const FeasibilityOptions& options) {
  require_order(order);
  if (points < 1) throw InvalidArgument("sweep needs at least one point");
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] =
        points == 1 ? kPi : (i + 1 == points ? kPi : kPi / 2 + (kPi / 2) * i / (points - 1));
  }
  std::vector<Probe> out(grid.size());
  detail::parallel_for(grid.size(), [&](std::size_t i) {
    out[i] = probe(PhaseAngle(grid[i]), order, options);
  });
  return out;
}

}  // namespace nnsdist

#include "nnsdist/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nnsdist {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(k alpha), cos(k alpha)
struct Trig {
  double alpha;
  double s(int k) const { return std::sin(k * alpha); }
  double c(int k) const { return std::cos(k * alpha); }
};

// Entries are listed block by block (a_0, a_1, ..., a_N), which is exactly
// column_order.
std::vector<double> catalog_entries(int order, double alpha) {
  const Trig t{alpha};
  auto s = [&](int k) { return t.s(k); };
  auto c = [&](int k) { return t.c(k); };
  switch (order) {
    case 1:
      return {1, 1, 1};
    case 2:
      return {1, c(2), 1, -c(1), -c(1), 1};
    case 3:
      return {3 * s(1), s(3),  s(3),  3 * s(1), -s(2),
              -s(2),    -s(2), s(1),  s(1),     0};
    case 4:
      return {6,        0,    -2 * c(4), 0,         6,                      // a0
              -3 * c(1), c(3), c(3),     -3 * c(1),                         // a1
              2,        0,    2,                                            // a2
              -3 * c(1), -3 * c(1),                                         // a3
              6};                                                           // a4
    case 5:
      return {20 * s(1), 0, -2 * s(5), -2 * s(5), 0, 20 * s(1),             // a0
              -4 * s(2), s(4), 2 * s(4), s(4), -4 * s(2),                   // a1
              3 * s(1), -s(3), -s(3), 3 * s(1),                             // a2
              -s(2), 0, -s(2),                                              // a3
              2 * s(1), 2 * s(1),                                           // a4
              0};                                                           // a5
    case 6:
      return {20, 0, 0, 2 * c(6), 0, 0, 20,                                 // a0
              -10 * c(1), 0, -c(5), -c(5), 0, -10 * c(1),                   // a1
              3, 0, c(4), 0, 3,                                             // a2
              c(3), 0, 0, c(3),                                             // a3
              -2 * c(2), 0, -2 * c(2),                                      // a4
              0, 0,                                                         // a5
              5};                                                           // a6
    case 7:
      return {140 * s(1), 0, 0, 4 * s(7), 4 * s(7), 0, 0, 140 * s(1),       // a0
              -30 * s(2), 0, -2 * s(6), -4 * s(6), -2 * s(6), 0, -30 * s(2),  // a1
              20 * s(1), 0, 2 * s(5), 2 * s(5), 0, 20 * s(1),               // a2
              2 * s(4) - 4 * s(2), s(4), 0, s(4), 2 * s(4) - 4 * s(2),      // a3
              -4 * s(3) + 6 * s(1), -2 * s(3), -2 * s(3), -4 * s(3) + 6 * s(1),  // a4
              0, 0, 0,                                                      // a5
              10 * s(1), 10 * s(1),                                         // a6
              0};                                                           // a7
    case 8:
      return {140, 0, 0, 0, -4 * c(8), 0, 0, 0, 140,                        // a0
              -70 * c(1), 0, 0, 2 * c(7), 2 * c(7), 0, 0, -70 * c(1),       // a1
              20, 0, 0, -2 * c(6), 0, 0, 20,                                // a2
              5 * c(3), -c(5), 0, 0, -c(5), 5 * c(3),                       // a3
              -8 * c(2), 2 * c(4), 0, 2 * c(4), -8 * c(2),                  // a4
              0, 0, 0, 0,                                                   // a5
              10, 0, 10,                                                    // a6
              -35 * c(1), -35 * c(1),                                       // a7
              140};                                                         // a8
    case 9:
      return {504 * s(1), 0, 0, 0, -4 * s(9), -4 * s(9), 0, 0, 0, 504 * s(1),  // a0
              -112 * s(2), 0, 0, 2 * s(8), 4 * s(8), 2 * s(8), 0, 0,
              -112 * s(2),                                                  // a1
              70 * s(1), 0, 0, -2 * s(7), -2 * s(7), 0, 0, 70 * s(1),       // a2
              6 * s(4) - 15 * s(2), -s(6), -s(6), 0, -s(6), -s(6),
              6 * s(4) - 15 * s(2),                                         // a3
              -10 * s(3) + 20 * s(1), 2 * s(5), 2 * s(5), 2 * s(5), 2 * s(5),
              -10 * s(3) + 20 * s(1),                                       // a4
              4 * s(4), 0, 0, 0, 4 * s(4),                                  // a5
              15 * s(1) - 12 * s(3), -5 * s(3), -5 * s(3),
              15 * s(1) - 12 * s(3),                                        // a6
              0, 0, 0,                                                      // a7
              56 * s(1), 56 * s(1),                                         // a8
              0};                                                           // a9
    case 10:
      return {504, 0, 0, 0, 0, 4 * c(10), 0, 0, 0, 0, 504,                  // a0
              -252 * c(1), 0, 0, 0, -2 * c(9), -2 * c(9), 0, 0, 0,
              -252 * c(1),                                                  // a1
              70, 0, 0, 0, 2 * c(8), 0, 0, 0, 70,                           // a2
              21 * c(3), 0, c(7), 0, 0, c(7), 0, 21 * c(3),                 // a3
              -30 * c(2), 0, -2 * c(6), 0, -2 * c(6), 0, -30 * c(2),        // a4
              -4 * c(5), 0, 0, 0, 0, -4 * c(5),                             // a5
              12 * c(4) + 15, 0, 5 * c(4), 0, 12 * c(4) + 15,               // a6
              0, 0, 0, 0,                                                   // a7
              -56 * c(2), 0, -56 * c(2),                                    // a8
              0, 0,                                                         // a9
              504};                                                         // a10
    default:
      throw InvalidArgument("catalog covers orders 1..10, got " + std::to_string(order));
  }
}

void require_catalog_order(int order) {
  if (order < 1 || order > kCatalogMaxOrder) {
    throw InvalidArgument("catalog covers orders 1..10, got " + std::to_string(order));
  }
}

}  // namespace

bool AlphaInterval::contains(double alpha) const {
  if (degenerate) return std::abs(alpha - lo) <= kIntervalSlack;
  return alpha >= lo - kIntervalSlack && alpha < hi - kIntervalSlack;
}

AlphaInterval catalog_interval(int order) {
  require_catalog_order(order);
  if (order == 1) return {kPi, kPi, true};
  return {conjectured_threshold(order), conjectured_threshold(order - 1), false};
}

double conjectured_threshold(int order) {
  if (order < 1) throw InvalidArgument("order must be >= 1");
  return kPi / 2 + kPi / (2.0 * order);
}

ReducedVector explicit_nns(int order, const PhaseAngle& alpha) {
  const AlphaInterval interval = catalog_interval(order);
  if (!interval.contains(alpha.radians())) {
    throw AlphaOutOfInterval("alpha = " + std::to_string(alpha.radians()) +
                             " is outside the catalog interval for N = " +
                             std::to_string(order));
  }
  return ReducedVector(order, catalog_entries(order, alpha.radians()));
}

int quadrant_of(int k, const PhaseAngle& alpha, int order) {
  if (order < 2 || order > kCatalogMaxOrder) {
    throw InvalidArgument("quadrant_of needs 2 <= N <= 10");
  }
  if (k < 0 || k > order) throw InvalidArgument("quadrant_of needs 0 <= k <= N");
  if (!catalog_interval(order).contains(alpha.radians())) {
    throw AlphaOutOfInterval("quadrant_of: alpha outside the catalog interval");
  }
  const int r = (k < order ? k + 1 : order + 2) % 4;
  return r == 0 ? 4 : r;
}

VerificationReport verify_reduced(const ReducedVector& y, const PhaseAngle& alpha,
                                  const CatalogTolerances& tol) {
  VerificationReport report;
  report.order = y.order();
  report.alpha = alpha.radians();
  const double y_inf = inf_norm(y.entries());
  const auto cy = multiply(build_C(alpha, y.order()), y.entries());
  report.residual_inf = y_inf > 0.0 ? inf_norm(cy) / y_inf : inf_norm(cy);
  report.min_entry = *std::min_element(y.entries().begin(), y.entries().end());
  report.nonneg = report.min_entry >= -tol.nonneg;
  report.nonzero = y_inf > 0.0;
  report.palindromic = palindrome_check(y);
  report.passed = report.nonneg && report.nonzero && report.residual_inf <= tol.residual;
  return report;
}

VerificationReport verify_catalog_entry(int order, const PhaseAngle& alpha,
                                        const CatalogTolerances& tol) {
  return verify_reduced(explicit_nns(order, alpha), alpha, tol);
}

std::vector<double> catalog_samples(int order, int count) {
  const AlphaInterval interval = catalog_interval(order);
  if (interval.degenerate) return {interval.lo};
  if (count < 1) throw InvalidArgument("sample count must be >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out.push_back(interval.lo + (interval.hi - interval.lo) * i / count);
  }
  return out;
}

ReducedVector pad_solution(const ReducedVector& y, const std::array<double, 3>& e) {
  const int order = y.order();
  const int padded = order + 1;
  const auto labels = column_order(padded);
  std::vector<double> out(labels.size(), 0.0);
  for (std::size_t c = 0; c < labels.size(); ++c) {
    const std::array<int, 3> counts{labels[c].n0, labels[c].n1, labels[c].n2};
    double v = 0.0;
    for (int d = 0; d < 3; ++d) {
      if (counts[d] == 0 || e[d] == 0.0) continue;
      auto parent = counts;
      --parent[d];
      const MultisetLabel from{parent[0], parent[1], parent[2]};
      v += e[d] * (static_cast<double>(counts[d]) / padded) * y.at(from);
    }
    out[c] = v;
  }
  return ReducedVector(padded, std::move(out));
}

}  // namespace nnsdist

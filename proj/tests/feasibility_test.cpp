#include "nnsdist/feasibility.hpp"

#include <numbers>

#include "gtest/gtest.h"
#include "nnsdist/catalog.hpp"

using namespace nnsdist;

namespace {

constexpr double kPi = std::numbers::pi;

double margin_of(const std::vector<double>& h, const RealMatrix& m) {
  const auto row = left_multiply(h, m);
  return *std::min_element(row.begin(), row.end());
}

}  // namespace

TEST(feasibility, realize_shape) {
  const RealizedSystem s = realize(PhaseAngle(2.0), 3);
  EXPECT_EQ(s.matrix.rows(), 8u);
  EXPECT_EQ(s.matrix.cols(), 10u);
  EXPECT_EQ(s.order, 3);
}

TEST(feasibility, unique_witness_at_three_quarter_pi) {
  // At alpha = 3 pi/4 the cone {y >= 0, C y = 0} is a single ray, so the
  // normalized witness must be the catalog vector scaled to unit sum.
  const PhaseAngle alpha = PhaseAngle::from_pi_fraction(3, 4);
  const FeasibilityOutcome out = nns_exists(alpha, 2);
  ASSERT_TRUE(std::holds_alternative<Witness>(out));
  const Witness& w = std::get<Witness>(out);
  EXPECT_LE(w.residual, 1e-12);
  const double h = std::sqrt(2.0) / 2;
  const std::vector<double> ray = {1, 0, 1, h, h, 1};
  const double total = 3 + 2 * h;
  for (std::size_t i = 0; i < ray.size(); ++i) EXPECT_NEAR(w.y[i], ray[i] / total, 1e-10);
}

TEST(feasibility, certificate_below_threshold) {
  for (int n = 2; n <= 6; ++n) {
    const PhaseAngle alpha(kPi / 2 + 0.5 * kPi / (2.0 * n));
    const FeasibilityOutcome out = nns_exists(alpha, n);
    ASSERT_TRUE(std::holds_alternative<Certificate>(out)) << n;
    const Certificate& c = std::get<Certificate>(out);
    EXPECT_EQ(c.h.size(), 2u * (n + 1));
    EXPECT_NEAR(inf_norm(c.h), 1.0, 1e-12);
    const RealMatrix m = realize(alpha, n).matrix;
    EXPECT_GE(margin_of(c.h, m), 1e-8);
    EXPECT_NEAR(margin_of(c.h, m), c.margin, 1e-12);
    EXPECT_TRUE(verify_certificate(c, alpha, n).valid);
  }
}

TEST(feasibility, witness_above_threshold) {
  for (int n = 1; n <= 8; ++n) {
    for (double alpha : {conjectured_threshold(n) + 0.05, kPi}) {
      if (alpha > kPi) continue;
      const FeasibilityOutcome out = nns_exists(PhaseAngle(alpha), n);
      ASSERT_TRUE(std::holds_alternative<Witness>(out)) << n << " " << alpha;
      const Witness& w = std::get<Witness>(out);
      double total = 0.0;
      for (double v : w.y.entries()) {
        EXPECT_GE(v, 0.0);
        total += v;
      }
      EXPECT_NEAR(total, 1.0, 1e-12);
      EXPECT_LE(w.residual, 1e-8);
    }
  }
}

TEST(feasibility, order_one_only_at_pi) {
  EXPECT_TRUE(std::holds_alternative<Witness>(nns_exists(PhaseAngle(kPi), 1)));
  EXPECT_TRUE(std::holds_alternative<Certificate>(nns_exists(PhaseAngle(2.5), 1)));
}

TEST(feasibility, certificate_verification_rejects_tampering) {
  const PhaseAngle alpha(1.7);
  const auto c = std::get<Certificate>(nns_exists(alpha, 3));
  Certificate flipped = c;
  for (auto& v : flipped.h) v = -v;
  EXPECT_FALSE(verify_certificate(flipped, alpha, 3).valid);
  Certificate overclaimed = c;
  overclaimed.margin = c.margin + 1.0;
  EXPECT_FALSE(verify_certificate(overclaimed, alpha, 3).valid);
  Certificate wrong_length = c;
  wrong_length.h.push_back(0.0);
  EXPECT_FALSE(verify_certificate(wrong_length, alpha, 3).valid);
}

TEST(feasibility, alpha_range_enforced) {
  EXPECT_THROW(nns_exists(PhaseAngle(1.0), 3), InvalidArgument);
  EXPECT_THROW(nns_exists(PhaseAngle(3.5), 3), InvalidArgument);
  EXPECT_THROW(nns_exists(PhaseAngle(2.0), 0), InvalidArgument);
}

TEST(feasibility, decide_cone_on_generic_systems) {
  // y1 - y2 = 0 has the ray (1, 1).
  const RealMatrix feasible(1, 2, {1, -1});
  const ConeOutcome a = decide_cone(feasible);
  ASSERT_TRUE(std::holds_alternative<ConeWitness>(a));
  EXPECT_NEAR(std::get<ConeWitness>(a).y[0], 0.5, 1e-14);
  // y1 + y2 = 0 forces y = 0.
  const RealMatrix infeasible(1, 2, {1, 1});
  const ConeOutcome b = decide_cone(infeasible);
  ASSERT_TRUE(std::holds_alternative<ConeCertificate>(b));
  EXPECT_NEAR(std::get<ConeCertificate>(b).margin, 1.0, 1e-12);
}

TEST(feasibility, b_and_c_decide_alike) {
  // B y = 0 iff C y = 0, so the cone problems on both embeddings agree.
  for (int n = 2; n <= 5; ++n) {
    for (double alpha : {1.7, 2.4, 3.0}) {
      const PhaseAngle a(alpha);
      const bool c_feasible =
          std::holds_alternative<ConeWitness>(decide_cone(real_embedding(build_C(a, n))));
      const bool b_feasible =
          std::holds_alternative<ConeWitness>(decide_cone(real_embedding(build_B(a, n))));
      EXPECT_EQ(c_feasible, b_feasible) << n << " " << alpha;
    }
  }
}

TEST(feasibility, threshold_small_orders) {
  for (int n = 1; n <= 4; ++n) {
    const ThresholdEstimate t = threshold_bisect(n, 1e-6);
    EXPECT_LE(t.bracket_width, 1e-6);
    EXPECT_LE(std::abs(t.alpha_star - conjectured_threshold(n)), 1e-5) << n;
    EXPECT_LE(t.bracket_lo, t.alpha_star);
    EXPECT_GE(t.bracket_hi, t.alpha_star);
  }
  EXPECT_THROW(threshold_bisect(3, 1e-9), InvalidArgument);
}

TEST(feasibility, necessity_grid_and_scan) {
  const auto grid = necessity_grid(4, 10);
  ASSERT_EQ(grid.size(), 10u);
  EXPECT_GT(grid.front(), kPi / 2);
  EXPECT_LT(grid.back(), conjectured_threshold(4));
  const NecessityReport r = necessity_scan(4, grid);
  EXPECT_TRUE(r.anomalies.empty());
  EXPECT_GE(r.min_margin, 1e-8);
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_EQ(r.points[i].alpha, grid[i]);
  const std::vector<double> outside = {conjectured_threshold(4)};
  EXPECT_THROW(necessity_scan(4, outside), InvalidArgument);
}

TEST(feasibility, sweep_is_ordered_and_deterministic) {
  const auto s1 = sweep(3, 9);
  const auto s2 = sweep(3, 9);
  ASSERT_EQ(s1.size(), 9u);
  EXPECT_DOUBLE_EQ(s1.front().alpha, kPi / 2);
  EXPECT_DOUBLE_EQ(s1.back().alpha, kPi);
  for (std::size_t i = 0; i < s1.size(); ++i) {
    EXPECT_EQ(s1[i].alpha, s2[i].alpha);
    EXPECT_EQ(s1[i].kind, s2[i].kind);
    EXPECT_EQ(s1[i].metric, s2[i].metric);
    if (i > 0) EXPECT_LT(s1[i - 1].alpha, s1[i].alpha);
  }
  EXPECT_EQ(outcome_name(OutcomeKind::Witness), "witness");
}

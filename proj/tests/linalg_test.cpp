#include "nnsdist/linalg.hpp"

#include <random>

#include "gtest/gtest.h"
#include "nnsdist/tensor_system.hpp"

using namespace nnsdist;

TEST(linalg, singular_values_diagonal) {
  const ComplexMatrix d(2, 3, {3, 0, 0, 0, complex(0, -5), 0});
  const auto s = linalg::singular_values(d);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_NEAR(s[0], 5.0, 1e-14);
  EXPECT_NEAR(s[1], 3.0, 1e-14);
  EXPECT_EQ(linalg::numerical_rank(d, 1e-9), 2u);
  EXPECT_NEAR(linalg::spectral_norm(d), 5.0, 1e-14);
}

TEST(linalg, rank_factorization_reconstructs) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  ComplexMatrix u(5, 2), v(2, 4);
  for (auto& x : u.data()) x = {g(rng), g(rng)};
  for (auto& x : v.data()) x = {g(rng), g(rng)};
  const ComplexMatrix a = multiply(u, v);
  const auto f = linalg::rank_factorize(a);
  EXPECT_EQ(f.rank, 2u);
  EXPECT_EQ(f.left.cols(), 2u);
  EXPECT_EQ(f.right.rows(), 2u);
  EXPECT_LT(max_abs_diff(multiply(f.left, f.right), a), 1e-12);
}

TEST(linalg, psd_sqrt_squares_back) {
  const ComplexMatrix h(2, 2, {2, complex(0, 1), complex(0, -1), 2});
  const ComplexMatrix r = linalg::psd_sqrt(h);
  EXPECT_LT(max_abs_diff(multiply(r, r), h), 1e-13);
  EXPECT_LT(max_abs_diff(adjoint(r), r), 1e-14);
  const ComplexMatrix neg(1, 1, {-1});
  EXPECT_THROW(linalg::psd_sqrt(neg), InvalidArgument);
  const auto ev = linalg::hermitian_eigenvalues(h);
  EXPECT_NEAR(ev[0], 1.0, 1e-14);
  EXPECT_NEAR(ev[1], 3.0, 1e-14);
}

TEST(linalg, real_null_space) {
  const RealMatrix a(1, 3, {1, 1, 1});
  const RealMatrix n = linalg::real_null_space(a);
  EXPECT_EQ(n.rows(), 3u);
  EXPECT_EQ(n.cols(), 2u);
  for (std::size_t c = 0; c < n.cols(); ++c) {
    const auto col = n.column(c);
    EXPECT_NEAR(col[0] + col[1] + col[2], 0.0, 1e-14);
  }
}

TEST(linalg, rank_of_c_is_order_plus_one) {
  for (int n = 1; n <= 10; ++n) {
    for (double alpha : {1.6, 2.2, 3.1}) {
      const ComplexMatrix c = build_C(PhaseAngle(alpha), n);
      EXPECT_EQ(linalg::numerical_rank(c, 1e-9), static_cast<std::size_t>(n + 1));
    }
  }
}

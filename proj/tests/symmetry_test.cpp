#include "nnsdist/symmetry.hpp"

#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "nnsdist/linalg.hpp"
#include "nnsdist/tensor_system.hpp"
#include "support/oracles.hpp"

using namespace nnsdist;

namespace {

std::vector<double> random_nonneg(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

FullVector to_full(const std::vector<double>& v) {
  return FullVector(std::vector<complex>(v.begin(), v.end()));
}

std::vector<double> real_parts(const FullVector& x) {
  std::vector<double> out;
  for (const auto& v : x.entries()) out.push_back(v.real());
  return out;
}

// Random real combination of a real null basis of A_red^{⊗N}.
std::vector<double> random_null_vector(int n, double alpha, std::mt19937_64& rng) {
  const ComplexMatrix k = kron_power(a_alpha(PhaseAngle(alpha), MatrixForm::Reduced), n);
  const RealMatrix basis = linalg::real_null_space(real_embedding(k));
  std::normal_distribution<double> g;
  std::vector<double> coeff(basis.cols());
  for (auto& c : coeff) c = g(rng);
  std::vector<double> x = multiply(basis, coeff);
  const double norm = inf_norm(x);
  for (auto& v : x) v /= norm;
  return x;
}

double null_residual(int n, double alpha, const std::vector<double>& x) {
  const ComplexMatrix k = kron_power(a_alpha(PhaseAngle(alpha), MatrixForm::Reduced), n);
  return inf_norm(multiply(k, std::span<const double>(x)));
}

}  // namespace

TEST(symmetry, full_vector_length) {
  EXPECT_EQ(FullVector(std::vector<complex>(27)).order(), 3);
  EXPECT_THROW(FullVector(std::vector<complex>(26)), LengthNotPowerOfThree);
  EXPECT_THROW(FullVector(std::vector<complex>(1)), LengthNotPowerOfThree);
  EXPECT_THROW(ReducedVector(2, {1, 2, 3}), InvalidArgument);
}

TEST(symmetry, reverse_small) {
  const FullVector x(std::vector<complex>{1, 2, 3});
  const FullVector r = reverse_conjugate(x);
  EXPECT_EQ(r[0], complex(3));
  EXPECT_EQ(r[1], complex(2));
  EXPECT_EQ(r[2], complex(1));
  EXPECT_THROW(reverse_conjugate(FullVector(std::vector<complex>{1, complex(0, 1), 0})),
               NonRealInput);
}

TEST(symmetry, reverse_is_involution) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 5; ++n) {
    const auto x = to_full(random_nonneg(rng, oracle::ipow(3, n)));
    const FullVector twice = reverse_conjugate(reverse_conjugate(x));
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(twice[i], x[i]);
  }
}

TEST(symmetry, reverse_preserves_null_vectors) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 5; ++n) {
    for (double alpha : {1.8, 2.5, std::numbers::pi}) {
      const auto x = random_null_vector(n, alpha, rng);
      ASSERT_LT(null_residual(n, alpha, x), 1e-11);
      const auto r = real_parts(reverse_conjugate(to_full(x)));
      EXPECT_LT(null_residual(n, alpha, r), 1e-11) << "n=" << n << " alpha=" << alpha;
    }
  }
}

TEST(symmetry, symmetrize_matches_permutation_average) {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 4; ++n) {
    const auto x = random_nonneg(rng, oracle::ipow(3, n));
    const auto expected = oracle::permutation_average(x, n);
    const auto got = real_parts(symmetrize_permutation(to_full(x)));
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(got[i], expected[i], 1e-14);
  }
}

TEST(symmetry, symmetrize_fixed_point_and_idempotent) {
  std::mt19937_64 rng(10);
  for (int n = 1; n <= 4; ++n) {
    std::vector<double> y(p_count(n));
    for (auto& v : y) v = std::uniform_real_distribution<double>(0, 1)(rng);
    const FullVector x = expand(ReducedVector(n, y));
    const FullVector s = symmetrize_permutation(x);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(std::abs(s[i] - x[i]), 0.0, 1e-15);
    const auto raw = to_full(random_nonneg(rng, oracle::ipow(3, n)));
    const FullVector once = symmetrize_permutation(raw);
    const FullVector again = symmetrize_permutation(once);
    for (std::size_t i = 0; i < raw.size(); ++i) {
      EXPECT_NEAR(std::abs(once[i] - again[i]), 0.0, 1e-15);
      EXPECT_GE(once[i].real(), 0.0);
    }
  }
}

TEST(symmetry, symmetrize_preserves_null_vectors) {
  std::mt19937_64 rng(12);
  for (int n = 1; n <= 4; ++n) {
    const double alpha = 2.2;
    const auto x = random_null_vector(n, alpha, rng);
    const auto s = real_parts(symmetrize_permutation(to_full(x)));
    EXPECT_LT(null_residual(n, alpha, s), 1e-11);
  }
}

TEST(symmetry, expand_reduce_roundtrip) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<double> y(p_count(n));
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = 0.5 + static_cast<double>(i);
    const ReducedVector r(n, y);
    const FullVector x = expand(r);
    EXPECT_EQ(x.size(), oracle::ipow(3, n));
    const ReducedVector back = reduce(x);
    for (std::size_t i = 0; i < y.size(); ++i) EXPECT_EQ(back[i], y[i]);
  }
}

TEST(symmetry, expand_matches_q_times_y) {
  const int n = 3;
  std::vector<double> y(p_count(n));
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = static_cast<double>(i * i);
  const auto qy = multiply(build_Q(n), std::span<const double>(y));
  const FullVector x = expand(ReducedVector(n, y));
  for (std::size_t i = 0; i < qy.size(); ++i) EXPECT_EQ(x[i], qy[i]);
}

TEST(symmetry, reduce_rejects_non_orbit_constant) {
  std::vector<complex> v(9, 1.0);
  v[1] = 2.0;  // 01 differs from 10
  EXPECT_THROW(reduce(FullVector(v)), NotOrbitConstant);
  std::vector<complex> w(9, 1.0);
  w[0] = complex(1, 1e-6);
  EXPECT_THROW(reduce(FullVector(w)), NonRealInput);
}

TEST(symmetry, mirror_and_palindrome) {
  const int n = 3;
  std::vector<double> y(p_count(n));
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = static_cast<double>(i);
  const ReducedVector r(n, y);
  const ReducedVector m = mirror(r);
  for (const auto& l : column_order(n)) EXPECT_EQ(m.at(l), r.at(l.mirrored()));
  EXPECT_FALSE(palindrome_check(r));
  std::vector<double> sym(p_count(n));
  for (const auto& l : column_order(n)) sym[column_index(l)] = r.at(l) + r.at(l.mirrored());
  EXPECT_TRUE(palindrome_check(ReducedVector(n, sym)));
  // mirror agrees with the full-vector reversal
  const FullVector rev = reverse_conjugate(expand(r));
  const ReducedVector via_full = reduce(rev);
  for (std::size_t i = 0; i < y.size(); ++i) EXPECT_EQ(via_full[i], m[i]);
}

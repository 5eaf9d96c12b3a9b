#include "nnsdist/tensor_system.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace nnsdist {

PhaseAngle::PhaseAngle(double radians) : radians_(radians) {
  if (!std::isfinite(radians)) throw InvalidArgument("phase angle must be finite");
  z_ = std::polar(1.0, radians);
}

PhaseAngle PhaseAngle::from_pi_fraction(long numerator, long denominator) {
  if (denominator == 0) throw InvalidArgument("pi fraction denominator must be nonzero");
  return PhaseAngle(std::numbers::pi * static_cast<double>(numerator) /
                    static_cast<double>(denominator));
}

double PhaseAngle::canonical() const {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(radians_, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}

PhasePowers::PhasePowers(complex z, int max_power) {
  powers_.resize(static_cast<std::size_t>(max_power) + 1);
  powers_[0] = 1.0;
  for (std::size_t k = 1; k < powers_.size(); ++k) powers_[k] = powers_[k - 1] * z;
}

ComplexMatrix a_alpha(const PhaseAngle& alpha, MatrixForm form) {
  const complex z = alpha.z();
  ComplexMatrix a(2, 3);
  a(0, 0) = 1.0;
  a(1, 1) = 1.0;
  a(1, 2) = z;
  if (form == MatrixForm::Original) {
    a(0, 1) = z;
  } else {
    a(0, 2) = -(z * z);
  }
  return a;
}

ComplexMatrix build_Q(int order, std::size_t budget) {
  require_order(order);
  const std::size_t rows = pow3(order);
  const std::size_t cols = p_count(order);
  if (rows * cols > budget) {
    throw SizeExceeded("build_Q: " + std::to_string(rows * cols) + " entries exceeds budget");
  }
  ComplexMatrix q(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) q(i, column_index(orbit_of_index(i, order))) = 1.0;
  return q;
}

namespace {

complex closed_form_entry(int order, int ones, const MultisetLabel& label,
                          const PhasePowers& zp) {
  const int zeros = order - ones;
  const auto left = binomial(zeros, label.n0);
  const auto right = binomial(ones, label.n1);
  if (left == 0 || right == 0) return {};
  const int twos_left = zeros - label.n0;
  const int twos_right = ones - label.n1;
  return static_cast<double>(left) * static_cast<double>(right) * zp.neg_z2(twos_left) *
         zp[twos_right];
}

}  // namespace

complex b_entry_closed_form(int order, int ones, const MultisetLabel& label,
                            const PhaseAngle& alpha) {
  require_order(order);
  if (ones < 0 || ones > order) throw InvalidArgument("ones count out of range");
  if (label.order() != order || label.n0 < 0 || label.n1 < 0 || label.n2 < 0) {
    throw InvalidArgument("multiset label does not match order");
  }
  return closed_form_entry(order, ones, label, PhasePowers(alpha.z(), 2 * order));
}

ComplexMatrix build_C(const PhaseAngle& alpha, int order) {
  require_order(order);
  const auto labels = column_order(order);
  const PhasePowers zp(alpha.z(), 2 * order);
  ComplexMatrix c(static_cast<std::size_t>(order) + 1, labels.size());
  for (int j = 0; j <= order; ++j) {
    for (std::size_t col = 0; col < labels.size(); ++col) {
      c(static_cast<std::size_t>(j), col) = closed_form_entry(order, j, labels[col], zp);
    }
  }
  return c;
}

ComplexMatrix build_B(const PhaseAngle& alpha, int order) {
  const ComplexMatrix c = build_C(alpha, order);
  const std::size_t rows = pow2(order);
  ComplexMatrix b(rows, c.cols());
  for (std::size_t r = 0; r < rows; ++r) {
    const auto ones = static_cast<std::size_t>(std::popcount(r));
    std::copy(c.row(ones).begin(), c.row(ones).end(), b.row(r).begin());
  }
  return b;
}

ComplexMatrix build_B_by_kronecker(const PhaseAngle& alpha, int order, std::size_t budget) {
  const ComplexMatrix a = kron_power(a_alpha(alpha, MatrixForm::Reduced), order, budget);
  return multiply(a, build_Q(order, budget));
}

ComplexMatrix gamma(int n, const PhaseAngle& alpha) {
  if (n < 0 || n > kMaxOrder) throw InvalidArgument("gamma: n out of range");
  const PhasePowers zp(alpha.z(), 2 * n);
  const auto size = static_cast<std::size_t>(n) + 1;
  ComplexMatrix g(size, size);
  // 1-based (j, k): (-1)^{k-j} C(n+1-j, k-j) z^{j-1+2(k-j)} for k >= j.
  for (int j = 1; j <= n + 1; ++j) {
    for (int k = j; k <= n + 1; ++k) {
      const double sign = ((k - j) % 2 == 0) ? 1.0 : -1.0;
      const auto coeff = static_cast<double>(binomial(n + 1 - j, k - j));
      g(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1)) =
          sign * coeff * zp[j - 1 + 2 * (k - j)];
    }
  }
  return g;
}

ComplexMatrix d_diag(int n, int k) {
  if (k < 0 || k > n) throw InvalidArgument("d_diag: need 0 <= k <= n");
  const auto size = static_cast<std::size_t>(n - k) + 1;
  ComplexMatrix d(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    d(i, i) = static_cast<double>(binomial(k + static_cast<int>(i), k));
  }
  return d;
}

ComplexMatrix build_C_block(const PhaseAngle& alpha, int order) {
  require_order(order);
  const auto rows = static_cast<std::size_t>(order) + 1;
  ComplexMatrix c(rows, p_count(order));
  std::size_t col0 = 0;
  for (int k = 0; k <= order; ++k) {
    const ComplexMatrix block = multiply(d_diag(order, k), gamma(order - k, alpha));
    const auto row0 = static_cast<std::size_t>(k);
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) c(row0 + i, col0 + j) = block(i, j);
    col0 += block.cols();
  }
  return c;
}

}  // namespace nnsdist

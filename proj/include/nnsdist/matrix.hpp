#pragma once

// Dense row-major matrices. ComplexMatrix carries A_alpha, its Kronecker
// powers, Q_N, B and C; RealMatrix carries the real embedding fed to the LP.

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nnsdist/errors.hpp"

namespace nnsdist {

using complex = std::complex<double>;

// Refuse dense results above 2^27 entries unless the caller raises the budget.
inline constexpr std::size_t kDefaultEntryBudget = std::size_t{1} << 27;

template <class T>
class DenseMatrix {
 public:
  using value_type = T;

  DenseMatrix() = default;

  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, T{}) {}

  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw ShapeMismatch("matrix entry count " + std::to_string(entries_.size()) +
                          " does not match " + std::to_string(rows_) + "x" +
                          std::to_string(cols_));
    }
    for (const auto& v : entries_) {
      if (!is_finite(v)) throw InvalidArgument("matrix entries must be finite");
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  std::span<const T> data() const { return entries_; }
  std::span<T> data() { return entries_; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  bool operator==(const DenseMatrix&) const = default;

 private:
  static bool is_finite(double v) { return std::isfinite(v); }
  static bool is_finite(const std::complex<double>& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using ComplexMatrix = DenseMatrix<complex>;
using RealMatrix = DenseMatrix<double>;

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<complex> multiply(const ComplexMatrix& a, std::span<const complex> x);
std::vector<complex> multiply(const ComplexMatrix& a, std::span<const double> x);
std::vector<double> multiply(const RealMatrix& a, std::span<const double> x);
// h^T a
std::vector<double> left_multiply(std::span<const double> h, const RealMatrix& a);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// M^{⊗N}; the first factor owns the most significant digit of row/column
// labels. Throws SizeExceeded when the result would exceed `budget` entries.
ComplexMatrix kron_power(const ComplexMatrix& m, int n,
                         std::size_t budget = kDefaultEntryBudget);

ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, complex s);
ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks);
ComplexMatrix to_complex(const RealMatrix& a);

// Rows [Re a; Im a].
RealMatrix real_embedding(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Sum of |.| over real or complex vectors; inf-norm helpers.
double inf_norm(std::span<const complex> v);
double inf_norm(std::span<const double> v);

}  // namespace nnsdist

#include "nnsdist/matrix.hpp"

#include <algorithm>

#include "nnsdist/kernels.hpp"

namespace nnsdist {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch(std::string(op) + ": shapes differ");
  }
}

}  // namespace

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("multiply: inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out_row = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const complex aik = a(i, k);
      if (aik == complex{}) continue;
      kernels::caxpy(aik, b.row(k), out_row);
    }
  }
  return out;
}

std::vector<complex> multiply(const ComplexMatrix& a, std::span<const complex> x) {
  if (a.cols() != x.size()) throw ShapeMismatch("multiply: vector length differs");
  std::vector<complex> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = kernels::cdot(a.row(i), x);
  return out;
}

std::vector<complex> multiply(const ComplexMatrix& a, std::span<const double> x) {
  std::vector<complex> xc(x.begin(), x.end());
  return multiply(a, std::span<const complex>(xc));
}

std::vector<double> multiply(const RealMatrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw ShapeMismatch("multiply: vector length differs");
  std::vector<double> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = kernels::dot(a.row(i), x);
  return out;
}

std::vector<double> left_multiply(std::span<const double> h, const RealMatrix& a) {
  if (a.rows() != h.size()) throw ShapeMismatch("left_multiply: vector length differs");
  std::vector<double> out(a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (h[i] != 0.0) kernels::axpy(h[i], a.row(i), out);
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const complex aij = a(i, j);
      if (aij == complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        auto dst = out.row(i * b.rows() + k).subspan(j * b.cols(), b.cols());
        kernels::caxpy(aij, b.row(k), dst);
      }
    }
  }
  return out;
}

ComplexMatrix kron_power(const ComplexMatrix& m, int n, std::size_t budget) {
  if (n < 1) throw InvalidArgument("kron_power: exponent must be >= 1");
  // Check the final size before allocating anything.
  double entries = 1.0;
  for (int i = 0; i < n; ++i) entries *= static_cast<double>(m.rows() * m.cols());
  if (entries > static_cast<double>(budget)) {
    throw SizeExceeded("kron_power: result would have " + std::to_string(entries) +
                       " entries, budget is " + std::to_string(budget));
  }
  ComplexMatrix out = m;
  for (int i = 1; i < n; ++i) out = kron(out, m);
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "add");
  ComplexMatrix out = a;
  kernels::caxpy(complex{1.0, 0.0}, b.data(), out.data());
  return out;
}

ComplexMatrix scale(const ComplexMatrix& a, complex s) {
  ComplexMatrix out = a;
  for (auto& v : out.data()) v *= s;
  return out;
}

ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  ComplexMatrix out(rows, cols);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

ComplexMatrix to_complex(const RealMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) out.data()[i] = a.data()[i];
  return out;
}

RealMatrix real_embedding(const ComplexMatrix& a) {
  RealMatrix out(2 * a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = a(i, j).real();
      out(a.rows() + i, j) = a(i, j).imag();
    }
  }
  return out;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& v : a.data()) s += std::norm(v);
  return std::sqrt(s);
}

double max_abs(const ComplexMatrix& a) { return inf_norm(a.data()); }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

double inf_norm(std::span<const complex> v) {
  double worst = 0.0;
  for (const auto& x : v) worst = std::max(worst, std::abs(x));
  return worst;
}

double inf_norm(std::span<const double> v) {
  double worst = 0.0;
  for (double x : v) worst = std::max(worst, std::abs(x));
  return worst;
}

}  // namespace nnsdist

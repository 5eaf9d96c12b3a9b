#include "nnsdist/symmetry.hpp"

#include <algorithm>
#include <cmath>

namespace nnsdist {

namespace {

int order_of_length(std::size_t n) {
  int order = 0;
  std::size_t v = 1;
  while (v < n) {
    v *= 3;
    ++order;
  }
  if (v != n || order < 1) {
    throw LengthNotPowerOfThree("vector length " + std::to_string(n) +
                                " is not a positive power of three");
  }
  return order;
}

}  // namespace

FullVector::FullVector(std::vector<complex> entries)
    : entries_(std::move(entries)), order_(order_of_length(entries_.size())) {}

ReducedVector::ReducedVector(int order, std::vector<double> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order < 1) throw InvalidArgument("reduced vector order must be >= 1");
  if (entries_.size() != p_count(order)) {
    throw InvalidArgument("reduced vector of order " + std::to_string(order) + " needs " +
                          std::to_string(p_count(order)) + " entries, got " +
                          std::to_string(entries_.size()));
  }
}

ReducedVector ReducedVector::zeros(int order) {
  return ReducedVector(order, std::vector<double>(p_count(order), 0.0));
}

FullVector symmetrize_permutation(const FullVector& x) {
  const int order = x.order();
  std::vector<complex> sums(p_count(order));
  std::vector<std::size_t> column(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    column[i] = column_index(orbit_of_index(i, order));
    sums[column[i]] += x[i];
  }
  const auto labels = column_order(order);
  for (std::size_t c = 0; c < sums.size(); ++c) {
    sums[c] /= static_cast<double>(orbit_size(labels[c]));
  }
  std::vector<complex> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = sums[column[i]];
  return FullVector(std::move(out));
}

FullVector reverse_conjugate(const FullVector& x, const SymmetryTolerances& tol) {
  for (const auto& v : x.entries()) {
    if (std::abs(v.imag()) > tol.real) {
      throw NonRealInput("reverse_conjugate needs a real vector");
    }
  }
  // Replacing every digit j by 2-j maps index i to 3^N - 1 - i.
  const std::size_t last = x.size() - 1;
  std::vector<complex> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[last - i];
  return FullVector(std::move(out));
}

FullVector expand(const ReducedVector& y) {
  const int order = y.order();
  std::vector<complex> out(pow3(order));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = y[column_index(orbit_of_index(i, order))];
  }
  return FullVector(std::move(out));
}

ReducedVector reduce(const FullVector& x, const SymmetryTolerances& tol) {
  const int order = x.order();
  const double scale = std::max(1.0, inf_norm(x.entries()));
  std::vector<double> y(p_count(order), 0.0);
  std::vector<bool> seen(y.size(), false);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i].imag()) > tol.real * scale) {
      throw NonRealInput("reduce needs a real vector");
    }
    const std::size_t c = column_index(orbit_of_index(i, order));
    if (!seen[c]) {
      seen[c] = true;
      y[c] = x[i].real();
    } else if (std::abs(x[i].real() - y[c]) > tol.orbit_constant * scale) {
      throw NotOrbitConstant("entry " + std::to_string(i + 1) +
                             " differs from its orbit representative");
    }
  }
  return ReducedVector(order, std::move(y));
}

ReducedVector mirror(const ReducedVector& y) {
  const auto labels = column_order(y.order());
  std::vector<double> out(y.size());
  for (std::size_t c = 0; c < labels.size(); ++c) out[c] = y.at(labels[c].mirrored());
  return ReducedVector(y.order(), std::move(out));
}

bool palindrome_check(const ReducedVector& y, const SymmetryTolerances& tol) {
  const double scale = std::max(1.0, inf_norm(y.entries()));
  const auto labels = column_order(y.order());
  for (std::size_t c = 0; c < labels.size(); ++c) {
    if (std::abs(y[c] - y.at(labels[c].mirrored())) > tol.palindrome * scale) return false;
  }
  return true;
}

}  // namespace nnsdist

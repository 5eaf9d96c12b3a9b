#pragma once

// Solution symmetries: digit-permutation averaging, the 0<->2 digit
// reversal, and the expand/reduce maps between full 3^N vectors and reduced
// p_N vectors laid out in column_order.

#include <span>
#include <vector>

#include "nnsdist/labels.hpp"
#include "nnsdist/matrix.hpp"

namespace nnsdist {

class FullVector {
 public:
  // Throws LengthNotPowerOfThree unless the length is 3^N with N >= 1.
  explicit FullVector(std::vector<complex> entries);

  int order() const { return order_; }
  std::size_t size() const { return entries_.size(); }
  std::span<const complex> entries() const { return entries_; }
  complex operator[](std::size_t i) const { return entries_[i]; }

 private:
  std::vector<complex> entries_;
  int order_ = 0;
};

class ReducedVector {
 public:
  // Throws InvalidArgument unless entries.size() == p_count(order).
  ReducedVector(int order, std::vector<double> entries);

  static ReducedVector zeros(int order);

  int order() const { return order_; }
  std::size_t size() const { return entries_.size(); }
  std::span<const double> entries() const { return entries_; }
  double operator[](std::size_t i) const { return entries_[i]; }
  double at(const MultisetLabel& label) const { return entries_.at(column_index(label)); }

 private:
  int order_;
  std::vector<double> entries_;
};

struct SymmetryTolerances {
  double orbit_constant = 1e-10;  // relative to max(1, |x|_inf)
  double real = 1e-12;
  double palindrome = 1e-12;  // relative to max(1, |y|_inf)
};

// Replaces every entry by the mean of its orbit.
FullVector symmetrize_permutation(const FullVector& x);

// x_hat[j_1..j_N] = x[(2-j_1)..(2-j_N)]. Throws NonRealInput when an entry has
// |Im| above tol.real.
FullVector reverse_conjugate(const FullVector& x, const SymmetryTolerances& tol = {});

// Q_N y
FullVector expand(const ReducedVector& y);

// Left inverse of expand. Throws NotOrbitConstant or NonRealInput.
ReducedVector reduce(const FullVector& x, const SymmetryTolerances& tol = {});

// y[N0,N1,N2] == y[N2,N1,N0] for every label.
bool palindrome_check(const ReducedVector& y, const SymmetryTolerances& tol = {});

// Reduced-vector form of the reversal: entry [N0,N1,N2] <- [N2,N1,N0].
ReducedVector mirror(const ReducedVector& y);

}  // namespace nnsdist

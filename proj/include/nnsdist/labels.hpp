#pragma once

// Digit-string labels for the rows/columns of A^{⊗N} and the multiset
// (orbit) labels [N0,N1,N2] that index symmetric solutions.
//
// Linear indices exposed by the public API are 1-based, as in
// j = 1 + sum_p j_p 3^{N-1-p}. Everything else (storage, loops) is 0-based.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace nnsdist {

// Largest system order supported by the builders.
inline constexpr int kMaxOrder = 12;

std::size_t pow3(int n);
std::size_t pow2(int n);

// Exact binomial coefficient from a Pascal table; 0 when k < 0 or k > n.
// Valid for 0 <= n <= 60.
std::uint64_t binomial(int n, int k);

class TernaryLabel {
 public:
  // Throws InvalidArgument on an empty sequence or a digit outside {0,1,2}.
  explicit TernaryLabel(std::vector<std::uint8_t> digits);

  // Label of the 0-based position `index` among length-`order` labels.
  static TernaryLabel from_index(std::size_t index, int order);

  int order() const { return static_cast<int>(digits_.size()); }
  const std::vector<std::uint8_t>& digits() const { return digits_; }
  std::string to_string() const;

  auto operator<=>(const TernaryLabel&) const = default;

 private:
  std::vector<std::uint8_t> digits_;
};

class BinaryLabel {
 public:
  explicit BinaryLabel(std::vector<std::uint8_t> digits);
  static BinaryLabel from_index(std::size_t index, int order);

  int order() const { return static_cast<int>(digits_.size()); }
  const std::vector<std::uint8_t>& digits() const { return digits_; }
  int ones_count() const;
  std::string to_string() const;

  auto operator<=>(const BinaryLabel&) const = default;

 private:
  std::vector<std::uint8_t> digits_;
};

struct MultisetLabel {
  int n0 = 0;
  int n1 = 0;
  int n2 = 0;

  int order() const { return n0 + n1 + n2; }
  // [N2,N1,N0], the image under the 0<->2 digit reversal.
  MultisetLabel mirrored() const { return {n2, n1, n0}; }
  std::string to_string() const;

  auto operator<=>(const MultisetLabel&) const = default;
};

// 1-based position of the label in the usual ternary order.
std::size_t ternary_to_linear(const TernaryLabel& label);
TernaryLabel linear_to_ternary(std::size_t linear, int order);

MultisetLabel label_orbit(const TernaryLabel& label);

// Orbit of the label at 0-based position `index`, without allocating.
MultisetLabel orbit_of_index(std::size_t index, int order);

std::size_t p_count(int order);

// [N,0,0],[N-1,0,1],...,[0,0,N], then [N-1,1,0],...,[0,1,N-1], ... ,[0,N,0].
std::vector<MultisetLabel> column_order(int order);

// 0-based position of `label` in column_order(label.order()).
std::size_t column_index(const MultisetLabel& label);

// N!/(N0! N1! N2!)
std::uint64_t orbit_size(const MultisetLabel& label);

// Throws InvalidArgument unless 1 <= order <= kMaxOrder.
void require_order(int order);

}  // namespace nnsdist

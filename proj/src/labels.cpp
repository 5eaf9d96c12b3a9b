#include "nnsdist/labels.hpp"

#include <array>

#include "nnsdist/errors.hpp"

namespace nnsdist {

namespace {

constexpr int kPascalRows = 61;

using PascalTable = std::array<std::array<std::uint64_t, kPascalRows>, kPascalRows>;

constexpr PascalTable make_pascal() {
  PascalTable t{};
  for (int n = 0; n < kPascalRows; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
  }
  return t;
}

constexpr PascalTable kPascal = make_pascal();

std::vector<std::uint8_t> digits_of(std::size_t index, int order, unsigned radix) {
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(order));
  for (int p = order - 1; p >= 0; --p) {
    digits[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(index % radix);
    index /= radix;
  }
  return digits;
}

void check_digits(const std::vector<std::uint8_t>& digits, unsigned radix,
                  const char* what) {
  if (digits.empty()) throw InvalidArgument(std::string(what) + " must be non-empty");
  for (auto d : digits) {
    if (d >= radix) {
      throw InvalidArgument(std::string(what) + " digit out of range: " +
                            std::to_string(static_cast<int>(d)));
    }
  }
}

std::string join_digits(const std::vector<std::uint8_t>& digits) {
  std::string s;
  s.reserve(digits.size());
  for (auto d : digits) s.push_back(static_cast<char>('0' + d));
  return s;
}

}  // namespace

std::size_t pow3(int n) {
  std::size_t v = 1;
  for (int i = 0; i < n; ++i) v *= 3;
  return v;
}

std::size_t pow2(int n) { return std::size_t{1} << n; }

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n >= kPascalRows) throw InvalidArgument("binomial: n too large");
  return kPascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

void require_order(int order) {
  if (order < 1 || order > kMaxOrder) {
    throw InvalidArgument("system order must be in [1, " + std::to_string(kMaxOrder) +
                          "], got " + std::to_string(order));
  }
}

TernaryLabel::TernaryLabel(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
  check_digits(digits_, 3, "ternary label");
}

TernaryLabel TernaryLabel::from_index(std::size_t index, int order) {
  if (order < 1 || index >= pow3(order)) throw InvalidArgument("ternary index out of range");
  return TernaryLabel(digits_of(index, order, 3));
}

std::string TernaryLabel::to_string() const { return join_digits(digits_); }

BinaryLabel::BinaryLabel(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
  check_digits(digits_, 2, "binary label");
}

BinaryLabel BinaryLabel::from_index(std::size_t index, int order) {
  if (order < 1 || index >= pow2(order)) throw InvalidArgument("binary index out of range");
  return BinaryLabel(digits_of(index, order, 2));
}

int BinaryLabel::ones_count() const {
  int c = 0;
  for (auto d : digits_) c += d;
  return c;
}

std::string BinaryLabel::to_string() const { return join_digits(digits_); }

std::string MultisetLabel::to_string() const {
  return "[" + std::to_string(n0) + "," + std::to_string(n1) + "," + std::to_string(n2) + "]";
}

std::size_t ternary_to_linear(const TernaryLabel& label) {
  std::size_t j = 0;
  for (auto d : label.digits()) j = 3 * j + d;
  return j + 1;
}

TernaryLabel linear_to_ternary(std::size_t linear, int order) {
  if (linear == 0) throw InvalidArgument("linear index is 1-based");
  return TernaryLabel::from_index(linear - 1, order);
}

MultisetLabel label_orbit(const TernaryLabel& label) {
  std::array<int, 3> counts{};
  for (auto d : label.digits()) ++counts[d];
  return {counts[0], counts[1], counts[2]};
}

MultisetLabel orbit_of_index(std::size_t index, int order) {
  std::array<int, 3> counts{};
  for (int p = 0; p < order; ++p) {
    ++counts[index % 3];
    index /= 3;
  }
  return {counts[0], counts[1], counts[2]};
}

std::size_t p_count(int order) {
  if (order < 0) throw InvalidArgument("order must be nonnegative");
  const auto n = static_cast<std::size_t>(order);
  return (n + 1) * (n + 2) / 2;
}

std::vector<MultisetLabel> column_order(int order) {
  if (order < 1) throw InvalidArgument("order must be >= 1");
  std::vector<MultisetLabel> labels;
  labels.reserve(p_count(order));
  for (int n1 = 0; n1 <= order; ++n1) {
    for (int n0 = order - n1; n0 >= 0; --n0) labels.push_back({n0, n1, order - n1 - n0});
  }
  return labels;
}

std::size_t column_index(const MultisetLabel& label) {
  if (label.n0 < 0 || label.n1 < 0 || label.n2 < 0) {
    throw InvalidArgument("multiset label counts must be nonnegative");
  }
  const int order = label.order();
  // Group g (N1 = g) holds order - g + 1 labels.
  std::size_t offset = 0;
  for (int g = 0; g < label.n1; ++g) offset += static_cast<std::size_t>(order - g + 1);
  return offset + static_cast<std::size_t>(order - label.n1 - label.n0);
}

std::uint64_t orbit_size(const MultisetLabel& label) {
  return binomial(label.order(), label.n0) * binomial(label.n1 + label.n2, label.n1);
}

}  // namespace nnsdist

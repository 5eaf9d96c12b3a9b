#pragma once

// Reference computations for the tests. Nothing here calls the library's
// builders: labels are enumerated by hand, Kronecker entries are digit
// products, and the displayed C/B patterns are typed in as (coefficient,
// power of z) pairs.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Dense = std::vector<std::vector<cplx>>;

inline std::size_t ipow(std::size_t base, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Most significant digit first.
inline std::vector<int> digits(std::size_t index, int base, int order) {
  std::vector<int> d(static_cast<std::size_t>(order));
  for (int p = order - 1; p >= 0; --p) {
    d[static_cast<std::size_t>(p)] = static_cast<int>(index % static_cast<std::size_t>(base));
    index /= static_cast<std::size_t>(base);
  }
  return d;
}

inline double choose(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

// Position of [n0,n1,n2] in the column order: groups by n1 ascending, n0
// descending inside a group.
inline std::size_t column_position(int n0, int n1, int order) {
  std::size_t pos = 0;
  for (int g = 0; g <= order; ++g) {
    for (int a = order - g; a >= 0; --a) {
      if (g == n1 && a == n0) return pos;
      ++pos;
    }
  }
  return pos;
}

inline std::size_t p_count(int order) {
  return static_cast<std::size_t>((order + 1) * (order + 2) / 2);
}

// Entries of the 2x3 reduced matrix [[1, 0, -z^2], [0, 1, z]].
inline cplx a_red(int row, int col, cplx z) {
  if (row == 0) return col == 0 ? cplx(1) : col == 1 ? cplx(0) : -z * z;
  return col == 0 ? cplx(0) : col == 1 ? cplx(1) : z;
}

inline cplx a_orig(int row, int col, cplx z) {
  if (row == 0) return col == 0 ? cplx(1) : col == 1 ? z : cplx(0);
  return col == 0 ? cplx(0) : col == 1 ? cplx(1) : z;
}

// (A^{⊗N})_{J,L} as a digit product.
template <class Entry>
cplx kron_entry(Entry entry, std::size_t row, std::size_t col, int order, cplx z) {
  const auto j = digits(row, 2, order);
  const auto l = digits(col, 3, order);
  cplx prod = 1.0;
  for (int s = 0; s < order; ++s) {
    prod *= entry(j[static_cast<std::size_t>(s)], l[static_cast<std::size_t>(s)], z);
  }
  return prod;
}

// A_red^{⊗N} Q_N by summing digit products over every ternary column.
inline Dense brute_force_B(double alpha, int order) {
  const cplx z = std::polar(1.0, alpha);
  const std::size_t rows = ipow(2, order);
  const std::size_t cols = ipow(3, order);
  Dense b(rows, std::vector<cplx>(p_count(order)));
  for (std::size_t c = 0; c < cols; ++c) {
    const auto l = digits(c, 3, order);
    const int n0 = static_cast<int>(std::count(l.begin(), l.end(), 0));
    const int n1 = static_cast<int>(std::count(l.begin(), l.end(), 1));
    const std::size_t target = column_position(n0, n1, order);
    for (std::size_t r = 0; r < rows; ++r) b[r][target] += kron_entry(a_red, r, c, order, z);
  }
  return b;
}

// Average of x over every permutation of digit positions.
inline std::vector<double> permutation_average(const std::vector<double>& x, int order) {
  std::vector<int> perm(static_cast<std::size_t>(order));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> sum(x.size(), 0.0);
  double count = 0.0;
  do {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto d = digits(i, 3, order);
      std::size_t j = 0;
      for (int p = 0; p < order; ++p) j = 3 * j + static_cast<std::size_t>(d[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])]);
      sum[i] += x[j];
    }
    count += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto& v : sum) v /= count;
  return sum;
}

struct Term {
  double coeff;
  int power;
};
using Pattern = std::vector<std::vector<Term>>;

inline Dense evaluate(const Pattern& pattern, double alpha) {
  const cplx z = std::polar(1.0, alpha);
  Dense out;
  for (const auto& row : pattern) {
    std::vector<cplx> r;
    for (const auto& t : row) r.push_back(t.coeff * std::pow(z, t.power));
    out.push_back(r);
  }
  return out;
}

// Columns [200] [101] [002] [110] [011] [020]; rows 00, 01, 11.
inline const Pattern& c2_pattern() {
  static const Pattern p = {
      {{1, 0}, {-2, 2}, {1, 4}, {0, 0}, {0, 0}, {0, 0}},
      {{0, 0}, {1, 1}, {-1, 3}, {1, 0}, {-1, 2}, {0, 0}},
      {{0, 0}, {0, 0}, {1, 2}, {0, 0}, {2, 1}, {1, 0}},
  };
  return p;
}

// Columns [300] [201] [102] [003] [210] [111] [012] [120] [021] [030];
// rows 000, 001, 011, 111.
inline const Pattern& c3_pattern() {
  static const Pattern p = {
      {{1, 0}, {-3, 2}, {3, 4}, {-1, 6}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}},
      {{0, 0}, {1, 1}, {-2, 3}, {1, 5}, {1, 0}, {-2, 2}, {1, 4}, {0, 0}, {0, 0}, {0, 0}},
      {{0, 0}, {0, 0}, {1, 2}, {-1, 4}, {0, 0}, {2, 1}, {-2, 3}, {1, 0}, {-1, 2}, {0, 0}},
      {{0, 0}, {0, 0}, {0, 0}, {1, 3}, {0, 0}, {0, 0}, {3, 2}, {0, 0}, {3, 1}, {1, 0}},
  };
  return p;
}

// Rows of B_{alpha,2} in binary order 00, 01, 10, 11.
inline Pattern b2_pattern() {
  const auto& c = c2_pattern();
  return {c[0], c[1], c[1], c[2]};
}

// Rows of B_{alpha,3} in binary order 000..111.
inline Pattern b3_pattern() {
  const auto& c = c3_pattern();
  return {c[0], c[1], c[1], c[2], c[1], c[2], c[2], c[3]};
}

inline std::vector<double> random_alphas(std::uint64_t seed, int count, double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(dist(rng));
  return out;
}

}  // namespace oracle

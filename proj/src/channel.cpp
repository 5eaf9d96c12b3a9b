#include "nnsdist/channel.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "nnsdist/linalg.hpp"

namespace nnsdist {

namespace {

// One row per matrix, its row-major entries as columns.
ComplexMatrix vectorize(std::span<const ComplexMatrix> mats) {
  if (mats.empty()) return {};
  const std::size_t len = mats.front().size();
  ComplexMatrix out(mats.size(), len);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mats[i].size() != len) throw ShapeMismatch("vectorize: matrices differ in size");
    std::copy(mats[i].data().begin(), mats[i].data().end(), out.row(i).begin());
  }
  return out;
}

// Unit-normalizes each matrix and drops ones that are zero relative to the
// largest in the set, so rank comparisons are insensitive to the 1/M scaling
// of the channel products.
std::vector<ComplexMatrix> normalized_nonzero(std::span<const ComplexMatrix> mats) {
  double largest = 0.0;
  for (const auto& m : mats) largest = std::max(largest, frobenius_norm(m));
  std::vector<ComplexMatrix> out;
  for (const auto& m : mats) {
    const double norm = frobenius_norm(m);
    if (norm > 1e-12 * largest && norm > 0.0) out.push_back(scale(m, 1.0 / norm));
  }
  return out;
}

std::size_t span_rank(std::span<const ComplexMatrix> mats, double rel_tol) {
  const auto kept = normalized_nonzero(mats);
  if (kept.empty()) return 0;
  return linalg::numerical_rank(vectorize(kept), rel_tol);
}

std::vector<ComplexMatrix> products(std::span<const ComplexMatrix> e,
                                    std::span<const ComplexMatrix> f) {
  std::vector<ComplexMatrix> out;
  out.reserve(e.size() * f.size());
  for (const auto& ei : e) {
    const ComplexMatrix ei_adj = adjoint(ei);
    for (const auto& fj : f) {
      if (ei.rows() != fj.rows()) throw ShapeMismatch("E_i and F_j have different ranges");
      out.push_back(multiply(ei_adj, fj));
    }
  }
  return out;
}

ComplexMatrix hermitian_gram_sum(std::span<const ComplexMatrix> blocks) {
  ComplexMatrix sum(blocks.front().cols(), blocks.front().cols());
  for (const auto& b : blocks) sum = add(sum, multiply(adjoint(b), b));
  return sum;
}

}  // namespace

SpanSet extract_basis(std::vector<ComplexMatrix> t, double rel_tol) {
  if (t.empty()) throw InvalidArgument("extract_basis: T must be non-empty");
  const std::size_t n = t.front().rows();
  for (const auto& m : t) {
    if (m.rows() != n || m.cols() != n || n == 0) {
      throw InvalidArgument("extract_basis: T must hold square matrices of one size");
    }
  }
  SpanSet span;
  double largest = 0.0;
  for (const auto& m : t) largest = std::max(largest, frobenius_norm(m));
  if (largest == 0.0) throw AllZero("extract_basis: span T = {0}");

  std::vector<ComplexMatrix> chosen;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (frobenius_norm(t[i]) <= 1e-12 * largest) continue;
    chosen.push_back(t[i]);
    if (span_rank(chosen, rel_tol) < chosen.size()) {
      chosen.pop_back();
    } else {
      span.basis.push_back(t[i]);
      span.basis_indices.push_back(i);
    }
  }
  span.matrices = std::move(t);
  return span;
}

KrausPair realize_channels(const SpanSet& span) {
  if (span.basis.empty()) throw AllZero("realize_channels: empty basis");
  const std::size_t n = span.n();
  const std::size_t m = span.basis.size();

  const ComplexMatrix block = direct_sum(std::span<const ComplexMatrix>(span.basis));
  const linalg::RankFactorization fac = linalg::rank_factorize(block);
  const std::size_t k = fac.rank;
  if (k == 0) throw AllZero("realize_channels: block-diagonal matrix has rank 0");

  // block = W^* V with W = left^* (k x nm) and V = right (k x nm).
  const ComplexMatrix w_all = adjoint(fac.left);
  const ComplexMatrix& v_all = fac.right;
  std::vector<ComplexMatrix> b(m, ComplexMatrix(k, n));
  std::vector<ComplexMatrix> c(m, ComplexMatrix(k, n));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        b[j](r, s) = w_all(r, j * n + s);
        c[j](r, s) = v_all(r, j * n + s);
      }

  const ComplexMatrix sum_b = hermitian_gram_sum(b);
  const ComplexMatrix sum_c = hermitian_gram_sum(c);
  const double scale_m =
      2.0 * std::max({linalg::spectral_norm(sum_b), linalg::spectral_norm(sum_c), 1.0});

  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexMatrix b0 = linalg::psd_sqrt(add(id, scale(sum_b, -1.0 / scale_m)));
  const ComplexMatrix c0 = linalg::psd_sqrt(add(id, scale(sum_c, -1.0 / scale_m)));

  KrausPair pair;
  pair.scale = scale_m;
  pair.rank = k;
  pair.n = n;
  pair.block_width = std::max(k, n);
  const std::size_t w = pair.block_width;
  const double inv_root = 1.0 / std::sqrt(scale_m);

  // E_j is (3w) x n; E_j^* = [B_j^* | 0 | 0] / sqrt(M) means E_j rows 0..k-1
  // hold B_j / sqrt(M).
  for (std::size_t j = 0; j < m; ++j) {
    ComplexMatrix e(3 * w, n);
    ComplexMatrix f(3 * w, n);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        e(r, s) = b[j](r, s) * inv_root;
        f(r, s) = c[j](r, s) * inv_root;
      }
    pair.e.push_back(std::move(e));
    pair.f.push_back(std::move(f));
  }
  // B_0, C_0 are Hermitian, so E_{m+1} carries B_0 itself in the middle block.
  ComplexMatrix e_last(3 * w, n);
  ComplexMatrix f_last(3 * w, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      e_last(w + r, s) = b0(r, s);
      f_last(2 * w + r, s) = c0(r, s);
    }
  pair.e.push_back(std::move(e_last));
  pair.f.push_back(std::move(f_last));
  return pair;
}

KrausCheck verify_kraus(std::span<const ComplexMatrix> ops, double tol) {
  if (ops.empty()) throw ShapeMismatch("verify_kraus: no operators");
  const std::size_t n = ops.front().cols();
  for (const auto& op : ops) {
    if (op.cols() != n) throw ShapeMismatch("verify_kraus: column counts differ");
  }
  const ComplexMatrix sum = hermitian_gram_sum(ops);
  KrausCheck check;
  check.defect = frobenius_norm(add(sum, scale(ComplexMatrix::identity(n), -1.0)));
  check.passed = check.defect <= tol;
  return check;
}

ComplexMatrix stacked_product(std::span<const ComplexMatrix> e,
                              std::span<const ComplexMatrix> f) {
  if (e.empty() || f.empty()) throw ShapeMismatch("stacked_product: empty operator list");
  const std::size_t n = e.front().cols();
  ComplexMatrix out(e.size() * n, f.size() * n);
  for (std::size_t i = 0; i < e.size(); ++i) {
    const ComplexMatrix ei_adj = adjoint(e[i]);
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (e[i].cols() != n || f[j].cols() != n || e[i].rows() != f[j].rows()) {
        throw ShapeMismatch("stacked_product: operator shapes differ");
      }
      const ComplexMatrix p = multiply(ei_adj, f[j]);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) out(i * n + r, j * n + s) = p(r, s);
    }
  }
  return out;
}

std::size_t product_span_dimension(std::span<const ComplexMatrix> e,
                                   std::span<const ComplexMatrix> f, double rel_tol) {
  return span_rank(products(e, f), rel_tol);
}

bool span_equality(std::span<const ComplexMatrix> e, std::span<const ComplexMatrix> f,
                   std::span<const ComplexMatrix> t, double rel_tol) {
  if (t.empty()) throw ShapeMismatch("span_equality: T is empty");
  const auto prods = products(e, f);
  for (const auto& p : prods) {
    if (p.rows() != t.front().rows() || p.cols() != t.front().cols()) {
      throw ShapeMismatch("span_equality: E_i^* F_j and T differ in shape");
    }
  }
  const std::size_t rank_p = span_rank(prods, rel_tol);
  const std::size_t rank_t = span_rank(t, rel_tol);
  std::vector<ComplexMatrix> joint(prods.begin(), prods.end());
  joint.insert(joint.end(), t.begin(), t.end());
  const std::size_t rank_joint = span_rank(joint, rel_tol);
  return rank_p == rank_t && rank_joint == rank_t;
}

std::vector<ComplexMatrix> t_alpha_set(const PhaseAngle& alpha) {
  const complex z = alpha.z();
  ComplexMatrix first(3, 3);
  first(0, 0) = 1.0;
  first(1, 1) = z;
  ComplexMatrix second(3, 3);
  second(1, 1) = 1.0;
  second(2, 2) = z;
  return {first, second};
}

std::vector<ComplexMatrix> random_span_set(std::uint64_t seed, int max_n, int max_count) {
  if (max_n < 1 || max_count < 1) throw InvalidArgument("random_span_set: bounds must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_n(1, max_n);
  std::uniform_int_distribution<int> pick_count(1, max_count);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto n = static_cast<std::size_t>(pick_n(rng));
  const int count = pick_count(rng);
  std::vector<ComplexMatrix> out;
  for (int i = 0; i < count; ++i) {
    ComplexMatrix m(n, n);
    for (auto& v : m.data()) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      v = complex(re, im);
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace nnsdist

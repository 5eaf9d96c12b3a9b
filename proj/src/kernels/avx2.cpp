// Compiled with -mavx2 -mfma. Only reached through the dispatcher after a
// CPUID check.

#include <immintrin.h>

#include "nnsdist/kernels.hpp"

namespace nnsdist::kernels::avx2 {

namespace {

inline double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  const __m128d swapped = _mm_unpackhi_pd(pair, pair);
  return _mm_cvtsd_f64(_mm_add_sd(pair, swapped));
}

// Product of two packed complex pairs [r0 i0 r1 i1].
inline __m256d complex_mul(__m256d a_re, __m256d a_im, __m256d x) {
  const __m256d x_swapped = _mm256_permute_pd(x, 0b0101);
  return _mm256_fmaddsub_pd(a_re, x, _mm256_mul_pd(a_im, x_swapped));
}

}  // namespace

void axpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    __m256d y1 = _mm256_loadu_pd(y + i + 4);
    y0 = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), y0);
    y1 = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i + 4), y1);
    _mm256_storeu_pd(y + i, y0);
    _mm256_storeu_pd(y + i + 4, y1);
  }
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4),
                           _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  }
  double acc = horizontal_sum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void caxpy(complex a, const complex* x, complex* y, std::size_t n) {
  const __m256d a_re = _mm256_set1_pd(a.real());
  const __m256d a_im = _mm256_set1_pd(a.imag());
  const auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, complex_mul(a_re, a_im, xv)));
  }
  if (i < n) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = complex(y[i].real() + (a.real() * xr - a.imag() * xi),
                   y[i].imag() + (a.real() * xi + a.imag() * xr));
  }
}

complex cdot(const complex* x, const complex* y, std::size_t n) {
  const auto* xd = reinterpret_cast<const double*>(x);
  const auto* yd = reinterpret_cast<const double*>(y);
  // acc_rr holds [xr*yr, xi*yi, ...], acc_ri holds [xr*yi, xi*yr, ...].
  __m256d acc_rr = _mm256_setzero_pd();
  __m256d acc_ri = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc_rr = _mm256_fmadd_pd(xv, yv, acc_rr);
    acc_ri = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), acc_ri);
  }
  alignas(32) double rr[4];
  alignas(32) double ri[4];
  _mm256_store_pd(rr, acc_rr);
  _mm256_store_pd(ri, acc_ri);
  double re = (rr[0] - rr[1]) + (rr[2] - rr[3]);
  double im = (ri[0] + ri[1]) + (ri[2] + ri[3]);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

}  // namespace nnsdist::kernels::avx2

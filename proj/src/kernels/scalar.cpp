#include "nnsdist/kernels.hpp"

namespace nnsdist::kernels::scalar {

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

// Written out on re/im parts so the compiler does not route through the
// NaN-checking __muldc3 path of std::complex multiplication.
void caxpy(complex a, const complex* x, complex* y, std::size_t n) {
  const double ar = a.real();
  const double ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = complex(y[i].real() + (ar * xr - ai * xi),
                   y[i].imag() + (ar * xi + ai * xr));
  }
}

complex cdot(const complex* x, const complex* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    const double yr = y[i].real();
    const double yi = y[i].imag();
    re += xr * yr - xi * yi;
    im += xr * yi + xi * yr;
  }
  return {re, im};
}

}  // namespace nnsdist::kernels::scalar

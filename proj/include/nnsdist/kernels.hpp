#pragma once

// Data-parallel inner loops used by the dense builders and the simplex.
//
// Every kernel has a portable scalar reference implementation and, when the
// build enables it, an AVX2+FMA variant. The variant is chosen once at startup
// from CPUID and can be overridden (tests pin each backend in turn and compare
// results against the scalar reference).

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace nnsdist::kernels {

using complex = std::complex<double>;

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend backend);

// True when the variant was compiled in and the running CPU supports it.
bool backend_available(Backend backend);

Backend active_backend();

// Throws InvalidArgument if the backend is not available.
void set_backend(Backend backend);

// Best available backend for this CPU.
Backend detect_backend();

std::vector<Backend> available_backends();

// y += a * x. Spans must have equal length.
void axpy(double a, std::span<const double> x, std::span<double> y);

// sum_i x_i * y_i
double dot(std::span<const double> x, std::span<const double> y);

// y += a * x (complex)
void caxpy(complex a, std::span<const complex> x, std::span<complex> y);

// sum_i x_i * y_i, no conjugation
complex cdot(std::span<const complex> x, std::span<const complex> y);

// Direct entry points for equivalence testing. The avx2 namespace functions
// must only be called when backend_available(Backend::Avx2).
namespace scalar {
void axpy(double a, const double* x, double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
void caxpy(complex a, const complex* x, complex* y, std::size_t n);
complex cdot(const complex* x, const complex* y, std::size_t n);
}  // namespace scalar

namespace avx2 {
void axpy(double a, const double* x, double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
void caxpy(complex a, const complex* x, complex* y, std::size_t n);
complex cdot(const complex* x, const complex* y, std::size_t n);
}  // namespace avx2

}  // namespace nnsdist::kernels

#include <atomic>

#include "nnsdist/errors.hpp"
#include "nnsdist/kernels.hpp"

namespace nnsdist::kernels {

namespace {

struct Table {
  void (*axpy)(double, const double*, double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  void (*caxpy)(complex, const complex*, complex*, std::size_t);
  complex (*cdot)(const complex*, const complex*, std::size_t);
};

constexpr Table kScalarTable{scalar::axpy, scalar::dot, scalar::caxpy,
                             scalar::cdot};

#if defined(NNSDIST_HAVE_AVX2)
constexpr Table kAvx2Table{avx2::axpy, avx2::dot, avx2::caxpy, avx2::cdot};
#endif

bool cpu_has_avx2() {
#if defined(NNSDIST_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Table* table_for(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return &kScalarTable;
    case Backend::Avx2:
#if defined(NNSDIST_HAVE_AVX2)
      return &kAvx2Table;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

struct State {
  std::atomic<const Table*> table;
  std::atomic<Backend> backend;

  State() {
    const Backend best = detect_backend();
    table.store(table_for(best));
    backend.store(best);
  }
};

State& state() {
  static State s;
  return s;
}

const Table& current() { return *state().table.load(std::memory_order_relaxed); }

}  // namespace

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend backend) {
  if (backend == Backend::Scalar) return true;
  static const bool avx2 = cpu_has_avx2();
  return avx2;
}

Backend detect_backend() {
  return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::Scalar};
  if (backend_available(Backend::Avx2)) out.push_back(Backend::Avx2);
  return out;
}

Backend active_backend() { return state().backend.load(); }

void set_backend(Backend backend) {
  if (!backend_available(backend)) {
    throw InvalidArgument("kernel backend '" + std::string(backend_name(backend)) +
                          "' is not available on this build/CPU");
  }
  state().table.store(table_for(backend));
  state().backend.store(backend);
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  if (x.size() != y.size()) throw ShapeMismatch("kernel operands differ in length");
  current().axpy(a, x.data(), y.data(), x.size());
}

double dot(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ShapeMismatch("kernel operands differ in length");
  return current().dot(x.data(), y.data(), x.size());
}

void caxpy(complex a, std::span<const complex> x, std::span<complex> y) {
  if (x.size() != y.size()) throw ShapeMismatch("kernel operands differ in length");
  current().caxpy(a, x.data(), y.data(), x.size());
}

complex cdot(std::span<const complex> x, std::span<const complex> y) {
  if (x.size() != y.size()) throw ShapeMismatch("kernel operands differ in length");
  return current().cdot(x.data(), y.data(), x.size());
}

}  // namespace nnsdist::kernels

#include "seamflow/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace seamflow::kern {

namespace detail {

bool isa_supported(Isa isa) {
#if defined(__x86_64__) || defined(__i386__)
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    case Isa::Avx512:
      return __builtin_cpu_supports("avx512f");
  }
  return false;
#else
  return isa == Isa::Scalar;
#endif
}

const KernelTable& table(Isa isa) {
  if (!isa_supported(isa)) throw std::runtime_error("kernel ISA not supported on this CPU");
  switch (isa) {
    case Isa::Avx512:
      return avx512_table();
    case Isa::Avx2:
      return avx2_table();
    default:
      return scalar_table();
  }
}

namespace {

Isa pick_isa() {
  if (const char* env = std::getenv("SEAMFLOW_KERNEL")) {
    std::string s(env);
    if (s == "scalar") return Isa::Scalar;
    if (s == "avx2" && isa_supported(Isa::Avx2)) return Isa::Avx2;
    if (s == "avx512" && isa_supported(Isa::Avx512)) return Isa::Avx512;
  }
  if (isa_supported(Isa::Avx512)) return Isa::Avx512;
  if (isa_supported(Isa::Avx2)) return Isa::Avx2;
  return Isa::Scalar;
}

const KernelTable& active_table() {
  static const KernelTable& t = table(pick_isa());
  return t;
}

}  // namespace
}  // namespace detail

Isa active_isa() {
  static Isa isa = detail::pick_isa();
  return isa;
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Avx512:
      return "avx512";
    case Isa::Avx2:
      return "avx2";
    default:
      return "scalar";
  }
}

void dgemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha,
           const double* a, int lda, const double* b, int ldb, double beta,
           double* c, int ldc) {
  detail::active_table().gemm(trans_a, trans_b, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
}

void daxpy(int n, double a, const double* x, double* y) {
  detail::active_table().axpy(n, a, x, y);
}
void dadd(int n, const double* x, const double* y, double* z) {
  detail::active_table().add(n, x, y, z);
}
void dmul(int n, const double* x, const double* y, double* z) {
  detail::active_table().mul(n, x, y, z);
}
double ddot(int n, const double* x, const double* y) {
  return detail::active_table().dot(n, x, y);
}
double dsum(int n, const double* x) { return detail::active_table().sum(n, x); }

}  // namespace seamflow::kern

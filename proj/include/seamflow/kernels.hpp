#pragma once
// Dense f64 compute kernels used by the autodiff substrate and batched field
// evaluation. Each kernel exists as a scalar reference plus AVX2/AVX-512
// variants; the active variant is picked once at startup from CPU features
// (override with SEAMFLOW_KERNEL=scalar|avx2|avx512).
//
// All matrices are row-major. The scalar reference accumulates with fused
// multiply-adds in the same k-order as the SIMD variants, so the NN/TN gemm
// paths are bit-identical across variants; NT reduces across lanes and is
// only equal up to roundoff.

#include <cstddef>

namespace seamflow::kern {

enum class Isa { Scalar, Avx2, Avx512 };

Isa active_isa();
const char* isa_name(Isa isa);

// C = alpha * op(A) * op(B) + beta * C, op(X) = X or X^T.
// After op, A is MxK and B is KxN. lda/ldb are the leading dimensions of the
// stored (untransposed) matrices.
void dgemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha,
           const double* a, int lda, const double* b, int ldb, double beta,
           double* c, int ldc);

void daxpy(int n, double a, const double* x, double* y);   // y += a*x
void dadd(int n, const double* x, const double* y, double* z);
void dmul(int n, const double* x, const double* y, double* z);
double ddot(int n, const double* x, const double* y);
double dsum(int n, const double* x);

namespace detail {

struct KernelTable {
  void (*gemm)(bool, bool, int, int, int, double, const double*, int,
               const double*, int, double, double*, int);
  void (*axpy)(int, double, const double*, double*);
  void (*add)(int, const double*, const double*, double*);
  void (*mul)(int, const double*, const double*, double*);
  double (*dot)(int, const double*, const double*);
  double (*sum)(int, const double*);
};

const KernelTable& table(Isa isa);  // throws if isa unsupported on this CPU
bool isa_supported(Isa isa);

const KernelTable& scalar_table();
const KernelTable& avx2_table();
const KernelTable& avx512_table();

}  // namespace detail

}  // namespace seamflow::kern

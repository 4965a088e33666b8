// Scalar reference kernels. These define the semantics the SIMD variants are
// tested against: gemm accumulates each output element with a k-sequential
// fma chain, so NN/TN results match the vector variants bit for bit.

#include "seamflow/kernels.hpp"

#include <cmath>

namespace seamflow::kern::detail {

namespace {

inline void store_combine(double* c, double acc, double alpha, double beta) {
  *c = (beta == 0.0) ? alpha * acc : std::fma(beta, *c, alpha * acc);
}

void gemm_nn(int m, int n, int k, double alpha, const double* a, int lda,
             const double* b, int ldb, double beta, double* c, int ldc) {
  for (int i = 0; i < m; ++i) {
    const double* ar = a + static_cast<size_t>(i) * lda;
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int p = 0; p < k; ++p) acc = std::fma(ar[p], b[static_cast<size_t>(p) * ldb + j], acc);
      store_combine(c + static_cast<size_t>(i) * ldc + j, acc, alpha, beta);
    }
  }
}

void gemm_tn(int m, int n, int k, double alpha, const double* a, int lda,
             const double* b, int ldb, double beta, double* c, int ldc) {
  // A stored KxM, logical A^T is MxK: C[i,j] = sum_p A[p,i] * B[p,j]
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int p = 0; p < k; ++p)
        acc = std::fma(a[static_cast<size_t>(p) * lda + i], b[static_cast<size_t>(p) * ldb + j], acc);
      store_combine(c + static_cast<size_t>(i) * ldc + j, acc, alpha, beta);
    }
  }
}

void gemm_nt(int m, int n, int k, double alpha, const double* a, int lda,
             const double* b, int ldb, double beta, double* c, int ldc) {
  // B stored NxK, logical B^T is KxN: C[i,j] = dot(A row i, B row j)
  for (int i = 0; i < m; ++i) {
    const double* ar = a + static_cast<size_t>(i) * lda;
    for (int j = 0; j < n; ++j) {
      const double* br = b + static_cast<size_t>(j) * ldb;
      double acc = 0.0;
      for (int p = 0; p < k; ++p) acc = std::fma(ar[p], br[p], acc);
      store_combine(c + static_cast<size_t>(i) * ldc + j, acc, alpha, beta);
    }
  }
}

void gemm_tt(int m, int n, int k, double alpha, const double* a, int lda,
             const double* b, int ldb, double beta, double* c, int ldc) {
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int p = 0; p < k; ++p)
        acc = std::fma(a[static_cast<size_t>(p) * lda + i], b[static_cast<size_t>(j) * ldb + p], acc);
      store_combine(c + static_cast<size_t>(i) * ldc + j, acc, alpha, beta);
    }
  }
}

void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha,
          const double* a, int lda, const double* b, int ldb, double beta,
          double* c, int ldc) {
  if (!trans_a && !trans_b) return gemm_nn(m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
  if (trans_a && !trans_b) return gemm_tn(m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
  if (!trans_a && trans_b) return gemm_nt(m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
  return gemm_tt(m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
}

void axpy(int n, double a, const double* x, double* y) {
  for (int i = 0; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void add(int n, const double* x, const double* y, double* z) {
  for (int i = 0; i < n; ++i) z[i] = x[i] + y[i];
}

void mul(int n, const double* x, const double* y, double* z) {
  for (int i = 0; i < n; ++i) z[i] = x[i] * y[i];
}

double dot(int n, const double* x, const double* y) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc = std::fma(x[i], y[i], acc);
  return acc;
}

double sum(int n, const double* x) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += x[i];
  return acc;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t{gemm, axpy, add, mul, dot, sum};
  return t;
}

}  // namespace seamflow::kern::detail

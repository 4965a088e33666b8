// AVX-512F kernels. Same tiling scheme as the AVX2 variant with 16-wide
// column strips. NN/TN keep the k-sequential fma chain per element and are
// bit-identical to the scalar reference.

#include "seamflow/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace seamflow::kern::detail {

namespace {

inline void store_combine1(double* c, double acc, double alpha, double beta) {
  *c = (beta == 0.0) ? alpha * acc : std::fma(beta, *c, alpha * acc);
}

inline void store_combine8(double* c, __m512d acc, double alpha, double beta) {
  __m512d t = _mm512_mul_pd(_mm512_set1_pd(alpha), acc);
  if (beta != 0.0)
    t = _mm512_fmadd_pd(_mm512_set1_pd(beta), _mm512_loadu_pd(c), t);
  _mm512_storeu_pd(c, t);
}

template <bool TransA>
void tail_cols(int i0, int rows, int j0, int n, int k, double alpha,
               const double* a, int lda, const double* b, int ldb, double beta,
               double* c, int ldc) {
  for (int i = i0; i < i0 + rows; ++i) {
    for (int j = j0; j < n; ++j) {
      double acc = 0.0;
      for (int p = 0; p < k; ++p) {
        double av = TransA ? a[static_cast<size_t>(p) * lda + i]
                           : a[static_cast<size_t>(i) * lda + p];
        acc = std::fma(av, b[static_cast<size_t>(p) * ldb + j], acc);
      }
      store_combine1(c + static_cast<size_t>(i) * ldc + j, acc, alpha, beta);
    }
  }
}

template <bool TransA>
void gemm_bstream(int m, int n, int k, double alpha, const double* a, int lda,
                  const double* b, int ldb, double beta, double* c, int ldc) {
  const int jn = n & ~15;
  int i = 0;
  for (; i + 4 <= m; i += 4) {
    for (int j = 0; j < jn; j += 16) {
      __m512d acc00 = _mm512_setzero_pd(), acc01 = _mm512_setzero_pd();
      __m512d acc10 = _mm512_setzero_pd(), acc11 = _mm512_setzero_pd();
      __m512d acc20 = _mm512_setzero_pd(), acc21 = _mm512_setzero_pd();
      __m512d acc30 = _mm512_setzero_pd(), acc31 = _mm512_setzero_pd();
      for (int p = 0; p < k; ++p) {
        const double* br = b + static_cast<size_t>(p) * ldb + j;
        __m512d b0 = _mm512_loadu_pd(br);
        __m512d b1 = _mm512_loadu_pd(br + 8);
        __m512d a0, a1, a2, a3;
        if (TransA) {
          const double* ac = a + static_cast<size_t>(p) * lda + i;
          a0 = _mm512_set1_pd(ac[0]);
          a1 = _mm512_set1_pd(ac[1]);
          a2 = _mm512_set1_pd(ac[2]);
          a3 = _mm512_set1_pd(ac[3]);
        } else {
          a0 = _mm512_set1_pd(a[static_cast<size_t>(i + 0) * lda + p]);
          a1 = _mm512_set1_pd(a[static_cast<size_t>(i + 1) * lda + p]);
          a2 = _mm512_set1_pd(a[static_cast<size_t>(i + 2) * lda + p]);
          a3 = _mm512_set1_pd(a[static_cast<size_t>(i + 3) * lda + p]);
        }
        acc00 = _mm512_fmadd_pd(a0, b0, acc00);
        acc01 = _mm512_fmadd_pd(a0, b1, acc01);
        acc10 = _mm512_fmadd_pd(a1, b0, acc10);
        acc11 = _mm512_fmadd_pd(a1, b1, acc11);
        acc20 = _mm512_fmadd_pd(a2, b0, acc20);
        acc21 = _mm512_fmadd_pd(a2, b1, acc21);
        acc30 = _mm512_fmadd_pd(a3, b0, acc30);
        acc31 = _mm512_fmadd_pd(a3, b1, acc31);
      }
      double* cr = c + static_cast<size_t>(i) * ldc + j;
      store_combine8(cr, acc00, alpha, beta);
      store_combine8(cr + 8, acc01, alpha, beta);
      store_combine8(cr + ldc, acc10, alpha, beta);
      store_combine8(cr + ldc + 8, acc11, alpha, beta);
      store_combine8(cr + 2 * ldc, acc20, alpha, beta);
      store_combine8(cr + 2 * ldc + 8, acc21, alpha, beta);
      store_combine8(cr + 3 * ldc, acc30, alpha, beta);
      store_combine8(cr + 3 * ldc + 8, acc31, alpha, beta);
    }
    if (jn < n) tail_cols<TransA>(i, 4, jn, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
  }
  for (; i < m; ++i) {
    for (int j = 0; j < jn; j += 16) {
      __m512d acc0 = _mm512_setzero_pd(), acc1 = _mm512_setzero_pd();
      for (int p = 0; p < k; ++p) {
        const double* br = b + static_cast<size_t>(p) * ldb + j;
        __m512d av = _mm512_set1_pd(TransA ? a[static_cast<size_t>(p) * lda + i]
                                           : a[static_cast<size_t>(i) * lda + p]);
        acc0 = _mm512_fmadd_pd(av, _mm512_loadu_pd(br), acc0);
        acc1 = _mm512_fmadd_pd(av, _mm512_loadu_pd(br + 8), acc1);
      }
      double* cr = c + static_cast<size_t>(i) * ldc + j;
      store_combine8(cr, acc0, alpha, beta);
      store_combine8(cr + 8, acc1, alpha, beta);
    }
    if (jn < n) tail_cols<TransA>(i, 1, jn, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
  }
}

void gemm_nt(int m, int n, int k, double alpha, const double* a, int lda,
             const double* b, int ldb, double beta, double* c, int ldc) {
  const int kn = k & ~15;
  for (int i = 0; i < m; ++i) {
    const double* ar = a + static_cast<size_t>(i) * lda;
    for (int j = 0; j < n; ++j) {
      const double* br = b + static_cast<size_t>(j) * ldb;
      __m512d acc0 = _mm512_setzero_pd(), acc1 = _mm512_setzero_pd();
      for (int p = 0; p < kn; p += 16) {
        acc0 = _mm512_fmadd_pd(_mm512_loadu_pd(ar + p), _mm512_loadu_pd(br + p), acc0);
        acc1 = _mm512_fmadd_pd(_mm512_loadu_pd(ar + p + 8), _mm512_loadu_pd(br + p + 8), acc1);
      }
      double acc = _mm512_reduce_add_pd(_mm512_add_pd(acc0, acc1));
      for (int p = kn; p < k; ++p) acc = std::fma(ar[p], br[p], acc);
      store_combine1(c + static_cast<size_t>(i) * ldc + j, acc, alpha, beta);
    }
  }
}

void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha,
          const double* a, int lda, const double* b, int ldb, double beta,
          double* c, int ldc) {
  if (!trans_a && !trans_b)
    return gemm_bstream<false>(m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
  if (trans_a && !trans_b)
    return gemm_bstream<true>(m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
  if (!trans_a && trans_b) return gemm_nt(m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
  scalar_table().gemm(true, true, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
}

void axpy(int n, double a, const double* x, double* y) {
  __m512d av = _mm512_set1_pd(a);
  int i = 0;
  for (; i + 8 <= n; i += 8)
    _mm512_storeu_pd(y + i, _mm512_fmadd_pd(av, _mm512_loadu_pd(x + i), _mm512_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void add(int n, const double* x, const double* y, double* z) {
  int i = 0;
  for (; i + 8 <= n; i += 8)
    _mm512_storeu_pd(z + i, _mm512_add_pd(_mm512_loadu_pd(x + i), _mm512_loadu_pd(y + i)));
  for (; i < n; ++i) z[i] = x[i] + y[i];
}

void mul(int n, const double* x, const double* y, double* z) {
  int i = 0;
  for (; i + 8 <= n; i += 8)
    _mm512_storeu_pd(z + i, _mm512_mul_pd(_mm512_loadu_pd(x + i), _mm512_loadu_pd(y + i)));
  for (; i < n; ++i) z[i] = x[i] * y[i];
}

double dot(int n, const double* x, const double* y) {
  __m512d acc = _mm512_setzero_pd();
  int i = 0;
  for (; i + 8 <= n; i += 8)
    acc = _mm512_fmadd_pd(_mm512_loadu_pd(x + i), _mm512_loadu_pd(y + i), acc);
  double s = _mm512_reduce_add_pd(acc);
  for (; i < n; ++i) s = std::fma(x[i], y[i], s);
  return s;
}

double sum(int n, const double* x) {
  __m512d acc = _mm512_setzero_pd();
  int i = 0;
  for (; i + 8 <= n; i += 8) acc = _mm512_add_pd(acc, _mm512_loadu_pd(x + i));
  double s = _mm512_reduce_add_pd(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

}  // namespace

const KernelTable& avx512_table() {
  static const KernelTable t{gemm, axpy, add, mul, dot, sum};
  return t;
}

}  // namespace seamflow::kern::detail

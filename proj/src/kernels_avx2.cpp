// AVX2+FMA kernels. GEMM uses 4x8 register tiles with broadcast-A /
// streamed-B accumulation; every output element sees the same k-sequential
// fma chain as the scalar reference (NN/TN bit-identical). NT reduces across
// lanes and matches the reference only to roundoff.

#include "seamflow/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace seamflow::kern::detail {

namespace {

inline void store_combine1(double* c, double acc, double alpha, double beta) {
  *c = (beta == 0.0) ? alpha * acc : std::fma(beta, *c, alpha * acc);
}

inline void store_combine4(double* c, __m256d acc, double alpha, double beta) {
  __m256d t = _mm256_mul_pd(_mm256_set1_pd(alpha), acc);
  if (beta != 0.0)
    t = _mm256_fmadd_pd(_mm256_set1_pd(beta), _mm256_loadu_pd(c), t);
  _mm256_storeu_pd(c, t);
}

// Accumulate the j-tail columns [j0, n) of rows [i0, i0+rows) with scalar fma.
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
  const int jn = n & ~7;  // columns handled in 8-wide strips
  int i = 0;
  for (; i + 4 <= m; i += 4) {
    for (int j = 0; j < jn; j += 8) {
      __m256d acc00 = _mm256_setzero_pd(), acc01 = _mm256_setzero_pd();
      __m256d acc10 = _mm256_setzero_pd(), acc11 = _mm256_setzero_pd();
      __m256d acc20 = _mm256_setzero_pd(), acc21 = _mm256_setzero_pd();
      __m256d acc30 = _mm256_setzero_pd(), acc31 = _mm256_setzero_pd();
      for (int p = 0; p < k; ++p) {
        const double* br = b + static_cast<size_t>(p) * ldb + j;
        __m256d b0 = _mm256_loadu_pd(br);
        __m256d b1 = _mm256_loadu_pd(br + 4);
        __m256d a0, a1, a2, a3;
        if (TransA) {
          const double* ac = a + static_cast<size_t>(p) * lda + i;
          a0 = _mm256_set1_pd(ac[0]);
          a1 = _mm256_set1_pd(ac[1]);
          a2 = _mm256_set1_pd(ac[2]);
          a3 = _mm256_set1_pd(ac[3]);
        } else {
          a0 = _mm256_set1_pd(a[static_cast<size_t>(i + 0) * lda + p]);
          a1 = _mm256_set1_pd(a[static_cast<size_t>(i + 1) * lda + p]);
          a2 = _mm256_set1_pd(a[static_cast<size_t>(i + 2) * lda + p]);
          a3 = _mm256_set1_pd(a[static_cast<size_t>(i + 3) * lda + p]);
        }
        acc00 = _mm256_fmadd_pd(a0, b0, acc00);
        acc01 = _mm256_fmadd_pd(a0, b1, acc01);
        acc10 = _mm256_fmadd_pd(a1, b0, acc10);
        acc11 = _mm256_fmadd_pd(a1, b1, acc11);
        acc20 = _mm256_fmadd_pd(a2, b0, acc20);
        acc21 = _mm256_fmadd_pd(a2, b1, acc21);
        acc30 = _mm256_fmadd_pd(a3, b0, acc30);
        acc31 = _mm256_fmadd_pd(a3, b1, acc31);
      }
      double* cr = c + static_cast<size_t>(i) * ldc + j;
      store_combine4(cr, acc00, alpha, beta);
      store_combine4(cr + 4, acc01, alpha, beta);
      store_combine4(cr + ldc, acc10, alpha, beta);
      store_combine4(cr + ldc + 4, acc11, alpha, beta);
      store_combine4(cr + 2 * ldc, acc20, alpha, beta);
      store_combine4(cr + 2 * ldc + 4, acc21, alpha, beta);
      store_combine4(cr + 3 * ldc, acc30, alpha, beta);
      store_combine4(cr + 3 * ldc + 4, acc31, alpha, beta);
    }
    if (jn < n) tail_cols<TransA>(i, 4, jn, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
  }
  for (; i < m; ++i) {
    for (int j = 0; j < jn; j += 8) {
      __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
      for (int p = 0; p < k; ++p) {
        const double* br = b + static_cast<size_t>(p) * ldb + j;
        __m256d av = _mm256_set1_pd(TransA ? a[static_cast<size_t>(p) * lda + i]
                                           : a[static_cast<size_t>(i) * lda + p]);
        acc0 = _mm256_fmadd_pd(av, _mm256_loadu_pd(br), acc0);
        acc1 = _mm256_fmadd_pd(av, _mm256_loadu_pd(br + 4), acc1);
      }
      double* cr = c + static_cast<size_t>(i) * ldc + j;
      store_combine4(cr, acc0, alpha, beta);
      store_combine4(cr + 4, acc1, alpha, beta);
    }
    if (jn < n) tail_cols<TransA>(i, 1, jn, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
  }
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void gemm_nt(int m, int n, int k, double alpha, const double* a, int lda,
             const double* b, int ldb, double beta, double* c, int ldc) {
  const int kn = k & ~7;
  for (int i = 0; i < m; ++i) {
    const double* ar = a + static_cast<size_t>(i) * lda;
    for (int j = 0; j < n; ++j) {
      const double* br = b + static_cast<size_t>(j) * ldb;
      __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
      for (int p = 0; p < kn; p += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(ar + p), _mm256_loadu_pd(br + p), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(ar + p + 4), _mm256_loadu_pd(br + p + 4), acc1);
      }
      double acc = hsum(_mm256_add_pd(acc0, acc1));
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
  // TT is not on any hot path; reuse the scalar reference.
  scalar_table().gemm(true, true, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
}

void axpy(int n, double a, const double* x, double* y) {
  __m256d av = _mm256_set1_pd(a);
  int i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void add(int n, const double* x, const double* y, double* z) {
  int i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(z + i, _mm256_add_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) z[i] = x[i] + y[i];
}

void mul(int n, const double* x, const double* y, double* z) {
  int i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(z + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) z[i] = x[i] * y[i];
}

double dot(int n, const double* x, const double* y) {
  __m256d acc = _mm256_setzero_pd();
  int i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  double s = hsum(acc);
  for (; i < n; ++i) s = std::fma(x[i], y[i], s);
  return s;
}

double sum(int n, const double* x) {
  __m256d acc = _mm256_setzero_pd();
  int i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable t{gemm, axpy, add, mul, dot, sum};
  return t;
}

}  // namespace seamflow::kern::detail

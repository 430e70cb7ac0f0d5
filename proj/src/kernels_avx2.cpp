#include "srlq/kernels.hpp"

// AVX2 + FMA kernels. This translation unit is only compiled on x86-64 with
// -mavx2 -mfma; dispatch guards execution behind a cpuid check. Vector
// accumulation reorders sums, so results may differ from the scalar backend
// in the last ulps; equivalence tests use a relative tolerance.

#include <immintrin.h>

namespace srlq::kernels {
namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Shared row-update core: c_row += scale * b_row, fused over 4 lanes.
inline void fma_row(double scale, const double* b_row, double* c_row, int n) {
    const __m256d sv = _mm256_set1_pd(scale);
    int j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d bv = _mm256_loadu_pd(b_row + j);
        const __m256d cv = _mm256_loadu_pd(c_row + j);
        _mm256_storeu_pd(c_row + j, _mm256_fmadd_pd(sv, bv, cv));
    }
    for (; j < n; ++j) c_row[j] += scale * b_row[j];
}

inline void zero_row(double* c, int n) {
    int j = 0;
    const __m256d z = _mm256_setzero_pd();
    for (; j + 4 <= n; j += 4) _mm256_storeu_pd(c + j, z);
    for (; j < n; ++j) c[j] = 0.0;
}

void matmul(const double* a, const double* b, double* c, int m, int k, int n) {
    for (int i = 0; i < m; ++i) {
        double* ci = c + static_cast<long>(i) * n;
        zero_row(ci, n);
        for (int l = 0; l < k; ++l)
            fma_row(a[static_cast<long>(i) * k + l], b + static_cast<long>(l) * n, ci, n);
    }
}

void matmul_tn(const double* a, const double* b, double* c, int m, int k, int n) {
    for (int i = 0; i < m; ++i) {
        double* ci = c + static_cast<long>(i) * n;
        zero_row(ci, n);
        for (int l = 0; l < k; ++l)
            fma_row(a[static_cast<long>(l) * m + i], b + static_cast<long>(l) * n, ci, n);
    }
}

double dot(const double* x, const double* y, int n) {
    __m256d acc = _mm256_setzero_pd();
    int i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
    double tail = 0.0;
    for (; i < n; ++i) tail += x[i] * y[i];
    return hsum(acc) + tail;
}

void matmul_nt(const double* a, const double* b, double* c, int m, int k, int n) {
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            c[static_cast<long>(i) * n + j] =
                dot(a + static_cast<long>(i) * k, b + static_cast<long>(j) * k, k);
}

void matvec(const double* a, const double* x, double* y, int m, int n) {
    for (int i = 0; i < m; ++i) y[i] = dot(a + static_cast<long>(i) * n, x, n);
}

void axpy(double alpha, const double* x, double* y, int n) {
    fma_row(alpha, x, y, n);
}

double quad_form(const double* s, const double* x, int n) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += x[i] * dot(s + static_cast<long>(i) * n, x, n);
    return acc;
}

}  // namespace

const Backend& avx2_backend_impl() {
    static const Backend backend{"avx2", matmul, matmul_tn, matmul_nt,
                                 matvec, dot,    axpy,      quad_form};
    return backend;
}

}  // namespace srlq::kernels

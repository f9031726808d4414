#include "fqv/simd/kernels.hpp"

#include <immintrin.h>

namespace fqv::simd {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void square_minus_one_avx2(const double* x, double* y, std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        _mm256_storeu_pd(y + i, _mm256_fmsub_pd(v, v, one));
    }
    for (; i < n; ++i) y[i] = x[i] * x[i] - 1.0;
}

// vectorized over the window index i: four filtered values at a time
double sumsq_filtered_avx2(const double* z, std::size_t npts,
                           const double* a, std::size_t l) {
    if (npts < l + 2) return 0.0;
    const std::size_t last = npts - 1;   // exclusive upper index for i
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = l;
    for (; i + 4 <= last; i += 4) {
        __m256d v = _mm256_setzero_pd();
        for (std::size_t q = 0; q <= l; ++q) {
            const __m256d zq = _mm256_loadu_pd(z + i - q);
            v = _mm256_fmadd_pd(_mm256_set1_pd(a[q]), zq, v);
        }
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double tail = 0.0;
    for (; i < last; ++i) {
        double v = 0.0;
        for (std::size_t q = 0; q <= l; ++q) v += a[q] * z[i - q];
        tail += v * v;
    }
    return hsum(acc) + tail;
}

void filtered_series_avx2(const double* z, std::size_t npts,
                          const double* a, std::size_t l, double* out) {
    if (npts < l + 2) return;
    const std::size_t last = npts - 1;
    std::size_t i = l;
    for (; i + 4 <= last; i += 4) {
        __m256d v = _mm256_setzero_pd();
        for (std::size_t q = 0; q <= l; ++q) {
            const __m256d zq = _mm256_loadu_pd(z + i - q);
            v = _mm256_fmadd_pd(_mm256_set1_pd(a[q]), zq, v);
        }
        _mm256_storeu_pd(out + (i - l), v);
    }
    for (; i < last; ++i) {
        double v = 0.0;
        for (std::size_t q = 0; q <= l; ++q) v += a[q] * z[i - q];
        out[i - l] = v;
    }
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    double tail = 0.0;
    for (; i < n; ++i) tail += a[i] * b[i];
    return hsum(acc) + tail;
}

void matmul_nt_avx2(const double* a, const double* b, double* c,
                    std::size_t m, std::size_t n, std::size_t k) {
    for (std::size_t i = 0; i < m; ++i) {
        const double* ai = a + i * k;
        for (std::size_t j = 0; j < n; ++j) {
            const double* bj = b + j * k;
            __m256d acc = _mm256_setzero_pd();
            std::size_t t = 0;
            for (; t + 4 <= k; t += 4)
                acc = _mm256_fmadd_pd(_mm256_loadu_pd(ai + t),
                                      _mm256_loadu_pd(bj + t), acc);
            double s = hsum(acc);
            for (; t < k; ++t) s += ai[t] * bj[t];
            c[i * n + j] = s;
        }
    }
}

} // namespace

const Kernels& avx2_kernels() {
    static const Kernels k{square_minus_one_avx2, sumsq_filtered_avx2,
                           filtered_series_avx2, dot_avx2, matmul_nt_avx2};
    return k;
}

} // namespace fqv::simd

#include "fqv/simd/kernels.hpp"

#include <arm_neon.h>

namespace fqv::simd {

namespace {

void square_minus_one_neon(const double* x, double* y, std::size_t n) {
    const float64x2_t one = vdupq_n_f64(1.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t v = vld1q_f64(x + i);
        vst1q_f64(y + i, vsubq_f64(vmulq_f64(v, v), one));
    }
    for (; i < n; ++i) y[i] = x[i] * x[i] - 1.0;
}

double sumsq_filtered_neon(const double* z, std::size_t npts,
                           const double* a, std::size_t l) {
    if (npts < l + 2) return 0.0;
    const std::size_t last = npts - 1;
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = l;
    for (; i + 2 <= last; i += 2) {
        float64x2_t v = vdupq_n_f64(0.0);
        for (std::size_t q = 0; q <= l; ++q)
            v = vfmaq_n_f64(v, vld1q_f64(z + i - q), a[q]);
        acc = vfmaq_f64(acc, v, v);
    }
    double tail = 0.0;
    for (; i < last; ++i) {
        double v = 0.0;
        for (std::size_t q = 0; q <= l; ++q) v += a[q] * z[i - q];
        tail += v * v;
    }
    return vaddvq_f64(acc) + tail;
}

void filtered_series_neon(const double* z, std::size_t npts,
                          const double* a, std::size_t l, double* out) {
    if (npts < l + 2) return;
    const std::size_t last = npts - 1;
    std::size_t i = l;
    for (; i + 2 <= last; i += 2) {
        float64x2_t v = vdupq_n_f64(0.0);
        for (std::size_t q = 0; q <= l; ++q)
            v = vfmaq_n_f64(v, vld1q_f64(z + i - q), a[q]);
        vst1q_f64(out + (i - l), v);
    }
    for (; i < last; ++i) {
        double v = 0.0;
        for (std::size_t q = 0; q <= l; ++q) v += a[q] * z[i - q];
        out[i - l] = v;
    }
}

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
    double tail = 0.0;
    for (; i < n; ++i) tail += a[i] * b[i];
    return vaddvq_f64(acc) + tail;
}

void matmul_nt_neon(const double* a, const double* b, double* c,
                    std::size_t m, std::size_t n, std::size_t k) {
    for (std::size_t i = 0; i < m; ++i) {
        const double* ai = a + i * k;
        for (std::size_t j = 0; j < n; ++j) {
            const double* bj = b + j * k;
            float64x2_t acc = vdupq_n_f64(0.0);
            std::size_t t = 0;
            for (; t + 2 <= k; t += 2)
                acc = vfmaq_f64(acc, vld1q_f64(ai + t), vld1q_f64(bj + t));
            double s = vaddvq_f64(acc);
            for (; t < k; ++t) s += ai[t] * bj[t];
            c[i * n + j] = s;
        }
    }
}

} // namespace

const Kernels& neon_kernels() {
    static const Kernels k{square_minus_one_neon, sumsq_filtered_neon,
                           filtered_series_neon, dot_neon, matmul_nt_neon};
    return k;
}

} // namespace fqv::simd

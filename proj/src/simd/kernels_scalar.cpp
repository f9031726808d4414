#include "fqv/simd/kernels.hpp"

namespace fqv::simd {

namespace {

void square_minus_one_scalar(const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] * x[i] - 1.0;
}

double sumsq_filtered_scalar(const double* z, std::size_t npts,
                             const double* a, std::size_t l) {
    double acc = 0.0;
    for (std::size_t i = l; i + 1 < npts; ++i) {
        double v = 0.0;
        for (std::size_t q = 0; q <= l; ++q) v += a[q] * z[i - q];
        acc += v * v;
    }
    return acc;
}

void filtered_series_scalar(const double* z, std::size_t npts,
                            const double* a, std::size_t l, double* out) {
    for (std::size_t i = l; i + 1 < npts; ++i) {
        double v = 0.0;
        for (std::size_t q = 0; q <= l; ++q) v += a[q] * z[i - q];
        out[i - l] = v;
    }
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void matmul_nt_scalar(const double* a, const double* b, double* c,
                      std::size_t m, std::size_t n, std::size_t k) {
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            const double* ai = a + i * k;
            const double* bj = b + j * k;
            for (std::size_t t = 0; t < k; ++t) acc += ai[t] * bj[t];
            c[i * n + j] = acc;
        }
    }
}

} // namespace

const Kernels& scalar() {
    static const Kernels k{square_minus_one_scalar, sumsq_filtered_scalar,
                           filtered_series_scalar, dot_scalar, matmul_nt_scalar};
    return k;
}

} // namespace fqv::simd

#pragma once

#include <cstddef>
#include <string>

namespace fqv::simd {

// Data-parallel inner loops used by the variation statistics, the Hermite
// transform and the quadrature tensor contractions. Scalar reference
// implementations always exist; AVX2/NEON variants are selected once at
// startup and must agree with scalar up to reassociation error.
struct Kernels {
    // y[i] = x[i]^2 - 1
    void (*square_minus_one)(const double* x, double* y, std::size_t n);
    // sum_{i=l}^{npts-2} ( sum_{q=0}^{l} a[q] * z[i-q] )^2  over a path z[0..npts-1]
    double (*sumsq_filtered)(const double* z, std::size_t npts,
                             const double* a, std::size_t l);
    // out[i-l] = sum_q a[q] * z[i-q], i = l .. npts-2
    void (*filtered_series)(const double* z, std::size_t npts,
                            const double* a, std::size_t l, double* out);
    double (*dot)(const double* a, const double* b, std::size_t n);
    // C[m x n] = A[m x k] * B[n x k]^T, row-major
    void (*matmul_nt)(const double* a, const double* b, double* c,
                      std::size_t m, std::size_t n, std::size_t k);
};

const Kernels& active();          // runtime-dispatched variant
const Kernels& scalar();          // reference
std::string active_name();        // "scalar" | "avx2" | "neon"

} // namespace fqv::simd

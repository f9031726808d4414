#pragma once

#include "fqv/filters.hpp"

#include <vector>

namespace fqv {

// Validated self-similarity parameter H in (1/2, 1) with its derived
// constants: H' = (H+1)/2, the kernel normalizers d(H) and c_H, and
// alpha(H) = H(H+1)/2 = H'(2H'-1).
struct HurstParam {
    double h;
    double h_prime;
    double d;
    double alpha_h;
    double c_kernel;   // c_{H} of the fBm kernel, evaluated at h (not h')

    explicit HurstParam(double h_value);
};

double fbm_covariance(double t, double s, const HurstParam& h);

// standard fBm kernel K^H(t,s) for 0 < s < t <= 1, H in (1/2,1);
// evaluated by adaptive quadrature after substituting away the
// (u-s)^{H-3/2} endpoint singularity
double kernel_K(double t, double s, double h_for_kernel);
double kernel_dK(double t, double s, double h_for_kernel);

// c(x) = -sum_{q,r} a_q a_r |q-r|^{2x}; c(0) = 0 under 0^0 = 1.
// Positive on (0,1); vanishes at x = 1 for every filter of order >= 2.
double c_of_h(const Filter& f, double x);

// pi_H^a(j) = -(N^{-2H}/2) sum_{q,r} a_q a_r |j+q-r|^{2H}
double pi_alpha(const Filter& f, const HurstParam& h, long n, long j);

// rho_H^a(k) = sum_{q,r} a_q a_r |k+q-r|^{2H} / c(H); rho(0) = -1
double rho_alpha(const Filter& f, const HurstParam& h, long k);

// inner sum of the limit-variance constant:
// sum_{q,r} b_q b_r [ |1+q-r|^{2H'} + |1-q+r|^{2H'} - 2|q-r|^{2H'} ]
double c2_bracket_sum(const Filter& f, const HurstParam& h);

// asymptotic variance of N^{1-H} V_N:
// (32 / c(H)^2) (2H-1)/(H (H+1)^2) { bracket sum }^2
double c2(const Filter& f, const HurstParam& h);

struct CovarianceTable {
    Filter filter;
    double h;
    double pi0;                    // pi_H^a(0) at N = 1, i.e. c(H)/2
    std::vector<double> rho_abs;   // |rho(0..K)|
};

CovarianceTable covariance_table(const Filter& f, const HurstParam& h, int kmax);

} // namespace fqv

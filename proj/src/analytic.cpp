#include "fqv/analytic.hpp"

#include "fqv/quad.hpp"

#include <cmath>
#include <stdexcept>

namespace fqv {

namespace {

// |x|^{2h} with |0|^{2h} = 0 for h > 0 and the 0^0 = 1 convention at h = 0
double abspow2h(long x, double h) {
    if (x == 0) return (h == 0.0) ? 1.0 : 0.0;
    return std::pow(std::abs(static_cast<double>(x)), 2.0 * h);
}

double beta_fn(double a, double b) {
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

} // namespace

HurstParam::HurstParam(double h_value) : h(h_value) {
    if (!(h > 0.5 && h < 1.0))
        throw std::invalid_argument("HurstParam: H must lie in (1/2, 1)");
    h_prime = 0.5 * (h + 1.0);
    d = (1.0 / (h + 1.0)) * std::sqrt(2.0 * (2.0 * h - 1.0) / h);
    alpha_h = 0.5 * h * (h + 1.0);
    c_kernel = std::sqrt(h * (2.0 * h - 1.0) / beta_fn(2.0 - 2.0 * h, h - 0.5));
}

double fbm_covariance(double t, double s, const HurstParam& h) {
    if (t < 0.0 || t > 1.0 || s < 0.0 || s > 1.0)
        throw std::invalid_argument("fbm_covariance: times must lie in [0,1]");
    return 0.5 * (std::pow(t, 2.0 * h.h) + std::pow(s, 2.0 * h.h) -
                  std::pow(std::abs(t - s), 2.0 * h.h));
}

double kernel_dK(double t, double s, double hk) {
    if (!(hk > 0.5 && hk < 1.0))
        throw std::invalid_argument("kernel_dK: H must lie in (1/2, 1)");
    if (!(0.0 < s && s < t && t <= 1.0))
        throw std::domain_error("kernel_dK: need 0 < s < t <= 1");
    const double c = std::sqrt(hk * (2.0 * hk - 1.0) /
                               beta_fn(2.0 - 2.0 * hk, hk - 0.5));
    return c * std::pow(s / t, 0.5 - hk) * std::pow(t - s, hk - 1.5);
}

double kernel_K(double t, double s, double hk) {
    if (!(hk > 0.5 && hk < 1.0))
        throw std::invalid_argument("kernel_K: H must lie in (1/2, 1)");
    if (!(0.0 < s && s < t && t <= 1.0))
        throw std::domain_error("kernel_K: need 0 < s < t <= 1");
    const double c = std::sqrt(hk * (2.0 * hk - 1.0) /
                               beta_fn(2.0 - 2.0 * hk, hk - 0.5));
    // u = s + w^{1/(hk-1/2)} turns (u-s)^{hk-3/2} du into a bounded integrand
    const double beta = 1.0 / (hk - 0.5);
    const double wmax = std::pow(t - s, hk - 0.5);
    const double integral = integrate_gk(
        [&](double w) {
            const double u = s + std::pow(w, beta);
            return beta * std::pow(u, hk - 0.5);
        },
        0.0, wmax, 1e-10);
    return c * std::pow(s, 0.5 - hk) * integral;
}

double c_of_h(const Filter& f, double x) {
    if (x < 0.0) throw std::invalid_argument("c_of_h: x must be >= 0");
    const int l = f.length;
    double s = 0.0;
    for (int q = 0; q <= l; ++q)
        for (int r = 0; r <= l; ++r)
            s += f.coeffs[q] * f.coeffs[r] * abspow2h(q - r, x);
    return -s;
}

double pi_alpha(const Filter& f, const HurstParam& h, long n, long j) {
    if (n < f.length + 1)
        throw std::invalid_argument("pi_alpha: N must be at least l+1");
    const int l = f.length;
    double s = 0.0;
    for (int q = 0; q <= l; ++q)
        for (int r = 0; r <= l; ++r)
            s += f.coeffs[q] * f.coeffs[r] * abspow2h(j + q - r, h.h);
    return -0.5 * std::pow(static_cast<double>(n), -2.0 * h.h) * s;
}

double rho_alpha(const Filter& f, const HurstParam& h, long k) {
    if (k < 0) throw std::invalid_argument("rho_alpha: lag must be >= 0");
    const int l = f.length;
    double s = 0.0;
    for (int q = 0; q <= l; ++q)
        for (int r = 0; r <= l; ++r)
            s += f.coeffs[q] * f.coeffs[r] * abspow2h(k + q - r, h.h);
    return s / c_of_h(f, h.h);
}

double c2_bracket_sum(const Filter& f, const HurstParam& h) {
    const PartialSums ps = partial_sums(f);
    const int l = f.length;
    const double hp2 = 2.0 * h.h_prime;
    double s = 0.0;
    for (int q = 0; q <= l; ++q) {
        for (int r = 0; r <= l; ++r) {
            const long d = q - r;
            const double br = std::pow(std::abs(1.0 + d), hp2) +
                              std::pow(std::abs(1.0 - d), hp2) -
                              2.0 * abspow2h(d, h.h_prime);
            s += ps.b[q] * ps.b[r] * br;
        }
    }
    return s;
}

double c2(const Filter& f, const HurstParam& h) {
    const double c = c_of_h(f, h.h);
    const double br = c2_bracket_sum(f, h);
    return 32.0 / (c * c) * ((2.0 * h.h - 1.0) / (h.h * (h.h + 1.0) * (h.h + 1.0))) *
           br * br;
}

CovarianceTable covariance_table(const Filter& f, const HurstParam& h, int kmax) {
    CovarianceTable t;
    t.filter = f;
    t.h = h.h;
    t.pi0 = 0.5 * c_of_h(f, h.h);
    t.rho_abs.reserve(kmax + 1);
    for (int k = 0; k <= kmax; ++k)
        t.rho_abs.push_back(std::abs(rho_alpha(f, h, k)));
    return t;
}

} // namespace fqv

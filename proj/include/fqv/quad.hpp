#pragma once

#include <array>
#include <functional>
#include <vector>

namespace fqv {

struct GaussRule {
    std::vector<double> x;   // nodes
    std::vector<double> w;   // weights
};

// Gauss-Legendre rule on [-1,1] (Newton on the Legendre recurrence).
GaussRule gauss_legendre(int n);

// Rule mapped to [a,b]; optionally a composite of `panels` equal panels.
GaussRule gauss_legendre_on(int n, double a, double b, int panels = 1);

// Adaptive Gauss-Kronrod 15(7) to an absolute tolerance.
double integrate_gk(const std::function<double(double)>& f, double a, double b,
                    double abs_tol = 1e-10, int max_depth = 30);

struct TruncationPolicy {
    long k_max = 10000;
    double rel_tol = 5e-3;
    int nodes_per_dim = 16;
    int singular_extra_levels = 1;   // dyadic panel levels where a factor changes sign
};

// Generic tensor Gauss-Legendre on [0,1]^4. Per-axis node counts are
// staggered (n, n+1, n+2, n+3) so diagonal hyperplane zeros of |.|^p
// integrands never coincide with a sample tuple. Throws on non-finite
// integrand samples.
double integrate4(const std::function<double(double, double, double, double)>& f,
                  const TruncationPolicy& policy);

// Fast path for the four-factor product
//   |u-v+A0|^ex |u'-v'+A1|^ex |u-u'+A2|^ex |v-v'+A3|^ex
// on [0,1]^4, contracted in O(nodes^3). Axes switch to composite panels
// when some |A_i| <= 1 (the factor's argument changes sign inside the cube).
double four_factor_integral(const std::array<double, 4>& a, double ex,
                            const TruncationPolicy& policy);

} // namespace fqv

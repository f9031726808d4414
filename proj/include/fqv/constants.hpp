#pragma once

#include "fqv/analytic.hpp"
#include "fqv/filters.hpp"
#include "fqv/quad.hpp"

#include <optional>
#include <vector>

namespace fqv {

struct SeriesResult {
    double value = 0.0;
    bool converged = false;
    long terms_used = 0;
    std::vector<double> partial_trace;   // partial sums at checkpoints
};

// sum_{k>=0} rho(k)^2, truncated at policy.k_max with a half-vs-full
// doubling check for the converged flag
SeriesResult rho_squared_series(const Filter& f, const HurstParam& h,
                                const TruncationPolicy& policy);

// tau_1 = sum_{k>=l} sum_{q1 q2 r1 r2} b.. * four-factor integral; terms for
// k > 2l+2 decay like k^{4H-4-8p} and the sum is cut once they are
// negligible relative to the running total
SeriesResult tau1(const Filter& f, const HurstParam& h,
                  const TruncationPolicy& policy);

struct C1Result {
    double value = 0.0;
    bool converged = false;
    SeriesResult rho_series;
    SeriesResult tau;
};

// c_1 = 4! (1 + sum_k rho(k)^2) + tau_1
C1Result c1(const Filter& f, const HurstParam& h, const TruncationPolicy& policy);

// F(x): the three-term bracketed integrand over [0,1]^4 with the
// x-scaled offsets; evaluated on staggered tensor Gauss-Legendre axes
double F_func(double x, const Filter& f, const HurstParam& h,
              const TruncationPolicy& policy);

struct C3Result {
    double value = 0.0;
    bool caveat = true;   // the k-sum keeps N inside the "constant"
    long terms_used = 0;
};

// c_3 = c_2 * sum_{k=1}^{min(N-2, k_max)} (N-k-1) k^{2H} F(1/k)
C3Result c3(const Filter& f, const HurstParam& h, long n,
            const TruncationPolicy& policy);

struct ConstantsReport {
    std::string filter_id;
    double h = 0.0;
    double c = 0.0;
    double c2_value = 0.0;
    std::optional<C1Result> c1_value;
    std::optional<C3Result> c3_value;
    std::vector<double> rho_abs;
    std::string simd;
};

} // namespace fqv

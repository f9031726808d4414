#pragma once

#include "fqv/filters.hpp"
#include "fqv/simulate.hpp"

#include <string>

namespace fqv {

enum class EstimateStatus { ok, degenerate_path, out_of_range_low, out_of_range_high };

std::string estimate_status_name(EstimateStatus s);

struct SolverInfo {
    int iterations = 0;
    double bracket_lo = 0.5;
    double bracket_hi = 1.0;
    double residual = 0.0;   // F_N at the returned point
};

struct EstimateReport {
    double h_hat = 0.5;
    double std_err = 0.0;
    long n = 0;
    std::string filter_id;
    SolverInfo solver;
    bool n_large_enough = false;
    EstimateStatus status = EstimateStatus::ok;
    double s_n = 0.0;
};

// N* from the explicit max-over-x bound certifying that F_N(x) =
// c(x) N^{-2x}/2 - S_N is strictly decreasing on [1/2,1] for N > N*.
// The sup is taken over [1/2, 1-1e-6]: as x -> 1 the expression tends to
// -inf whenever c'(1) < 0, and c(1) = 0 makes the endpoint 0/0.
double monotonicity_bound(const Filter& f);

// Solve c(x) N^{-2x}/2 = S_N on [1/2, 1] in log form by bisection.
EstimateReport estimate_hurst(const SamplePath& path, const Filter& f);

// sqrt(c2 at h_hat) / (2 N^{1-h_hat} log N)
double standard_error(double h_hat, long n, const Filter& f);

// 2 c2(h_hat)^{-1/2} N^{1-h_hat} log N (h_hat - h_true)
double normalized_error_stat(double h_hat, double h_true, long n, const Filter& f);

} // namespace fqv

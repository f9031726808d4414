#include "fqv/estimator.hpp"

#include "fqv/analytic.hpp"
#include "fqv/variation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fqv {

std::string estimate_status_name(EstimateStatus s) {
    switch (s) {
        case EstimateStatus::ok: return "ok";
        case EstimateStatus::degenerate_path: return "degenerate_path";
        case EstimateStatus::out_of_range_low: return "out_of_range_low";
        case EstimateStatus::out_of_range_high: return "out_of_range_high";
    }
    return "?";
}

namespace {

// log N threshold integrand: sum a a log|q-r| |q-r|^{2x} / sum a a |q-r|^{2x}
double bound_ratio(const Filter& f, double x) {
    const int l = f.length;
    double num = 0.0, den = 0.0;
    for (int q = 0; q <= l; ++q) {
        for (int r = 0; r <= l; ++r) {
            const int d = std::abs(q - r);
            if (d == 0) continue;
            const double p = std::pow(static_cast<double>(d), 2.0 * x);
            den += f.coeffs[q] * f.coeffs[r] * p;
            if (d > 1) num += f.coeffs[q] * f.coeffs[r] * std::log(double(d)) * p;
        }
    }
    if (std::abs(den) < 1e-12) return -std::numeric_limits<double>::infinity();
    return num / den;
}

} // namespace

double monotonicity_bound(const Filter& f) {
    const double xmax = 1.0 - 1e-6;
    double best = -std::numeric_limits<double>::infinity();
    double best_x = 0.5;
    const int grid = 4096;
    for (int i = 0; i <= grid; ++i) {
        const double x = 0.5 + (xmax - 0.5) * i / grid;
        const double v = bound_ratio(f, x);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    // local refinement around the grid maximum
    double lo = std::max(0.5, best_x - (xmax - 0.5) / grid);
    double hi = std::min(xmax, best_x + (xmax - 0.5) / grid);
    for (int it = 0; it < 200; ++it) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (bound_ratio(f, m1) < bound_ratio(f, m2)) lo = m1; else hi = m2;
    }
    best = std::max(best, bound_ratio(f, 0.5 * (lo + hi)));
    if (!std::isfinite(best)) return 1.0;
    return std::max(1.0, std::exp(best));
}

EstimateReport estimate_hurst(const SamplePath& path, const Filter& f) {
    EstimateReport rep;
    rep.n = path.n;
    rep.filter_id = f.id();
    rep.s_n = s_n(path, f);
    rep.n_large_enough = static_cast<double>(path.n) > monotonicity_bound(f);

    if (!(rep.s_n > 0.0)) {
        rep.status = EstimateStatus::degenerate_path;
        rep.h_hat = 0.5;
        return rep;
    }
    const double logn = std::log(static_cast<double>(path.n));
    const double target = std::log(2.0 * rep.s_n);
    // g(x) = log c(x) - 2x log N - log(2 S_N); c(1)=0 for p>=2 maps to -inf
    auto g = [&](double x) {
        const double c = c_of_h(f, x);
        if (!(c > 0.0)) return -std::numeric_limits<double>::infinity();
        return std::log(c) - 2.0 * x * logn - target;
    };
    double lo = 0.5, hi = 1.0;
    const double glo = g(lo), ghi = g(hi);
    if (glo < 0.0) {
        // S_N too large: root would sit below 1/2
        rep.status = EstimateStatus::out_of_range_low;
        rep.h_hat = 0.5;
        rep.solver.residual = 0.5 * c_of_h(f, 0.5) / path.n - rep.s_n;
        return rep;
    }
    if (ghi > 0.0) {
        rep.status = EstimateStatus::out_of_range_high;
        rep.h_hat = 1.0;
        rep.solver.residual =
            0.5 * c_of_h(f, 1.0) * std::pow(static_cast<double>(path.n), -2.0) - rep.s_n;
        return rep;
    }
    int it = 0;
    for (; it < 200 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) > 0.0) lo = mid; else hi = mid;
    }
    rep.h_hat = 0.5 * (lo + hi);
    rep.solver.iterations = it;
    rep.solver.bracket_lo = lo;
    rep.solver.bracket_hi = hi;
    rep.solver.residual =
        0.5 * c_of_h(f, rep.h_hat) *
            std::pow(static_cast<double>(path.n), -2.0 * rep.h_hat) -
        rep.s_n;
    rep.std_err = standard_error(rep.h_hat, path.n, f);
    return rep;
}

double standard_error(double h_hat, long n, const Filter& f) {
    if (n < 3) throw std::invalid_argument("standard_error: N must be >= 3");
    if (!(h_hat > 0.5 && h_hat < 1.0))
        throw std::invalid_argument("standard_error: h_hat must lie in (1/2,1)");
    const HurstParam h(h_hat);
    const double logn = std::log(static_cast<double>(n));
    return std::sqrt(c2(f, h)) /
           (2.0 * std::pow(static_cast<double>(n), 1.0 - h_hat) * logn);
}

double normalized_error_stat(double h_hat, double h_true, long n, const Filter& f) {
    const HurstParam h(h_hat);
    const double logn = std::log(static_cast<double>(n));
    return 2.0 / std::sqrt(c2(f, h)) *
           std::pow(static_cast<double>(n), 1.0 - h_hat) * logn * (h_hat - h_true);
}

} // namespace fqv

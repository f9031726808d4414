#include "fqv/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace fqv {

SeriesResult rho_squared_series(const Filter& f, const HurstParam& h,
                                const TruncationPolicy& policy) {
    SeriesResult r;
    double half_sum = 0.0;
    double sum = 0.0;
    const long half = policy.k_max / 2;
    long k = 0;
    for (; k <= policy.k_max; ++k) {
        const double rho = rho_alpha(f, h, k);
        sum += rho * rho;
        if (k == half) half_sum = sum;
        if (k % 100 == 0) r.partial_trace.push_back(sum);
        if (k > 2 * f.length + 2 && rho * rho < 1e-16 * sum) {
            half_sum = sum;   // tail below doubling resolution
            break;
        }
    }
    r.value = sum;
    r.terms_used = std::min(k + 1, policy.k_max + 1);
    r.converged = std::abs(sum - half_sum) <= policy.rel_tol * std::abs(sum);
    r.partial_trace.push_back(sum);
    return r;
}

SeriesResult tau1(const Filter& f, const HurstParam& h,
                  const TruncationPolicy& policy) {
    if (f.order < 2)
        throw std::invalid_argument("tau1: filter order must be >= 2");
    const int l = f.length;
    const PartialSums ps = partial_sums(f);
    const double ex = 2.0 * h.h_prime - 2.0;

    SeriesResult r;
    double sum = 0.0, half_sum = 0.0;
    const long half = policy.k_max / 2;
    long negligible_run = 0;
    long k = l;
    for (; k <= policy.k_max; ++k) {
        double term = 0.0;
        for (int q1 = 0; q1 <= l; ++q1) {
            if (ps.b[q1] == 0.0) continue;
            for (int q2 = 0; q2 <= l; ++q2) {
                if (ps.b[q2] == 0.0) continue;
                for (int r1 = 0; r1 <= l; ++r1) {
                    if (ps.b[r1] == 0.0) continue;
                    for (int r2 = 0; r2 <= l; ++r2) {
                        const double bb = ps.b[q1] * ps.b[q2] * ps.b[r1] * ps.b[r2];
                        if (bb == 0.0) continue;
                        const std::array<double, 4> offs{
                            double(k - q1 + r1), double(k - q2 + r2),
                            double(k - q1 + q2), double(k - r1 + r2)};
                        term += bb * four_factor_integral(offs, ex, policy);
                    }
                }
            }
        }
        sum += term;
        r.partial_trace.push_back(sum);
        if (k == half) half_sum = sum;
        if (k > 2 * l + 2 && std::abs(term) < 1e-15 * std::abs(sum)) {
            if (++negligible_run >= 3) {
                half_sum = sum;
                break;
            }
        } else {
            negligible_run = 0;
        }
    }
    r.value = sum;
    r.terms_used = std::min(k, policy.k_max) - l + 1;
    r.converged = std::abs(sum - half_sum) <= policy.rel_tol * std::abs(sum);
    return r;
}

C1Result c1(const Filter& f, const HurstParam& h, const TruncationPolicy& policy) {
    C1Result out;
    out.rho_series = rho_squared_series(f, h, policy);
    out.tau = tau1(f, h, policy);
    out.value = 24.0 * (1.0 + out.rho_series.value) + out.tau.value;
    out.converged = out.rho_series.converged && out.tau.converged;
    return out;
}

double F_func(double x, const Filter& f, const HurstParam& h,
              const TruncationPolicy& policy) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("F_func: x must lie in [0,1]");
    const int l = f.length;
    const double ex = 2.0 * h.h_prime - 2.0;
    const double d = h.d, al = h.alpha_h;
    const double c = c_of_h(f, h.h);
    const double c2v = c2(f, h);
    const double coef1 = 128.0 * al * al * d * d / (c2v * c * c);
    const double coef2 = 16.0 * d * al / (std::sqrt(c2v) * c);

    // staggered even axis counts: even-degree rules have no node at 1/2 and
    // distinct degrees share no nodes, so the |.|^ex hyperplane zeros are
    // never sampled exactly (checked in tests)
    const int n = policy.nodes_per_dim + (policy.nodes_per_dim % 2);
    const GaussRule axu = gauss_legendre_on(n, 0.0, 1.0);
    const GaussRule axv = gauss_legendre_on(n + 2, 0.0, 1.0);
    const GaussRule axU = gauss_legendre_on(n + 4, 0.0, 1.0);
    const GaussRule axV = gauss_legendre_on(n + 6, 0.0, 1.0);
    const std::size_t nu = axu.x.size(), nv = axv.x.size(),
                      nU = axU.x.size(), nV = axV.x.size();

    auto fpow = [ex](double v) { return std::pow(std::abs(v), ex); };

    double total = 0.0;
    std::vector<double> pre(nu * nU), t3m(nu * nU), fuv(nu * nv), fUV(nU * nV),
        fvV(nv * nV), fvU(nv * nU);
    for (int q1 = 0; q1 <= l; ++q1) {
        for (int q2 = 0; q2 <= l; ++q2) {
            for (std::size_t i = 0; i < nu; ++i)
                for (std::size_t k = 0; k < nU; ++k) {
                    const double duU = axu.x[i] - axU.x[k];
                    pre[i * nU + k] = fpow((duU + (q2 - q1)) * x + 1.0);
                    t3m[i * nU + k] = fpow((duU + (q1 - q2)) * x + 1.0);
                }
            for (int r1 = 0; r1 <= l; ++r1) {
                for (std::size_t i = 0; i < nu; ++i)
                    for (std::size_t j = 0; j < nv; ++j)
                        fuv[i * nv + j] = fpow(axu.x[i] - axv.x[j] - q1 + r1);
                for (int r2 = 0; r2 <= l; ++r2) {
                    for (std::size_t k = 0; k < nU; ++k)
                        for (std::size_t m = 0; m < nV; ++m)
                            fUV[k * nV + m] = fpow(axU.x[k] - axV.x[m] - q2 + r2);
                    for (std::size_t j = 0; j < nv; ++j)
                        for (std::size_t m = 0; m < nV; ++m)
                            fvV[j * nV + m] = fpow((axv.x[j] - axV.x[m] - r1 + r2) * x + 1.0);
                    for (std::size_t j = 0; j < nv; ++j)
                        for (std::size_t k = 0; k < nU; ++k)
                            fvU[j * nU + k] = fpow((axv.x[j] - axU.x[k] - q2 + r1) * x + 1.0);

                    // term1: coef1 * pre(u,U) fuv(u,v) fUV(U,V) fvV(v,V)
                    double t1 = 0.0;
                    {
                        // S1[U,v] = sum_V fUV[U,V] wV fvV[v,V]
                        // then sum_{u,v,U} wu wv wU pre[u,U] fuv[u,v] S1[U,v]
                        std::vector<double> s1(nU * nv, 0.0);
                        for (std::size_t k = 0; k < nU; ++k)
                            for (std::size_t j = 0; j < nv; ++j) {
                                double acc = 0.0;
                                for (std::size_t m = 0; m < nV; ++m)
                                    acc += axV.w[m] * fUV[k * nV + m] * fvV[j * nV + m];
                                s1[k * nv + j] = acc;
                            }
                        for (std::size_t i = 0; i < nu; ++i)
                            for (std::size_t j = 0; j < nv; ++j) {
                                double acc = 0.0;
                                for (std::size_t k = 0; k < nU; ++k)
                                    acc += axU.w[k] * pre[i * nU + k] * s1[k * nv + j];
                                t1 += axu.w[i] * axv.w[j] * fuv[i * nv + j] * acc;
                            }
                    }
                    // term2: coef2 * pre(u,U) fuv(u,v) fvU(v,U); v' integrates to 1
                    double t2 = 0.0;
                    for (std::size_t i = 0; i < nu; ++i)
                        for (std::size_t j = 0; j < nv; ++j) {
                            double acc = 0.0;
                            for (std::size_t k = 0; k < nU; ++k)
                                acc += axU.w[k] * pre[i * nU + k] * fvU[j * nU + k];
                            t2 += axu.w[i] * axv.w[j] * fuv[i * nv + j] * acc;
                        }
                    // term3: pre(u,U) t3m(u,U); v and v' integrate to 1
                    double t3 = 0.0;
                    for (std::size_t i = 0; i < nu; ++i)
                        for (std::size_t k = 0; k < nU; ++k)
                            t3 += axu.w[i] * axU.w[k] * pre[i * nU + k] * t3m[i * nU + k];

                    total += coef1 * t1 - coef2 * t2 + t3;
                }
            }
        }
    }
    if (!std::isfinite(total))
        throw std::domain_error("F_func: non-finite tensor sum (singular sample)");
    return d * d * al * al * total;
}

C3Result c3(const Filter& f, const HurstParam& h, long n,
            const TruncationPolicy& policy) {
    if (n < 3) throw std::invalid_argument("c3: N must be >= 3");
    C3Result out;
    const long kmax = std::min<long>(n - 2, policy.k_max);
    const double c2v = c2(f, h);
    double s = 0.0;
    for (long k = 1; k <= kmax; ++k) {
        const double fk = F_func(1.0 / static_cast<double>(k), f, h, policy);
        s += static_cast<double>(n - k - 1) *
             std::pow(static_cast<double>(k), 2.0 * h.h) * fk;
    }
    out.value = c2v * s;
    out.caveat = true;
    out.terms_used = kmax;
    return out;
}

} // namespace fqv

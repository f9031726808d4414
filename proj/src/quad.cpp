#include "fqv/quad.hpp"

#include "fqv/simd/kernels.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fqv {

GaussRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Tricomi initial guess, then Newton on P_n
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    return r;
}

namespace {

const GaussRule& cached_rule(int n) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, gauss_legendre(n)).first;
    return it->second;
}

} // namespace

GaussRule gauss_legendre_on(int n, double a, double b, int panels) {
    const GaussRule& base = cached_rule(n);
    GaussRule out;
    out.x.reserve(static_cast<std::size_t>(n) * panels);
    out.w.reserve(static_cast<std::size_t>(n) * panels);
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        for (int i = 0; i < n; ++i) {
            out.x.push_back(lo + 0.5 * h * (base.x[i] + 1.0));
            out.w.push_back(0.5 * h * base.w[i]);
        }
    }
    return out;
}

namespace {

// Gauss-Kronrod 15(7) node/weight pairs on [-1,1]
constexpr double kKronrodX[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898,  0.0,                0.207784955007898,
     0.405845151377397,  0.586087235467691,  0.741531185599394,
     0.864864423359769,  0.949107912342759,  0.991455371120813};
constexpr double kKronrodW[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
constexpr double kGaussW[7] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870};

struct GkResult {
    double value;
    double error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double k = 0.0, g = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double v = f(c + h * kKronrodX[i]);
        k += kKronrodW[i] * v;
        if (i % 2 == 1) g += kGaussW[i / 2] * v;
    }
    return {k * h, std::abs(k - g) * h};
}

double gk_adaptive(const std::function<double(double)>& f, double a, double b,
                   double tol, int depth) {
    const GkResult r = gk15(f, a, b);
    if (r.error <= tol || depth <= 0) return r.value;
    const double c = 0.5 * (a + b);
    return gk_adaptive(f, a, c, 0.5 * tol, depth - 1) +
           gk_adaptive(f, c, b, 0.5 * tol, depth - 1);
}

} // namespace

double integrate_gk(const std::function<double(double)>& f, double a, double b,
                    double abs_tol, int max_depth) {
    if (!(b > a)) return 0.0;
    return gk_adaptive(f, a, b, abs_tol, max_depth);
}

double integrate4(const std::function<double(double, double, double, double)>& f,
                  const TruncationPolicy& policy) {
    // staggered even per-axis counts keep diagonal zeros off the sample grid
    const int n = policy.nodes_per_dim + (policy.nodes_per_dim % 2);
    const GaussRule ax0 = gauss_legendre_on(n, 0.0, 1.0);
    const GaussRule ax1 = gauss_legendre_on(n + 2, 0.0, 1.0);
    const GaussRule ax2 = gauss_legendre_on(n + 4, 0.0, 1.0);
    const GaussRule ax3 = gauss_legendre_on(n + 6, 0.0, 1.0);
    double total = 0.0;
    for (std::size_t i = 0; i < ax0.x.size(); ++i) {
        for (std::size_t j = 0; j < ax1.x.size(); ++j) {
            const double wij = ax0.w[i] * ax1.w[j];
            for (std::size_t k = 0; k < ax2.x.size(); ++k) {
                const double wijk = wij * ax2.w[k];
                double inner = 0.0;
                for (std::size_t l = 0; l < ax3.x.size(); ++l) {
                    const double v = f(ax0.x[i], ax1.x[j], ax2.x[k], ax3.x[l]);
                    if (!std::isfinite(v)) {
                        std::ostringstream os;
                        os << "integrate4: non-finite integrand at ("
                           << ax0.x[i] << ", " << ax1.x[j] << ", " << ax2.x[k]
                           << ", " << ax3.x[l] << ")";
                        throw std::domain_error(os.str());
                    }
                    inner += ax3.w[l] * v;
                }
                total += wijk * inner;
            }
        }
    }
    return total;
}

double four_factor_integral(const std::array<double, 4>& a, double ex,
                            const TruncationPolicy& policy) {
    bool singular = false;
    for (double c : a) {
        if (std::abs(c) < 1e-12)
            throw std::domain_error("four_factor_integral: offset on a sampled diagonal");
        if (std::abs(c) <= 1.0) singular = true;
    }
    const int panels = singular ? (1 << policy.singular_extra_levels) : 1;
    const GaussRule ax = gauss_legendre_on(policy.nodes_per_dim, 0.0, 1.0, panels);
    const std::size_t n = ax.x.size();

    // factor tables F[m](s,t) = |x_s - x_t + A_m|^ex; axis weights folded
    // into the (u,v) and (u',v') tables
    std::vector<double> f0(n * n), f1(n * n), f2t(n * n), f3(n * n), f0t(n * n);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
            const double d = ax.x[s] - ax.x[t];
            const double ww = ax.w[s] * ax.w[t];
            f0[s * n + t] = ww * std::pow(std::abs(d + a[0]), ex);
            f1[s * n + t] = ww * std::pow(std::abs(d + a[1]), ex);
            f2t[t * n + s] = std::pow(std::abs(d + a[2]), ex);
            f3[s * n + t] = std::pow(std::abs(d + a[3]), ex);
        }
    }
    // total = sum_{i,j,k,l} F0[i,j] F1[k,l] F2[i,k] F3[j,l]
    //       = sum_{k,j} (F2^T F0)[k,j] * (F1 F3^T)[k,j]
    const auto& kr = simd::active();
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) f0t[s * n + t] = f0[t * n + s];
    std::vector<double> t1(n * n), t2(n * n);
    kr.matmul_nt(f2t.data(), f0t.data(), t1.data(), n, n, n);  // t1[k,j] = sum_i F2[i,k] F0[i,j]
    kr.matmul_nt(f1.data(), f3.data(), t2.data(), n, n, n);    // t2[k,j] = sum_l F1[k,l] F3[j,l]
    return kr.dot(t1.data(), t2.data(), n * n);
}

} // namespace fqv

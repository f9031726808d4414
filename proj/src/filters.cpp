#include "fqv/filters.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fqv {

namespace {

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
    return r;
}

// q^r with the 0^0 = 1 convention
double ipow(int q, int r) {
    if (r == 0) return 1.0;
    double acc = 1.0;
    for (int i = 0; i < r; ++i) acc *= double(q);
    return acc;
}

} // namespace

std::string Filter::id() const {
    std::ostringstream os;
    switch (kind) {
        case FilterKind::finite_difference: os << "fd:" << length; break;
        case FilterKind::daubechies: os << "db:" << order; break;
        case FilterKind::custom: os << "custom[l=" << length << ",p=" << order << "]"; break;
    }
    return os.str();
}

MomentDiagnostics validate_filter(const std::vector<double>& coeffs) {
    if (coeffs.empty())
        throw std::invalid_argument("validate_filter: empty coefficient list");
    const int l = static_cast<int>(coeffs.size()) - 1;
    bool nonzero = std::any_of(coeffs.begin(), coeffs.end(),
                               [](double c) { return c != 0.0; });
    if (!nonzero)
        throw std::invalid_argument("validate_filter: all coefficients are zero");

    MomentDiagnostics d;
    d.raw.resize(l + 1);
    d.scaled.resize(l + 1);
    for (int r = 0; r <= l; ++r) {
        double m = 0.0, scale = 0.0;
        for (int q = 0; q <= l; ++q) {
            m += coeffs[q] * ipow(q, r);
            scale += std::abs(coeffs[q]) * ipow(q, r);
        }
        d.raw[r] = m;
        d.scaled[r] = m / std::max(1.0, scale);
    }
    int p = 0;
    while (p <= l && std::abs(d.scaled[p]) < kMomentZeroTol) ++p;
    if (p == 0) {
        d.order = 0;   // sum a_q != 0: not a filter
        return d;
    }
    if (p <= l && std::abs(d.scaled[p]) <= kMomentNonzeroTol) {
        // between the thresholds: structural only if far above the filter's
        // own cancellation noise floor (~ (l+1) eps on the scaled moment)
        const double noise = (l + 1) * std::numeric_limits<double>::epsilon();
        if (std::abs(d.scaled[p]) <= 1e3 * noise)
            throw std::invalid_argument(
                "validate_filter: moment " + std::to_string(p) +
                " is indistinguishable from cancellation noise");
    }
    d.order = p;
    return d;
}

Filter custom_filter(std::vector<double> coeffs) {
    MomentDiagnostics d = validate_filter(coeffs);
    if (d.order == 0)
        throw std::invalid_argument("not a filter: coefficients do not sum to zero");
    Filter f;
    f.length = static_cast<int>(coeffs.size()) - 1;
    f.coeffs = std::move(coeffs);
    f.order = d.order;
    f.kind = FilterKind::custom;
    return f;
}

Filter finite_difference_filter(int l) {
    if (l < 1) throw std::invalid_argument("finite_difference_filter: order must be >= 1");
    std::vector<double> a(l + 1);
    for (int k = 0; k <= l; ++k)
        a[k] = ((k % 2 == 0) ? -1.0 : 1.0) * binom(l, k);
    Filter f;
    f.coeffs = std::move(a);
    f.length = l;
    f.order = validate_filter(f.coeffs).order;
    f.kind = FilterKind::finite_difference;
    if (f.order != l)
        throw std::logic_error("finite_difference_filter: order mismatch");
    return f;
}

namespace {

// Roots of sum_k c[k] z^k (ascending) via the companion matrix.
std::vector<std::complex<double>> poly_roots(const std::vector<double>& c) {
    int deg = static_cast<int>(c.size()) - 1;
    while (deg > 0 && c[deg] == 0.0) --deg;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[i] / c[deg];
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
    std::vector<std::complex<double>> roots(deg);
    for (int i = 0; i < deg; ++i) roots[i] = es.eigenvalues()[i];
    return roots;
}

// One Newton polish of a root of the ascending-coefficient polynomial.
std::complex<double> polish_root(const std::vector<double>& c, std::complex<double> z) {
    for (int it = 0; it < 3; ++it) {
        std::complex<double> p = 0.0, dp = 0.0;
        for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
            dp = dp * z + p;
            p = p * z + c[k];
        }
        if (std::abs(dp) == 0.0) break;
        z -= p / dp;
    }
    return z;
}

// Stationary least-squares correction: minimal l2 change of g making the
// first p moments vanish exactly (up to cancellation noise).
void project_vanishing_moments(std::vector<double>& g, int p) {
    const int L = static_cast<int>(g.size());
    Eigen::MatrixXd M(p, L);
    for (int r = 0; r < p; ++r)
        for (int k = 0; k < L; ++k)
            M(r, k) = ipow(k, r);
    Eigen::VectorXd gv(L);
    for (int k = 0; k < L; ++k) gv[k] = g[k];
    Eigen::VectorXd resid = M * gv;
    Eigen::MatrixXd gram = M * M.transpose();
    Eigen::VectorXd lambda = gram.ldlt().solve(resid);
    gv -= M.transpose() * lambda;
    gv /= gv.norm();   // restore unit energy
    for (int k = 0; k < L; ++k) g[k] = gv[k];
}

} // namespace

Filter daubechies_filter(int p) {
    if (p < 2 || p > 20)
        throw std::invalid_argument("daubechies_filter: unsupported order " +
                                    std::to_string(p) + " (supported: 2..20)");
    // q(z) = z^{p-1} P(y(z)), y = -(z - 2 + 1/z)/4, P(y) = sum C(p-1+k,k) y^k
    std::vector<double> poly(2 * p - 1, 0.0);
    for (int k = 0; k < p; ++k) {
        // (z-1)^{2k} scaled by C(p-1+k,k) (-1/4)^k, shifted by z^{p-1-k}
        const double scale = binom(p - 1 + k, k) * std::pow(-0.25, k);
        for (int j = 0; j <= 2 * k; ++j) {
            const double cj = binom(2 * k, j) * ((2 * k - j) % 2 == 0 ? 1.0 : -1.0);
            poly[p - 1 - k + j] += scale * cj;
        }
    }
    auto roots = poly_roots(poly);
    std::vector<std::complex<double>> inside;
    for (auto z : roots) {
        z = polish_root(poly, z);
        if (std::abs(z) < 1.0) inside.push_back(z);
    }
    if (static_cast<int>(inside.size()) != p - 1)
        throw std::runtime_error("daubechies_filter: spectral factorization failed");

    // h(z) = ((1+z)/2)^p prod_i (z - r_i)/(1 - r_i), then scale to sum = sqrt 2
    std::vector<std::complex<double>> q{1.0};
    for (const auto& r : inside) {
        std::vector<std::complex<double>> next(q.size() + 1, 0.0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            next[i] += q[i] * (-r);
            next[i + 1] += q[i];
        }
        for (auto& c : next) c /= (1.0 - r);
        q = std::move(next);
    }
    std::vector<double> h(2 * p, 0.0);
    for (int j = 0; j <= p; ++j) {
        const double bj = binom(p, j) * std::pow(0.5, p);
        for (std::size_t i = 0; i < q.size(); ++i)
            h[j + i] += bj * q[i].real();
    }
    const double s = std::accumulate(h.begin(), h.end(), 0.0);
    for (auto& x : h) x *= std::sqrt(2.0) / s;

    // high-pass by alternating-sign reversal
    std::vector<double> g(2 * p);
    for (int k = 0; k < 2 * p; ++k)
        g[k] = ((k % 2 == 0) ? 1.0 : -1.0) * h[2 * p - 1 - k];
    project_vanishing_moments(g, p);

    Filter f;
    f.coeffs = std::move(g);
    f.length = 2 * p - 1;
    f.kind = FilterKind::daubechies;
    f.order = validate_filter(f.coeffs).order;
    if (f.order != p)
        throw std::runtime_error("daubechies_filter: detected order " +
                                 std::to_string(f.order) + ", expected " +
                                 std::to_string(p));
    return f;
}

PartialSums partial_sums(const Filter& f) {
    PartialSums ps;
    ps.b.resize(f.coeffs.size());
    std::partial_sum(f.coeffs.begin(), f.coeffs.end(), ps.b.begin());
    ps.b.back() = 0.0;   // exact: sum of all coefficients vanishes
    return ps;
}

Filter parse_filter_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("filter spec must be fd:<l>, db:<p> or custom:<coeffs>");
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (kind == "fd") return finite_difference_filter(std::stoi(rest));
    if (kind == "db") return daubechies_filter(std::stoi(rest));
    if (kind == "custom") {
        std::vector<double> c;
        std::istringstream is(rest);
        std::string tok;
        while (std::getline(is, tok, ',')) c.push_back(std::stod(tok));
        return custom_filter(std::move(c));
    }
    throw std::invalid_argument("unknown filter kind: " + kind);
}

} // namespace fqv

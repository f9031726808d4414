#include "fqv/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fqv {

double mean(const std::vector<double>& x) {
    if (x.empty()) throw std::invalid_argument("mean: empty sample");
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

double variance(const std::vector<double>& x) {
    if (x.size() < 2) throw std::invalid_argument("variance: need >= 2 points");
    const double mu = mean(x);
    double s = 0.0;
    for (double v : x) s += (v - mu) * (v - mu);
    return s / static_cast<double>(x.size() - 1);
}

double median(std::vector<double> x) {
    if (x.empty()) throw std::invalid_argument("median: empty sample");
    const std::size_t n = x.size();
    std::nth_element(x.begin(), x.begin() + n / 2, x.end());
    double hi = x[n / 2];
    if (n % 2 == 1) return hi;
    std::nth_element(x.begin(), x.begin() + n / 2 - 1, x.end());
    return 0.5 * (hi + x[n / 2 - 1]);
}

double skewness(const std::vector<double>& x) {
    const double mu = mean(x);
    double m2 = 0.0, m3 = 0.0;
    for (double v : x) {
        const double d = v - mu;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= static_cast<double>(x.size());
    m3 /= static_cast<double>(x.size());
    return m3 / std::pow(m2, 1.5);
}

double excess_kurtosis(const std::vector<double>& x) {
    const double mu = mean(x);
    double m2 = 0.0, m4 = 0.0;
    for (double v : x) {
        const double d = v - mu;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    m2 /= static_cast<double>(x.size());
    m4 /= static_cast<double>(x.size());
    return m4 / (m2 * m2) - 3.0;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.size() < 30 || b.size() < 30)
        throw std::invalid_argument("ks_two_sample: both samples need >= 30 points");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double t = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= t) ++i;
        while (j < b.size() && b[j] <= t) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
    }
    return d;
}

} // namespace fqv

#pragma once

#include <cstddef>
#include <vector>

namespace fqv {

double mean(const std::vector<double>& x);
double variance(const std::vector<double>& x);    // ddof = 1
double median(std::vector<double> x);
double skewness(const std::vector<double>& x);
double excess_kurtosis(const std::vector<double>& x);

// classical two-sample Kolmogorov-Smirnov statistic; both samples need
// at least 30 points
double ks_two_sample(std::vector<double> a, std::vector<double> b);

} // namespace fqv

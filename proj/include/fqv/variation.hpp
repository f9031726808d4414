#pragma once

#include "fqv/analytic.hpp"
#include "fqv/filters.hpp"
#include "fqv/simulate.hpp"

#include <optional>
#include <vector>

namespace fqv {

struct VariationReport {
    double s_n = 0.0;
    std::optional<double> v_n;
    std::optional<double> adjusted;
    long n = 0;
    std::string filter_id;
    std::optional<double> h_used;
};

// V^a(i/N) = sum_q a_q Z((i-q)/N), i = l .. N-1
std::vector<double> filtered_series(const SamplePath& path, const Filter& f);

// mean of squared filtered values, i = l..N-1, divisor N-l
double s_n(const SamplePath& path, const Filter& f);

// v_n = s_n / pi_H^a(0)(N) - 1
double v_n(const SamplePath& path, const Filter& f, const HurstParam& h);

// v_n - sqrt(c2) N^{H-1} Z(1), Z(1) the last path value
double adjusted_variation(const SamplePath& path, const Filter& f,
                          const HurstParam& h);

VariationReport variation_report(const SamplePath& path, const Filter& f,
                                 std::optional<double> h_true);

} // namespace fqv

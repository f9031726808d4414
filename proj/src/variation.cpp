#include "fqv/variation.hpp"

#include "fqv/simd/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace fqv {

namespace {

void check_length(const SamplePath& path, const Filter& f) {
    if (static_cast<long>(path.values.size()) != path.n + 1)
        throw std::invalid_argument("path: values.size() must be n+1");
    if (path.n + 1 < f.length + 2)
        throw std::invalid_argument("path shorter than filter window");
}

} // namespace

std::vector<double> filtered_series(const SamplePath& path, const Filter& f) {
    check_length(path, f);
    std::vector<double> out(path.n - f.length);
    simd::active().filtered_series(path.values.data(), path.values.size(),
                                   f.coeffs.data(), f.length, out.data());
    return out;
}

double s_n(const SamplePath& path, const Filter& f) {
    check_length(path, f);
    const double total = simd::active().sumsq_filtered(
        path.values.data(), path.values.size(), f.coeffs.data(), f.length);
    return total / static_cast<double>(path.n - f.length);
}

double v_n(const SamplePath& path, const Filter& f, const HurstParam& h) {
    const double pi0 = pi_alpha(f, h, path.n, 0);
    return s_n(path, f) / pi0 - 1.0;
}

double adjusted_variation(const SamplePath& path, const Filter& f,
                          const HurstParam& h) {
    const double z1 = path.values.back();
    return v_n(path, f, h) -
           std::sqrt(c2(f, h)) * std::pow(static_cast<double>(path.n), h.h - 1.0) * z1;
}

VariationReport variation_report(const SamplePath& path, const Filter& f,
                                 std::optional<double> h_true) {
    VariationReport r;
    r.s_n = s_n(path, f);
    r.n = path.n;
    r.filter_id = f.id();
    if (h_true) {
        const HurstParam h(*h_true);
        r.h_used = *h_true;
        r.v_n = v_n(path, f, h);
        r.adjusted = adjusted_variation(path, f, h);
    }
    return r;
}

} // namespace fqv

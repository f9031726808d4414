#include "doctest.h"

#include <stdexcept>

#include "fqv/variation.hpp"

#include <cmath>

using namespace fqv;

namespace {

SamplePath make_path(std::vector<double> v) {
    SamplePath p;
    p.n = static_cast<long>(v.size()) - 1;
    p.values = std::move(v);
    return p;
}

} // namespace

TEST_CASE("filtered series special paths") {
    const Filter f1 = custom_filter({1.0, -1.0});
    const Filter f2 = finite_difference_filter(2);

    // first differences
    const SamplePath p = make_path({0.0, 1.0, 3.0, 6.0, 10.0});
    const auto d = filtered_series(p, f1);
    CHECK(d == std::vector<double>{1.0, 2.0, 3.0});

    // constant path -> zeros for any filter
    const SamplePath c = make_path({2.5, 2.5, 2.5, 2.5, 2.5, 2.5});
    for (double v : filtered_series(c, f2)) CHECK(v == 0.0);

    // affine path annihilated by any p >= 2 filter
    std::vector<double> aff(9);
    for (int i = 0; i < 9; ++i) aff[i] = 3.0 + 0.25 * i;
    for (double v : filtered_series(make_path(aff), f2))
        CHECK(std::abs(v) < 1e-14);

    CHECK_THROWS_AS(filtered_series(make_path({0.0, 1.0}), f2),
                    std::invalid_argument);
}

TEST_CASE("s_n scaling and zero path") {
    const Filter f2 = finite_difference_filter(2);
    CHECK(s_n(make_path(std::vector<double>(16, 0.0)), f2) == 0.0);
    const SamplePath p = make_path({0.0, 0.3, -0.1, 0.7, 0.2, -0.4, 0.9, 0.1, 0.0});
    SamplePath p2 = p;
    for (auto& v : p2.values) v *= 3.0;
    CHECK(s_n(p2, f2) == doctest::Approx(9.0 * s_n(p, f2)).epsilon(1e-14));
}

TEST_CASE("v_n identity and filter-sign invariance") {
    const Filter f2 = finite_difference_filter(2);
    Filter neg = f2;
    for (auto& c : neg.coeffs) c = -c;
    neg = custom_filter(neg.coeffs);

    const HurstParam h(0.7);
    const SamplePath p = make_path({0.0, 0.21, -0.11, 0.57, 0.13, -0.41, 0.92, 0.08,
                                    0.33, -0.29, 0.6});
    CHECK(s_n(p, f2) == s_n(p, neg));
    CHECK(v_n(p, f2, h) == v_n(p, neg, h));
    CHECK(adjusted_variation(p, f2, h) == adjusted_variation(p, neg, h));

    // v_n = s_n / pi0 - 1 exactly
    const double pi0 = pi_alpha(f2, h, p.n, 0);
    CHECK(v_n(p, f2, h) == doctest::Approx(s_n(p, f2) / pi0 - 1.0).epsilon(1e-15));
    CHECK(v_n(p, f2, h) >= -1.0);

    // a path built to hit s_n = pi0 exactly gives v_n = 0
    SamplePath q = p;
    const double scale = std::sqrt(pi0 / s_n(p, f2));
    for (auto& v : q.values) v *= scale;
    CHECK(v_n(q, f2, h) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("adjusted variation identity") {
    const Filter f2 = finite_difference_filter(2);
    const HurstParam h(0.6);
    const SamplePath p = make_path({0.0, 0.4, 0.1, -0.3, 0.8, 0.2, -0.6, 0.5, 0.9});
    const double adj = adjusted_variation(p, f2, h);
    const double back =
        adj + std::sqrt(c2(f2, h)) * std::pow(double(p.n), h.h - 1.0) * p.values.back();
    CHECK(back == doctest::Approx(v_n(p, f2, h)).epsilon(1e-15));
}

TEST_CASE("variation report") {
    const Filter f2 = finite_difference_filter(2);
    const SamplePath p = make_path({0.0, 0.4, 0.1, -0.3, 0.8, 0.2, -0.6, 0.5, 0.9});
    const VariationReport r0 = variation_report(p, f2, std::nullopt);
    CHECK(!r0.v_n);
    const VariationReport r1 = variation_report(p, f2, 0.7);
    CHECK(r1.v_n);
    CHECK(r1.adjusted);
    CHECK(*r1.h_used == 0.7);
    CHECK(r1.filter_id == "fd:2");
}

#include "doctest.h"

#include <stdexcept>

#include "fqv/simulate.hpp"
#include "fqv/stats.hpp"

#include <cmath>

using namespace fqv;

TEST_CASE("fgn autocovariance formula") {
    CHECK(fgn_autocov(0.5, 0) == doctest::Approx(1.0));
    CHECK(fgn_autocov(0.5, 1) == doctest::Approx(0.0));
    CHECK(fgn_autocov(0.75, 1) ==
          doctest::Approx(0.41421356237309515).epsilon(1e-15));
}

TEST_CASE("fgn determinism and basic moments") {
    const RngStream s{42, 7};
    const auto x1 = fgn(0.7, 4096, s);
    const auto x2 = fgn(0.7, 4096, s);
    CHECK(x1 == x2);   // bit identical
    const auto x3 = fgn(0.7, 4096, RngStream{42, 8});
    CHECK(x1 != x3);

    // unit variance within 4 sqrt(2/n)
    CHECK(std::abs(variance(x1) - 1.0) < 4.0 * std::sqrt(2.0 / 4096));
}

TEST_CASE("fgn empirical autocovariance at H=0.75, lag 1") {
    // average over several streams to tighten the band
    const long n = 1 << 14;
    double acc = 0.0;
    const int reps = 8;
    for (int r = 0; r < reps; ++r) {
        const auto x = fgn(0.75, n, RngStream{9, static_cast<std::uint64_t>(r)});
        double c = 0.0;
        for (long i = 0; i + 1 < n; ++i) c += x[i] * x[i + 1];
        acc += c / double(n - 1);
    }
    acc /= reps;
    CHECK(acc == doctest::Approx(0.41421356237309515).epsilon(0.05));
}

TEST_CASE("fgn H=1/2 is white noise") {
    const auto x = fgn(0.5, 1 << 14, RngStream{11, 0});
    double c = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) c += x[i] * x[i + 1];
    c /= double(x.size() - 1);
    CHECK(std::abs(c) < 4.0 / std::sqrt(double(x.size())));
}

TEST_CASE("fbm path variance structure") {
    const long n = 512;
    std::vector<double> z1, zhalf;
    for (int r = 0; r < 600; ++r) {
        const auto p = fbm_path(0.7, n, RngStream{13, static_cast<std::uint64_t>(r)});
        CHECK(p.values.front() == 0.0);
        z1.push_back(p.values.back());
        zhalf.push_back(p.values[n / 2]);
    }
    CHECK(variance(z1) == doctest::Approx(1.0).epsilon(0.25));
    CHECK(variance(zhalf) == doctest::Approx(std::pow(0.5, 1.4)).epsilon(0.25));
}

TEST_CASE("rosenblatt path basics") {
    const HurstParam h(0.7);
    std::vector<double> z1;
    for (int r = 0; r < 400; ++r)
        z1.push_back(
            rosenblatt_path(h, 64, 16, RngStream{17, static_cast<std::uint64_t>(r)})
                .values.back());
    CHECK(std::abs(mean(z1)) < 4.0 / std::sqrt(400.0));
    CHECK(variance(z1) == doctest::Approx(1.0).epsilon(0.3));
    CHECK(skewness(z1) > 0.0);   // quadratic Hermite functional skews right

    // determinism across calls, and endpoint sampler consistency
    const double a = rosenblatt_z1(h, 512, RngStream{17, 3});
    const double b = rosenblatt_z1(h, 512, RngStream{17, 3});
    CHECK(a == b);
}

TEST_CASE("rosenblatt path metadata and validation") {
    const HurstParam h(0.6);
    const SamplePath p = rosenblatt_path(h, 32, 8, RngStream{1, 2});
    CHECK(p.n == 32);
    CHECK(p.values.size() == 33);
    CHECK(p.values[0] == 0.0);
    CHECK(p.process == ProcessKind::rosenblatt);
    CHECK(p.oversample == 8);
    for (double v : p.values) CHECK(std::isfinite(v));
    CHECK_THROWS_AS(rosenblatt_path(h, 0, 8, RngStream{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(fgn(0.7, 1, RngStream{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(fgn(1.0, 16, RngStream{1, 2}), std::invalid_argument);
}

#include "doctest.h"

#include <stdexcept>

#include "fqv/stats.hpp"

#include <cmath>
#include <random>

using namespace fqv;

TEST_CASE("moments on known samples") {
    const std::vector<double> x{1, 2, 3, 4, 5, 6, 7, 8};
    CHECK(mean(x) == doctest::Approx(4.5));
    CHECK(variance(x) == doctest::Approx(6.0));
    CHECK(median(x) == doctest::Approx(4.5));
    CHECK(median(std::vector<double>{3, 1, 2}) == 2.0);
    CHECK(skewness(x) == doctest::Approx(0.0));
    // uniform-ish sample has negative excess kurtosis
    CHECK(excess_kurtosis(x) < 0.0);
    CHECK_THROWS_AS(mean({}), std::invalid_argument);
    CHECK_THROWS_AS(variance({1.0}), std::invalid_argument);
}

TEST_CASE("ks two sample") {
    std::vector<double> a(100), b(100);
    for (int i = 0; i < 100; ++i) a[i] = b[i] = i * 0.01;
    CHECK(ks_two_sample(a, b) == doctest::Approx(0.0));
    for (int i = 0; i < 100; ++i) b[i] = 10.0 + i;
    CHECK(ks_two_sample(a, b) == doctest::Approx(1.0));
    CHECK_THROWS_AS(ks_two_sample(std::vector<double>(10, 0.0), a),
                    std::invalid_argument);

    // same-law samples: small distance typically
    std::mt19937 rng(5);
    std::normal_distribution<double> g;
    std::vector<double> c(2000), d(2000);
    for (auto& v : c) v = g(rng);
    for (auto& v : d) v = g(rng);
    CHECK(ks_two_sample(c, d) < 0.06);

    // shifted law: detectable
    for (auto& v : d) v += 1.0;
    CHECK(ks_two_sample(c, d) > 0.3);
}

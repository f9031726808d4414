#include "doctest.h"

#include <stdexcept>

#include "fqv/filters.hpp"

#include <cmath>
#include <limits>
#include <random>

using namespace fqv;

TEST_CASE("finite difference filters") {
    const Filter f1 = finite_difference_filter(1);
    CHECK(f1.coeffs == std::vector<double>{-1.0, 1.0});
    CHECK(f1.order == 1);

    const Filter f2 = finite_difference_filter(2);
    CHECK(f2.coeffs == std::vector<double>{-1.0, 2.0, -1.0});
    CHECK(f2.order == 2);

    const Filter f4 = finite_difference_filter(4);
    CHECK(f4.coeffs == std::vector<double>{-1.0, 4.0, -6.0, 4.0, -1.0});
    // exact integer moments: sum a q^3 = 0, sum a q^4 = -24
    double m3 = 0.0, m4 = 0.0;
    for (int q = 0; q <= 4; ++q) {
        m3 += f4.coeffs[q] * q * q * q;
        m4 += f4.coeffs[q] * q * q * q * q;
    }
    CHECK(m3 == 0.0);
    CHECK(m4 == -24.0);
}

TEST_CASE("fd filter has |sum a q^l| = l! exactly") {
    for (int l = 1; l <= 10; ++l) {
        const Filter f = finite_difference_filter(l);
        double m = 0.0;
        for (int q = 0; q <= l; ++q) m += f.coeffs[q] * std::pow(double(q), l);
        double fact = 1.0;
        for (int i = 2; i <= l; ++i) fact *= i;
        CHECK(std::abs(m) == fact);
    }
}

TEST_CASE("validate_filter orders and failure modes") {
    CHECK(validate_filter({1.0, -2.0, 1.0}).order == 2);
    CHECK(validate_filter({1.0, -1.0}).order == 1);
    CHECK(validate_filter({1.0, 1.0}).order == 0);   // sum != 0: not a filter
    CHECK_THROWS_AS(custom_filter({1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_filter({}), std::invalid_argument);
    CHECK_THROWS_AS(validate_filter({0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("daubechies db2 matches the standard coefficients") {
    const Filter g = daubechies_filter(2);
    REQUIRE(g.coeffs.size() == 4);
    // up to sign/reversal convention
    const std::vector<double> want{0.48296291314453414, -0.83651630373780794,
                                   0.22414386804201339, 0.12940952255126037};
    for (int i = 0; i < 4; ++i)
        CHECK(g.coeffs[i] == doctest::Approx(want[i]).epsilon(1e-12));
    double energy = 0.0;
    for (double c : g.coeffs) energy += c * c;
    CHECK(energy == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(g.order == 2);
}

TEST_CASE("daubechies moments vanish through p=20") {
    for (int p : {3, 5, 8, 10, 14, 20}) {
        const Filter g = daubechies_filter(p);
        CHECK(static_cast<int>(g.coeffs.size()) == 2 * p);
        CHECK(g.order == p);
        const MomentDiagnostics d = validate_filter(g.coeffs);
        for (int r = 0; r < p; ++r) CHECK(std::abs(d.scaled[r]) < 1e-10);
        // the relative size of the structural moment shrinks with p; db:20
        // sits between the plain thresholds but far above cancellation noise
        const double floor =
            1e3 * 2 * p * std::numeric_limits<double>::epsilon();
        CHECK(std::abs(d.scaled[p]) > (p <= 18 ? 1e-8 : floor));
    }
    CHECK_THROWS_AS(daubechies_filter(1), std::invalid_argument);
    CHECK_THROWS_AS(daubechies_filter(21), std::invalid_argument);
}

TEST_CASE("partial sums end at zero") {
    CHECK(partial_sums(custom_filter({1.0, -1.0})).b == std::vector<double>{1.0, 0.0});
    CHECK(partial_sums(custom_filter({1.0, -2.0, 1.0})).b ==
          std::vector<double>{1.0, -1.0, 0.0});
    CHECK(partial_sums(custom_filter({-1.0, 2.0, -1.0})).b ==
          std::vector<double>{-1.0, 1.0, 0.0});
    // property: random valid filters (random coeffs, forced zero sum)
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int t = 0; t < 50; ++t) {
        std::vector<double> c(5);
        double s = 0.0;
        for (int i = 0; i < 4; ++i) {
            c[i] = u(rng);
            s += c[i];
        }
        c[4] = -s;
        const auto ps = partial_sums(custom_filter(c));
        CHECK(ps.b.back() == 0.0);
        CHECK(ps.b.front() == c[0]);
    }
}

TEST_CASE("filter spec parsing") {
    CHECK(parse_filter_spec("fd:3").id() == "fd:3");
    CHECK(parse_filter_spec("db:4").id() == "db:4");
    const Filter c = parse_filter_spec("custom:1,-2,1");
    CHECK(c.order == 2);
    CHECK_THROWS(parse_filter_spec("nope"));
    CHECK_THROWS(parse_filter_spec("xx:3"));
}

#pragma once

#include <string>
#include <vector>

namespace fqv {

enum class FilterKind { finite_difference, daubechies, custom };

// Discrete filter a_0..a_l annihilating polynomials of degree < p:
// sum_q a_q q^r = 0 for 0 <= r < p (0^0 = 1), sum_q a_q q^p != 0.
struct Filter {
    std::vector<double> coeffs;
    int length = 0;   // l (coeffs has l+1 entries)
    int order = 0;    // p
    FilterKind kind = FilterKind::custom;

    std::string id() const;
};

struct PartialSums {
    std::vector<double> b;   // b_q = sum_{r<=q} a_r; b_l == 0
};

struct MomentDiagnostics {
    std::vector<double> raw;      // sum_q a_q q^r, r = 0..l
    std::vector<double> scaled;   // raw_r / max(1, sum_q |a_q| q^r)
    int order = 0;                // detected p (0 = not a filter)
};

// Moment residuals are tested on the scaled values: raw sums lose up to
// ~|a| * q^r * eps to cancellation, which for long wavelet filters dwarfs
// any fixed absolute threshold.
inline constexpr double kMomentZeroTol = 1e-10;
inline constexpr double kMomentNonzeroTol = 1e-8;

MomentDiagnostics validate_filter(const std::vector<double>& coeffs);

// order-l finite difference: a_k = (-1)^{k+1} C(l,k)
Filter finite_difference_filter(int l);

// Daubechies wavelet (high-pass) filter with p vanishing moments, length 2p,
// unit energy. Spectral factorization of the Bernstein polynomial, roots via
// companion matrix, then a least-squares projection onto the exact
// vanishing-moment subspace to absorb root-finding noise.
Filter daubechies_filter(int p);

Filter custom_filter(std::vector<double> coeffs);

PartialSums partial_sums(const Filter& f);

// CLI spec strings: "fd:<l>", "db:<p>", "custom:<c0,c1,...>"
Filter parse_filter_spec(const std::string& spec);

} // namespace fqv

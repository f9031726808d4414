#pragma once

#include "fqv/analytic.hpp"
#include "fqv/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fqv {

enum class ProcessKind { bm, fbm, rosenblatt };

std::string process_name(ProcessKind p);
ProcessKind parse_process(const std::string& name);

// Uniform-grid observations Z(0), Z(1/N), ..., Z(1).
struct SamplePath {
    std::vector<double> values;   // N+1 entries, values[0] == 0
    long n = 0;
    ProcessKind process = ProcessKind::fbm;
    double hurst = 0.5;
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
    long oversample = 1;          // rosenblatt only
};

// gamma(k) = (|k+1|^{2H} - 2|k|^{2H} + |k-1|^{2H}) / 2
double fgn_autocov(double h, long k);

// Exact stationary fGn, unit variance: circulant embedding (FFT) with a
// Cholesky fallback when the embedding has a materially negative eigenvalue.
// Output is a pure function of (h, n, stream).
std::vector<double> fgn(double h_any, long n, const RngStream& stream);

SamplePath fbm_path(double h_any, long n, const RngStream& stream);

// Hermite-rank-2 scheme: Z(i/N) = kappa * sum_{j<=i*m} (X_j^2 - 1) with X
// unit-variance fGn of parameter H' = (H+1)/2 and kappa the exact normalizer
// giving Var[Z(1)] = 1.
SamplePath rosenblatt_path(const HurstParam& h, long n, long oversample,
                           const RngStream& stream);

// endpoint sampler for the reference law of Z(1)
double rosenblatt_z1(const HurstParam& h, long n_internal, const RngStream& stream);

} // namespace fqv

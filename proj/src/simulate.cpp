#include "fqv/simulate.hpp"

#include "fqv/simd/kernels.hpp"

#include <fftw3.h>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace fqv {

std::string process_name(ProcessKind p) {
    switch (p) {
        case ProcessKind::bm: return "bm";
        case ProcessKind::fbm: return "fbm";
        case ProcessKind::rosenblatt: return "rosenblatt";
    }
    return "?";
}

ProcessKind parse_process(const std::string& name) {
    if (name == "bm") return ProcessKind::bm;
    if (name == "fbm") return ProcessKind::fbm;
    if (name == "rosenblatt") return ProcessKind::rosenblatt;
    throw std::invalid_argument("unknown process: " + name);
}

double fgn_autocov(double h, long k) {
    const double a = std::abs(static_cast<double>(k));
    return 0.5 * (std::pow(a + 1.0, 2.0 * h) - 2.0 * std::pow(a, 2.0 * h) +
                  std::pow(std::abs(a - 1.0), 2.0 * h));
}

namespace {

constexpr long kCholeskyMax = 4096;   // fallback ceiling (spec: below 2^12)

// FFTW planning is not thread-safe; plans are cached per size and executed
// through the new-array interface on caller-owned buffers.
class FftPlanCache {
public:
    static FftPlanCache& instance() {
        static FftPlanCache c;
        return c;
    }

    void forward(long m, fftw_complex* in, fftw_complex* out) {
        fftw_plan p;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = plans_.find(m);
            if (it == plans_.end()) {
                std::vector<fftw_complex> a(m), b(m);
                p = fftw_plan_dft_1d(static_cast<int>(m), a.data(), b.data(),
                                     FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
                plans_[m] = p;
            } else {
                p = it->second;
            }
        }
        fftw_execute_dft(p, in, out);
    }

private:
    FftPlanCache() = default;
    std::mutex mu_;
    std::map<long, fftw_plan> plans_;
};

// Eigenvalues of the 2n-circulant embedding of gamma(0..n); cached per
// (h, n) since MC cells regenerate many same-size paths
const std::vector<double>& embedding_eigenvalues(double h, long n) {
    static std::mutex mu;
    static std::map<std::pair<double, long>, std::vector<double>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({h, n});
        if (it != cache.end()) return it->second;
    }
    const long m = 2 * n;
    std::vector<fftw_complex> row(m), out(m);
    for (long k = 0; k <= n; ++k) {
        row[k][0] = fgn_autocov(h, k);
        row[k][1] = 0.0;
    }
    for (long k = 1; k < n; ++k) {
        row[m - k][0] = row[k][0];
        row[m - k][1] = 0.0;
    }
    FftPlanCache::instance().forward(m, row.data(), out.data());
    std::vector<double> lam(m);
    for (long k = 0; k < m; ++k) lam[k] = out[k][0];
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(h, n), std::move(lam)).first->second;
}

std::vector<double> fgn_circulant(double h, long n, const RngStream& stream) {
    const long m = 2 * n;
    const std::vector<double>& lam = embedding_eigenvalues(h, n);
    double max_lam = 0.0, min_lam = 0.0;
    for (double v : lam) {
        max_lam = std::max(max_lam, v);
        min_lam = std::min(min_lam, v);
    }
    if (min_lam < -1e-9 * max_lam)
        return {};   // embedding failed; caller falls back
    // X = Re FFT(sqrt(lam/m) z), z_k = g_k + i h_k with iid N(0,1) parts,
    // is exact fGn; draws 2k, 2k+1 feed component k
    std::vector<fftw_complex> in(m), out(m);
    for (long k = 0; k < m; ++k) {
        const double s = std::sqrt(std::max(lam[k], 0.0) / static_cast<double>(m));
        in[k][0] = s * stream.normal(2 * static_cast<std::uint64_t>(k));
        in[k][1] = s * stream.normal(2 * static_cast<std::uint64_t>(k) + 1);
    }
    FftPlanCache::instance().forward(m, in.data(), out.data());
    std::vector<double> x(n);
    for (long k = 0; k < n; ++k) x[k] = out[k][0];
    return x;
}

std::vector<double> fgn_cholesky(double h, long n, const RngStream& stream) {
    if (n > kCholeskyMax)
        throw std::runtime_error("fgn: circulant embedding failed and n exceeds "
                                 "the Cholesky fallback ceiling");
    Eigen::MatrixXd g(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= i; ++j) {
            const double v = fgn_autocov(h, i - j);
            g(i, j) = v;
            g(j, i) = v;
        }
    Eigen::LLT<Eigen::MatrixXd> llt(g);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("fgn: Cholesky fallback failed");
    Eigen::VectorXd z(n);
    for (long i = 0; i < n; ++i) z[i] = stream.normal(static_cast<std::uint64_t>(i));
    Eigen::VectorXd x = llt.matrixL() * z;
    return std::vector<double>(x.data(), x.data() + n);
}

} // namespace

std::vector<double> fgn(double h_any, long n, const RngStream& stream) {
    if (!(h_any > 0.0 && h_any < 1.0))
        throw std::invalid_argument("fgn: H must lie in (0,1)");
    if (n < 2) throw std::invalid_argument("fgn: n must be >= 2");
    std::vector<double> x = fgn_circulant(h_any, n, stream);
    if (!x.empty()) return x;
    return fgn_cholesky(h_any, n, stream);
}

SamplePath fbm_path(double h_any, long n, const RngStream& stream) {
    SamplePath p;
    p.n = n;
    p.process = (h_any == 0.5) ? ProcessKind::bm : ProcessKind::fbm;
    p.hurst = h_any;
    p.seed = stream.seed;
    p.stream_id = stream.stream_id;
    const std::vector<double> x = fgn(h_any, n, stream);
    p.values.resize(n + 1);
    p.values[0] = 0.0;
    const double scale = std::pow(static_cast<double>(n), -h_any);
    double acc = 0.0;
    for (long i = 0; i < n; ++i) {
        acc += x[i];
        p.values[i + 1] = acc * scale;
    }
    return p;
}

SamplePath rosenblatt_path(const HurstParam& h, long n, long oversample,
                           const RngStream& stream) {
    if (n < 1) throw std::invalid_argument("rosenblatt_path: N must be >= 1");
    if (oversample < 1)
        throw std::invalid_argument("rosenblatt_path: oversample must be >= 1");
    const long nm = n * oversample;
    const std::vector<double> x = fgn(h.h_prime, nm, stream);
    std::vector<double> y(nm);
    simd::active().square_minus_one(x.data(), y.data(), nm);

    // kappa^{-2} = Var(sum_j H2(X_j)) = 2 sum_{|k|<nm} (nm-|k|) gamma(k)^2;
    // cached per (H', nm)
    static std::mutex kmu;
    static std::map<std::pair<double, long>, double> kcache;
    double kappa;
    {
        std::lock_guard<std::mutex> lock(kmu);
        auto it = kcache.find({h.h_prime, nm});
        kappa = (it != kcache.end()) ? it->second : 0.0;
    }
    if (kappa == 0.0) {
        double var = 0.0;
        for (long k = nm - 1; k >= 1; --k) {
            const double g = fgn_autocov(h.h_prime, k);
            var += 2.0 * static_cast<double>(nm - k) * g * g;
        }
        var = 2.0 * (var + static_cast<double>(nm));   // gamma(0) = 1 term
        kappa = 1.0 / std::sqrt(var);
        std::lock_guard<std::mutex> lock(kmu);
        kcache[{h.h_prime, nm}] = kappa;
    }

    SamplePath p;
    p.n = n;
    p.process = ProcessKind::rosenblatt;
    p.hurst = h.h;
    p.seed = stream.seed;
    p.stream_id = stream.stream_id;
    p.oversample = oversample;
    p.values.resize(n + 1);
    p.values[0] = 0.0;
    double acc = 0.0;
    long j = 0;
    for (long i = 1; i <= n; ++i) {
        for (long t = 0; t < oversample; ++t) acc += y[j++];
        p.values[i] = kappa * acc;
    }
    return p;
}

double rosenblatt_z1(const HurstParam& h, long n_internal, const RngStream& stream) {
    return rosenblatt_path(h, 1, n_internal, stream).values.back();
}

} // namespace fqv

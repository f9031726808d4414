#include "fqv/mc.hpp"

#include "fqv/analytic.hpp"
#include "fqv/stats.hpp"
#include "fqv/variation.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace fqv {

namespace {

struct ReplicateRow {
    bool ok = false;
    double h_hat = 0.0;
    double err = 0.0;          // h_hat - h_true
    double vn = 0.0;
    double normalized_vn = 0.0;   // N^{1-H} v_n / sqrt(c2)
    double adjusted_stat = 0.0;   // sqrt(N) * adjusted variation
    double error_stat = 0.0;      // normalized error statistic
};

std::array<double, 5> summary_of(const std::vector<double>& x) {
    return {mean(x), median(std::vector<double>(x)), std::sqrt(variance(x)),
            skewness(x), excess_kurtosis(x)};
}

} // namespace

McReport run_montecarlo(const ExperimentConfig& cfg) {
    if (cfg.replicates < 1)
        throw std::invalid_argument("run_montecarlo: replicates must be >= 1");
    if (cfg.hursts.empty() || cfg.ns.empty() || cfg.filter_specs.empty())
        throw std::invalid_argument("run_montecarlo: empty grid");
    const int workers = std::max(1, cfg.workers);

    McReport report;
    report.config = cfg;

    for (const std::string& spec : cfg.filter_specs) {
        const Filter filter = parse_filter_spec(spec);
        for (double hv : cfg.hursts) {
            const HurstParam h(hv);
            const double c2v = c2(filter, h);
            for (long n : cfg.ns) {
                std::vector<ReplicateRow> rows(cfg.replicates);
                std::atomic<long> next{0};
                auto work = [&]() {
                    for (;;) {
                        const long r = next.fetch_add(1);
                        if (r >= cfg.replicates) break;
                        ReplicateRow& row = rows[r];
                        try {
                            const RngStream stream{cfg.seed,
                                                   static_cast<std::uint64_t>(r)};
                            SamplePath path;
                            if (cfg.process == ProcessKind::rosenblatt)
                                path = rosenblatt_path(h, n, cfg.oversample, stream);
                            else
                                path = fbm_path(cfg.process == ProcessKind::bm ? 0.5 : hv,
                                                n, stream);
                            const double vn = v_n(path, filter, h);
                            row.vn = vn;
                            row.normalized_vn =
                                std::pow(double(n), 1.0 - hv) * vn / std::sqrt(c2v);
                            row.adjusted_stat =
                                std::sqrt(double(n)) *
                                adjusted_variation(path, filter, h);
                            const EstimateReport est = estimate_hurst(path, filter);
                            if (est.status != EstimateStatus::ok)
                                throw std::runtime_error("estimate: " +
                                                         estimate_status_name(est.status));
                            row.h_hat = est.h_hat;
                            row.err = est.h_hat - hv;
                            row.error_stat =
                                normalized_error_stat(est.h_hat, hv, n, filter);
                            row.ok = true;
                        } catch (const std::exception&) {
                            row.ok = false;
                        }
                    }
                };
                if (workers == 1) {
                    work();
                } else {
                    std::vector<std::thread> pool;
                    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
                    for (auto& t : pool) t.join();
                }

                CellSummary cell;
                cell.process = process_name(cfg.process);
                cell.hurst = hv;
                cell.n = n;
                cell.filter_id = filter.id();
                cell.replicates = cfg.replicates;
                std::vector<double> hh, err, abse, vn, nvn, adj, stat;
                for (const auto& row : rows) {
                    if (!row.ok) {
                        ++cell.errors;
                        continue;
                    }
                    hh.push_back(row.h_hat);
                    err.push_back(row.err);
                    abse.push_back(std::abs(row.err));
                    vn.push_back(row.vn);
                    nvn.push_back(row.normalized_vn);
                    adj.push_back(row.adjusted_stat);
                    stat.push_back(row.error_stat);
                }
                if (hh.size() >= 2) {
                    cell.stats.emplace_back("h_hat", summary_of(hh));
                    cell.stats.emplace_back("h_err", summary_of(err));
                    cell.stats.emplace_back("abs_h_err", summary_of(abse));
                    cell.stats.emplace_back("v_n", summary_of(vn));
                    cell.stats.emplace_back("normalized_v_n", summary_of(nvn));
                    cell.stats.emplace_back("sqrtN_adjusted", summary_of(adj));
                    cell.stats.emplace_back("normalized_error_stat", summary_of(stat));
                }
                if (cfg.ks_reference >= 30 &&
                    cfg.process == ProcessKind::rosenblatt &&
                    static_cast<long>(nvn.size()) >= 30) {
                    std::vector<double> z1(cfg.ks_reference);
                    for (long i = 0; i < cfg.ks_reference; ++i)
                        z1[i] = rosenblatt_z1(
                            h, 16384,
                            RngStream{cfg.seed + 0x9e3779b97f4a7c15ull,
                                      static_cast<std::uint64_t>(i)});
                    cell.ks_vs_reference = ks_two_sample(nvn, z1);
                }
                report.cells.push_back(std::move(cell));
            }
        }
    }
    return report;
}

nlohmann::ordered_json to_json(const McReport& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = "1";
    j["type"] = "mc_report";
    j["config"] = {{"process", process_name(r.config.process)},
                   {"hursts", r.config.hursts},
                   {"ns", r.config.ns},
                   {"filters", r.config.filter_specs},
                   {"replicates", r.config.replicates},
                   {"seed", r.config.seed},
                   {"oversample", r.config.oversample}};
    j["cells"] = nlohmann::ordered_json::array();
    for (const auto& c : r.cells) {
        nlohmann::ordered_json cj;
        cj["process"] = c.process;
        cj["H"] = c.hurst;
        cj["n"] = c.n;
        cj["filter"] = c.filter_id;
        cj["replicates"] = c.replicates;
        cj["errors"] = c.errors;
        for (const auto& [name, s] : c.stats)
            cj[name] = {{"mean", s[0]}, {"median", s[1]}, {"sd", s[2]},
                        {"skewness", s[3]}, {"excess_kurtosis", s[4]}};
        if (c.ks_vs_reference) cj["ks_vs_reference"] = *c.ks_vs_reference;
        j["cells"].push_back(std::move(cj));
    }
    return j;
}

std::vector<FigureRow> figure_table(const FigureConfig& cfg) {
    std::vector<double> hs = cfg.hursts;
    if (hs.empty())
        for (double h = 0.55; h < 0.951; h += 0.1) hs.push_back(h);
    std::vector<FigureRow> rows;
    for (const char* kind : {"fd", "db"}) {
        for (int p = cfg.order_min; p <= cfg.order_max; ++p) {
            const Filter f = (kind[0] == 'f') ? finite_difference_filter(p)
                                              : daubechies_filter(p);
            for (double hv : hs) {
                double h_used = hv;
                if (cfg.se_at_estimated) {
                    const HurstParam h(hv);
                    const SamplePath path = rosenblatt_path(
                        h, cfg.estimate_n, cfg.oversample,
                        RngStream{cfg.seed, static_cast<std::uint64_t>(
                                                rows.size())});
                    const EstimateReport est = estimate_hurst(path, f);
                    if (est.status == EstimateStatus::ok) h_used = est.h_hat;
                }
                rows.push_back(
                    {kind, p, hv, standard_error(h_used, cfg.n, f)});
            }
        }
    }
    return rows;
}

} // namespace fqv

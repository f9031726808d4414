#include "fqv/analytic.hpp"
#include "fqv/constants.hpp"
#include "fqv/estimator.hpp"
#include "fqv/io.hpp"
#include "fqv/mc.hpp"
#include "fqv/simd/kernels.hpp"
#include "fqv/simulate.hpp"
#include "fqv/variation.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

void emit(const nlohmann::ordered_json& j, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot open for write: " + out);
    os << j.dump(2) << "\n";
}

std::vector<double> parse_grid(const std::string& s) {
    // "a" | "a,b,c" | "a:b:step"
    std::vector<double> out;
    if (s.find(':') != std::string::npos) {
        double a, b, step;
        char c1, c2;
        std::istringstream is(s);
        if (!(is >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':')
            throw std::runtime_error("bad grid spec: " + s);
        for (double v = a; v <= b + 1e-12; v += step) out.push_back(v);
        return out;
    }
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"filtered quadratic variations: simulation, constants and "
                 "Hurst estimation for Rosenblatt and fBm paths"};
    app.set_config("--config")->configurable(false);

    std::uint64_t seed = 0;
    int workers = 1;
    std::string out;
    app.add_option("--seed", seed, "base RNG seed")->capture_default_str();
    app.add_option("--workers", workers, "worker threads")->capture_default_str();
    app.add_option("--out", out, "output file (default: stdout)");

    // ---- simulate ----
    auto* sim = app.add_subcommand("simulate", "generate a sample path as CSV");
    std::string sim_process = "rosenblatt";
    double sim_h = 0.7;
    long sim_n = 1024, sim_m = 16;
    std::uint64_t sim_stream = 0;
    sim->add_option("--process", sim_process, "fbm | rosenblatt")->capture_default_str();
    sim->add_option("--hurst", sim_h, "Hurst index")->capture_default_str();
    sim->add_option("--n", sim_n, "grid size N")->capture_default_str();
    sim->add_option("--oversample", sim_m, "rosenblatt oversampling m")
        ->capture_default_str();
    sim->add_option("--stream", sim_stream, "stream id (replicate index)")
        ->capture_default_str();

    // ---- estimate ----
    auto* est = app.add_subcommand("estimate", "estimate H from a CSV path");
    std::string est_input, est_filter = "fd:2";
    std::optional<double> est_true_h;
    est->add_option("--input", est_input, "input CSV (t,value)")->required();
    est->add_option("--filter", est_filter, "fd:<l> | db:<p> | custom:<c0,c1,...>")
        ->capture_default_str();
    est->add_option("--true-hurst", est_true_h, "known H for oracle statistics");

    // ---- constants ----
    auto* con = app.add_subcommand("constants", "asymptotic-variance constants");
    std::string con_filter = "fd:2", con_which = "c,c2";
    double con_h = 0.7;
    long con_kmax = 10000, con_n = 1024;
    int con_nodes = 16;
    double con_rtol = 5e-3;
    int con_rho_count = 21;
    con->add_option("--filter", con_filter)->capture_default_str();
    con->add_option("--hurst", con_h)->capture_default_str();
    con->add_option("--which", con_which, "subset of c,c2,c1,c3")->capture_default_str();
    con->add_option("--kmax", con_kmax)->capture_default_str();
    con->add_option("--nodes", con_nodes)->capture_default_str();
    con->add_option("--rel-tol", con_rtol)->capture_default_str();
    con->add_option("--n", con_n, "N for the c3 sum")->capture_default_str();
    con->add_option("--rho-count", con_rho_count)->capture_default_str();

    // ---- figures ----
    auto* fig = app.add_subcommand("figures", "standard-error table vs filter order");
    long fig_n = 10000;
    int fig_omin = 2, fig_omax = 20;
    std::string fig_hgrid = "0.55:0.95:0.1", fig_se_at = "true";
    long fig_est_n = 4096, fig_m = 16;
    fig->add_option("--n", fig_n)->capture_default_str();
    fig->add_option("--order-min", fig_omin)->capture_default_str();
    fig->add_option("--order-max", fig_omax)->capture_default_str();
    fig->add_option("--hurst-grid", fig_hgrid)->capture_default_str();
    fig->add_option("--se-at", fig_se_at, "true | estimated")->capture_default_str();
    fig->add_option("--estimate-n", fig_est_n)->capture_default_str();
    fig->add_option("--oversample", fig_m)->capture_default_str();

    // ---- montecarlo ----
    auto* mc = app.add_subcommand("montecarlo", "seeded replicate study");
    std::string mc_process = "rosenblatt", mc_hgrid = "0.7", mc_ngrid = "1024";
    std::vector<std::string> mc_filters{"fd:2"};
    long mc_reps = 100, mc_m = 16, mc_ksref = 0;
    mc->add_option("--process", mc_process)->capture_default_str();
    mc->add_option("--hurst", mc_hgrid, "grid: a | a,b | a:b:step")->capture_default_str();
    mc->add_option("--n", mc_ngrid, "grid of N values")->capture_default_str();
    mc->add_option("--filter", mc_filters, "filter specs")->capture_default_str();
    mc->add_option("--replicates", mc_reps)->capture_default_str();
    mc->add_option("--oversample", mc_m)->capture_default_str();
    mc->add_option("--ks-reference", mc_ksref,
                   "z1 reference sample size for the KS column (0 = off)")
        ->capture_default_str();

    app.require_subcommand(0, 1);
    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            const fqv::RngStream stream{seed, sim_stream};
            fqv::SamplePath path;
            if (sim_process == "rosenblatt") {
                const fqv::HurstParam h(sim_h);
                path = fqv::rosenblatt_path(h, sim_n, sim_m, stream);
            } else if (sim_process == "fbm") {
                path = fqv::fbm_path(sim_h, sim_n, stream);
            } else {
                throw std::runtime_error("simulate: --process must be fbm or rosenblatt");
            }
            if (out.empty()) throw std::runtime_error("simulate: --out is required");
            fqv::write_path_csv(path, out);
            return 0;
        }
        if (est->parsed()) {
            fqv::SamplePath path = fqv::read_path_csv(est_input);
            const fqv::Filter f = fqv::parse_filter_spec(est_filter);
            const fqv::VariationReport vr =
                fqv::variation_report(path, f, est_true_h);
            const fqv::EstimateReport er = fqv::estimate_hurst(path, f);
            nlohmann::ordered_json j;
            j["variation"] = fqv::to_json(vr);
            j["estimate"] = fqv::to_json(er);
            if (est_true_h && er.status == fqv::EstimateStatus::ok)
                j["normalized_error_stat"] = fqv::normalized_error_stat(
                    er.h_hat, *est_true_h, path.n, f);
            emit(j, out);
            return er.status == fqv::EstimateStatus::ok ? 0 : 2;
        }
        if (con->parsed()) {
            const fqv::Filter f = fqv::parse_filter_spec(con_filter);
            const fqv::HurstParam h(con_h);
            fqv::TruncationPolicy policy;
            policy.k_max = con_kmax;
            policy.nodes_per_dim = con_nodes;
            policy.rel_tol = con_rtol;
            fqv::ConstantsReport rep;
            rep.filter_id = f.id();
            rep.h = con_h;
            rep.c = fqv::c_of_h(f, con_h);
            rep.c2_value = fqv::c2(f, h);
            if (con_which.find("c1") != std::string::npos)
                rep.c1_value = fqv::c1(f, h, policy);
            if (con_which.find("c3") != std::string::npos)
                rep.c3_value = fqv::c3(f, h, con_n, policy);
            rep.rho_abs = fqv::covariance_table(f, h, con_rho_count - 1).rho_abs;
            rep.simd = fqv::simd::active_name();
            emit(fqv::to_json(rep), out);
            return 0;
        }
        if (fig->parsed()) {
            fqv::FigureConfig cfg;
            cfg.n = fig_n;
            cfg.order_min = fig_omin;
            cfg.order_max = fig_omax;
            cfg.hursts = parse_grid(fig_hgrid);
            cfg.se_at_estimated = (fig_se_at == "estimated");
            cfg.estimate_n = fig_est_n;
            cfg.oversample = fig_m;
            cfg.seed = seed;
            const auto rows = fqv::figure_table(cfg);
            std::vector<std::array<std::string, 4>> text;
            text.reserve(rows.size());
            for (const auto& r : rows)
                text.push_back({r.filter_kind, std::to_string(r.order),
                                fqv::format_double(r.hurst),
                                fqv::format_double(r.std_err)});
            if (out.empty()) throw std::runtime_error("figures: --out is required");
            fqv::write_figure_csv(text, out);
            return 0;
        }
        if (mc->parsed()) {
            fqv::ExperimentConfig cfg;
            cfg.process = fqv::parse_process(mc_process);
            cfg.hursts = parse_grid(mc_hgrid);
            for (double n : parse_grid(mc_ngrid)) cfg.ns.push_back(static_cast<long>(n));
            cfg.filter_specs = mc_filters;
            cfg.replicates = mc_reps;
            cfg.seed = seed;
            cfg.workers = workers;
            cfg.oversample = mc_m;
            cfg.ks_reference = mc_ksref;
            emit(fqv::to_json(fqv::run_montecarlo(cfg)), out);
            return 0;
        }
        std::cout << app.help() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

#include "doctest.h"

#include <stdexcept>

#include "fqv/io.hpp"
#include "fqv/mc.hpp"

using namespace fqv;

namespace {

ExperimentConfig small_config() {
    ExperimentConfig cfg;
    cfg.process = ProcessKind::rosenblatt;
    cfg.hursts = {0.7};
    cfg.ns = {128};
    cfg.filter_specs = {"fd:2"};
    cfg.replicates = 24;
    cfg.seed = 99;
    cfg.oversample = 8;
    return cfg;
}

} // namespace

TEST_CASE("montecarlo is bit-identical across worker counts") {
    ExperimentConfig cfg = small_config();
    cfg.workers = 1;
    const std::string a = to_json(run_montecarlo(cfg)).dump();
    cfg.workers = 8;
    const std::string b = to_json(run_montecarlo(cfg)).dump();
    CHECK(a == b);
}

TEST_CASE("montecarlo cell bookkeeping") {
    ExperimentConfig cfg = small_config();
    cfg.hursts = {0.6, 0.8};
    cfg.ns = {64, 128};
    const McReport r = run_montecarlo(cfg);
    CHECK(r.cells.size() == 4);
    for (const auto& c : r.cells) {
        CHECK(c.replicates == 24);
        CHECK(c.errors == 0);
        CHECK(!c.stats.empty());
    }
    CHECK_THROWS_AS(run_montecarlo(ExperimentConfig{}), std::invalid_argument);
}

TEST_CASE("replicates=1 reproduces a single simulate+estimate run") {
    ExperimentConfig cfg = small_config();
    cfg.replicates = 2;   // need >= 2 for summaries; replicate 0 must match direct run
    const McReport r = run_montecarlo(cfg);
    const HurstParam h(0.7);
    const Filter f = parse_filter_spec("fd:2");
    const SamplePath p = rosenblatt_path(h, 128, 8, RngStream{99, 0});
    const EstimateReport est = estimate_hurst(p, f);
    // the mean over {replicate0, replicate1} must bracket replicate 0's value
    double mean_hhat = 0.0;
    for (const auto& [name, s] : r.cells[0].stats)
        if (name == "h_hat") mean_hhat = s[0];
    const SamplePath p1 = rosenblatt_path(h, 128, 8, RngStream{99, 1});
    const EstimateReport est1 = estimate_hurst(p1, f);
    CHECK(mean_hhat == doctest::Approx(0.5 * (est.h_hat + est1.h_hat)).epsilon(1e-15));
}

TEST_CASE("figure table shape") {
    FigureConfig cfg;
    cfg.order_min = 2;
    cfg.order_max = 4;
    cfg.hursts = {0.6, 0.8};
    const auto rows = figure_table(cfg);
    CHECK(rows.size() == 2 * 3 * 2);
    for (const auto& r : rows) {
        CHECK(r.std_err > 0.0);
        CHECK((r.filter_kind == "fd" || r.filter_kind == "db"));
    }
}

TEST_CASE("ks reference column") {
    ExperimentConfig cfg = small_config();
    cfg.replicates = 40;
    cfg.ks_reference = 64;
    const McReport r = run_montecarlo(cfg);
    REQUIRE(r.cells.size() == 1);
    REQUIRE(r.cells[0].ks_vs_reference.has_value());
    CHECK(*r.cells[0].ks_vs_reference >= 0.0);
    CHECK(*r.cells[0].ks_vs_reference <= 1.0);
}

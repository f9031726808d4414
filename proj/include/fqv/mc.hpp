#pragma once

#include "fqv/estimator.hpp"
#include "fqv/filters.hpp"
#include "fqv/simulate.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fqv {

struct ExperimentConfig {
    ProcessKind process = ProcessKind::rosenblatt;
    std::vector<double> hursts;
    std::vector<long> ns;
    std::vector<std::string> filter_specs;
    long replicates = 100;
    std::uint64_t seed = 0;
    int workers = 1;
    long oversample = 16;
    long ks_reference = 0;   // z1 reference sample size; 0 disables KS column
};

struct CellSummary {
    std::string process;
    double hurst = 0.0;
    long n = 0;
    std::string filter_id;
    long replicates = 0;
    long errors = 0;
    // summary rows: statistic name -> {mean, median, sd, skewness, excess_kurtosis}
    std::vector<std::pair<std::string, std::array<double, 5>>> stats;
    std::optional<double> ks_vs_reference;   // normalized v_n vs z1 sample
};

struct McReport {
    ExperimentConfig config;
    std::vector<CellSummary> cells;
};

// Replicate r of every cell draws from stream (seed, r): worker-count
// independent, and common random numbers across cells by construction.
McReport run_montecarlo(const ExperimentConfig& cfg);

nlohmann::ordered_json to_json(const McReport& r);

struct FigureConfig {
    long n = 10000;
    int order_min = 2;
    int order_max = 20;
    std::vector<double> hursts;        // defaults to 0.55..0.95 step 0.1
    bool se_at_estimated = false;      // true: plug in estimated H from one path
    long estimate_n = 4096;            // path size for the estimated mode
    long oversample = 16;
    std::uint64_t seed = 0;
};

struct FigureRow {
    std::string filter_kind;   // "fd" | "db"
    int order = 0;
    double hurst = 0.0;
    double std_err = 0.0;
};

std::vector<FigureRow> figure_table(const FigureConfig& cfg);

} // namespace fqv

#include "fqv/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fqv {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_path_csv(const SamplePath& path, const std::string& file) {
    std::ofstream os(file);
    if (!os) throw std::runtime_error("cannot open for write: " + file);
    os << "t,value\n";
    for (long i = 0; i <= path.n; ++i) {
        os << format_double(static_cast<double>(i) / static_cast<double>(path.n))
           << ',' << format_double(path.values[i]) << '\n';
    }
    if (!os) throw std::runtime_error("write failed: " + file);
}

SamplePath read_path_csv(const std::string& file) {
    std::ifstream is(file);
    if (!is) throw std::runtime_error("cannot open for read: " + file);
    std::string line;
    if (!std::getline(is, line) || line.rfind("t,value", 0) != 0)
        throw std::runtime_error("bad CSV header in " + file);
    SamplePath p;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("bad CSV row in " + file + ": " + line);
        p.values.push_back(std::stod(line.substr(comma + 1)));
    }
    if (p.values.size() < 2) throw std::runtime_error("CSV has no data rows: " + file);
    p.n = static_cast<long>(p.values.size()) - 1;
    return p;
}

void write_figure_csv(const std::vector<std::array<std::string, 4>>& rows,
                      const std::string& file) {
    std::ofstream os(file);
    if (!os) throw std::runtime_error("cannot open for write: " + file);
    os << "filter_kind,order,H,std_err\n";
    for (const auto& r : rows)
        os << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << '\n';
}

nlohmann::ordered_json to_json(const VariationReport& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["type"] = "variation_report";
    j["s_n"] = r.s_n;
    j["n"] = r.n;
    j["filter"] = r.filter_id;
    if (r.h_used) {
        j["h_used"] = *r.h_used;
        j["v_n"] = *r.v_n;
        j["adjusted"] = *r.adjusted;
    }
    return j;
}

nlohmann::ordered_json to_json(const EstimateReport& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["type"] = "estimate_report";
    j["status"] = estimate_status_name(r.status);
    j["h_hat"] = r.h_hat;
    if (r.status == EstimateStatus::ok) j["std_err"] = r.std_err;
    j["n"] = r.n;
    j["filter"] = r.filter_id;
    j["s_n"] = r.s_n;
    j["n_large_enough"] = r.n_large_enough;
    j["solver"] = {{"iterations", r.solver.iterations},
                   {"bracket_lo", r.solver.bracket_lo},
                   {"bracket_hi", r.solver.bracket_hi},
                   {"residual", r.solver.residual}};
    return j;
}

nlohmann::ordered_json to_json(const ConstantsReport& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["type"] = "constants_report";
    j["filter"] = r.filter_id;
    j["H"] = r.h;
    j["c"] = r.c;
    j["c2"] = r.c2_value;
    if (r.c1_value) {
        j["c1"] = {{"value", r.c1_value->value},
                   {"converged", r.c1_value->converged},
                   {"tau1", r.c1_value->tau.value},
                   {"tau1_converged", r.c1_value->tau.converged},
                   {"rho_sq_sum", r.c1_value->rho_series.value},
                   {"tau1_trace", r.c1_value->tau.partial_trace},
                   {"rho_sq_trace", r.c1_value->rho_series.partial_trace}};
    }
    if (r.c3_value) {
        j["c3"] = {{"value", r.c3_value->value},
                   {"caveat_n_dependent", r.c3_value->caveat},
                   {"terms", r.c3_value->terms_used}};
    }
    j["rho_abs"] = r.rho_abs;
    j["simd"] = r.simd;
    return j;
}

std::map<std::string, std::string> read_config(const std::string& file) {
    std::ifstream is(file);
    if (!is) throw std::runtime_error("cannot open config: " + file);
    std::map<std::string, std::string> kv;
    std::string line;
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        if (a == std::string::npos) return std::string();
        return s.substr(a, b - a + 1);
    };
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = val;
    }
    return kv;
}

} // namespace fqv

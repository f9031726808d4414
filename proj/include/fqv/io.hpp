#pragma once

#include "fqv/constants.hpp"
#include "fqv/estimator.hpp"
#include "fqv/simulate.hpp"
#include "fqv/variation.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

// single-header nlohmann/json from vendor/
#include "json.hpp"

namespace fqv {

inline constexpr const char* kSchemaVersion = "1";

// 17 significant digits: lossless double round trip
std::string format_double(double v);

void write_path_csv(const SamplePath& path, const std::string& file);
SamplePath read_path_csv(const std::string& file);

void write_figure_csv(const std::vector<std::array<std::string, 4>>& rows,
                      const std::string& file);

nlohmann::ordered_json to_json(const VariationReport& r);
nlohmann::ordered_json to_json(const EstimateReport& r);
nlohmann::ordered_json to_json(const ConstantsReport& r);

// flat "key = value" config text; '#' starts a comment
std::map<std::string, std::string> read_config(const std::string& file);

} // namespace fqv

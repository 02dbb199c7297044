// SPDX-License-Identifier: Apache-2.0
//
// Sampling report for `cellfree analyze`.

#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace cellfree::tools {

struct AnalyzeReport {
    double wavelength = 1.0;
    double resolution = 0.0;
    std::optional<int> n_antennas;
    std::optional<double> alias_radius;
    std::optional<double> max_coverage_radius;  // largest r_s_max the given N supports
    std::optional<double> r_s_max;
    std::optional<int> min_antennas;
    std::optional<bool> bound_violated;         // needs both N and r_s_max
};

/// Throws std::invalid_argument on non-positive inputs.
AnalyzeReport analyze(std::optional<int> n_antennas, std::optional<double> r_s_max);

/// key=value lines, one per populated field.
std::string to_text(const AnalyzeReport& report);
nlohmann::json to_json(const AnalyzeReport& report);

}  // namespace cellfree::tools

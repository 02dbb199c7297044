// SPDX-License-Identifier: Apache-2.0

#include "cellfree_tools/analyze.hpp"

#include "cellfree/analysis.hpp"
#include "cellfree_tools/sweep.hpp"

#include <cmath>
#include <stdexcept>

namespace cellfree::tools {

AnalyzeReport analyze(std::optional<int> n_antennas, std::optional<double> r_s_max) {
    if (n_antennas && *n_antennas < 1) throw std::invalid_argument("antenna count must be positive");
    if (r_s_max && !(*r_s_max > 0.0 && std::isfinite(*r_s_max)))
        throw std::invalid_argument("coverage radius must be positive");

    AnalyzeReport r;
    r.resolution = resolution(r.wavelength);
    r.n_antennas = n_antennas;
    r.r_s_max = r_s_max;
    if (n_antennas) {
        r.alias_radius = alias_radius(*n_antennas, r.wavelength);
        r.max_coverage_radius = *n_antennas * r.wavelength / (4 * kPi);
    }
    if (r_s_max) r.min_antennas = min_antennas(*r_s_max, r.wavelength);
    if (n_antennas && r_s_max) r.bound_violated = *n_antennas < *r.min_antennas;
    return r;
}

std::string to_text(const AnalyzeReport& r) {
    std::string s;
    auto line = [&](const char* key, const std::string& value) { s += std::string(key) + "=" + value + "\n"; };
    line("wavelength_lambda", format_number(r.wavelength));
    line("resolution_lambda", format_number(r.resolution));
    if (r.n_antennas) line("n_antennas", std::to_string(*r.n_antennas));
    if (r.alias_radius) line("alias_radius_lambda", format_number(*r.alias_radius));
    if (r.max_coverage_radius) line("max_coverage_radius_lambda", format_number(*r.max_coverage_radius));
    if (r.r_s_max) line("r_s_max_lambda", format_number(*r.r_s_max));
    if (r.min_antennas) line("min_antennas", std::to_string(*r.min_antennas));
    if (r.bound_violated) line("bound_violated", *r.bound_violated ? "true" : "false");
    return s;
}

nlohmann::json to_json(const AnalyzeReport& r) {
    nlohmann::json j;
    j["wavelength_lambda"] = r.wavelength;
    j["resolution_lambda"] = r.resolution;
    if (r.n_antennas) j["n_antennas"] = *r.n_antennas;
    if (r.alias_radius) j["alias_radius_lambda"] = *r.alias_radius;
    if (r.max_coverage_radius) j["max_coverage_radius_lambda"] = *r.max_coverage_radius;
    if (r.r_s_max) j["r_s_max_lambda"] = *r.r_s_max;
    if (r.min_antennas) j["min_antennas"] = *r.min_antennas;
    if (r.bound_violated) j["bound_violated"] = *r.bound_violated;
    return j;
}

}  // namespace cellfree::tools

// SPDX-License-Identifier: Apache-2.0
//
// Sweep configuration, presets, and the CSV figure-data format.
//
// CSV layout: header "r_ss_lambda,<label>_db,..." with one column per R_W
// (label rw_<value>, or rw_inf for narrowband), ',' separators, '.' decimal
// point, LF line endings, 9 significant digits, dB clamped at -200.

#pragma once

#include "cellfree/ambiguity.hpp"
#include "cellfree/model.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cellfree::tools {

inline constexpr double kDbFloor = -200.0;

struct TruncationOverrides {
    std::optional<int> n_max;
    std::optional<int> l_max;
    std::optional<int> p_max;
    std::optional<int> quad_samples;
    std::optional<bool> adaptive;

    friend bool operator==(const TruncationOverrides&, const TruncationOverrides&) = default;
};

struct SweepConfig {
    std::optional<int> n_antennas;  // empty: continuous ring
    std::vector<double> rw_list;    // +inf: narrowband
    double theta_ss = 3 * kPi / 37;
    double r_max = 100.0;
    int grid_points = 2001;
    Evaluator evaluator = Evaluator::direct;
    TruncationOverrides truncation;
    double ring_radius = 1.0e4;  // scales raw continuous values only; dB columns do not depend on it

    /// Throws std::invalid_argument (or IncompatibleEvaluatorError) on a bad combination.
    void validate() const;
    ArrayConfig array() const;
    Truncation truncation_settings() const;
    double radius_at(int row) const;

    friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

/// "fig1": N = 4096, 0..1000 lambda. "fig2": N = 256, 0..100 lambda. Both use
/// theta_ss = 3 pi / 37, R_W in {1.5, 11.5, 21.5, 31.5, inf}, direct evaluator.
SweepConfig preset(std::string_view name);

/// Overlays the fields present in `j` onto `base`. Unknown keys are rejected.
SweepConfig apply_json(SweepConfig base, const nlohmann::json& j);
nlohmann::json to_json(const SweepConfig& config);
SweepConfig load_config(const std::filesystem::path& path, SweepConfig base = preset("fig2"));

/// Parses "1.5,11.5,inf".
std::vector<double> parse_rw_list(std::string_view text);
/// Parses an integer count or "continuous".
std::optional<int> parse_antenna_setting(std::string_view text);

std::string column_label(double rw);
std::string format_number(double value);

struct SweepTable {
    std::vector<std::string> columns;         // excluding the radius column
    std::vector<double> radii;
    std::vector<std::vector<double>> db;      // db[column][row], clamped at kDbFloor
};

SweepTable run_sweep(const SweepConfig& config, unsigned threads = 0);
void write_csv(std::ostream& out, const SweepTable& table);
void write_csv_file(const std::filesystem::path& path, const SweepTable& table);
SweepTable read_csv(std::istream& in);

}  // namespace cellfree::tools

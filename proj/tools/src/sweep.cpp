// SPDX-License-Identifier: Apache-2.0

#include "cellfree_tools/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cellfree::tools {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const std::vector<double>& figure_rw_list() {
    static const std::vector<double> list{1.5, 11.5, 21.5, 31.5, kInf};
    return list;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

double parse_double(std::string_view text) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
        throw std::invalid_argument("not a number: '" + t + "'");
    return v;
}

double rw_from_json(const nlohmann::json& v) {
    if (v.is_string()) {
        if (v.get<std::string>() == "inf") return kInf;
        throw std::invalid_argument("rw_list entries must be numbers or \"inf\"");
    }
    if (!v.is_number()) throw std::invalid_argument("rw_list entries must be numbers or \"inf\"");
    return v.get<double>();
}

}  // namespace

void SweepConfig::validate() const {
    if (grid_points < 2) throw std::invalid_argument("grid_points must be >= 2");
    if (!(r_max > 0.0) || !std::isfinite(r_max)) throw std::invalid_argument("r_max must be > 0");
    if (!std::isfinite(theta_ss)) throw std::invalid_argument("theta_ss must be finite");
    if (rw_list.empty()) throw std::invalid_argument("rw_list must not be empty");
    for (double rw : rw_list)
        if (!(rw > 0.0)) throw std::invalid_argument("R_W values must be > 0 or inf");
    if (n_antennas && *n_antennas < 1) throw std::invalid_argument("n_antennas must be >= 1");
    check_compatible(evaluator, array());
    truncation_settings();
}

ArrayConfig SweepConfig::array() const {
    return ArrayConfig(ring_radius, n_antennas ? AntennaCount::finite(*n_antennas) : AntennaCount::continuous());
}

Truncation SweepConfig::truncation_settings() const {
    Truncation t;
    t.n_max = truncation.n_max;
    if (truncation.l_max) t.l_max = *truncation.l_max;
    if (truncation.p_max) t.p_max = *truncation.p_max;
    if (truncation.quad_samples) t.quad = QuadratureSpec{*truncation.quad_samples};
    if (truncation.adaptive) t.adaptive = *truncation.adaptive;
    return t;
}

double SweepConfig::radius_at(int row) const {
    if (row == grid_points - 1) return r_max;
    return r_max * static_cast<double>(row) / static_cast<double>(grid_points - 1);
}

SweepConfig preset(std::string_view name) {
    SweepConfig c;
    c.rw_list = figure_rw_list();
    c.theta_ss = 3 * kPi / 37;
    c.evaluator = Evaluator::direct;
    if (name == "fig1") {
        c.n_antennas = 4096;
        c.r_max = 1000.0;
        c.grid_points = 10001;
    } else if (name == "fig2") {
        c.n_antennas = 256;
        c.r_max = 100.0;
        c.grid_points = 2001;
    } else {
        throw std::invalid_argument("unknown preset '" + std::string(name) + "' (expected fig1 or fig2)");
    }
    return c;
}

SweepConfig apply_json(SweepConfig c, const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("sweep config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "n_antennas") {
            if (value.is_string()) {
                c.n_antennas = parse_antenna_setting(value.get<std::string>());
            } else if (value.is_number_integer()) {
                c.n_antennas = value.get<int>();
            } else {
                throw std::invalid_argument("n_antennas must be an integer or \"continuous\"");
            }
        } else if (key == "rw_list") {
            if (!value.is_array()) throw std::invalid_argument("rw_list must be an array");
            c.rw_list.clear();
            for (const auto& v : value) c.rw_list.push_back(rw_from_json(v));
        } else if (key == "theta_ss") {
            c.theta_ss = value.get<double>();
        } else if (key == "r_max") {
            c.r_max = value.get<double>();
        } else if (key == "grid_points") {
            c.grid_points = value.get<int>();
        } else if (key == "evaluator") {
            const auto e = parse_evaluator(value.get<std::string>());
            if (!e) throw std::invalid_argument("unknown evaluator '" + value.get<std::string>() + "'");
            c.evaluator = *e;
        } else if (key == "ring_radius") {
            c.ring_radius = value.get<double>();
        } else if (key == "truncation") {
            if (!value.is_object()) throw std::invalid_argument("truncation must be an object");
            for (const auto& [tk, tv] : value.items()) {
                if (tk == "n_max") c.truncation.n_max = tv.get<int>();
                else if (tk == "l_max") c.truncation.l_max = tv.get<int>();
                else if (tk == "p_max") c.truncation.p_max = tv.get<int>();
                else if (tk == "quad_samples") c.truncation.quad_samples = tv.get<int>();
                else if (tk == "adaptive") c.truncation.adaptive = tv.get<bool>();
                else throw std::invalid_argument("unknown truncation key '" + tk + "'");
            }
        } else {
            throw std::invalid_argument("unknown sweep config key '" + key + "'");
        }
    }
    return c;
}

nlohmann::json to_json(const SweepConfig& c) {
    nlohmann::json j;
    j["n_antennas"] = c.n_antennas ? nlohmann::json(*c.n_antennas) : nlohmann::json("continuous");
    j["rw_list"] = nlohmann::json::array();
    for (double rw : c.rw_list) j["rw_list"].push_back(std::isinf(rw) ? nlohmann::json("inf") : nlohmann::json(rw));
    j["theta_ss"] = c.theta_ss;
    j["r_max"] = c.r_max;
    j["grid_points"] = c.grid_points;
    j["evaluator"] = std::string(to_string(c.evaluator));
    j["ring_radius"] = c.ring_radius;
    nlohmann::json t = nlohmann::json::object();
    if (c.truncation.n_max) t["n_max"] = *c.truncation.n_max;
    if (c.truncation.l_max) t["l_max"] = *c.truncation.l_max;
    if (c.truncation.p_max) t["p_max"] = *c.truncation.p_max;
    if (c.truncation.quad_samples) t["quad_samples"] = *c.truncation.quad_samples;
    if (c.truncation.adaptive) t["adaptive"] = *c.truncation.adaptive;
    j["truncation"] = t;
    return j;
}

SweepConfig load_config(const std::filesystem::path& path, SweepConfig base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("invalid JSON in " + path.string() + ": " + e.what());
    }
    return apply_json(std::move(base), j);
}

std::vector<double> parse_rw_list(std::string_view text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto item = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        if (item == "inf") {
            out.push_back(kInf);
        } else {
            out.push_back(parse_double(item));
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::optional<int> parse_antenna_setting(std::string_view text) {
    const std::string t = trim(text);
    if (t == "continuous") return std::nullopt;
    int n = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), n);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
        throw std::invalid_argument("antenna count must be an integer or 'continuous', got '" + t + "'");
    return n;
}

std::string column_label(double rw) {
    if (std::isinf(rw)) return "rw_inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, rw);
    if (ec != std::errc{}) throw std::logic_error("cannot format R_W");
    return "rw_" + std::string(buf, ptr);
}

std::string format_number(double value) {
    char buf[64];
    const int n = std::snprintf(buf, sizeof buf, "%.9g", value);
    return std::string(buf, static_cast<std::size_t>(n));
}

SweepTable run_sweep(const SweepConfig& config, unsigned threads) {
    config.validate();
    const auto array = config.array();
    const auto truncation = config.truncation_settings();

    SweepTable table;
    table.radii.resize(static_cast<std::size_t>(config.grid_points));
    for (int i = 0; i < config.grid_points; ++i) table.radii[static_cast<std::size_t>(i)] = config.radius_at(i);

    for (double rw : config.rw_list) {
        const auto wf = std::isinf(rw) ? Waveform::narrowband() : Waveform::with_resolution(rw);
        const auto values = sweep_radii(config.evaluator, array, wf, config.theta_ss, table.radii, truncation, threads);
        std::vector<double> column(values.size());
        std::transform(values.begin(), values.end(), column.begin(),
                       [](const AFValue& v) { return std::max(v.normalized_db, kDbFloor); });
        table.columns.push_back(column_label(rw) + "_db");
        table.db.push_back(std::move(column));
    }
    return table;
}

void write_csv(std::ostream& out, const SweepTable& table) {
    std::string text = "r_ss_lambda";
    for (const auto& c : table.columns) text += "," + c;
    text += '\n';
    for (std::size_t row = 0; row < table.radii.size(); ++row) {
        text += format_number(table.radii[row]);
        for (const auto& column : table.db) text += "," + format_number(column[row]);
        text += '\n';
    }
    out << text;
}

void write_csv_file(const std::filesystem::path& path, const SweepTable& table) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_csv(out, table);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

SweepTable read_csv(std::istream& in) {
    SweepTable table;
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) header.push_back(cell);
    }
    if (header.empty() || header.front() != "r_ss_lambda") throw std::invalid_argument("CSV header must start with r_ss_lambda");
    table.columns.assign(header.begin() + 1, header.end());
    table.db.resize(table.columns.size());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(parse_double(cell));
        if (cells.size() != header.size()) throw std::invalid_argument("CSV row has wrong number of cells");
        table.radii.push_back(cells[0]);
        for (std::size_t c = 1; c < cells.size(); ++c) table.db[c - 1].push_back(cells[c]);
    }
    return table;
}

}  // namespace cellfree::tools

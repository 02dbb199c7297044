// SPDX-License-Identifier: Apache-2.0

#include "cellfree_tools/cli.hpp"

#include "cellfree_tools/analyze.hpp"
#include "cellfree_tools/sweep.hpp"
#include "cellfree_tools/validate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace cellfree::tools {
namespace {

constexpr int kExitBreach = 1;
constexpr int kExitError = 2;

struct SweepArgs {
    std::string config;
    std::string preset;
    std::string out;
    std::string evaluator;
    std::string n;
    std::string rw;
    std::optional<double> theta_ss;
    std::optional<double> r_max;
    std::optional<int> points;
    unsigned threads = 0;
};

struct AnalyzeArgs {
    std::optional<int> n;
    std::optional<double> r_max;
    bool json = false;
};

struct ValidateArgs {
    std::string level = "fast";
    std::string mutant;
};

// preset, then config file, then individual flags
SweepConfig resolve(const SweepArgs& a) {
    SweepConfig c = preset(a.preset.empty() ? "fig2" : a.preset);
    if (!a.config.empty()) c = load_config(a.config, c);
    if (!a.evaluator.empty()) {
        const auto e = parse_evaluator(a.evaluator);
        if (!e) throw std::invalid_argument("unknown evaluator '" + a.evaluator + "'");
        c.evaluator = *e;
    }
    if (!a.n.empty()) c.n_antennas = parse_antenna_setting(a.n);
    if (!a.rw.empty()) c.rw_list = parse_rw_list(a.rw);
    if (a.theta_ss) c.theta_ss = *a.theta_ss;
    if (a.r_max) c.r_max = *a.r_max;
    if (a.points) c.grid_points = *a.points;
    return c;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
    const SweepConfig config = resolve(a);
    config.validate();
    if (a.out.empty() || a.out == "-") {
        write_csv(out, run_sweep(config, a.threads));
        return 0;
    }
    std::ofstream file(a.out, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + a.out);
    write_csv(file, run_sweep(config, a.threads));
    file.close();
    if (!file) throw std::runtime_error("write failed for " + a.out);
    return 0;
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
    const auto report = analyze(a.n, a.r_max);
    if (a.json) {
        out << to_json(report).dump(2) << '\n';
    } else {
        out << to_text(report);
    }
    return 0;
}

int cmd_validate(const ValidateArgs& a, std::ostream& out) {
    const auto level = parse_level(a.level);
    if (!level) throw std::invalid_argument("level must be fast or full");
    const auto evaluators = a.mutant.empty() ? EvaluatorSet::library() : mutant(a.mutant);
    const auto report = run_validation(*level, evaluators);
    print_report(out, report);
    return report.passed() ? 0 : kExitBreach;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ambiguity function and array gain of a circular cell-free antenna ring", "cellfree"};
    app.require_subcommand(1);

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Sweep the AF over R_ss and write one dB column per R_W as CSV");
    sweep->add_option("--config", sweep_args.config, "JSON file with SweepConfig fields");
    sweep->add_option("--preset", sweep_args.preset, "Base parameters (default fig2)")
        ->check(CLI::IsMember({"fig1", "fig2"}));
    sweep->add_option("--out", sweep_args.out, "Output CSV path (default stdout)");
    sweep->add_option("--evaluator", sweep_args.evaluator, "quadrature | series | direct | aliased-series");
    sweep->add_option("--n", sweep_args.n, "Antenna count or 'continuous'");
    sweep->add_option("--rw", sweep_args.rw, "Comma-separated R_W list in wavelengths, 'inf' for narrowband");
    sweep->add_option("--theta-ss", sweep_args.theta_ss, "Displacement angle in radians");
    sweep->add_option("--rmax", sweep_args.r_max, "Sweep upper bound in wavelengths");
    sweep->add_option("--points", sweep_args.points, "Number of grid points (>= 2)");
    sweep->add_option("--threads", sweep_args.threads, "Worker threads (0: hardware concurrency)");

    AnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand("analyze", "Resolution, Nyquist antenna count and alias radius");
    analyze_cmd->add_option("--n", analyze_args.n, "Antenna count");
    analyze_cmd->add_option("--rmax", analyze_args.r_max, "Coverage radius r_s_max in wavelengths");
    analyze_cmd->add_flag("--json", analyze_args.json, "Print JSON instead of key=value lines");

    ValidateArgs validate_args;
    auto* validate = app.add_subcommand("validate", "Run the cross-evaluator oracle suites");
    validate->add_option("--level", validate_args.level, "fast | full")->check(CLI::IsMember({"fast", "full"}));
    validate->add_option("--mutant", validate_args.mutant)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*sweep) return cmd_sweep(sweep_args, out);
        if (*analyze_cmd) return cmd_analyze(analyze_args, out);
        if (*validate) return cmd_validate(validate_args, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace cellfree::tools

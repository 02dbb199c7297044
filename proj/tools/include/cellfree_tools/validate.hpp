// SPDX-License-Identifier: Apache-2.0
//
// Cross-evaluator oracle suites behind `cellfree validate`.
//
// Every evaluator is reached through an EvaluatorSet so a deliberately broken
// implementation can be swapped in to check that the suites notice.

#pragma once

#include "cellfree/ambiguity.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cellfree::tools {

enum class ValidationLevel { fast, full };

std::optional<ValidationLevel> parse_level(std::string_view name) noexcept;

struct EvaluatorSet {
    using AF = std::function<AFValue(const ArrayConfig&, const Waveform&, const Displacement&)>;
    using Residual = std::function<std::complex<double>(const ArrayConfig&, const Waveform&, const UserPosition& target,
                                                        const UserPosition& interferer, double ap_angle)>;

    AF continuous_series;
    AF continuous_quadrature;
    AF discrete_direct;
    AF discrete_series;
    Residual time_domain;

    static EvaluatorSet library();
};

/// Aliased series evaluated with J_n(+kR_ss) in place of J_n(-kR_ss). Odd
/// Bessel orders flip sign, which only shows up when N is odd.
AFValue mis_signed_discrete_series(const ArrayConfig& array, const Waveform& wf, const Displacement& d);

/// Library evaluators with the named defect injected. Known names: "bessel-sign".
EvaluatorSet mutant(std::string_view name);

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool relative = true;
    std::vector<std::string> failures;  // inputs of each case over tolerance

    bool passed() const noexcept { return failures.empty(); }
};

struct ValidationReport {
    std::vector<SuiteResult> suites;
    bool passed() const noexcept;
};

ValidationReport run_validation(ValidationLevel level, const EvaluatorSet& evaluators = EvaluatorSet::library());

/// One line per suite, then up to `max_echo` failing inputs per suite.
void print_report(std::ostream& out, const ValidationReport& report, std::size_t max_echo = 20);

}  // namespace cellfree::tools

// SPDX-License-Identifier: Apache-2.0
//
// Error types and the structured warning channel shared by every module.

#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace cellfree {

// Argument outside the range where an evaluator is defined or guarded.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Uniform-sample quadrature too coarse for the integrand's harmonic content.
class QuadratureResolutionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Evaluator applied to the wrong antenna model (continuous vs finite ring).
class IncompatibleEvaluatorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Sweep window does not contain the alias radius.
class WindowMissError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Time grid cannot hold the delayed pulse.
class GridTooShortError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class WarningKind {
    outside_validity_domain,  // user too far from the ring centre for the first-order distance model
    truncation_insufficient,  // last retained series term is not negligible
};

struct Warning {
    WarningKind kind;
    std::string message;
};

using WarningHandler = std::function<void(const Warning&)>;

/// Installs a process-wide warning handler and returns the previous one.
/// Handlers may be called concurrently from sweep workers and must be thread-safe.
/// An empty handler silences warnings.
WarningHandler set_warning_handler(WarningHandler handler);

/// Sends a warning to the installed handler (default: one line on stderr).
void emit_warning(const Warning& warning);

const char* to_string(WarningKind kind) noexcept;

}  // namespace cellfree

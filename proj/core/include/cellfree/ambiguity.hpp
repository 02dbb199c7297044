// SPDX-License-Identifier: Apache-2.0
//
// Ambiguity-function evaluators for a circular ring of access points.
//
// For a displacement (R_ss, theta_ss) between the matched user and a second
// user, every antenna at angle theta leaves the residual
//
//     r(theta) = exp(-j k R_ss cos(theta - theta_ss)) * sinc(R_ss cos(theta - theta_ss) / R_W)
//
// after delay-and-phase matching. The ambiguity function sums r over the ring:
//
//   af_continuous_quadrature  R * int_0^{2 pi} r(theta) dtheta, uniform-sample quadrature
//   af_continuous_series      2 pi R * sum_n J_n(-k R_ss) L_n(R_ss / R_W)
//   af_discrete_direct        sum_i r(2 pi i / N), exact reference for a finite ring
//   af_discrete_series        N * sum_n sum_p exp(j p N (pi/2 - theta_ss)) J_{n+pN}(-k R_ss) L_n(R_ss / R_W)
//
// The p != 0 terms of the last form are the spatial aliases of a finite ring.
//
// MRT precoding toward a target and MRC combining for a target both leave an
// off-target user with exactly this quantity, so array_gain_mrt and
// mrc_interference are thin wrappers over the same evaluators.

#pragma once

#include "cellfree/diagnostics.hpp"
#include "cellfree/model.hpp"
#include "cellfree/special_functions.hpp"

#include <complex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace cellfree {

// Series and quadrature controls.
//
// With `adaptive` set (the default) n_max, l_max and the quadrature size act
// as floors and are raised per evaluation point until the dropped terms are
// negligible; with it cleared they are used literally and a
// truncation_insufficient warning is emitted when the last retained term is
// not negligible.
struct Truncation {
    std::optional<int> n_max;  // Bessel order range -n_max..n_max; default per point
    int l_max = 20;
    int p_max = 5;
    QuadratureSpec quad{};
    bool adaptive = true;
};

/// ceil(x) + 40 + ceil(12 cbrt(x)): orders past this are beyond J_n(x)'s Airy tail.
int bessel_order_limit(double x);
/// ceil(pi rho) + 40 + ceil(12 cbrt(pi rho)): support of L_l(rho) in l; 0 for rho = 0.
int sinc_order_limit(double rho);

struct AFValue {
    std::complex<double> raw;
    double reference = 1.0;  // same evaluator at R_ss = 0: 2 pi R (continuous) or N (finite)
    double normalized_db = 0.0;

    static AFValue from_raw(std::complex<double> raw, double reference);
};

/// Per-antenna residual r(theta) for the displacement d.
std::complex<double> space_dispersive_residual(const ArrayConfig& array, const Waveform& wf,
                                               const Displacement& d, double ap_angle);

/// Samples needed by af_continuous_quadrature: 2 (ceil(k R_ss) + ceil(pi rho)) + 64.
long long required_af_samples(const ArrayConfig& array, const Waveform& wf, const Displacement& d);

AFValue af_continuous_quadrature(const ArrayConfig& array, const Waveform& wf, const Displacement& d,
                                 QuadratureSpec quad = QuadratureSpec{});
AFValue af_continuous_series(const ArrayConfig& array, const Waveform& wf, const Displacement& d,
                             const Truncation& t = {});
AFValue af_discrete_direct(const ArrayConfig& array, const Waveform& wf, const Displacement& d);
AFValue af_discrete_series(const ArrayConfig& array, const Waveform& wf, const Displacement& d,
                           const Truncation& t = {});

enum class Evaluator { quadrature, series, direct, aliased_series };

std::string_view to_string(Evaluator e) noexcept;
std::optional<Evaluator> parse_evaluator(std::string_view name) noexcept;
bool requires_continuous(Evaluator e) noexcept;

/// Throws IncompatibleEvaluatorError when the evaluator does not match the antenna model.
void check_compatible(Evaluator e, const ArrayConfig& array);

/// Dispatches to one evaluator. For `quadrature` the sample count is raised to
/// required_af_samples when t.adaptive is set.
AFValue evaluate(Evaluator e, const ArrayConfig& array, const Waveform& wf, const Displacement& d,
                 const Truncation& t = {});

/// Interference gain at `victim` when the ring beampoints (MRT) to `target`.
AFValue array_gain_mrt(const ArrayConfig& array, const Waveform& wf, const UserPosition& target,
                       const UserPosition& victim, Evaluator e, const Truncation& t = {});

/// MRC output for `target` while `interferer` transmits; identical to array_gain_mrt.
AFValue mrc_interference(const ArrayConfig& array, const Waveform& wf, const UserPosition& target,
                         const UserPosition& interferer, Evaluator e, const Truncation& t = {});

/// Evaluates the AF at (radii[i], theta_ss) for every i, in parallel.
/// Results are in input order and independent of scheduling.
std::vector<AFValue> sweep_radii(Evaluator e, const ArrayConfig& array, const Waveform& wf,
                                 double theta_ss, std::span<const double> radii,
                                 const Truncation& t = {}, unsigned threads = 0);

}  // namespace cellfree

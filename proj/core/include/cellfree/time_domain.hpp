// SPDX-License-Identifier: Apache-2.0
//
// Time-domain check of the per-antenna residual: synthesize what one AP
// receives from a user, run the delay-and-phase matched combiner for another
// user, and read off the scalar output.
//
// Time is in length / c with c = 1, so a delay equals a path length and
// W = 1 / R_W. The bulk ring delay R / c and phase k R are common to the
// received signal and the combiner and are removed analytically; the grid
// only carries the relative delay -R_s cos(theta - theta_s).

#pragma once

#include "cellfree/diagnostics.hpp"
#include "cellfree/model.hpp"

#include <complex>
#include <vector>

namespace cellfree {

class TimeGrid {
public:
    static constexpr double kMinOversampling = 8.0;
    static constexpr double kMinDurationBandwidth = 64.0;

    /// Grid for `wf` sampled at oversampling * W whose window holds
    /// `energy_fraction` of the pulse energy (outside energy ~ 4 / (pi^2 W T)).
    static TimeGrid for_waveform(const Waveform& wf, double oversampling = kMinOversampling,
                                 double energy_fraction = 0.9999);

    /// Raw grid; checked against a waveform by validate().
    TimeGrid(double sample_rate, double duration);

    double sample_rate() const noexcept { return sample_rate_; }
    double duration() const noexcept { return duration_; }
    double spacing() const noexcept { return 1.0 / sample_rate_; }
    std::size_t sample_count() const noexcept { return count_; }
    /// Sample times are centred on zero: t_i = (i - (count - 1) / 2) / sample_rate.
    double time(std::size_t i) const noexcept;

    /// Throws std::invalid_argument unless sample_rate >= 8 W and duration * W >= 64.
    void validate(const Waveform& wf) const;

private:
    double sample_rate_;
    double duration_;
    std::size_t count_;
};

/// Unit-energy pulse s(t) = sqrt(W) sinc(W t).
double pulse(const Waveform& wf, double t);

/// Delay of the signal from `user` at the AP on angle ap_angle, relative to the
/// bulk R / c: approx_distance - R.
double relative_delay(const ArrayConfig& array, double ap_angle, const UserPosition& user);

/// exp(-j k tau) s(t - tau) on the grid, tau = relative_delay(array, ap_angle, tx).
/// Requires a finite bandwidth; throws GridTooShortError if |tau| > duration / 8.
std::vector<std::complex<double>> synth_received(const ArrayConfig& array, const Waveform& wf,
                                                 const UserPosition& tx, double ap_angle, const TimeGrid& grid);

/// Combiner output at one AP: exp(j k tau_t) * sum_i r(t_i) s(t_i - tau_t) dt, where r is
/// the interferer's received series and tau_t the target's delay.
std::complex<double> matched_combine_residual(const ArrayConfig& array, const Waveform& wf,
                                              const UserPosition& target, const UserPosition& interferer,
                                              double ap_angle, const TimeGrid& grid);

}  // namespace cellfree

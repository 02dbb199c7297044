// SPDX-License-Identifier: Apache-2.0

#include "cellfree/time_domain.hpp"

#include "cellfree/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace cellfree {
namespace {

void require_finite_bandwidth(const Waveform& wf) {
    if (wf.is_narrowband()) throw std::invalid_argument("time-domain synthesis needs a finite bandwidth");
}

}  // namespace

TimeGrid TimeGrid::for_waveform(const Waveform& wf, double oversampling, double energy_fraction) {
    require_finite_bandwidth(wf);
    if (!(oversampling >= kMinOversampling)) throw std::invalid_argument("oversampling must be >= 8");
    if (!(energy_fraction > 0.0 && energy_fraction < 1.0))
        throw std::invalid_argument("energy fraction must lie in (0, 1)");
    const double w = wf.bandwidth();
    double duration_w = 4.0 / (kPi * kPi * (1.0 - energy_fraction));
    if (duration_w < kMinDurationBandwidth) duration_w = kMinDurationBandwidth;
    return TimeGrid{oversampling * w, duration_w / w};
}

TimeGrid::TimeGrid(double sample_rate, double duration) : sample_rate_(sample_rate), duration_(duration), count_(0) {
    if (!(sample_rate > 0.0) || !std::isfinite(sample_rate)) throw std::invalid_argument("sample rate must be > 0");
    if (!(duration > 0.0) || !std::isfinite(duration)) throw std::invalid_argument("duration must be > 0");
    count_ = static_cast<std::size_t>(std::ceil(duration * sample_rate)) + 1;
}

double TimeGrid::time(std::size_t i) const noexcept {
    return (static_cast<double>(i) - 0.5 * static_cast<double>(count_ - 1)) / sample_rate_;
}

void TimeGrid::validate(const Waveform& wf) const {
    require_finite_bandwidth(wf);
    const double w = wf.bandwidth();
    // small slack for the rounding in oversampling * W
    if (sample_rate_ < kMinOversampling * w * (1.0 - 1e-12))
        throw std::invalid_argument("time grid oversampling below 8x bandwidth");
    if (duration_ * w < kMinDurationBandwidth * (1.0 - 1e-12))
        throw std::invalid_argument("time grid shorter than 64 / W");
}

double pulse(const Waveform& wf, double t) {
    const double w = wf.bandwidth();
    return std::sqrt(w) * sinc(w * t);
}

double relative_delay(const ArrayConfig& array, double ap_angle, const UserPosition& user) {
    return approx_distance(array, ap_angle, user) - array.ring_radius();
}

std::vector<std::complex<double>> synth_received(const ArrayConfig& array, const Waveform& wf,
                                                 const UserPosition& tx, double ap_angle, const TimeGrid& grid) {
    grid.validate(wf);
    const double tau = relative_delay(array, ap_angle, tx);
    if (std::abs(tau) > grid.duration() / 8.0)
        throw GridTooShortError("relative delay exceeds one eighth of the time window");
    const auto carrier = std::polar(1.0, -array.wavenumber() * tau);
    std::vector<std::complex<double>> out(grid.sample_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = carrier * pulse(wf, grid.time(i) - tau);
    return out;
}

std::complex<double> matched_combine_residual(const ArrayConfig& array, const Waveform& wf,
                                              const UserPosition& target, const UserPosition& interferer,
                                              double ap_angle, const TimeGrid& grid) {
    const auto received = synth_received(array, wf, interferer, ap_angle, grid);
    const double tau_t = relative_delay(array, ap_angle, target);
    if (std::abs(tau_t) > grid.duration() / 8.0)
        throw GridTooShortError("target delay exceeds one eighth of the time window");
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < received.size(); ++i) acc += received[i] * pulse(wf, grid.time(i) - tau_t);
    return std::polar(1.0, array.wavenumber() * tau_t) * acc * grid.spacing();
}

}  // namespace cellfree

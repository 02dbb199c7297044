// SPDX-License-Identifier: Apache-2.0

#include "cellfree/model.hpp"

#include "cellfree/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cellfree {

double wrap_angle(double radians) noexcept {
    double a = std::fmod(radians, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    // fmod of a tiny negative value can round back up to 2*pi
    if (a >= kTwoPi) a = 0.0;
    return a;
}

double sinc(double x) noexcept {
    if (x == 0.0) return 1.0;
    const double px = kPi * x;
    return std::sin(px) / px;
}

AntennaCount AntennaCount::finite(int count) {
    if (count < 1) throw std::invalid_argument("antenna count must be >= 1");
    return AntennaCount{count};
}

int AntennaCount::count() const {
    if (!count_) throw std::logic_error("continuous ring has no antenna count");
    return *count_;
}

ArrayConfig::ArrayConfig(double ring_radius, AntennaCount antennas, double wavelength)
    : ring_radius_(ring_radius), antennas_(antennas), wavelength_(wavelength) {
    if (!(ring_radius > 0.0) || !std::isfinite(ring_radius))
        throw std::invalid_argument("ring radius must be finite and > 0");
    if (!(wavelength > 0.0) || !std::isfinite(wavelength))
        throw std::invalid_argument("wavelength must be finite and > 0");
}

double ArrayConfig::antenna_angle(int index) const {
    const int n = antennas_.count();
    if (index < 0 || index >= n) throw std::out_of_range("antenna index out of range");
    return kTwoPi * static_cast<double>(index) / static_cast<double>(n);
}

Waveform Waveform::with_resolution(double spatial_resolution) {
    if (std::isinf(spatial_resolution) && spatial_resolution > 0.0) return narrowband();
    if (!(spatial_resolution > 0.0) || !std::isfinite(spatial_resolution))
        throw std::invalid_argument("spatial resolution R_W must be > 0");
    return Waveform{spatial_resolution};
}

double Waveform::spatial_resolution() const noexcept {
    return resolution_ ? *resolution_ : std::numeric_limits<double>::infinity();
}

double Waveform::bandwidth() const noexcept {
    return resolution_ ? 1.0 / *resolution_ : 0.0;
}

double Waveform::rho(double displacement_radius) const noexcept {
    return resolution_ ? displacement_radius / *resolution_ : 0.0;
}

Displacement::Displacement(double radius, double angle) : radius_(radius), angle_(0.0) {
    if (!(radius >= 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("displacement radius must be finite and >= 0");
    if (!std::isfinite(angle)) throw std::invalid_argument("displacement angle must be finite");
    angle_ = radius == 0.0 ? 0.0 : wrap_angle(angle);
}

UserPosition::UserPosition(double radius, double angle) : radius_(radius), angle_(angle) {
    if (!(radius >= 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("user radius must be finite and >= 0");
    if (!std::isfinite(angle)) throw std::invalid_argument("user angle must be finite");
}

double UserPosition::x() const noexcept { return radius_ * std::cos(angle_); }
double UserPosition::y() const noexcept { return radius_ * std::sin(angle_); }

bool check_validity_domain(const ArrayConfig& array, const UserPosition& user, double fraction) {
    const double bound = fraction * array.ring_radius();
    if (user.radius() <= bound) return true;
    std::ostringstream msg;
    msg << "user radius " << user.radius() << " exceeds " << fraction
        << " x ring radius (" << bound << "); first-order distance model degraded";
    emit_warning({WarningKind::outside_validity_domain, msg.str()});
    return false;
}

Displacement displacement(const UserPosition& a, const UserPosition& b) {
    const double dx = a.x() - b.x();
    const double dy = a.y() - b.y();
    const double r = std::hypot(dx, dy);
    if (r == 0.0) return {0.0, 0.0};
    return {r, std::atan2(dy, dx)};
}

double approx_distance(const ArrayConfig& array, double ap_angle, const UserPosition& user) {
    check_validity_domain(array, user);
    return array.ring_radius() - user.radius() * std::cos(ap_angle - user.angle());
}

double exact_distance(const ArrayConfig& array, double ap_angle, const UserPosition& user) {
    const double ax = array.ring_radius() * std::cos(ap_angle);
    const double ay = array.ring_radius() * std::sin(ap_angle);
    return std::hypot(ax - user.x(), ay - user.y());
}

}  // namespace cellfree

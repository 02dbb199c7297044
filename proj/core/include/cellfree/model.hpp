// SPDX-License-Identifier: Apache-2.0
//
// Geometry and waveform types for a circular ring of single-antenna access
// points surrounding users near its centre.
//
// Units: every length shares the unit of the wavelength (1 by default, so
// lengths read as multiples of lambda). Time is measured in length / c, so a
// spatial resolution R_W corresponds to a bandwidth W = 1 / R_W.

#pragma once

#include <numbers>
#include <optional>

namespace cellfree {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an angle into [0, 2*pi).
double wrap_angle(double radians) noexcept;

/// Normalized sinc, sin(pi x) / (pi x).
double sinc(double x) noexcept;

// Antenna population on the ring: a continuous aperture or N equispaced APs.
class AntennaCount {
public:
    static AntennaCount continuous() noexcept { return AntennaCount{}; }
    static AntennaCount finite(int count);

    bool is_continuous() const noexcept { return !count_; }
    bool is_finite() const noexcept { return count_.has_value(); }
    // Throws std::logic_error for a continuous ring.
    int count() const;

    friend bool operator==(const AntennaCount&, const AntennaCount&) = default;

private:
    AntennaCount() = default;
    explicit AntennaCount(int n) : count_(n) {}

    std::optional<int> count_;
};

class ArrayConfig {
public:
    ArrayConfig(double ring_radius, AntennaCount antennas, double wavelength = 1.0);

    double ring_radius() const noexcept { return ring_radius_; }
    const AntennaCount& antennas() const noexcept { return antennas_; }
    double wavelength() const noexcept { return wavelength_; }
    double wavenumber() const noexcept { return kTwoPi / wavelength_; }

    /// Angular position of antenna i on a finite ring: 2*pi*i/N, first antenna at angle 0.
    double antenna_angle(int index) const;

private:
    double ring_radius_;
    AntennaCount antennas_;
    double wavelength_;
};

// Transmit pulse s(t) = sqrt(W) sinc(W t), described by its spatial resolution R_W = c / W.
class Waveform {
public:
    static Waveform narrowband() noexcept { return Waveform{}; }
    static Waveform with_resolution(double spatial_resolution);

    bool is_narrowband() const noexcept { return !resolution_; }
    /// R_W; +infinity for a narrowband waveform.
    double spatial_resolution() const noexcept;
    /// W = 1 / R_W in the module's time unit; 0 for narrowband.
    double bandwidth() const noexcept;
    /// rho = R_ss / R_W, the argument scale of the sinc envelope; 0 for narrowband.
    double rho(double displacement_radius) const noexcept;

private:
    Waveform() = default;
    explicit Waveform(double rw) : resolution_(rw) {}

    std::optional<double> resolution_;
};

// Polar form (R_ss, theta_ss) of the difference between two user positions.
class Displacement {
public:
    Displacement(double radius, double angle);

    double radius() const noexcept { return radius_; }
    double angle() const noexcept { return angle_; }

private:
    double radius_;
    double angle_;
};

class UserPosition {
public:
    UserPosition(double radius, double angle);

    double radius() const noexcept { return radius_; }
    double angle() const noexcept { return angle_; }
    double x() const noexcept;
    double y() const noexcept;

private:
    double radius_;
    double angle_;
};

/// Default fraction of the ring radius inside which the first-order distance model is trusted.
inline constexpr double kDefaultValidityFraction = 0.1;

/// Emits an outside_validity_domain warning when user.radius() > fraction * ring radius.
/// Returns true when the user is inside the domain.
bool check_validity_domain(const ArrayConfig& array, const UserPosition& user,
                           double fraction = kDefaultValidityFraction);

/// Polar form of a - b. A zero difference yields (0, 0).
Displacement displacement(const UserPosition& a, const UserPosition& b);

/// First-order AP-to-user distance R - R_s cos(theta - theta_s).
double approx_distance(const ArrayConfig& array, double ap_angle, const UserPosition& user);

/// Euclidean AP-to-user distance, for checking the first-order model.
double exact_distance(const ArrayConfig& array, double ap_angle, const UserPosition& user);

}  // namespace cellfree

// SPDX-License-Identifier: Apache-2.0
//
// Design metrics derived from the ambiguity function: resolution, the antenna
// count needed to avoid spatial aliasing, and how far a waveform's bandwidth
// pushes the alias replica down.

#pragma once

#include "cellfree/ambiguity.hpp"
#include "cellfree/diagnostics.hpp"
#include "cellfree/model.hpp"

namespace cellfree {

/// First positive zero of J_0, located by root finding on bessel_j to 1e-12.
double bessel_j0_first_zero();

/// Main-lobe radius j_{0,1} / k, in the unit of `wavelength`.
double resolution(double wavelength = 1.0);

/// Smallest N with N > 4 pi r_s_max / lambda. A bound within 1e-12 (relative)
/// of an integer is treated as that integer before applying the strict inequality.
int min_antennas(double r_s_max, double wavelength = 1.0);

/// N lambda / (2 pi): the displacement where a finite ring's AF replicates.
double alias_radius(int n_antennas, double wavelength = 1.0);

struct SweepWindow {
    double r_min = 0.0;
    double r_max = 0.0;
    double step = 0.05;
};

/// Half-width of the alias-peak search around the nominal alias radius, in wavelengths.
inline constexpr double kAliasSearchHalfWidth = 2.0;

struct AliasReport {
    double alias_radius = 0.0;
    double alias_peak_db = 0.0;       // max normalized dB within +-2 lambda of alias_radius
    double alias_peak_radius = 0.0;   // where that maximum sits
    double mainlobe_reference_db = 0.0;
    double attenuation_db = 0.0;      // -alias_peak_db, never negative
};

/// Scans the window grid r_min + i*step restricted to alias_radius +- 2 lambda.
/// Throws WindowMissError when [r_min, r_max] does not contain the alias radius.
AliasReport alias_attenuation(const ArrayConfig& array, const Waveform& wf, double theta_ss,
                              const SweepWindow& window, Evaluator e = Evaluator::direct,
                              const Truncation& t = {});

}  // namespace cellfree

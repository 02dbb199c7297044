// SPDX-License-Identifier: Apache-2.0
//
// Bessel functions of the first kind at integer order and the Fourier-series
// coefficients L_l(rho) of the periodic envelope sinc(rho sin theta).

#pragma once

#include <vector>

namespace cellfree {

/// |x| must stay below this bound in every Bessel evaluation.
inline constexpr double kBesselArgumentGuard = 1.0e7;
/// Largest |order| accepted by the Bessel routines.
inline constexpr int kBesselOrderGuard = 10'000'000;

/// J_n(x) for any integer order. Throws DomainError outside the guards.
double bessel_j(int order, double x);

/// Table J_0(x), ..., J_max_order(x) computed in one backward-recurrence pass.
/// Negative x is accepted (J_k(-x) = (-1)^k J_k(x)). Orders whose value
/// underflows double precision are returned as 0.
std::vector<double> bessel_j_table(int max_order, double x);

// Number of uniform samples on [0, 2 pi) used by the periodic quadratures.
class QuadratureSpec {
public:
    static constexpr int kDefaultSamples = 4096;
    static constexpr int kMinSamples = 64;

    /// sample_count must be a power of two and at least 64.
    explicit QuadratureSpec(int sample_count = kDefaultSamples);

    /// Smallest admissible spec with at least min_samples samples.
    static QuadratureSpec covering(long long min_samples);

    int sample_count() const noexcept { return samples_; }

    friend bool operator==(const QuadratureSpec&, const QuadratureSpec&) = default;

private:
    int samples_;
};

/// Minimum quadrature samples for L_0..L_l_max at a given rho: 8 (l_max + ceil(rho)).
long long required_sinc_samples(double rho, int l_max);

/// L_l(rho) = (1/2 pi) int_0^{2 pi} sinc(rho sin t) exp(-j l t) dt for l = 0..l_max.
/// The coefficients are real and even in l, and the odd ones vanish.
/// Throws QuadratureResolutionError when quad has fewer than
/// required_sinc_samples(rho, l_max) samples.
std::vector<double> sinc_fourier_coeffs(double rho, int l_max,
                                        QuadratureSpec quad = QuadratureSpec{});

}  // namespace cellfree

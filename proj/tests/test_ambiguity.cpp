// SPDX-License-Identifier: Apache-2.0

#include "cellfree/ambiguity.hpp"
#include "cellfree/analysis.hpp"
#include "support/warning_capture.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace cellfree {
namespace {

constexpr double kRing = 1000.0;

const ArrayConfig& continuous_ring() {
    static const ArrayConfig ring(kRing, AntennaCount::continuous());
    return ring;
}

ArrayConfig finite_ring(int n) { return ArrayConfig(kRing, AntennaCount::finite(n)); }

Waveform waveform(double rw) {
    return std::isinf(rw) ? Waveform::narrowband() : Waveform::with_resolution(rw);
}

double rel_err(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) / std::abs(b); }

const double kInf = std::numeric_limits<double>::infinity();

TEST(ContinuousQuadrature, OriginEqualsRingLength) {
    for (double rw : {1.5, kInf}) {
        const auto v = af_continuous_quadrature(continuous_ring(), waveform(rw), {0.0, 0.0});
        EXPECT_EQ(v.raw, std::complex<double>(kTwoPi * kRing));
        EXPECT_EQ(v.normalized_db, 0.0);
    }
}

TEST(ContinuousQuadrature, NarrowbandVanishesAtFirstBesselZero) {
    const double r = 2.404826 / kTwoPi;
    const auto v = af_continuous_quadrature(continuous_ring(), Waveform::narrowband(), {r, 0.4});
    EXPECT_LT(std::abs(v.raw), 1e-4 * kTwoPi * kRing);
}

TEST(ContinuousQuadrature, MatchesFrozenIntegralValues) {
    // 30-digit quadrature of (1/2 pi) int exp(-j x cos p) sinc(rho cos p) dp
    struct Case {
        double r, rw, expected;
    };
    for (auto c : {Case{3.7, 1.5, -0.0198954813827781694490}, Case{12.0, 11.5, -0.00311548571992367947269},
                   Case{0.5, 1.5, -0.235387445306438547415}}) {
        const Displacement d{c.r, 3 * kPi / 37};
        const auto q = af_continuous_quadrature(continuous_ring(), waveform(c.rw), d);
        const auto s = af_continuous_series(continuous_ring(), waveform(c.rw), d);
        const double ref = kTwoPi * kRing;
        EXPECT_NEAR(q.raw.real() / ref, c.expected, 1e-12);
        EXPECT_NEAR(q.raw.imag() / ref, 0.0, 1e-12);
        EXPECT_NEAR(s.raw.real() / ref, c.expected, 1e-12);
    }
}

TEST(ContinuousQuadrature, RejectsUnderResolvedGrid) {
    EXPECT_THROW(af_continuous_quadrature(continuous_ring(), Waveform::with_resolution(1.5), {100.0, 0.0},
                                          QuadratureSpec{1024}),
                 QuadratureResolutionError);
    // evaluate() raises the sample count on its own
    Truncation t;
    t.quad = QuadratureSpec{1024};
    EXPECT_NO_THROW(evaluate(Evaluator::quadrature, continuous_ring(), Waveform::with_resolution(1.5),
                             {100.0, 0.0}, t));
}

TEST(ContinuousQuadrature, RotationInvariant) {
    const auto wf = Waveform::with_resolution(1.5);
    const double base = std::abs(af_continuous_quadrature(continuous_ring(), wf, {7.3, 0.0}).raw);
    for (double theta : {0.5, 1.0, 2.0, 3.0, 4.9}) {
        const double v = std::abs(af_continuous_quadrature(continuous_ring(), wf, {7.3, theta}).raw);
        EXPECT_LE(std::abs(v - base) / base, 1e-8) << theta;
    }
}

TEST(ContinuousSeries, NarrowbandIsScaledJ0) {
    for (double r : {0.0, 0.05, 0.38, 1.0, 7.77, 31.0, 99.9}) {
        const auto v = af_continuous_series(continuous_ring(), Waveform::narrowband(), {r, 1.1});
        const double expected = kTwoPi * kRing * boost::math::cyl_bessel_j(0, kTwoPi * r);
        EXPECT_NEAR(v.raw.real(), expected, 1e-10 * kTwoPi * kRing) << r;
        EXPECT_EQ(v.raw.imag(), 0.0);
    }
}

TEST(ContinuousSeries, ParsevalEquivalenceGrid) {
    for (double r : {0.1, 1.0, 5.0, 20.0, 100.0}) {
        for (double rw : {1.5, 11.5, kInf}) {
            for (double theta : {0.0, 3 * kPi / 37, kPi}) {
                const Displacement d{r, theta};
                const auto s = af_continuous_series(continuous_ring(), waveform(rw), d);
                const auto q = evaluate(Evaluator::quadrature, continuous_ring(), waveform(rw), d);
                EXPECT_LE(rel_err(s.raw, q.raw), 1e-6) << r << ' ' << rw << ' ' << theta;
            }
        }
    }
    const auto a = af_continuous_series(continuous_ring(), waveform(11.5), {12.0, 0.2});
    const auto b = af_continuous_quadrature(continuous_ring(), waveform(11.5), {12.0, 0.2});
    EXPECT_LE(rel_err(a.raw, b.raw), 1e-6);
}

TEST(ContinuousSeries, LiteralTruncationWarns) {
    testing::WarningCapture capture;
    Truncation literal;
    literal.adaptive = false;
    af_continuous_series(continuous_ring(), Waveform::with_resolution(1.5), {20.0, 0.0}, literal);
    EXPECT_GE(capture.count(WarningKind::truncation_insufficient), 1u);

    testing::WarningCapture quiet;
    af_continuous_series(continuous_ring(), Waveform::with_resolution(1.5), {20.0, 0.0});
    EXPECT_EQ(quiet.count(WarningKind::truncation_insufficient), 0u);
}

TEST(ContinuousSeries, RejectsFiniteRing) {
    EXPECT_THROW(af_continuous_series(finite_ring(8), Waveform::narrowband(), {1.0, 0.0}), IncompatibleEvaluatorError);
    EXPECT_THROW(af_continuous_quadrature(finite_ring(8), Waveform::narrowband(), {1.0, 0.0}),
                 IncompatibleEvaluatorError);
    EXPECT_THROW(af_discrete_direct(continuous_ring(), Waveform::narrowband(), {1.0, 0.0}),
                 IncompatibleEvaluatorError);
    EXPECT_THROW(af_discrete_series(continuous_ring(), Waveform::narrowband(), {1.0, 0.0}),
                 IncompatibleEvaluatorError);
    EXPECT_THROW(evaluate(Evaluator::direct, continuous_ring(), Waveform::narrowband(), {1.0, 0.0}),
                 IncompatibleEvaluatorError);
}

TEST(DiscreteDirect, OriginEqualsAntennaCount) {
    const auto v = af_discrete_direct(finite_ring(256), Waveform::with_resolution(1.5), {0.0, 0.0});
    EXPECT_EQ(v.raw, std::complex<double>(256.0));
}

TEST(DiscreteDirect, MatchesFrozenSums) {
    // 30-digit evaluation of the same sum
    const auto a = af_discrete_direct(finite_ring(16), waveform(1.5), {1.0, 3 * kPi / 37});
    EXPECT_NEAR(a.raw.real(), 1.17007058606974855927, 1e-12);
    EXPECT_NEAR(a.raw.imag(), 0.0, 1e-12);
    const auto b = af_discrete_direct(finite_ring(64), waveform(1.5), {3.7, 3 * kPi / 37});
    EXPECT_NEAR(b.raw.real(), -1.27331080849781330492, 1e-12);
    const auto c = af_discrete_direct(finite_ring(256), Waveform::narrowband(), {2.0, 0.0});
    EXPECT_NEAR(c.raw.real(), 40.3218924754274403204, 1e-11);
}

TEST(DiscreteDirect, AliasBumpNearNominalRadiusForLargeRing) {
    const auto ring = finite_ring(4096);
    std::vector<double> radii;
    for (double r = 600.0; r <= 700.0; r += 0.5) radii.push_back(r);
    const auto nb = sweep_radii(Evaluator::direct, ring, Waveform::narrowband(), 3 * kPi / 37, radii);
    std::size_t peak = 0;
    for (std::size_t i = 1; i < nb.size(); ++i)
        if (nb[i].normalized_db > nb[peak].normalized_db) peak = i;
    EXPECT_NEAR(radii[peak], alias_radius(4096), 4.0);
    // well above the J0 sidelobe floor (about -38 dB here)
    EXPECT_GT(nb[peak].normalized_db, -25.0);
}

TEST(DiscreteSeries, EqualsDirectSum) {
    for (int n : {16, 64, 256}) {
        const auto ring = finite_ring(n);
        for (double r : {0.1, 1.0, 5.0, 20.0, 100.0}) {
            for (double rw : {1.5, 11.5, kInf}) {
                for (double theta : {0.0, 3 * kPi / 37, kPi}) {
                    const Displacement d{r, theta};
                    const auto direct = af_discrete_direct(ring, waveform(rw), d);
                    const auto series = af_discrete_series(ring, waveform(rw), d);
                    EXPECT_LE(rel_err(series.raw, direct.raw), 1e-6) << n << ' ' << r << ' ' << rw << ' ' << theta;
                }
            }
        }
    }
}

TEST(DiscreteSeries, NoAliasImagesGivesRescaledContinuousSeries) {
    const auto ring = finite_ring(4096);
    for (double r : {0.3, 2.0, 6.5}) {
        Truncation t;
        t.p_max = 0;
        t.adaptive = false;
        t.l_max = sinc_order_limit(r / 1.5);
        const Displacement d{r, 0.7};
        const auto discrete = af_discrete_series(ring, waveform(1.5), d, t);
        const auto cont = af_continuous_series(continuous_ring(), waveform(1.5), d);
        EXPECT_NEAR(discrete.raw.real(), cont.raw.real() / (kTwoPi * kRing) * 4096.0, 1e-9 * 4096);
        EXPECT_NEAR(discrete.raw.imag(), 0.0, 1e-9 * 4096);
    }
}

TEST(DiscreteSeries, BandwidthSuppressesLargeRingAlias) {
    const auto ring = finite_ring(4096);
    const double theta = 3 * kPi / 37;
    double nb_peak = -std::numeric_limits<double>::infinity();
    double wide_peak = nb_peak;
    for (double r = 648.0; r <= 658.0; r += 0.5) {
        const auto nb = af_discrete_series(ring, Waveform::narrowband(), {r, theta});
        const auto wide = af_discrete_series(ring, Waveform::with_resolution(1.5), {r, theta});
        const auto wide_direct = af_discrete_direct(ring, Waveform::with_resolution(1.5), {r, theta});
        EXPECT_LE(rel_err(wide.raw, wide_direct.raw), 1e-6) << r;
        nb_peak = std::max(nb_peak, nb.normalized_db);
        wide_peak = std::max(wide_peak, wide.normalized_db);
    }
    EXPECT_GT(nb_peak - wide_peak, 10.0);
}

TEST(ArrayGain, ZeroDisplacementIsFullGain) {
    const UserPosition u{1.5, 0.3};
    EXPECT_EQ(array_gain_mrt(continuous_ring(), waveform(1.5), u, u, Evaluator::series).raw,
              std::complex<double>(kTwoPi * kRing));
    EXPECT_EQ(array_gain_mrt(finite_ring(64), waveform(1.5), u, u, Evaluator::direct).raw, std::complex<double>(64.0));
}

TEST(ArrayGain, ReducesToDisplacementEvaluator) {
    const auto ring = finite_ring(256);
    const auto wf = Waveform::with_resolution(1.5);
    const auto gain = array_gain_mrt(ring, wf, {1.0, 0.0}, {1.0, kPi}, Evaluator::direct);
    const auto direct = af_discrete_direct(ring, wf, {2.0, 0.0});
    EXPECT_NEAR(std::abs(gain.raw - direct.raw), 0.0, 1e-12 * 256);
    const auto mrc = mrc_interference(ring, wf, {1.0, 0.0}, {1.0, kPi}, Evaluator::direct);
    EXPECT_EQ(mrc.raw, gain.raw);
}

TEST(ArrayGain, NarrowbandNullAtResolutionRadius) {
    const double r = resolution();
    const auto g = array_gain_mrt(continuous_ring(), Waveform::narrowband(), {0.2, 1.0},
                                  {0.2 + r, 1.0}, Evaluator::series);
    EXPECT_LT(std::abs(g.raw), 1e-6 * kTwoPi * kRing);
}

TEST(Invariants, NarrowbandCollapse) {
    const auto ring = finite_ring(64);
    for (double r : {0.1, 1.0, 5.0, 20.0}) {
        const Displacement d{r, 0.9};
        EXPECT_LE(rel_err(af_continuous_series(continuous_ring(), waveform(1e6), d).raw,
                          af_continuous_series(continuous_ring(), Waveform::narrowband(), d).raw),
                  1e-4);
        EXPECT_LE(rel_err(af_continuous_quadrature(continuous_ring(), waveform(1e6), d).raw,
                          af_continuous_quadrature(continuous_ring(), Waveform::narrowband(), d).raw),
                  1e-4);
        EXPECT_LE(rel_err(af_discrete_direct(ring, waveform(1e6), d).raw,
                          af_discrete_direct(ring, Waveform::narrowband(), d).raw),
                  1e-4);
        EXPECT_LE(rel_err(af_discrete_series(ring, waveform(1e6), d).raw,
                          af_discrete_series(ring, Waveform::narrowband(), d).raw),
                  1e-4);
    }
}

TEST(Invariants, DenseRingApproachesContinuousAperture) {
    const int n = 1 << 14;
    const auto ring = finite_ring(n);
    for (double r : {0.5, 2.0, 7.0, 10.0}) {
        for (double rw : {1.5, kInf}) {
            const Displacement d{r, 0.25};
            const auto discrete = af_discrete_direct(ring, waveform(rw), d);
            const auto cont = af_continuous_quadrature(continuous_ring(), waveform(rw), d);
            EXPECT_LE(rel_err(discrete.raw * (kTwoPi * kRing / n), cont.raw), 1e-3);
        }
    }
}

TEST(Invariants, OriginDominatesSweep) {
    std::vector<double> radii;
    for (int i = 0; i <= 400; ++i) radii.push_back(0.25 * i);
    for (auto e : {Evaluator::direct, Evaluator::aliased_series}) {
        const auto values = sweep_radii(e, finite_ring(64), waveform(11.5), 0.3, radii);
        EXPECT_EQ(values.front().normalized_db, 0.0);
        for (const auto& v : values) EXPECT_LE(v.normalized_db, 1e-9);
    }
    for (auto e : {Evaluator::quadrature, Evaluator::series}) {
        const auto values = sweep_radii(e, continuous_ring(), waveform(1.5), 0.3, radii);
        EXPECT_EQ(values.front().normalized_db, 0.0);
        for (const auto& v : values) EXPECT_LE(v.normalized_db, 1e-9);
    }
}

TEST(Sweep, ParallelResultIndependentOfThreadCount) {
    std::vector<double> radii;
    for (int i = 0; i < 300; ++i) radii.push_back(0.37 * i);
    const auto one = sweep_radii(Evaluator::aliased_series, finite_ring(128), waveform(1.5), 0.2, radii, {}, 1);
    const auto many = sweep_radii(Evaluator::aliased_series, finite_ring(128), waveform(1.5), 0.2, radii, {}, 7);
    ASSERT_EQ(one.size(), many.size());
    for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(one[i].raw, many[i].raw);
}

TEST(EvaluatorNames, RoundTrip) {
    for (auto e : {Evaluator::quadrature, Evaluator::series, Evaluator::direct, Evaluator::aliased_series})
        EXPECT_EQ(parse_evaluator(to_string(e)), e);
    EXPECT_FALSE(parse_evaluator("fft").has_value());
}

}  // namespace
}  // namespace cellfree

// SPDX-License-Identifier: Apache-2.0

#include "cellfree/analysis.hpp"

#include "cellfree/diagnostics.hpp"
#include "cellfree/special_functions.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cellfree {

double bessel_j0_first_zero() {
    static const double zero = [] {
        std::uintmax_t iterations = 100;
        auto tol = [](double a, double b) { return std::abs(a - b) <= 1.0e-12; };
        const auto [lo, hi] = boost::math::tools::toms748_solve(
            [](double x) { return bessel_j(0, x); }, 2.0, 3.0, tol, iterations);
        return 0.5 * (lo + hi);
    }();
    return zero;
}

double resolution(double wavelength) {
    if (!(wavelength > 0.0)) throw std::invalid_argument("wavelength must be > 0");
    return bessel_j0_first_zero() * wavelength / kTwoPi;
}

int min_antennas(double r_s_max, double wavelength) {
    if (!(r_s_max > 0.0) || !std::isfinite(r_s_max)) throw std::invalid_argument("r_s_max must be > 0");
    if (!(wavelength > 0.0)) throw std::invalid_argument("wavelength must be > 0");
    double bound = 4.0 * kPi * r_s_max / wavelength;
    const double nearest = std::round(bound);
    if (std::abs(bound - nearest) <= 1.0e-12 * std::max(1.0, bound)) bound = nearest;
    const double n = std::floor(bound) + 1.0;
    if (n > std::numeric_limits<int>::max()) throw std::overflow_error("antenna count overflows int");
    return static_cast<int>(n);
}

double alias_radius(int n_antennas, double wavelength) {
    if (n_antennas < 1) throw std::invalid_argument("antenna count must be >= 1");
    if (!(wavelength > 0.0)) throw std::invalid_argument("wavelength must be > 0");
    return n_antennas * wavelength / kTwoPi;
}

AliasReport alias_attenuation(const ArrayConfig& array, const Waveform& wf, double theta_ss,
                              const SweepWindow& window, Evaluator e, const Truncation& t) {
    if (!array.antennas().is_finite())
        throw IncompatibleEvaluatorError("alias_attenuation requires a finite antenna count");
    check_compatible(e, array);
    if (!(window.step > 0.0)) throw std::invalid_argument("sweep step must be > 0");

    AliasReport report;
    report.alias_radius = alias_radius(array.antennas().count(), array.wavelength());
    if (!(window.r_min <= report.alias_radius && report.alias_radius <= window.r_max))
        throw WindowMissError("sweep window does not contain the alias radius");

    const double half = kAliasSearchHalfWidth * array.wavelength();
    const double lo = std::max(window.r_min, report.alias_radius - half);
    const double hi = std::min(window.r_max, report.alias_radius + half);
    const auto first = static_cast<long long>(std::ceil((lo - window.r_min) / window.step - 1e-9));
    const auto last = static_cast<long long>(std::floor((hi - window.r_min) / window.step + 1e-9));

    std::vector<double> radii;
    for (long long i = first; i <= last; ++i) {
        const double r = window.r_min + static_cast<double>(i) * window.step;
        if (r >= 0.0) radii.push_back(r);
    }
    if (radii.empty()) throw WindowMissError("sweep grid has no point near the alias radius");

    const auto values = sweep_radii(e, array, wf, theta_ss, radii, t);
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i].normalized_db > values[best].normalized_db) best = i;

    report.alias_peak_db = values[best].normalized_db;
    report.alias_peak_radius = radii[best];
    report.mainlobe_reference_db = 0.0;
    report.attenuation_db = std::max(0.0, -report.alias_peak_db);
    return report;
}

}  // namespace cellfree

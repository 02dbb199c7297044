// SPDX-License-Identifier: Apache-2.0

#include "cellfree/ambiguity.hpp"

#include "cellfree/diagnostics.hpp"
#include "cellfree/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace cellfree {
namespace {

constexpr double kNegligibleRatio = 1.0e-10;

void require_continuous(const ArrayConfig& array, const char* who) {
    if (!array.antennas().is_continuous())
        throw IncompatibleEvaluatorError(std::string(who) + " requires a continuous ring");
}

void require_finite(const ArrayConfig& array, const char* who) {
    if (!array.antennas().is_finite())
        throw IncompatibleEvaluatorError(std::string(who) + " requires a finite antenna count");
}

void warn_truncation(const char* who, const Displacement& d, double last, double total) {
    std::ostringstream msg;
    msg << who << ": last retained term " << last << " exceeds 1e-10 of partial sum " << total
        << " at R_ss=" << d.radius() << " theta_ss=" << d.angle();
    emit_warning({WarningKind::truncation_insufficient, msg.str()});
}

// Highest |n| kept in sum_n J_n L_n: limited by the Bessel range and, for a
// finite bandwidth, by the support of L_n.
struct SeriesRange {
    int orders = 0;
    std::vector<double> sinc_coeffs;  // L_0..L_orders
};

SeriesRange series_range(const ArrayConfig& array, const Waveform& wf, const Displacement& d,
                         const Truncation& t) {
    const double x = array.wavenumber() * d.radius();
    if (t.n_max && *t.n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    int n_lim = bessel_order_limit(x);
    if (t.n_max) n_lim = t.adaptive ? std::max(n_lim, *t.n_max) : *t.n_max;
    if (t.l_max < 0) throw std::invalid_argument("l_max must be >= 0");

    SeriesRange range;
    if (wf.is_narrowband()) {
        range.orders = 0;
        range.sinc_coeffs = {1.0};
        return range;
    }
    const double rho = wf.rho(d.radius());
    const int l_lim = t.adaptive ? std::max(t.l_max, sinc_order_limit(rho)) : t.l_max;
    range.orders = std::min(n_lim, l_lim);

    QuadratureSpec quad = t.quad;
    if (t.adaptive) {
        const auto need = required_sinc_samples(rho, range.orders);
        if (quad.sample_count() < need) quad = QuadratureSpec::covering(need);
    }
    range.sinc_coeffs = sinc_fourier_coeffs(rho, range.orders, quad);
    return range;
}

}  // namespace

int bessel_order_limit(double x) {
    x = std::abs(x);
    return static_cast<int>(std::ceil(x) + 40.0 + std::ceil(12.0 * std::cbrt(x)));
}

int sinc_order_limit(double rho) {
    if (rho <= 0.0) return 0;
    const double top = kPi * rho;
    return static_cast<int>(std::ceil(top) + 40.0 + std::ceil(12.0 * std::cbrt(top)));
}

AFValue AFValue::from_raw(std::complex<double> raw, double reference) {
    AFValue v;
    v.raw = raw;
    v.reference = reference;
    v.normalized_db = 20.0 * std::log10(std::abs(raw) / reference);
    return v;
}

std::complex<double> space_dispersive_residual(const ArrayConfig& array, const Waveform& wf,
                                               const Displacement& d, double ap_angle) {
    const double projected = d.radius() * std::cos(ap_angle - d.angle());
    const double envelope = wf.is_narrowband() ? 1.0 : sinc(projected / wf.spatial_resolution());
    return std::polar(envelope, -array.wavenumber() * projected);
}

long long required_af_samples(const ArrayConfig& array, const Waveform& wf, const Displacement& d) {
    const double x = array.wavenumber() * d.radius();
    const double band = std::ceil(x) + std::ceil(kPi * wf.rho(d.radius()));
    return 2LL * static_cast<long long>(band) + 64;
}

AFValue af_continuous_quadrature(const ArrayConfig& array, const Waveform& wf, const Displacement& d,
                                 QuadratureSpec quad) {
    require_continuous(array, "af_continuous_quadrature");
    const double reference = kTwoPi * array.ring_radius();
    if (d.radius() == 0.0) return AFValue::from_raw(reference, reference);

    const int m = quad.sample_count();
    if (m < required_af_samples(array, wf, d)) {
        throw QuadratureResolutionError("AF quadrature under-resolved: " + std::to_string(m) +
                                        " samples < " + std::to_string(required_af_samples(array, wf, d)));
    }
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < m; ++i) acc += space_dispersive_residual(array, wf, d, kTwoPi * i / m);
    return AFValue::from_raw(acc * (reference / m), reference);
}

AFValue af_continuous_series(const ArrayConfig& array, const Waveform& wf, const Displacement& d,
                             const Truncation& t) {
    require_continuous(array, "af_continuous_series");
    const double reference = kTwoPi * array.ring_radius();
    if (d.radius() == 0.0) return AFValue::from_raw(reference, reference);

    const double x = array.wavenumber() * d.radius();
    const SeriesRange range = series_range(array, wf, d, t);
    const int s = range.orders;
    const auto bessel = bessel_j_table(s, -x);  // J_k(-x), k >= 0

    // J_{-n}(-x) = (-1)^n J_n(-x) and L_{-n} = L_n
    double sum = bessel[0] * range.sinc_coeffs[0];
    for (int n = 1; n <= s; ++n) {
        const double jn = bessel[static_cast<std::size_t>(n)];
        const double j_neg = (n % 2 == 0) ? jn : -jn;
        sum += (jn + j_neg) * range.sinc_coeffs[static_cast<std::size_t>(n)];
    }
    if (s > 0) {
        const double last = std::abs(bessel[static_cast<std::size_t>(s)] *
                                     range.sinc_coeffs[static_cast<std::size_t>(s)]);
        if (last > kNegligibleRatio * std::abs(sum)) warn_truncation("af_continuous_series", d, last, sum);
    }
    return AFValue::from_raw(reference * sum, reference);
}

AFValue af_discrete_direct(const ArrayConfig& array, const Waveform& wf, const Displacement& d) {
    require_finite(array, "af_discrete_direct");
    const int n = array.antennas().count();
    const double reference = static_cast<double>(n);
    if (d.radius() == 0.0) return AFValue::from_raw(reference, reference);

    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < n; ++i) acc += space_dispersive_residual(array, wf, d, array.antenna_angle(i));
    return AFValue::from_raw(acc, reference);
}

AFValue af_discrete_series(const ArrayConfig& array, const Waveform& wf, const Displacement& d,
                           const Truncation& t) {
    require_finite(array, "af_discrete_series");
    const int count = array.antennas().count();
    const double reference = static_cast<double>(count);
    if (d.radius() == 0.0) return AFValue::from_raw(reference, reference);
    if (t.p_max < 0) throw std::invalid_argument("p_max must be >= 0");

    const double x = array.wavenumber() * d.radius();
    const SeriesRange range = series_range(array, wf, d, t);
    const int s = range.orders;
    int p_max = t.p_max;
    if (t.adaptive) {
        // images whose orders n + pN all lie beyond the Bessel tail contribute nothing
        const long long reach = static_cast<long long>(bessel_order_limit(x)) + s;
        p_max = static_cast<int>(std::max<long long>(p_max, (reach + count - 1) / count));
    }
    const long long top_order = static_cast<long long>(s) + static_cast<long long>(p_max) * count;
    if (top_order > kBesselOrderGuard)
        throw DomainError("aliased series needs Bessel order " + std::to_string(top_order) + " beyond guard");
    const auto bessel = bessel_j_table(static_cast<int>(top_order), -x);
    auto j_at = [&](long long order) {
        const auto k = static_cast<std::size_t>(order < 0 ? -order : order);
        const double v = bessel[k];
        return (order < 0 && (k % 2) == 1) ? -v : v;
    };

    // exp(j p N (pi/2 - theta_ss)) = j^{pN} exp(-j p N theta_ss)
    const int images = 2 * p_max + 1;
    std::vector<std::complex<double>> phase(static_cast<std::size_t>(images));
    for (int p = -p_max; p <= p_max; ++p) {
        const long long pn = static_cast<long long>(p) * count;
        static constexpr std::complex<double> kQuarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        const auto quarter = kQuarter[static_cast<std::size_t>(((pn % 4) + 4) % 4)];
        const double angle = std::fmod(static_cast<double>(pn) * d.angle(), kTwoPi);
        phase[static_cast<std::size_t>(p + p_max)] = quarter * std::polar(1.0, -angle);
    }

    std::complex<double> sum{0.0, 0.0};
    double last_n = 0.0;
    double last_p = 0.0;
    for (int n = -s; n <= s; ++n) {
        const double ln = range.sinc_coeffs[static_cast<std::size_t>(std::abs(n))];
        if (ln == 0.0) continue;
        std::complex<double> inner{0.0, 0.0};
        for (int p = -p_max; p <= p_max; ++p) {
            const double jv = j_at(n + static_cast<long long>(p) * count);
            const auto term = phase[static_cast<std::size_t>(p + p_max)] * jv;
            inner += term;
            if (p_max > 0 && std::abs(p) == p_max) last_p = std::max(last_p, std::abs(term * ln));
        }
        sum += ln * inner;
        if (s > 0 && std::abs(n) == s) last_n = std::max(last_n, std::abs(inner * ln));
    }
    const double total = std::abs(sum);
    if (last_n > kNegligibleRatio * total) warn_truncation("af_discrete_series (n)", d, last_n, total);
    if (last_p > kNegligibleRatio * total) warn_truncation("af_discrete_series (p)", d, last_p, total);
    return AFValue::from_raw(reference * sum, reference);
}

std::string_view to_string(Evaluator e) noexcept {
    switch (e) {
    case Evaluator::quadrature: return "quadrature";
    case Evaluator::series: return "series";
    case Evaluator::direct: return "direct";
    case Evaluator::aliased_series: return "aliased-series";
    }
    return "unknown";
}

std::optional<Evaluator> parse_evaluator(std::string_view name) noexcept {
    for (auto e : {Evaluator::quadrature, Evaluator::series, Evaluator::direct, Evaluator::aliased_series})
        if (name == to_string(e)) return e;
    return std::nullopt;
}

bool requires_continuous(Evaluator e) noexcept {
    return e == Evaluator::quadrature || e == Evaluator::series;
}

void check_compatible(Evaluator e, const ArrayConfig& array) {
    if (requires_continuous(e) != array.antennas().is_continuous()) {
        throw IncompatibleEvaluatorError(std::string("evaluator '") + std::string(to_string(e)) + "' requires " +
                                         (requires_continuous(e) ? "a continuous ring" : "a finite antenna count"));
    }
}

AFValue evaluate(Evaluator e, const ArrayConfig& array, const Waveform& wf, const Displacement& d,
                 const Truncation& t) {
    check_compatible(e, array);
    switch (e) {
    case Evaluator::quadrature: {
        QuadratureSpec quad = t.quad;
        if (t.adaptive) {
            const auto need = required_af_samples(array, wf, d);
            if (quad.sample_count() < need) quad = QuadratureSpec::covering(need);
        }
        return af_continuous_quadrature(array, wf, d, quad);
    }
    case Evaluator::series: return af_continuous_series(array, wf, d, t);
    case Evaluator::direct: return af_discrete_direct(array, wf, d);
    case Evaluator::aliased_series: return af_discrete_series(array, wf, d, t);
    }
    throw std::logic_error("unknown evaluator");
}

AFValue array_gain_mrt(const ArrayConfig& array, const Waveform& wf, const UserPosition& target,
                       const UserPosition& victim, Evaluator e, const Truncation& t) {
    return evaluate(e, array, wf, displacement(target, victim), t);
}

AFValue mrc_interference(const ArrayConfig& array, const Waveform& wf, const UserPosition& target,
                         const UserPosition& interferer, Evaluator e, const Truncation& t) {
    return array_gain_mrt(array, wf, target, interferer, e, t);
}

std::vector<AFValue> sweep_radii(Evaluator e, const ArrayConfig& array, const Waveform& wf,
                                 double theta_ss, std::span<const double> radii, const Truncation& t,
                                 unsigned threads) {
    check_compatible(e, array);
    std::vector<AFValue> out(radii.size());
    parallel_for(
        radii.size(), [&](std::size_t i) { out[i] = evaluate(e, array, wf, Displacement{radii[i], theta_ss}, t); },
        threads);
    return out;
}

}  // namespace cellfree

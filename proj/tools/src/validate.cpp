// SPDX-License-Identifier: Apache-2.0

#include "cellfree_tools/validate.hpp"

#include "cellfree/analysis.hpp"
#include "cellfree/special_functions.hpp"
#include "cellfree/time_domain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>

namespace cellfree::tools {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRingRadius = 1.0e4;

Waveform waveform(double rw) { return std::isinf(rw) ? Waveform::narrowband() : Waveform::with_resolution(rw); }

std::string describe(std::string_view what, double r, double theta, double rw, double err) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%.*s R_ss=%.9g theta_ss=%.9g R_W=%g err=%.3e", static_cast<int>(what.size()),
                  what.data(), r, theta, rw, err);
    return buf;
}

void record(SuiteResult& suite, double err, const std::string& inputs) {
    ++suite.cases;
    if (!(err <= suite.tolerance)) suite.failures.push_back(inputs);
    if (std::isnan(err)) {
        suite.max_error = kInf;
    } else {
        suite.max_error = std::max(suite.max_error, err);
    }
}

double rel_err(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) / std::abs(b); }

SuiteResult narrowband_closed_form(ValidationLevel level, const EvaluatorSet& ev) {
    SuiteResult s{"narrowband-closed-form", 0, 0.0, 1e-10, true, {}};
    const ArrayConfig ring(kRingRadius, AntennaCount::continuous());
    const int points = level == ValidationLevel::fast ? 200 : 1000;
    const double scale = kTwoPi * kRingRadius;
    for (int i = 0; i < points; ++i) {
        const double r = 100.0 * i / (points - 1);
        const double expected = scale * std::cyl_bessel_j(0.0, ring.wavenumber() * r);
        const auto v = ev.continuous_series(ring, Waveform::narrowband(), Displacement{r, 0.0});
        // measured against 2 pi R, since the closed form has zeros
        const double err = std::abs(v.raw - expected) / scale;
        record(s, err, describe("continuous", r, 0.0, kInf, err));
    }
    return s;
}

SuiteResult parseval(ValidationLevel level, const EvaluatorSet& ev) {
    SuiteResult s{"parseval", 0, 0.0, 1e-6, true, {}};
    const ArrayConfig ring(kRingRadius, AntennaCount::continuous());
    std::vector<double> radii{0.1, 1.0, 5.0, 20.0, 100.0};
    std::vector<double> angles{0.0, 3 * kPi / 37, kPi};
    std::vector<double> rws{1.5, 11.5, kInf};
    if (level == ValidationLevel::full) {
        radii.insert(radii.end(), {0.37, 2.9, 12.0, 47.5, 250.0});
        angles.insert(angles.end(), {1.0, 4.1});
        rws.insert(rws.end(), {21.5, 31.5});
    }
    for (double rw : rws)
        for (double theta : angles)
            for (double r : radii) {
                const Displacement d{r, theta};
                const auto wf = waveform(rw);
                const double err = rel_err(ev.continuous_series(ring, wf, d).raw,
                                           ev.continuous_quadrature(ring, wf, d).raw);
                record(s, err, describe("continuous", r, theta, rw, err));
            }
    return s;
}

SuiteResult discrete_equivalence(ValidationLevel level, const EvaluatorSet& ev) {
    SuiteResult s{"discrete-direct-vs-aliased", 0, 0.0, 1e-6, true, {}};
    std::vector<int> counts{16, 64, 256};
    std::vector<double> radii{0.1, 1.0, 5.0, 20.0, 100.0};
    std::vector<double> angles{0.0, 3 * kPi / 37, kPi};
    std::vector<double> rws{1.5, 11.5, kInf};
    std::vector<double> alias_fractions;
    if (level == ValidationLevel::full) {
        counts.insert(counts.end(), {15, 63, 255});
        angles.insert(angles.end(), {1.0, 4.1});
        alias_fractions = {0.5, 0.9, 1.0};
    }
    for (int n : counts) {
        const ArrayConfig ring(kRingRadius, AntennaCount::finite(n));
        const double limit = alias_radius(n);
        std::vector<double> rs;
        for (double r : radii)
            if (r <= limit) rs.push_back(r);
        for (double f : alias_fractions) rs.push_back(f * limit);
        for (double rw : rws)
            for (double theta : angles)
                for (double r : rs) {
                    const Displacement d{r, theta};
                    const auto wf = waveform(rw);
                    const double err =
                        rel_err(ev.discrete_series(ring, wf, d).raw, ev.discrete_direct(ring, wf, d).raw);
                    record(s, err, describe("N=" + std::to_string(n), r, theta, rw, err));
                }
    }
    return s;
}

SuiteResult time_domain_oracle(ValidationLevel level, const EvaluatorSet& ev) {
    SuiteResult s{"time-domain-oracle", 0, 0.0, 1e-3, false, {}};
    const ArrayConfig ring(1000.0, AntennaCount::finite(64));
    const int draws = level == ValidationLevel::fast ? 8 : 50;
    std::mt19937 rng(20240517);
    std::uniform_real_distribution<double> radius(0.0, 30.0), angle(0.0, kTwoPi);
    for (double rw : {1.5, 11.5}) {
        const auto wf = Waveform::with_resolution(rw);
        for (int i = 0; i < draws; ++i) {
            const UserPosition target{radius(rng), angle(rng)};
            const UserPosition interferer{radius(rng), angle(rng)};
            const double theta = angle(rng);
            const auto td = ev.time_domain(ring, wf, target, interferer, theta);
            const auto closed = space_dispersive_residual(ring, wf, displacement(target, interferer), theta);
            const double err = std::abs(td - closed);
            char buf[256];
            std::snprintf(buf, sizeof buf,
                          "R_W=%g ap_angle=%.9g target=(%.9g, %.9g) interferer=(%.9g, %.9g) err=%.3e", rw, theta,
                          target.radius(), target.angle(), interferer.radius(), interferer.angle(), err);
            record(s, err, buf);
        }
    }
    return s;
}

}  // namespace

std::optional<ValidationLevel> parse_level(std::string_view name) noexcept {
    if (name == "fast") return ValidationLevel::fast;
    if (name == "full") return ValidationLevel::full;
    return std::nullopt;
}

EvaluatorSet EvaluatorSet::library() {
    EvaluatorSet ev;
    ev.continuous_series = [](const ArrayConfig& a, const Waveform& w, const Displacement& d) {
        return evaluate(Evaluator::series, a, w, d);
    };
    ev.continuous_quadrature = [](const ArrayConfig& a, const Waveform& w, const Displacement& d) {
        return evaluate(Evaluator::quadrature, a, w, d);
    };
    ev.discrete_direct = [](const ArrayConfig& a, const Waveform& w, const Displacement& d) {
        return evaluate(Evaluator::direct, a, w, d);
    };
    ev.discrete_series = [](const ArrayConfig& a, const Waveform& w, const Displacement& d) {
        return evaluate(Evaluator::aliased_series, a, w, d);
    };
    ev.time_domain = [](const ArrayConfig& a, const Waveform& w, const UserPosition& target,
                        const UserPosition& interferer, double ap_angle) {
        return matched_combine_residual(a, w, target, interferer, ap_angle, TimeGrid::for_waveform(w));
    };
    return ev;
}

AFValue mis_signed_discrete_series(const ArrayConfig& array, const Waveform& wf, const Displacement& d) {
    const int count = array.antennas().count();
    const double reference = static_cast<double>(count);
    if (d.radius() == 0.0) return AFValue::from_raw(reference, reference);

    const double x = array.wavenumber() * d.radius();
    const double rho = wf.rho(d.radius());
    const int orders = std::min(bessel_order_limit(x), std::max(20, sinc_order_limit(rho)));
    const auto quad = QuadratureSpec::covering(required_sinc_samples(rho, orders));
    const auto coeffs = sinc_fourier_coeffs(rho, orders, quad);
    const int p_max = std::max(5, (bessel_order_limit(x) + orders + count - 1) / count);
    const auto bessel = bessel_j_table(orders + p_max * count, x);  // the defect: +x instead of -x
    auto j_at = [&](long long order) {
        const auto k = static_cast<std::size_t>(order < 0 ? -order : order);
        return (order < 0 && (k % 2) == 1) ? -bessel[k] : bessel[k];
    };

    std::complex<double> sum{0.0, 0.0};
    for (int n = -orders; n <= orders; ++n) {
        const double ln = coeffs[static_cast<std::size_t>(std::abs(n))];
        for (int p = -p_max; p <= p_max; ++p) {
            const long long pn = static_cast<long long>(p) * count;
            const double angle = static_cast<double>(pn) * (kPi / 2 - d.angle());
            sum += ln * j_at(n + pn) * std::polar(1.0, std::fmod(angle, kTwoPi));
        }
    }
    return AFValue::from_raw(reference * sum, reference);
}

EvaluatorSet mutant(std::string_view name) {
    auto ev = EvaluatorSet::library();
    if (name == "bessel-sign") {
        ev.discrete_series = mis_signed_discrete_series;
        return ev;
    }
    throw std::invalid_argument("unknown mutant '" + std::string(name) + "'");
}

bool ValidationReport::passed() const noexcept {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

ValidationReport run_validation(ValidationLevel level, const EvaluatorSet& evaluators) {
    ValidationReport report;
    report.suites.push_back(narrowband_closed_form(level, evaluators));
    report.suites.push_back(parseval(level, evaluators));
    report.suites.push_back(discrete_equivalence(level, evaluators));
    report.suites.push_back(time_domain_oracle(level, evaluators));
    return report;
}

void print_report(std::ostream& out, const ValidationReport& report, std::size_t max_echo) {
    for (const auto& s : report.suites) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%-28s cases=%-5zu max_%s_err=%.3e tol=%.0e %s\n", s.name.c_str(), s.cases,
                      s.relative ? "rel" : "abs", s.max_error, s.tolerance, s.passed() ? "PASS" : "FAIL");
        out << buf;
        for (std::size_t i = 0; i < std::min(max_echo, s.failures.size()); ++i)
            out << "  failing case: " << s.failures[i] << '\n';
        if (s.failures.size() > max_echo) out << "  ... " << s.failures.size() - max_echo << " more\n";
    }
    out << (report.passed() ? "validate: all suites passed\n" : "validate: tolerance breached\n");
}

}  // namespace cellfree::tools

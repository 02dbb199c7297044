// SPDX-License-Identifier: Apache-2.0

#include "cellfree/special_functions.hpp"

#include "cellfree/diagnostics.hpp"
#include "cellfree/model.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace cellfree {
namespace {

constexpr double kRescaleThreshold = 1.0e250;
constexpr double kRescaleFactor = 1.0e-250;
// ln of the smallest positive subnormal double
constexpr double kLogUnderflow = -745.0;

void check_argument(double x) {
    if (!std::isfinite(x) || std::abs(x) >= kBesselArgumentGuard)
        throw DomainError("Bessel argument outside guarded range |x| < 1e7: " + std::to_string(x));
}

void check_order(long long order) {
    if (order > kBesselOrderGuard || order < -static_cast<long long>(kBesselOrderGuard))
        throw DomainError("Bessel order outside guarded range: " + std::to_string(order));
}

// Smallest order k > x beyond which J_k(x) is below the double underflow
// threshold, from the bound J_k(x) <= (x/2)^k / k!.
int underflow_order(double x) {
    const double log_half_x = std::log(0.5 * x);
    auto log_bound = [&](long long k) {
        return static_cast<double>(k) * log_half_x - std::lgamma(static_cast<double>(k) + 1.0);
    };
    // log_bound is decreasing for k > x/2
    long long lo = static_cast<long long>(std::floor(x)) + 1;
    if (log_bound(lo) < kLogUnderflow) return static_cast<int>(lo);
    long long step = 16;
    long long hi = lo + step;
    while (log_bound(hi) >= kLogUnderflow) {
        lo = hi;
        step *= 2;
        hi = lo + step;
    }
    while (hi - lo > 1) {
        const long long mid = lo + (hi - lo) / 2;
        if (log_bound(mid) < kLogUnderflow) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return static_cast<int>(std::min<long long>(hi, kBesselOrderGuard));
}

// J_0..J_max_order at x >= 0 by Miller's backward recurrence, normalized with
// J_0 + 2 sum_k J_2k = 1.
std::vector<double> miller_table(int max_order, double x) {
    std::vector<double> out(static_cast<std::size_t>(max_order) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }
    if (x < 1.0e-5) {
        // two-term ascending series; next term is O((x/2)^4)
        const double h = 0.5 * x;
        double lead = 1.0;
        for (int k = 0; k <= max_order; ++k) {
            if (k > 0) lead *= h / k;
            if (lead == 0.0) break;
            out[static_cast<std::size_t>(k)] = lead * (1.0 - h * h / (k + 1));
        }
        return out;
    }

    const int top = std::min(max_order, underflow_order(x));
    const double span = std::max(static_cast<double>(top), std::ceil(x));
    int start = static_cast<int>(span + std::ceil(std::sqrt(160.0 * span)) + 30.0);
    start += start % 2;

    const double two_over_x = 2.0 / x;
    double j_next = 0.0;  // J_{k+1}
    double j_curr = 1.0;  // J_k, arbitrary scale
    double norm = 0.0;
    auto stored_hi = static_cast<std::size_t>(top);
    for (int k = start; k > 0; --k) {
        const double j_prev = k * two_over_x * j_curr - j_next;
        j_next = j_curr;
        j_curr = j_prev;
        const int order = k - 1;
        if (order <= top) out[static_cast<std::size_t>(order)] = j_curr;
        if (order == 0) {
            norm += j_curr;
        } else if (order % 2 == 0) {
            norm += 2.0 * j_curr;
        }
        if (std::abs(j_curr) > kRescaleThreshold) {
            j_curr *= kRescaleFactor;
            j_next *= kRescaleFactor;
            norm *= kRescaleFactor;
            if (order <= top) {
                for (auto i = static_cast<std::size_t>(order); i <= stored_hi; ++i)
                    out[i] *= kRescaleFactor;
            }
        }
    }
    const double inv = 1.0 / norm;
    for (int k = 0; k <= top; ++k) out[static_cast<std::size_t>(k)] *= inv;
    return out;
}

struct FftwFree {
    void operator()(void* p) const noexcept { fftw_free(p); }
};

// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

std::vector<double> bessel_j_table(int max_order, double x) {
    if (max_order < 0) throw std::invalid_argument("max_order must be >= 0");
    check_order(max_order);
    check_argument(x);
    auto table = miller_table(max_order, std::abs(x));
    if (x < 0.0) {
        for (std::size_t k = 1; k < table.size(); k += 2) table[k] = -table[k];
    }
    return table;
}

double bessel_j(int order, double x) {
    check_order(order);
    check_argument(x);
    const int n = std::abs(order);
    // J_{-n} = (-1)^n J_n and J_n(-x) = (-1)^n J_n(x)
    const bool odd = (n % 2) != 0;
    const bool negate = odd && ((order < 0) != (x < 0.0));
    const double ax = std::abs(x);
    if (ax == 0.0) return n == 0 ? 1.0 : 0.0;
    if (ax >= 1.0e-5 && n > underflow_order(ax)) return 0.0;
    const double value = miller_table(n, ax)[static_cast<std::size_t>(n)];
    return negate ? -value : value;
}

QuadratureSpec::QuadratureSpec(int sample_count) : samples_(sample_count) {
    if (sample_count < kMinSamples || !std::has_single_bit(static_cast<unsigned>(sample_count)))
        throw std::invalid_argument("quadrature sample count must be a power of two >= 64, got " +
                                    std::to_string(sample_count));
}

QuadratureSpec QuadratureSpec::covering(long long min_samples) {
    const auto want = static_cast<unsigned long long>(std::max<long long>(min_samples, kMinSamples));
    const auto n = std::bit_ceil(want);
    if (n > (1ULL << 30)) throw QuadratureResolutionError("required quadrature size exceeds 2^30");
    return QuadratureSpec{static_cast<int>(n)};
}

long long required_sinc_samples(double rho, int l_max) {
    return 8LL * (static_cast<long long>(l_max) + static_cast<long long>(std::ceil(rho)));
}

std::vector<double> sinc_fourier_coeffs(double rho, int l_max, QuadratureSpec quad) {
    if (!(rho >= 0.0) || !std::isfinite(rho)) throw std::invalid_argument("rho must be finite and >= 0");
    if (l_max < 0) throw std::invalid_argument("l_max must be >= 0");

    std::vector<double> coeffs(static_cast<std::size_t>(l_max) + 1, 0.0);
    if (rho == 0.0) {
        coeffs[0] = 1.0;
        return coeffs;
    }

    const int m = quad.sample_count();
    if (m < required_sinc_samples(rho, l_max)) {
        throw QuadratureResolutionError(
            "sinc coefficient quadrature under-resolved: " + std::to_string(m) + " samples < 8*(l_max + ceil(rho)) = " +
            std::to_string(required_sinc_samples(rho, l_max)));
    }

    std::unique_ptr<double, FftwFree> in(static_cast<double*>(fftw_malloc(sizeof(double) * m)));
    std::unique_ptr<fftw_complex, FftwFree> out(
        static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (m / 2 + 1))));
    if (!in || !out) throw std::bad_alloc();

    fftw_plan plan;
    {
        std::lock_guard lock(fftw_planner_mutex());
        plan = fftw_plan_dft_r2c_1d(m, in.get(), out.get(), FFTW_ESTIMATE);
    }
    for (int i = 0; i < m; ++i) in.get()[i] = sinc(rho * std::sin(kTwoPi * i / m));
    fftw_execute(plan);
    {
        std::lock_guard lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }

    const double scale = 1.0 / m;
    for (int l = 0; l <= l_max; ++l) {
        const double re = out.get()[l][0] * scale;
        const double im = out.get()[l][1] * scale;
        if (std::abs(im) >= 1.0e-10)
            throw std::logic_error("sinc Fourier coefficient has non-vanishing imaginary part");
        coeffs[static_cast<std::size_t>(l)] = re;
    }
    return coeffs;
}

}  // namespace cellfree

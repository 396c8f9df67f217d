#include "roughlub/coefficients.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "roughlub/errors.hpp"
#include "roughlub/quadrature.hpp"

namespace roughlub {

namespace {

constexpr double kKernelTol = 1e-13;
constexpr std::size_t kMaxPanels = std::size_t{1} << 14;

void check_intensity(double n, const char* what) {
    if (!std::isfinite(n) || n < 0.0 || n > kMaxIntensity) {
        throw DomainError(std::string(what) + ": intensity " + std::to_string(n) +
                          " outside [0, 700]");
    }
}

// (I2 - 1) / n = -int_0^1 (t^2/2) phi(n t^2 / 2) dt with phi(x) = (1 - e^{-x}) / x.
double decay_defect(double n) {
    auto integrand = [n](double t) {
        const double x = 0.5 * n * t * t;
        const double phi = x == 0.0 ? 1.0 : -std::expm1(-x) / x;
        return 0.5 * t * t * phi;
    };
    return -quadrature::integrate(integrand, 0.0, 1.0, kKernelTol, kMaxPanels).value;
}

}  // namespace

RoughnessIntensity::RoughnessIntensity(double value) : value_(value) {
    if (!std::isfinite(value) || value < 0.0) {
        throw DomainError("roughness intensity must be finite and non-negative, got " +
                          std::to_string(value));
    }
}

double kernel_i1(double n) {
    check_intensity(n, "kernel_i1");
    return quadrature::integrate([n](double s) { return std::exp(0.5 * n * s * s); }, 0.0, 1.0,
                                 kKernelTol, kMaxPanels)
        .value;
}

double kernel_i2(double n) {
    check_intensity(n, "kernel_i2");
    return quadrature::integrate([n](double t) { return std::exp(-0.5 * n * t * t); }, 0.0, 1.0,
                                 kKernelTol, kMaxPanels)
        .value;
}

double kernel_i3(double n) {
    check_intensity(n, "kernel_i3");
    const auto& rule = quadrature::gauss_legendre_16();
    auto decay = [n](double t) { return std::exp(-0.5 * n * t * t); };
    // The inner integral G(s) is accumulated panel by panel on the outer partition.
    auto estimate = [&](std::size_t panels) {
        const double h = 1.0 / static_cast<double>(panels);
        double inner_before = 0.0;
        double sum = 0.0;
        for (std::size_t p = 0; p < panels; ++p) {
            const double lo = h * static_cast<double>(p);
            double panel_sum = 0.0;
            for (std::size_t k = 0; k < quadrature::kGaussOrder; ++k) {
                const double s = lo + 0.5 * h * (rule.nodes[k] + 1.0);
                const double inner = inner_before + quadrature::gauss_panel(decay, lo, s);
                panel_sum += rule.weights[k] * std::exp(0.5 * n * s * s) * inner;
            }
            sum += 0.5 * h * panel_sum;
            inner_before += quadrature::gauss_panel(decay, lo, lo + h);
        }
        return sum;
    };
    return quadrature::refine_until_converged(estimate, kKernelTol, kMaxPanels).value;
}

double kernel_i4(double n) {
    check_intensity(n, "kernel_i4");
    const auto& rule = quadrature::gauss_legendre_16();
    // H(s) = int_s^1 e^{-n (t^2 - s^2)/2} dt is rebuilt from the right with
    // H(a) = int_a^b e^{-n (t^2 - a^2)/2} dt + e^{-n (b^2 - a^2)/2} H(b), so every
    // factor stays in (0, 1].
    auto estimate = [&](std::size_t panels) {
        const double h = 1.0 / static_cast<double>(panels);
        double tail = 0.0;  // H at the right end of the current panel
        double sum = 0.0;
        for (std::size_t p = panels; p-- > 0;) {
            const double lo = h * static_cast<double>(p);
            const double hi = lo + h;
            double panel_sum = 0.0;
            for (std::size_t k = 0; k < quadrature::kGaussOrder; ++k) {
                const double s = lo + 0.5 * h * (rule.nodes[k] + 1.0);
                const double local = quadrature::gauss_panel(
                    [n, s](double t) { return std::exp(-0.5 * n * (t - s) * (t + s)); }, s, hi);
                const double inner = local + std::exp(-0.5 * n * (hi - s) * (hi + s)) * tail;
                panel_sum += rule.weights[k] * inner;
            }
            sum += 0.5 * h * panel_sum;
            tail = quadrature::gauss_panel(
                       [n, lo](double t) { return std::exp(-0.5 * n * (t - lo) * (t + lo)); }, lo,
                       hi) +
                   std::exp(-0.5 * n * (hi - lo) * (hi + lo)) * tail;
        }
        return sum;
    };
    return quadrature::refine_until_converged(estimate, kKernelTol, kMaxPanels).value;
}

double coeff_b(double n) {
    check_intensity(n, "coeff_b");
    if (n == 0.0) {
        return 0.5;
    }
    if (n < kSmallIntensitySwitch) {
        // (e^{n/2} - 1)/n = (1/2) int_0^1 e^{n t/2} dt, expanded to second order.
        return 0.5 * (1.0 + n / 4.0 + n * n / 24.0) / kernel_i1(n);
    }
    return std::expm1(0.5 * n) / n / kernel_i1(n);
}

double coeff_a(double n) {
    check_intensity(n, "coeff_a");
    if (n < kSmallIntensitySwitch) {
        // A'(0) = 1/20; the quadratic term is below 3e-14 on this branch.
        return 1.0 + n / 20.0;
    }
    return 12.0 * (coeff_b(n) * kernel_i4(n) + decay_defect(n));
}

CoefficientPair homogenized_coefficients(RoughnessIntensity n) {
    return {coeff_a(n.value()), coeff_b(n.value())};
}

double n_psi_cosine(double amplitude, int wavenumber) {
    if (!std::isfinite(amplitude) || amplitude < 0.0) {
        throw DomainError("cosine amplitude must be finite and non-negative");
    }
    if (wavenumber < 1) {
        throw DomainError("cosine wavenumber must be >= 1");
    }
    const double k = 2.0 * std::numbers::pi * static_cast<double>(wavenumber);
    return 0.5 * amplitude * amplitude * k * k;
}

double n_psi_tabulated(const PeriodicGradientSamples& samples) {
    if (samples.shape.empty()) {
        throw InputError("gradient sample grid has no dimensions");
    }
    std::size_t points = 1;
    for (const std::size_t extent : samples.shape) {
        if (extent < 2) {
            throw InputError("gradient sample grid needs at least 2 points per direction");
        }
        points *= extent;
    }
    const std::size_t components = samples.shape.size();
    if (samples.values.size() != points * components) {
        throw InputError("gradient sample grid is ragged: expected " +
                         std::to_string(points * components) + " values, got " +
                         std::to_string(samples.values.size()));
    }
    double sum_sq = 0.0;
    for (const double g : samples.values) {
        sum_sq += g * g;
    }
    // Unit cell volume.
    return sum_sq / static_cast<double>(points);
}

}  // namespace roughlub

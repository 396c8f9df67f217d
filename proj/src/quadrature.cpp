#include "roughlub/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "roughlub/errors.hpp"

namespace roughlub::quadrature {

namespace {

GaussRule build_rule() {
    constexpr std::size_t n = kGaussOrder;
    GaussRule rule{};
    // Roots are symmetric; solve for the positive half.
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double derivative = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double pk = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 -
                                   (static_cast<double>(k) - 1.0) * p0) /
                                  static_cast<double>(k);
                p0 = p1;
                p1 = pk;
            }
            derivative = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / derivative;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre_16() {
    static const GaussRule rule = build_rule();
    return rule;
}

double gauss_panel(const std::function<double(double)>& f, double a, double b) {
    const auto& rule = gauss_legendre_16();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t k = 0; k < kGaussOrder; ++k) {
        sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
    }
    return half * sum;
}

CompositeResult refine_until_converged(const std::function<double(std::size_t)>& estimate,
                                       double tol, std::size_t max_panels) {
    std::size_t panels = 1;
    double previous = estimate(panels);
    while (panels < max_panels) {
        panels *= 2;
        const double current = estimate(panels);
        const double change = std::abs(current - previous);
        if (change < tol * std::max(1.0, std::abs(current))) {
            return {current, panels, change};
        }
        previous = current;
    }
    throw ConvergenceError("quadrature did not converge within " + std::to_string(max_panels) +
                               " panels",
                           static_cast<int>(panels), std::abs(previous));
}

CompositeResult integrate(const std::function<double(double)>& f, double a, double b, double tol,
                          std::size_t max_panels) {
    const double length = b - a;
    return refine_until_converged(
        [&](std::size_t panels) {
            const double h = length / static_cast<double>(panels);
            double sum = 0.0;
            for (std::size_t p = 0; p < panels; ++p) {
                const double lo = a + h * static_cast<double>(p);
                sum += gauss_panel(f, lo, lo + h);
            }
            return sum;
        },
        tol, max_panels);
}

}  // namespace roughlub::quadrature

#pragma once

#include <array>
#include <cstddef>
#include <functional>

namespace roughlub::quadrature {

inline constexpr std::size_t kGaussOrder = 16;

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::array<double, kGaussOrder> nodes;
    std::array<double, kGaussOrder> weights;
};

/// The 16-point rule, computed once by Newton iteration on P_16.
const GaussRule& gauss_legendre_16();

/// Single-panel 16-point Gauss-Legendre estimate of the integral of f over [a, b].
double gauss_panel(const std::function<double(double)>& f, double a, double b);

struct CompositeResult {
    double value = 0.0;
    std::size_t panels = 0;
    double last_change = 0.0;
};

/// Composite 16-point Gauss-Legendre on [a, b], doubling the panel count until two
/// successive estimates differ by less than tol * max(1, |estimate|).
/// Throws ConvergenceError if max_panels is reached first.
CompositeResult integrate(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-13, std::size_t max_panels = std::size_t{1} << 16);

/// Panel-doubling driver: `estimate(panels)` returns the composite estimate for a
/// uniform partition of [0, 1] into that many panels.
CompositeResult refine_until_converged(const std::function<double(std::size_t)>& estimate,
                                       double tol, std::size_t max_panels);

}  // namespace roughlub::quadrature

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "roughlub/errors.hpp"
#include "roughlub/quadrature.hpp"

namespace rq = roughlub::quadrature;

TEST(GaussLegendre, WeightsSumToTwoAndNodesAreSymmetric) {
    const auto& rule = rq::gauss_legendre_16();
    double sum = 0.0;
    for (std::size_t k = 0; k < rq::kGaussOrder; ++k) {
        sum += rule.weights[k];
        EXPECT_NEAR(rule.nodes[k], -rule.nodes[rq::kGaussOrder - 1 - k], 1e-15);
    }
    EXPECT_NEAR(sum, 2.0, 1e-14);
}

TEST(GaussLegendre, ExactForDegree31) {
    // int_0^1 x^31 dx = 1/32
    const double v = rq::gauss_panel([](double x) { return std::pow(x, 31); }, 0.0, 1.0);
    EXPECT_NEAR(v, 1.0 / 32.0, 1e-15);
}

TEST(CompositeIntegrate, ConvergesOnSmoothIntegrand) {
    const auto r = rq::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    EXPECT_NEAR(r.value, 2.0, 1e-14);
    EXPECT_GE(r.panels, 2u);
}

TEST(CompositeIntegrate, ThrowsWhenPanelBudgetIsExhausted) {
    EXPECT_THROW(rq::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-15, 4),
                 roughlub::ConvergenceError);
}

#pragma once

// Homogenized lubrication coefficients for a rough upper surface.
//
// The roughness enters the limit model only through the scalar intensity
// N = cell average of |grad_X((1 - psi0) h2)|^2. Given N, the Poiseuille term of
// the Reynolds equation is multiplied by A(N) and the Couette factor 1/2 is
// replaced by B(N):
//
//   A = (12/N) (e^{N/2} I2 - 1) - (12/N) (e^{N/2} - 1) I3 / I1
//   B = (e^{N/2} - 1) / (N I1)
//
// with the kernels
//
//   I1 = int_0^1 e^{N s^2/2} ds
//   I2 = int_0^1 e^{-N t^2/2} dt
//   I3 = int_0^1 int_0^s e^{N (s^2 - t^2)/2} dt ds
//   I4 = int_0^1 int_s^1 e^{-N (t^2 - s^2)/2} dt ds   (= I1 I2 - I3)
//
// Both terms of A grow like e^{N/2} while A itself stays O(1), so A is evaluated
// through the equivalent cancellation-free form A = 12 (B I4 + (I2 - 1)/N).
// A(0) = 1 and B(0) = 1/2 recover the classical Reynolds equation.

#include <cstddef>
#include <vector>

namespace roughlub {

/// Largest supported intensity; e^{N/2} must stay far from overflow.
inline constexpr double kMaxIntensity = 700.0;

/// Below this intensity the coefficients use their Taylor expansions about N = 0.
inline constexpr double kSmallIntensitySwitch = 1e-6;

/// Roughness intensity N at a point of the horizontal domain; always >= 0.
class RoughnessIntensity {
public:
    RoughnessIntensity() = default;
    /// Throws DomainError for negative or non-finite values.
    explicit RoughnessIntensity(double value);

    double value() const noexcept { return value_; }

    friend bool operator==(RoughnessIntensity, RoughnessIntensity) = default;

private:
    double value_ = 0.0;
};

/// Poiseuille correction `a` and Couette correction `b` at one intensity.
struct CoefficientPair {
    double a = 1.0;
    double b = 0.5;
};

/// int_0^1 e^{n s^2/2} ds, n in [0, 700].
double kernel_i1(double n);
/// int_0^1 e^{-n t^2/2} dt, n in [0, 700].
double kernel_i2(double n);
/// int_0^1 e^{n s^2/2} G(s) ds with G(s) = int_0^s e^{-n t^2/2} dt, n in [0, 700].
double kernel_i3(double n);
/// int_0^1 int_s^1 e^{-n (t^2 - s^2)/2} dt ds, n in [0, 700]. Bounded by 1/2.
double kernel_i4(double n);

double coeff_a(double n);
double coeff_b(double n);
CoefficientPair homogenized_coefficients(RoughnessIntensity n);

/// Intensity of the fully rough cosine ripple h2(X) = amplitude cos(2 pi k X_1) on
/// the unit torus: amplitude^2 (2 pi k)^2 / 2.
double n_psi_cosine(double amplitude, int wavenumber);

/// Gradient samples of the rough profile on a uniform periodic grid of the unit cell.
/// `shape` has one entry per torus direction; each sample is a vector with
/// shape.size() components, stored contiguously in row-major order.
struct PeriodicGradientSamples {
    std::vector<std::size_t> shape;
    std::vector<double> values;
};

/// Periodic trapezoid (plain average) estimate of int_T |grad|^2 dX.
double n_psi_tabulated(const PeriodicGradientSamples& samples);

}  // namespace roughlub

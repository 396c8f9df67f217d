#pragma once

#include <vector>

#include "roughlub/geometry.hpp"
#include "roughlub/solver.hpp"
#include "roughlub/vec2.hpp"

namespace roughlub {

/// Horizontal velocity across the gap at one point of the domain. Z = 0 is the
/// moving lower surface, Z = 1 the upper surface at rest.
struct VelocityProfile {
    Vec2 location;
    std::vector<double> z;
    std::vector<Vec2> u;
    double n_psi = 0.0;
    double h1 = 0.0;
    Vec2 grad_p;
};

/// Default number of Z intervals for velocity reconstruction.
inline constexpr int kDefaultZCount = 64;

/// Solves N Z u' - u'' + h1^2 grad p = 0, u(0) = U_b, u(1) = 0 in closed form on
/// z_count + 1 uniform samples. The Poiseuille part is evaluated as
///   int_Z^1 H(s) ds - I4 W(Z),  H(s) = int_s^1 e^{-N (t^2 - s^2)/2} dt,
/// and the Couette weight as W(Z) = int_Z^1 e^{N s^2/2} ds / int_0^1 e^{N s^2/2} ds,
/// so no large exponentials are ever subtracted. Requires z_count >= 8.
VelocityProfile velocity_profile(double h1, double n, Vec2 grad_p, Vec2 u_b,
                                 int z_count = kDefaultZCount);

/// h1 * int_0^1 u dZ by composite Simpson over the profile samples.
Vec2 flux_from_velocity(const VelocityProfile& profile);

/// h1 B(N) U_b - (h1^3 A(N) / 12) grad p.
Vec2 flux_from_coefficients(double h1, double n, Vec2 grad_p, Vec2 u_b);

/// Gradient of the P1 pressure in the triangle containing (x, y).
Vec2 gradient_at(const PressureSolution& solution, const Grid& grid, double x, double y);

struct ComparisonReport {
    double l2 = 0.0;
    double linf = 0.0;
    double l2_outside_rough = 0.0;
};

/// Nodal difference rough - smooth.
std::vector<double> pressure_difference(const PressureSolution& smooth,
                                        const PressureSolution& rough);

/// Norms of rough - smooth. L2 norms use trapezoid nodal weights; the restricted
/// norm only counts nodes outside every (closed) rough rectangle.
ComparisonReport compare_fields(const PressureSolution& smooth, const PressureSolution& rough,
                                const Grid& grid, const RoughnessSpec& roughness);

}  // namespace roughlub

#include "roughlub/postprocess.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "roughlub/coefficients.hpp"
#include "roughlub/errors.hpp"
#include "roughlub/quadrature.hpp"

namespace roughlub {

namespace {

// Tail integrals int_{x_i}^1 of samples on a uniform grid with an even number of
// intervals, by composite Simpson over interval pairs. Only even indices are filled.
std::vector<double> simpson_tails(const std::vector<double>& f, double step) {
    const std::size_t intervals = f.size() - 1;
    std::vector<double> tail(f.size(), 0.0);
    for (std::size_t i = intervals; i >= 2; i -= 2) {
        tail[i - 2] = tail[i] + step / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    }
    return tail;
}

double simpson_uniform(const std::vector<double>& f, double step) {
    const std::size_t intervals = f.size() - 1;
    double sum = 0.0;
    std::size_t even_end = intervals;
    if (intervals % 2 == 1) {
        // Simpson 3/8 on the last three intervals.
        even_end = intervals - 3;
        const std::size_t i = even_end;
        sum += 3.0 * step / 8.0 * (f[i] + 3.0 * f[i + 1] + 3.0 * f[i + 2] + f[i + 3]);
    }
    for (std::size_t i = 0; i + 2 <= even_end; i += 2) {
        sum += step / 3.0 * (f[i] + 4.0 * f[i + 1] + f[i + 2]);
    }
    return sum;
}

}  // namespace

VelocityProfile velocity_profile(double h1, double n, Vec2 grad_p, Vec2 u_b, int z_count) {
    if (!std::isfinite(n) || n < 0.0 || n > kMaxIntensity) {
        throw DomainError("velocity_profile: intensity outside [0, 700]");
    }
    if (!(h1 > 0.0) || !std::isfinite(h1)) {
        throw DomainError("velocity_profile: gap height must be positive");
    }
    if (z_count < 8) {
        throw DomainError("velocity_profile: z_count must be >= 8");
    }

    // Fine grid: an even number of sub-intervals per Z sample, fine enough for
    // the boundary layer of width ~1/N near Z = 1.
    const double target = std::max(2048.0, 16.0 * n);
    int per_sample = static_cast<int>(std::ceil(target / z_count));
    per_sample += per_sample % 2;
    const std::size_t fine = static_cast<std::size_t>(z_count) * static_cast<std::size_t>(per_sample);
    const double step = 1.0 / static_cast<double>(fine);

    std::vector<double> density(fine + 1);  // e^{N (s^2 - 1)/2}
    std::vector<double> inner(fine + 1);    // H(s)
    for (std::size_t i = 0; i <= fine; ++i) {
        const double s = static_cast<double>(i) * step;
        density[i] = std::exp(0.5 * n * (s - 1.0) * (s + 1.0));
    }
    inner[fine] = 0.0;
    for (std::size_t i = fine; i-- > 0;) {
        const double lo = static_cast<double>(i) * step;
        const double hi = static_cast<double>(i + 1) * step;
        const double local = quadrature::gauss_panel(
            [n, lo](double t) { return std::exp(-0.5 * n * (t - lo) * (t + lo)); }, lo, hi);
        inner[i] = local + std::exp(-0.5 * n * (hi - lo) * (hi + lo)) * inner[i + 1];
    }
    const std::vector<double> density_tail = simpson_tails(density, step);
    const std::vector<double> inner_tail = simpson_tails(inner, step);
    const double density_total = density_tail[0];
    const double complementary = inner_tail[0];  // I4

    VelocityProfile profile;
    profile.n_psi = n;
    profile.h1 = h1;
    profile.grad_p = grad_p;
    profile.z.reserve(static_cast<std::size_t>(z_count) + 1);
    profile.u.reserve(static_cast<std::size_t>(z_count) + 1);
    for (int k = 0; k <= z_count; ++k) {
        const std::size_t i = static_cast<std::size_t>(k) * static_cast<std::size_t>(per_sample);
        const double couette = density_tail[i] / density_total;
        const double poiseuille = inner_tail[i] - complementary * couette;
        profile.z.push_back(static_cast<double>(k) / z_count);
        profile.u.push_back(h1 * h1 * poiseuille * grad_p + couette * u_b);
    }
    return profile;
}

Vec2 flux_from_velocity(const VelocityProfile& profile) {
    const std::size_t count = profile.z.size();
    if (count < 9 || profile.u.size() != count) {
        throw InputError("flux_from_velocity: need at least 9 matching samples");
    }
    const double step = profile.z[1] - profile.z[0];
    if (profile.z.front() != 0.0 || std::abs(profile.z.back() - 1.0) > 1e-14 ||
        std::abs(step * static_cast<double>(count - 1) - 1.0) > 1e-12) {
        throw InputError("flux_from_velocity: samples must cover [0, 1] uniformly");
    }
    std::vector<double> ux(count);
    std::vector<double> uy(count);
    for (std::size_t i = 0; i < count; ++i) {
        ux[i] = profile.u[i].x;
        uy[i] = profile.u[i].y;
    }
    return profile.h1 * Vec2{simpson_uniform(ux, step), simpson_uniform(uy, step)};
}

Vec2 flux_from_coefficients(double h1, double n, Vec2 grad_p, Vec2 u_b) {
    const double a = coeff_a(n);
    const double b = coeff_b(n);
    return h1 * b * u_b - (h1 * h1 * h1 * a / 12.0) * grad_p;
}

Vec2 gradient_at(const PressureSolution& solution, const Grid& grid, double x, double y) {
    if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) {
        throw DomainError("gradient_at: point outside the unit square");
    }
    if (solution.nodal.size() != grid.node_count()) {
        throw InputError("gradient_at: solution does not match the grid");
    }
    const int i = std::min(static_cast<int>(x * grid.nx()), grid.nx() - 1);
    const int j = std::min(static_cast<int>(y * grid.ny()), grid.ny() - 1);
    const double lx = x * grid.nx() - i;
    const double ly = y * grid.ny() - j;
    auto p = [&](int a, int b) { return solution.nodal[grid.node_index(a, b)]; };
    if (lx >= ly) {
        // Lower-right triangle (ll, lr, ur).
        return {(p(i + 1, j) - p(i, j)) / grid.hx(), (p(i + 1, j + 1) - p(i + 1, j)) / grid.hy()};
    }
    // Upper-left triangle (ll, ur, ul).
    return {(p(i + 1, j + 1) - p(i, j + 1)) / grid.hx(), (p(i, j + 1) - p(i, j)) / grid.hy()};
}

std::vector<double> pressure_difference(const PressureSolution& smooth,
                                        const PressureSolution& rough) {
    if (smooth.nodal.size() != rough.nodal.size()) {
        throw InputError("pressure fields have different sizes");
    }
    std::vector<double> diff(smooth.nodal.size());
    for (std::size_t k = 0; k < diff.size(); ++k) {
        diff[k] = rough.nodal[k] - smooth.nodal[k];
    }
    return diff;
}

ComparisonReport compare_fields(const PressureSolution& smooth, const PressureSolution& rough,
                                const Grid& grid, const RoughnessSpec& roughness) {
    if (smooth.nodal.size() != grid.node_count() || rough.nodal.size() != grid.node_count()) {
        throw InputError("compare_fields: dimension mismatch between solutions and grid");
    }
    const std::vector<double> diff = pressure_difference(smooth, rough);
    ComparisonReport report;
    double sum = 0.0;
    double sum_outside = 0.0;
    for (int j = 0; j <= grid.ny(); ++j) {
        const double wy = (j == 0 || j == grid.ny()) ? 0.5 : 1.0;
        for (int i = 0; i <= grid.nx(); ++i) {
            const double wx = (i == 0 || i == grid.nx()) ? 0.5 : 1.0;
            const double d = diff[grid.node_index(i, j)];
            const double contribution = wx * wy * grid.hx() * grid.hy() * d * d;
            sum += contribution;
            if (!roughness.is_rough(grid.node_x(i), grid.node_y(j))) {
                sum_outside += contribution;
            }
            report.linf = std::max(report.linf, std::abs(d));
        }
    }
    report.l2 = std::sqrt(sum);
    report.l2_outside_rough = std::sqrt(sum_outside);
    return report;
}

}  // namespace roughlub

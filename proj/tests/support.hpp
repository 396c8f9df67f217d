#pragma once

// Scenario builders and reference computations shared by the solver suites.

#include <algorithm>
#include <cmath>
#include <vector>

#include "roughlub/geometry.hpp"
#include "roughlub/solver.hpp"

namespace roughlub::testing {

inline RoughRegion rough_band(double x0, double x1, double n) {
    RoughRegion r;
    r.x0 = x0;
    r.x1 = x1;
    r.y0 = 0.0;
    r.y1 = 1.0;
    r.source = DirectIntensity{n};
    return r;
}

inline GapProfile constant_gap(double h) {
    GapProfile g;
    g.kind = GapKind::constant;
    g.c0 = h;
    return g;
}

/// Channel scenario on an n x n grid with the default data.
inline ScenarioConfig channel(int n) {
    ScenarioConfig c;
    c.nx = c.ny = n;
    return c;
}

/// h1 = 1, smooth, U_b = (1, 0), Q_e = -1/2: the Couette flux balances the inlet.
inline ScenarioConfig balanced_couette(int n) {
    ScenarioConfig c = channel(n);
    c.gap = constant_gap(1.0);
    c.q_e = -0.5;
    return c;
}

/// Max nodal difference between a lateral-natural 2D run and oracle_1d.
inline double oracle_linf_error(ScenarioConfig c, int nx, int ny = 4) {
    c.nx = nx;
    c.ny = ny;
    c.lateral_natural = true;
    c.solver.tol = 1e-12;
    const ReynoldsRun run = run_reynolds(c);
    const auto profile = oracle_1d(c.gap, c.roughness, c.u_b.x, c.q_e, nx);
    double err = 0.0;
    const Grid& g = run.discretization.grid;
    for (int j = 0; j <= g.ny(); ++j) {
        for (int i = 0; i <= g.nx(); ++i) {
            err = std::max(err, std::abs(run.solution.nodal[g.node_index(i, j)] -
                                         profile.p[static_cast<std::size_t>(i)]));
        }
    }
    return err;
}

/// Discrete L2 distance between a coarse solution and a 2x refined one at the
/// coarse nodes (trapezoid weights).
inline double refinement_l2(const Grid& coarse, const std::vector<double>& pc,
                            const Grid& fine, const std::vector<double>& pf) {
    double sum = 0.0;
    for (int j = 0; j <= coarse.ny(); ++j) {
        const double wy = (j == 0 || j == coarse.ny()) ? 0.5 : 1.0;
        for (int i = 0; i <= coarse.nx(); ++i) {
            const double wx = (i == 0 || i == coarse.nx()) ? 0.5 : 1.0;
            const double d = pc[coarse.node_index(i, j)] - pf[fine.node_index(2 * i, 2 * j)];
            sum += wx * wy * coarse.hx() * coarse.hy() * d * d;
        }
    }
    return std::sqrt(sum);
}

/// Classical Reynolds system (h1^3/12, h1/2), assembled independently from
/// hard-coded right-triangle gradients, as a dense matrix over free nodes.
struct DenseSystem {
    std::vector<std::vector<double>> matrix;
    std::vector<double> rhs;
};

inline DenseSystem classical_reference(const Grid& g, const GapProfile& gap, Vec2 u_b, double q_e,
                                       const std::vector<long>& dof_of_node) {
    std::size_t n = 0;
    for (const long d : dof_of_node) {
        n += d >= 0;
    }
    DenseSystem ref{std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)),
                    std::vector<double>(n, 0.0)};
    const double hx = g.hx();
    const double hy = g.hy();
    const double area = 0.5 * hx * hy;
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            const Vec2 c = g.barycenter(i, j);
            const double h = evaluate_gap(gap, c.x, c.y);
            const double k = h * h * h / 12.0;
            const double couette = h / 2.0;
            const std::size_t ll = g.node_index(i, j);
            const std::size_t lr = g.node_index(i + 1, j);
            const std::size_t ur = g.node_index(i + 1, j + 1);
            const std::size_t ul = g.node_index(i, j + 1);
            struct Local {
                std::size_t node;
                Vec2 grad;
            };
            const Local lower[3] = {
                {ll, {-1.0 / hx, 0.0}}, {lr, {1.0 / hx, -1.0 / hy}}, {ur, {0.0, 1.0 / hy}}};
            const Local upper[3] = {
                {ll, {0.0, -1.0 / hy}}, {ur, {1.0 / hx, 0.0}}, {ul, {-1.0 / hx, 1.0 / hy}}};
            for (const Local* tri : {lower, upper}) {
                for (int a = 0; a < 3; ++a) {
                    const long r = dof_of_node[tri[a].node];
                    if (r < 0) {
                        continue;
                    }
                    ref.rhs[static_cast<std::size_t>(r)] += couette * area * dot(u_b, tri[a].grad);
                    for (int b = 0; b < 3; ++b) {
                        const long s = dof_of_node[tri[b].node];
                        if (s >= 0) {
                            ref.matrix[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] +=
                                k * area * dot(tri[a].grad, tri[b].grad);
                        }
                    }
                }
            }
        }
    }
    // Inlet edges: two-point Gauss on each segment of x = 0 (exact for P1).
    const double gp = 0.5 / std::sqrt(3.0);
    for (int j = 0; j < g.ny(); ++j) {
        for (const double t : {0.5 - gp, 0.5 + gp}) {
            const long lo = dof_of_node[g.node_index(0, j)];
            const long hi = dof_of_node[g.node_index(0, j + 1)];
            if (lo >= 0) {
                ref.rhs[static_cast<std::size_t>(lo)] -= 0.5 * hy * q_e * (1.0 - t);
            }
            if (hi >= 0) {
                ref.rhs[static_cast<std::size_t>(hi)] -= 0.5 * hy * q_e * t;
            }
        }
    }
    return ref;
}

}  // namespace roughlub::testing

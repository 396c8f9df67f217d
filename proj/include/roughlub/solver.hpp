#pragma once

#include <cstddef>
#include <vector>

#include "roughlub/geometry.hpp"
#include "roughlub/sparse.hpp"
#include "roughlub/vec2.hpp"

namespace roughlub {

/// Reduced system over the non-Dirichlet nodes.
struct LinearSystem {
    CsrMatrix matrix;
    std::vector<double> rhs;
    /// Unknown index of each grid node, or -1 for Dirichlet nodes.
    std::vector<long> dof_of_node;
    std::vector<std::size_t> node_of_dof;
};

/// Nodal pressure on every grid node (zero on Dirichlet nodes) with solver diagnostics.
struct PressureSolution {
    std::vector<double> nodal;
    int iterations = 0;
    double relative_residual = 0.0;
};

/// P1 discretization of
///   int k grad p . grad q - int c U_b . grad q + int_{x=0} Q_e q = 0
/// with k = h1^3 A / 12 and c = h1 B taken per cell (both triangles of a cell
/// share its barycenter values). Throws DomainError if some k <= 0.
LinearSystem assemble(const Grid& grid, const CoefficientFields& fields, Vec2 u_b, double q_e);

/// Solves the reduced system with Jacobi-preconditioned CG and scatters the result
/// to all nodes. max_iter <= 0 selects 10 x (number of unknowns).
PressureSolution solve_linear(const LinearSystem& system, double tol, long max_iter = 0);

/// |M x - rhs| / |rhs| for the free-node part of `solution`; |M x| when rhs = 0.
double residual_check(const LinearSystem& system, const PressureSolution& solution);

struct ReynoldsRun {
    Discretization discretization;
    LinearSystem system;
    PressureSolution solution;
};

/// build_fields -> assemble -> solve_linear.
ReynoldsRun run_reynolds(const ScenarioConfig& config);
PressureSolution solve_reynolds(const ScenarioConfig& config);

/// Pressure samples of a one-dimensional problem.
struct PressureProfile1D {
    std::vector<double> x;
    std::vector<double> p;
};

/// Exact first integral of the x-only problem, (h1^3 A/12) p' - h1 B u_bx = Q_e with
/// p(1) = 0, integrated by composite Simpson (at least 2^14 panels, split at every
/// roughness edge). Returns p at x = k/samples, k = 0..samples.
/// Throws DomainError if the gap or the rough regions depend on y.
PressureProfile1D oracle_1d(const GapProfile& gap, const RoughnessSpec& roughness, double u_bx,
                            double q_e, int samples);

}  // namespace roughlub

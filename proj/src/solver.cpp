#include "roughlub/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>

#include "roughlub/coefficients.hpp"
#include "roughlub/errors.hpp"

namespace roughlub {

namespace {

struct Vertex {
    std::size_t node;
    double x;
    double y;
};

// Lower-right and upper-left triangles of cell (i, j).
std::array<std::array<Vertex, 3>, 2> cell_triangles(const Grid& g, int i, int j) {
    const Vertex ll{g.node_index(i, j), g.node_x(i), g.node_y(j)};
    const Vertex lr{g.node_index(i + 1, j), g.node_x(i + 1), g.node_y(j)};
    const Vertex ur{g.node_index(i + 1, j + 1), g.node_x(i + 1), g.node_y(j + 1)};
    const Vertex ul{g.node_index(i, j + 1), g.node_x(i), g.node_y(j + 1)};
    return {{{ll, lr, ur}, {ll, ur, ul}}};
}

}  // namespace

LinearSystem assemble(const Grid& grid, const CoefficientFields& fields, Vec2 u_b, double q_e) {
    const std::size_t cells = grid.cell_count();
    if (fields.a.size() != cells || fields.b.size() != cells || fields.h1_bar.size() != cells ||
        fields.n_psi.size() != cells) {
        throw InputError("coefficient fields do not match the grid");
    }

    LinearSystem sys;
    sys.dof_of_node.assign(grid.node_count(), -1);
    for (int j = 0; j <= grid.ny(); ++j) {
        for (int i = 0; i <= grid.nx(); ++i) {
            if (grid.tag(i, j) != NodeTag::dirichlet) {
                const std::size_t node = grid.node_index(i, j);
                sys.dof_of_node[node] = static_cast<long>(sys.node_of_dof.size());
                sys.node_of_dof.push_back(node);
            }
        }
    }
    const std::size_t n = sys.node_of_dof.size();
    sys.rhs.assign(n, 0.0);

    std::vector<CsrMatrix::Triplet> triplets;
    triplets.reserve(cells * 18);
    for (int j = 0; j < grid.ny(); ++j) {
        for (int i = 0; i < grid.nx(); ++i) {
            const std::size_t c = grid.cell_index(i, j);
            const double h = fields.h1_bar[c];
            const double k = h * h * h * fields.a[c] / 12.0;
            if (!(k > 0.0)) {
                throw DomainError("ellipticity lost in cell " + std::to_string(c) +
                                  ": h1^3 A / 12 = " + std::to_string(k));
            }
            const double couette = h * fields.b[c];
            for (const auto& tri : cell_triangles(grid, i, j)) {
                const auto& [v0, v1, v2] = tri;
                const double det = (v1.x - v0.x) * (v2.y - v0.y) - (v2.x - v0.x) * (v1.y - v0.y);
                const double area = 0.5 * std::abs(det);
                const std::array<Vec2, 3> grad{
                    Vec2{(v1.y - v2.y) / det, (v2.x - v1.x) / det},
                    Vec2{(v2.y - v0.y) / det, (v0.x - v2.x) / det},
                    Vec2{(v0.y - v1.y) / det, (v1.x - v0.x) / det},
                };
                for (std::size_t a = 0; a < 3; ++a) {
                    const long row = sys.dof_of_node[tri[a].node];
                    if (row < 0) {
                        continue;
                    }
                    sys.rhs[static_cast<std::size_t>(row)] += couette * area * dot(u_b, grad[a]);
                    for (std::size_t b = 0; b < 3; ++b) {
                        const long col = sys.dof_of_node[tri[b].node];
                        if (col < 0) {
                            continue;
                        }
                        triplets.push_back({static_cast<std::size_t>(row),
                                            static_cast<std::size_t>(col),
                                            k * area * dot(grad[a], grad[b])});
                    }
                }
            }
        }
    }

    // Inlet flux on x = 0: each P1 edge contributes Q_e * hy / 2 to both ends.
    const double edge_share = 0.5 * q_e * grid.hy();
    for (int j = 0; j < grid.ny(); ++j) {
        for (const int jj : {j, j + 1}) {
            const long row = sys.dof_of_node[grid.node_index(0, jj)];
            if (row >= 0) {
                sys.rhs[static_cast<std::size_t>(row)] -= edge_share;
            }
        }
    }

    sys.matrix = CsrMatrix::from_triplets(n, std::move(triplets));
    return sys;
}

PressureSolution solve_linear(const LinearSystem& system, double tol, long max_iter) {
    const std::size_t n = system.node_of_dof.size();
    if (system.rhs.size() != n || system.matrix.size() != n) {
        throw InputError("linear system dimensions are inconsistent");
    }
    if (max_iter <= 0) {
        max_iter = std::max<long>(1, 10 * static_cast<long>(n));
    }
    std::vector<double> x(n, 0.0);
    const CgResult cg = solve_pcg(system.matrix, system.rhs, x, tol, max_iter);

    PressureSolution solution;
    solution.nodal.assign(system.dof_of_node.size(), 0.0);
    for (std::size_t d = 0; d < n; ++d) {
        solution.nodal[system.node_of_dof[d]] = x[d];
    }
    solution.iterations = cg.iterations;
    solution.relative_residual = cg.relative_residual;
    return solution;
}

double residual_check(const LinearSystem& system, const PressureSolution& solution) {
    if (solution.nodal.size() != system.dof_of_node.size()) {
        throw InputError("solution does not match the system's grid");
    }
    const std::size_t n = system.node_of_dof.size();
    std::vector<double> x(n);
    for (std::size_t d = 0; d < n; ++d) {
        x[d] = solution.nodal[system.node_of_dof[d]];
    }
    std::vector<double> r(n);
    system.matrix.multiply(x, r);
    for (std::size_t d = 0; d < n; ++d) {
        r[d] -= system.rhs[d];
    }
    const double rhs_norm = norm2(system.rhs);
    return rhs_norm == 0.0 ? norm2(r) : norm2(r) / rhs_norm;
}

ReynoldsRun run_reynolds(const ScenarioConfig& config) {
    Discretization disc = build_fields(config);
    LinearSystem system = assemble(disc.grid, disc.fields, config.u_b, config.q_e);
    PressureSolution solution =
        solve_linear(system, config.solver.tol, config.solver.max_iter.value_or(0));
    return {std::move(disc), std::move(system), std::move(solution)};
}

PressureSolution solve_reynolds(const ScenarioConfig& config) {
    return run_reynolds(config).solution;
}

PressureProfile1D oracle_1d(const GapProfile& gap, const RoughnessSpec& roughness, double u_bx,
                            double q_e, int samples) {
    if (samples < 1) {
        throw DomainError("oracle_1d needs at least one sample interval");
    }
    if (!gap_is_y_independent(gap)) {
        throw DomainError("oracle_1d: gap profile varies in y");
    }
    roughness.validate();
    for (const RoughRegion& r : roughness.regions) {
        if (!r.spans_y()) {
            throw DomainError("oracle_1d: rough regions must span 0 <= y <= 1");
        }
    }

    std::vector<double> breaks;
    for (int k = 0; k <= samples; ++k) {
        breaks.push_back(static_cast<double>(k) / samples);
    }
    for (const RoughRegion& r : roughness.regions) {
        breaks.push_back(r.x0);
        breaks.push_back(r.x1);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    std::map<double, CoefficientPair> cache;
    auto coefficients_at = [&](double x) {
        const double n = roughness.n_psi_at(x, 0.5);
        auto it = cache.find(n);
        if (it == cache.end()) {
            it = cache.emplace(n, homogenized_coefficients(RoughnessIntensity(n))).first;
        }
        return it->second;
    };

    constexpr double kPanelsPerUnit = 16384.0;
    // p(x) = -int_x^1 12 (Q_e + h B u) / (h^3 A) ds, accumulated from the right.
    std::map<double, double> pressure_at_break;
    double accumulated = 0.0;
    pressure_at_break[breaks.back()] = 0.0;
    for (std::size_t k = breaks.size() - 1; k-- > 0;) {
        const double lo = breaks[k];
        const double hi = breaks[k + 1];
        const CoefficientPair cp = coefficients_at(0.5 * (lo + hi));
        auto slope = [&](double s) {
            const double h = evaluate_gap(gap, s, 0.5);
            return 12.0 * (q_e + h * cp.b * u_bx) / (h * h * h * cp.a);
        };
        auto panels = static_cast<long>(std::ceil(0.5 * kPanelsPerUnit * (hi - lo))) * 2;
        panels = std::max<long>(panels, 2);
        const double step = (hi - lo) / static_cast<double>(panels);
        double sum = slope(lo) + slope(hi);
        for (long m = 1; m < panels; ++m) {
            sum += (m % 2 == 1 ? 4.0 : 2.0) * slope(lo + step * static_cast<double>(m));
        }
        accumulated += sum * step / 3.0;
        pressure_at_break[lo] = -accumulated;
    }

    PressureProfile1D profile;
    for (int k = 0; k <= samples; ++k) {
        const double x = static_cast<double>(k) / samples;
        profile.x.push_back(x);
        profile.p.push_back(pressure_at_break.at(x));
    }
    return profile;
}

}  // namespace roughlub

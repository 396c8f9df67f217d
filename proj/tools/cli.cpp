#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

#include "roughlub/coefficients.hpp"
#include "roughlub/config.hpp"
#include "roughlub/errors.hpp"
#include "roughlub/output.hpp"
#include "roughlub/postprocess.hpp"
#include "roughlub/solver.hpp"

namespace roughlub::cli {

namespace {

namespace fs = std::filesystem;

struct ScenarioOptions {
    std::string config_path;
    std::string scenario;
    std::optional<int> nx;
    std::optional<int> ny;
};

void add_scenario_options(CLI::App& cmd, ScenarioOptions& opts) {
    cmd.add_option("--config", opts.config_path, "Scenario config file (key = value)");
    cmd.add_option("--scenario", opts.scenario, "Figure preset")
        ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5"}));
    cmd.add_option("--nx", opts.nx, "Cells in x (overrides the config)");
    cmd.add_option("--ny", opts.ny, "Cells in y (overrides the config)");
}

ScenarioConfig resolve_config(const ScenarioOptions& opts) {
    if (opts.config_path.empty() && opts.scenario.empty()) {
        throw ConfigError("--config is required unless --scenario is given");
    }
    ScenarioConfig config =
        opts.config_path.empty() ? ScenarioConfig{} : load_config_file(opts.config_path);
    if (!opts.scenario.empty()) {
        apply_preset(config, opts.scenario);
    }
    if (opts.nx) {
        config.nx = *opts.nx;
    }
    if (opts.ny) {
        config.ny = *opts.ny;
    }
    config.validate();
    return config;
}

std::string scenario_name(const ScenarioOptions& opts) {
    if (!opts.scenario.empty()) {
        return opts.scenario;
    }
    return fs::path(opts.config_path).stem().string();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_coeffs(double n, std::ostream& out) {
    const double a = coeff_a(n);
    const double b = coeff_b(n);
    char line[128];
    std::snprintf(line, sizeof line, "N=%g A=%#.6g B=%#.6g", n, a, b);
    out << line << '\n';
    return kSuccess;
}

int cmd_solve(const ScenarioOptions& opts, const std::string& out_dir, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const ScenarioConfig config = resolve_config(opts);
    const fs::path dir = out_dir.empty() ? fs::path(config.output_dir) : fs::path(out_dir);

    const ReynoldsRun run = run_reynolds(config);
    const Grid& grid = run.discretization.grid;
    write_text_file(dir / "pressure.csv", format_nodal_csv(grid, run.solution.nodal));
    write_text_file(dir / "fields.csv", format_fields_csv(grid, run.discretization.fields));

    RunManifest manifest;
    manifest.scenario = scenario_name(opts);
    manifest.config_snapshot = render_config(config);
    manifest.outputs = {"pressure.csv", "fields.csv"};
    manifest.iterations = run.solution.iterations;
    manifest.residual = run.solution.relative_residual;
    manifest.wall_seconds = seconds_since(start);
    write_text_file(dir / "manifest.txt", format_manifest(manifest));

    out << "solved " << manifest.scenario << " on " << grid.nx() << "x" << grid.ny() << " in "
        << manifest.iterations << " iterations, residual " << manifest.residual << " -> "
        << dir.string() << '\n';
    return kSuccess;
}

int cmd_velocity(const ScenarioOptions& opts, double x, double y, int nz, std::ostream& out) {
    const ScenarioConfig config = resolve_config(opts);
    if (!(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0)) {
        throw DomainError("velocity: (x, y) must be interior to the unit square");
    }
    const ReynoldsRun run = run_reynolds(config);
    const Grid& grid = run.discretization.grid;
    const int ci = std::min(static_cast<int>(x * grid.nx()), grid.nx() - 1);
    const int cj = std::min(static_cast<int>(y * grid.ny()), grid.ny() - 1);
    const double n = run.discretization.fields.n_psi[grid.cell_index(ci, cj)];
    const double h1 = evaluate_gap(config.gap, x, y);
    const Vec2 grad = gradient_at(run.solution, grid, x, y);

    VelocityProfile profile = velocity_profile(h1, n, grad, config.u_b, nz);
    profile.location = {x, y};
    out << format_velocity_csv(profile);
    return kSuccess;
}

int cmd_compare(const ScenarioOptions& opts, const std::string& out_dir, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const ScenarioConfig rough = resolve_config(opts);
    if (rough.roughness.empty()) {
        throw ConfigError("compare needs at least one rough.region entry");
    }
    ScenarioConfig smooth = rough;
    smooth.roughness.regions.clear();
    const fs::path dir = out_dir.empty() ? fs::path(rough.output_dir) : fs::path(out_dir);

    const ReynoldsRun smooth_run = run_reynolds(smooth);
    const ReynoldsRun rough_run = run_reynolds(rough);
    const Grid& grid = rough_run.discretization.grid;
    const ComparisonReport report =
        compare_fields(smooth_run.solution, rough_run.solution, grid, rough.roughness);
    const std::vector<double> diff = pressure_difference(smooth_run.solution, rough_run.solution);

    write_text_file(dir / "pressure_smooth.csv", format_nodal_csv(grid, smooth_run.solution.nodal));
    write_text_file(dir / "pressure_rough.csv", format_nodal_csv(grid, rough_run.solution.nodal));
    write_text_file(dir / "difference.csv", format_nodal_csv(grid, diff, "dp"));
    write_text_file(dir / "metrics.txt", format_metrics(report));

    RunManifest manifest;
    manifest.scenario = scenario_name(opts);
    manifest.config_snapshot = render_config(rough);
    manifest.outputs = {"pressure_smooth.csv", "pressure_rough.csv", "difference.csv",
                        "metrics.txt"};
    manifest.iterations = rough_run.solution.iterations;
    manifest.residual = rough_run.solution.relative_residual;
    manifest.wall_seconds = seconds_since(start);
    write_text_file(dir / "manifest.txt", format_manifest(manifest));

    out << format_metrics(report);
    return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reynolds lubrication solver with homogenized roughness coefficients",
                 "roughlub"};
    app.require_subcommand(1);

    double n = 0.0;
    auto* coeffs = app.add_subcommand("coeffs", "Print N, A(N), B(N)");
    coeffs->add_option("--n", n, "Roughness intensity N in [0, 700]")->required();

    ScenarioOptions solve_opts;
    std::string solve_out;
    auto* solve = app.add_subcommand("solve", "Solve a scenario and write pressure.csv");
    add_scenario_options(*solve, solve_opts);
    solve->add_option("--out", solve_out, "Output directory (default: output.dir)");

    ScenarioOptions vel_opts;
    double vx = 0.5;
    double vy = 0.5;
    int nz = kDefaultZCount;
    auto* velocity = app.add_subcommand("velocity", "Print the through-gap velocity profile");
    add_scenario_options(*velocity, vel_opts);
    velocity->add_option("--x", vx, "x location")->required();
    velocity->add_option("--y", vy, "y location")->required();
    velocity->add_option("--nz", nz, "Number of Z intervals (>= 8)");

    ScenarioOptions cmp_opts;
    std::string cmp_out;
    auto* compare = app.add_subcommand("compare", "Compare smooth and rough pressure fields");
    add_scenario_options(*compare, cmp_opts);
    compare->add_option("--out", cmp_out, "Output directory (default: output.dir)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    try {
        if (*coeffs) {
            return cmd_coeffs(n, out);
        }
        if (*solve) {
            return cmd_solve(solve_opts, solve_out, out);
        }
        if (*velocity) {
            return cmd_velocity(vel_opts, vx, vy, nz, out);
        }
        return cmd_compare(cmp_opts, cmp_out, out);
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace roughlub::cli

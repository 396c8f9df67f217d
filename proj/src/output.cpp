#include "roughlub/output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "roughlub/errors.hpp"

namespace roughlub {

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string format_nodal_csv(const Grid& grid, std::span<const double> values,
                             std::string_view column) {
    if (values.size() != grid.node_count()) {
        throw InputError("nodal field does not match the grid");
    }
    std::string out = "# nx=" + std::to_string(grid.nx()) + " ny=" + std::to_string(grid.ny()) +
                      "\nx,y," + std::string(column) + "\n";
    for (int j = 0; j <= grid.ny(); ++j) {
        for (int i = 0; i <= grid.nx(); ++i) {
            out += g17(grid.node_x(i)) + ',' + g17(grid.node_y(j)) + ',' +
                   g17(values[grid.node_index(i, j)]) + '\n';
        }
    }
    return out;
}

std::string format_fields_csv(const Grid& grid, const CoefficientFields& fields) {
    if (fields.a.size() != grid.cell_count()) {
        throw InputError("coefficient fields do not match the grid");
    }
    std::string out = "x,y,n_psi,a,b,h1\n";
    for (int j = 0; j < grid.ny(); ++j) {
        for (int i = 0; i < grid.nx(); ++i) {
            const Vec2 c = grid.barycenter(i, j);
            const std::size_t k = grid.cell_index(i, j);
            out += g17(c.x) + ',' + g17(c.y) + ',' + g17(fields.n_psi[k]) + ',' +
                   g17(fields.a[k]) + ',' + g17(fields.b[k]) + ',' + g17(fields.h1_bar[k]) + '\n';
        }
    }
    return out;
}

std::string format_metrics(const ComparisonReport& report) {
    return "l2=" + g17(report.l2) + "\nlinf=" + g17(report.linf) +
           "\nl2_outside_rough=" + g17(report.l2_outside_rough) + "\n";
}

std::string format_velocity_csv(const VelocityProfile& profile) {
    std::string out = "Z,ux,uy\n";
    for (std::size_t k = 0; k < profile.z.size(); ++k) {
        out += g17(profile.z[k]) + ',' + g17(profile.u[k].x) + ',' + g17(profile.u[k].y) + '\n';
    }
    return out;
}

std::string format_manifest(const RunManifest& manifest) {
    std::ostringstream out;
    out << "scenario=" << manifest.scenario << '\n';
    for (const std::string& file : manifest.outputs) {
        out << "output=" << file << '\n';
    }
    out << "iterations=" << manifest.iterations << '\n';
    out << "residual=" << g17(manifest.residual) << '\n';
    out << "wall_seconds=" << g17(manifest.wall_seconds) << '\n';
    out << "[config]\n" << manifest.config_snapshot;
    return out.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw InputError("cannot create directory '" + path.parent_path().string() +
                             "': " + ec.message());
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot open '" + path.string() + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw InputError("failed writing '" + path.string() + "'");
    }
}

}  // namespace roughlub

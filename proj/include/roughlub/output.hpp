#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "roughlub/geometry.hpp"
#include "roughlub/postprocess.hpp"

namespace roughlub {

/// `# nx=<nx> ny=<ny>`, then `x,y,<column>`, then one row per node (y outer,
/// x inner) with 17 significant digits.
std::string format_nodal_csv(const Grid& grid, std::span<const double> values,
                             std::string_view column = "p");

/// `x,y,n_psi,a,b,h1` at cell barycenters, y outer.
std::string format_fields_csv(const Grid& grid, const CoefficientFields& fields);

/// `l2=`, `linf=`, `l2_outside_rough=` lines.
std::string format_metrics(const ComparisonReport& report);

/// `Z,ux,uy` rows.
std::string format_velocity_csv(const VelocityProfile& profile);

struct RunManifest {
    std::string scenario;
    std::string config_snapshot;
    std::vector<std::string> outputs;  // file names relative to the output directory
    int iterations = 0;
    double residual = 0.0;
    double wall_seconds = 0.0;
};

std::string format_manifest(const RunManifest& manifest);

/// Writes `content` to `path`, creating parent directories. Throws InputError on failure.
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace roughlub

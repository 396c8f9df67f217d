#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "roughlub/geometry.hpp"

namespace roughlub {

/// Parses a `key = value` scenario document. Missing keys take the channel
/// defaults (quadratic gap (2x-1)^2 + 0.5, U_b = (1,0), Q_e = 0.5, smooth, 64x64).
/// Relative gap.table_path entries are resolved against `base_dir`.
/// Throws ConfigError (with line number) on syntax errors and unknown or
/// duplicated keys, and InputError naming the key on validation failures.
ScenarioConfig load_config(std::string_view text, const std::filesystem::path& base_dir = {});

/// Reads and parses a config file; a missing file is a ConfigError.
ScenarioConfig load_config_file(const std::filesystem::path& path);

/// Canonical `key = value` rendering; load_config(render_config(c)) reproduces c.
std::string render_config(const ScenarioConfig& config);

/// Figure presets: fig2 (smooth), fig3 (rough x >= 0.5), fig4 (rough x <= 0.5),
/// fig5 (rough strip 0.45 <= x <= 0.55). Rough parts use N = 2.
const std::vector<std::string>& preset_names();

/// Replaces gap, velocity, inlet flux and roughness with the named preset,
/// keeping grid, solver and output settings. Throws InputError for unknown names.
void apply_preset(ScenarioConfig& config, std::string_view name);

}  // namespace roughlub

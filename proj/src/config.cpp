#include "roughlub/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "roughlub/errors.hpp"

namespace roughlub {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string_view unquote(std::string_view s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                          (s.front() == '\'' && s.back() == '\''))) {
        return s.substr(1, s.size() - 2);
    }
    return s;
}

double parse_real(std::string_view text, std::string_view key, int line) {
    text = trim(text);
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError(std::string(key) + ": expected a real number, got '" +
                              std::string(text) + "'",
                          line);
    }
    if (!std::isfinite(value)) {
        throw ConfigError(std::string(key) + ": value must be finite", line);
    }
    return value;
}

long parse_integer(std::string_view text, std::string_view key, int line) {
    text = trim(text);
    long value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError(std::string(key) + ": expected an integer, got '" + std::string(text) +
                              "'",
                          line);
    }
    return value;
}

bool parse_bool(std::string_view text, std::string_view key, int line) {
    text = trim(text);
    if (text == "true" || text == "1" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no") {
        return false;
    }
    throw ConfigError(std::string(key) + ": expected true or false", line);
}

std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        parts.push_back(trim(s.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return parts;
}

// "x0,y0,x1,y1,n=<N>" or "x0,y0,x1,y1,amp=<a>,wav=<k>"
RoughRegion parse_region(std::string_view value, const std::string& key, int line) {
    const auto parts = split_commas(value);
    if (parts.size() < 5) {
        throw ConfigError(key + ": expected x0,y0,x1,y1 followed by n=<N> or amp=<a>,wav=<k>",
                          line);
    }
    RoughRegion region;
    region.label = key;
    region.x0 = parse_real(parts[0], key, line);
    region.y0 = parse_real(parts[1], key, line);
    region.x1 = parse_real(parts[2], key, line);
    region.y1 = parse_real(parts[3], key, line);

    std::map<std::string, std::string_view, std::less<>> attrs;
    for (std::size_t k = 4; k < parts.size(); ++k) {
        const auto eq = parts[k].find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(key + ": expected name=value, got '" + std::string(parts[k]) + "'",
                              line);
        }
        const std::string name(trim(parts[k].substr(0, eq)));
        if (!attrs.emplace(name, trim(parts[k].substr(eq + 1))).second) {
            throw ConfigError(key + ": attribute '" + name + "' given twice", line);
        }
    }
    if (attrs.size() == 1 && attrs.contains("n")) {
        region.source = DirectIntensity{parse_real(attrs["n"], key, line)};
    } else if (attrs.size() == 2 && attrs.contains("amp") && attrs.contains("wav")) {
        const long wav = parse_integer(attrs["wav"], key, line);
        if (wav < 1 || wav > 1'000'000) {
            throw ConfigError(key + ": wav must be a positive integer", line);
        }
        region.source = CosineRipple{parse_real(attrs["amp"], key, line), static_cast<int>(wav)};
    } else {
        throw ConfigError(key + ": expected either n=<N> or amp=<a>,wav=<k>", line);
    }
    return region;
}

std::string format_real(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

}  // namespace

ScenarioConfig load_config(std::string_view text, const std::filesystem::path& base_dir) {
    ScenarioConfig config;
    std::set<std::string, std::less<>> seen;
    std::map<long, RoughRegion> regions;
    int table_line = 0;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("expected 'key = value'", line_no);
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = unquote(trim(line.substr(eq + 1)));
        if (key.empty()) {
            throw ConfigError("empty key", line_no);
        }
        if (!seen.insert(key).second) {
            throw ConfigError("duplicate key '" + key + "'", line_no);
        }

        constexpr std::string_view region_prefix = "rough.region.";
        if (key == "grid.nx" || key == "grid.ny") {
            const long n = parse_integer(value, key, line_no);
            if (n < 2 || n > 1'000'000) {
                throw ConfigError(key + " must be an integer >= 2", line_no);
            }
            (key == "grid.nx" ? config.nx : config.ny) = static_cast<int>(n);
        } else if (key == "gap.kind") {
            if (value == "quadratic_channel") {
                config.gap.kind = GapKind::quadratic_channel;
            } else if (value == "constant") {
                config.gap.kind = GapKind::constant;
            } else if (value == "tabulated") {
                config.gap.kind = GapKind::tabulated;
            } else {
                throw ConfigError("gap.kind must be quadratic_channel, constant or tabulated",
                                  line_no);
            }
        } else if (key == "gap.c0") {
            config.gap.c0 = parse_real(value, key, line_no);
        } else if (key == "gap.c1") {
            config.gap.c1 = parse_real(value, key, line_no);
        } else if (key == "gap.table_path") {
            config.gap.table_path = std::string(value);
            table_line = line_no;
        } else if (key == "velocity.ubx") {
            config.u_b.x = parse_real(value, key, line_no);
        } else if (key == "velocity.uby") {
            config.u_b.y = parse_real(value, key, line_no);
        } else if (key == "inlet.flux") {
            config.q_e = parse_real(value, key, line_no);
        } else if (key == "solver.tol") {
            config.solver.tol = parse_real(value, key, line_no);
        } else if (key == "solver.max_iter") {
            config.solver.max_iter = parse_integer(value, key, line_no);
        } else if (key == "output.dir") {
            config.output_dir = std::string(value);
        } else if (key == "validation.lateral_natural") {
            config.lateral_natural = parse_bool(value, key, line_no);
        } else if (key.starts_with(region_prefix)) {
            const std::string_view index_text = std::string_view(key).substr(region_prefix.size());
            long index = 0;
            const auto [ptr, ec] = std::from_chars(
                index_text.data(), index_text.data() + index_text.size(), index);
            if (index_text.empty() || ec != std::errc{} ||
                ptr != index_text.data() + index_text.size() || index < 1) {
                throw ConfigError("unknown key '" + key + "' (region index must be 1, 2, ...)",
                                  line_no);
            }
            regions.emplace(index, parse_region(value, key, line_no));
        } else {
            throw ConfigError("unknown key '" + key + "'", line_no);
        }
    }

    for (auto& [index, region] : regions) {
        config.roughness.regions.push_back(std::move(region));
    }

    if (!config.gap.table_path.empty()) {
        if (config.gap.kind != GapKind::tabulated) {
            throw ConfigError("gap.table_path is only valid with gap.kind = tabulated",
                              table_line);
        }
        std::filesystem::path table_path(config.gap.table_path);
        if (table_path.is_relative() && !base_dir.empty()) {
            table_path = base_dir / table_path;
        }
        try {
            config.gap.table = load_gap_table(table_path);
        } catch (const InputError& e) {
            throw ConfigError(std::string("gap.table_path: ") + e.what(), table_line);
        }
    }

    config.validate();
    return config;
}

ScenarioConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_config(buffer.str(), path.parent_path());
}

std::string render_config(const ScenarioConfig& config) {
    std::ostringstream out;
    out << "grid.nx = " << config.nx << '\n';
    out << "grid.ny = " << config.ny << '\n';
    out << "gap.kind = " << to_string(config.gap.kind) << '\n';
    out << "gap.c0 = " << format_real(config.gap.c0) << '\n';
    out << "gap.c1 = " << format_real(config.gap.c1) << '\n';
    if (!config.gap.table_path.empty()) {
        out << "gap.table_path = " << config.gap.table_path << '\n';
    }
    out << "velocity.ubx = " << format_real(config.u_b.x) << '\n';
    out << "velocity.uby = " << format_real(config.u_b.y) << '\n';
    out << "inlet.flux = " << format_real(config.q_e) << '\n';
    for (std::size_t k = 0; k < config.roughness.regions.size(); ++k) {
        const RoughRegion& r = config.roughness.regions[k];
        out << "rough.region." << k + 1 << " = " << format_real(r.x0) << ',' << format_real(r.y0)
            << ',' << format_real(r.x1) << ',' << format_real(r.y1) << ',';
        if (const auto* direct = std::get_if<DirectIntensity>(&r.source)) {
            out << "n=" << format_real(direct->value);
        } else {
            const auto& ripple = std::get<CosineRipple>(r.source);
            out << "amp=" << format_real(ripple.amplitude) << ",wav=" << ripple.wavenumber;
        }
        out << '\n';
    }
    out << "solver.tol = " << format_real(config.solver.tol) << '\n';
    if (config.solver.max_iter) {
        out << "solver.max_iter = " << *config.solver.max_iter << '\n';
    }
    out << "output.dir = " << config.output_dir << '\n';
    if (config.lateral_natural) {
        out << "validation.lateral_natural = true\n";
    }
    return out.str();
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"fig2", "fig3", "fig4", "fig5"};
    return names;
}

void apply_preset(ScenarioConfig& config, std::string_view name) {
    const auto& names = preset_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw InputError("unknown scenario '" + std::string(name) +
                         "' (expected fig2, fig3, fig4 or fig5)");
    }
    config.gap = GapProfile{};
    config.u_b = {1.0, 0.0};
    config.q_e = 0.5;
    config.roughness.regions.clear();

    auto rough_band = [](double x0, double x1) {
        RoughRegion r;
        r.x0 = x0;
        r.x1 = x1;
        r.y0 = 0.0;
        r.y1 = 1.0;
        r.source = DirectIntensity{2.0};
        r.label = "rough.region.1";
        return r;
    };
    if (name == "fig3") {
        config.roughness.regions.push_back(rough_band(0.5, 1.0));
    } else if (name == "fig4") {
        config.roughness.regions.push_back(rough_band(0.0, 0.5));
    } else if (name == "fig5") {
        config.roughness.regions.push_back(rough_band(0.45, 0.55));
    }
}

}  // namespace roughlub

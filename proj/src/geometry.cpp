#include "roughlub/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "roughlub/coefficients.hpp"
#include "roughlub/errors.hpp"

namespace roughlub {

namespace {

bool inside_unit_square(double x, double y) {
    return x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0;
}

double bilinear(const GapTable& table, double x, double y) {
    const double gx = x * static_cast<double>(table.x_nodes - 1);
    const double gy = y * static_cast<double>(table.y_nodes - 1);
    const auto i = std::min(static_cast<std::size_t>(gx), table.x_nodes - 2);
    const auto j = std::min(static_cast<std::size_t>(gy), table.y_nodes - 2);
    const double tx = gx - static_cast<double>(i);
    const double ty = gy - static_cast<double>(j);
    return (1.0 - tx) * (1.0 - ty) * table.at(i, j) + tx * (1.0 - ty) * table.at(i + 1, j) +
           (1.0 - tx) * ty * table.at(i, j + 1) + tx * ty * table.at(i + 1, j + 1);
}

}  // namespace

GapTable parse_gap_table(const std::string& text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    bool comment = false;
    for (const char c : text) {
        if (c == '#') {
            comment = true;
        } else if (c == '\n') {
            comment = false;
        }
        if (!comment) {
            cleaned.push_back(c == ',' ? ' ' : c);
        }
    }
    std::istringstream in(cleaned);
    long nx = 0;
    long ny = 0;
    if (!(in >> nx >> ny) || nx < 2 || ny < 2) {
        throw InputError("gap table must start with two node counts >= 2");
    }
    GapTable table;
    table.x_nodes = static_cast<std::size_t>(nx);
    table.y_nodes = static_cast<std::size_t>(ny);
    table.values.reserve(table.x_nodes * table.y_nodes);
    double v = 0.0;
    while (in >> v) {
        if (!std::isfinite(v) || v <= 0.0) {
            throw InputError("gap table values must be positive");
        }
        table.values.push_back(v);
    }
    if (!in.eof()) {
        throw InputError("gap table contains a non-numeric token");
    }
    if (table.values.size() != table.x_nodes * table.y_nodes) {
        throw InputError("gap table expects " + std::to_string(table.x_nodes * table.y_nodes) +
                         " values, found " + std::to_string(table.values.size()));
    }
    return table;
}

GapTable load_gap_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open gap table '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_gap_table(buffer.str());
}

double evaluate_gap(const GapProfile& profile, double x, double y) {
    if (!inside_unit_square(x, y)) {
        throw DomainError("gap evaluated outside the unit square");
    }
    double h = 0.0;
    switch (profile.kind) {
        case GapKind::quadratic_channel: {
            const double s = 2.0 * x - 1.0;
            h = profile.c0 * s * s + profile.c1;
            break;
        }
        case GapKind::constant:
            h = profile.c0;
            break;
        case GapKind::tabulated:
            if (!profile.table) {
                throw InputError("tabulated gap profile has no table loaded");
            }
            h = bilinear(*profile.table, x, y);
            break;
    }
    if (!(h > 0.0)) {
        throw DomainError("gap height must be positive, got " + std::to_string(h));
    }
    return h;
}

bool gap_is_y_independent(const GapProfile& profile) {
    if (profile.kind != GapKind::tabulated) {
        return true;
    }
    if (!profile.table) {
        return false;
    }
    const GapTable& t = *profile.table;
    for (std::size_t j = 1; j < t.y_nodes; ++j) {
        for (std::size_t i = 0; i < t.x_nodes; ++i) {
            if (t.at(i, j) != t.at(i, 0)) {
                return false;
            }
        }
    }
    return true;
}

std::string to_string(GapKind kind) {
    switch (kind) {
        case GapKind::quadratic_channel:
            return "quadratic_channel";
        case GapKind::constant:
            return "constant";
        case GapKind::tabulated:
            return "tabulated";
    }
    return "unknown";
}

double RoughRegion::n_psi() const {
    if (const auto* direct = std::get_if<DirectIntensity>(&source)) {
        return RoughnessIntensity(direct->value).value();
    }
    const auto& ripple = std::get<CosineRipple>(source);
    return n_psi_cosine(ripple.amplitude, ripple.wavenumber);
}

void RoughnessSpec::validate() const {
    for (std::size_t k = 0; k < regions.size(); ++k) {
        const RoughRegion& r = regions[k];
        const std::string label =
            r.label.empty() ? "rough region #" + std::to_string(k + 1) : r.label;
        for (const double c : {r.x0, r.y0, r.x1, r.y1}) {
            if (!std::isfinite(c)) {
                throw InputError(label + ": non-finite coordinate");
            }
        }
        if (!inside_unit_square(r.x0, r.y0) || !inside_unit_square(r.x1, r.y1)) {
            throw InputError(label + ": rectangle leaves the unit square");
        }
        if (!(r.x0 < r.x1) || !(r.y0 < r.y1)) {
            throw InputError(label + ": rectangle must have x0 < x1 and y0 < y1");
        }
        double n = 0.0;
        try {
            n = r.n_psi();
        } catch (const DomainError& e) {
            throw InputError(label + ": " + e.what());
        }
        if (n > kMaxIntensity) {
            throw InputError(label + ": intensity exceeds 700");
        }
        for (std::size_t m = 0; m < k; ++m) {
            const RoughRegion& o = regions[m];
            const double wx = std::min(r.x1, o.x1) - std::max(r.x0, o.x0);
            const double wy = std::min(r.y1, o.y1) - std::max(r.y0, o.y0);
            if (wx > 0.0 && wy > 0.0) {
                throw InputError(label + " overlaps " +
                                 (o.label.empty() ? "rough region #" + std::to_string(m + 1)
                                                  : o.label));
            }
        }
    }
}

double RoughnessSpec::n_psi_at(double x, double y) const {
    for (const RoughRegion& r : regions) {
        if (r.contains(x, y)) {
            return r.n_psi();
        }
    }
    return 0.0;
}

bool RoughnessSpec::is_rough(double x, double y) const noexcept {
    return std::any_of(regions.begin(), regions.end(),
                       [x, y](const RoughRegion& r) { return r.contains(x, y); });
}

Grid::Grid(int nx, int ny, bool lateral_natural)
    : nx_(nx), ny_(ny), lateral_natural_(lateral_natural) {
    if (nx < 2 || ny < 2) {
        throw InputError("grid needs at least 2 cells per direction");
    }
}

NodeTag Grid::tag(int i, int j) const noexcept {
    const bool bottom_or_top = j == 0 || j == ny_;
    if (i == nx_) {
        return NodeTag::dirichlet;
    }
    if (bottom_or_top) {
        if (!lateral_natural_) {
            return NodeTag::dirichlet;
        }
        return i == 0 ? NodeTag::inlet : NodeTag::lateral;
    }
    return i == 0 ? NodeTag::inlet : NodeTag::interior;
}

void ScenarioConfig::validate() const {
    if (nx < 2) {
        throw InputError("grid.nx must be >= 2");
    }
    if (ny < 2) {
        throw InputError("grid.ny must be >= 2");
    }
    if (!std::isfinite(gap.c0)) {
        throw InputError("gap.c0 must be finite");
    }
    if (!std::isfinite(gap.c1)) {
        throw InputError("gap.c1 must be finite");
    }
    if (gap.kind == GapKind::tabulated && !gap.table) {
        throw InputError("gap.table_path is required for gap.kind = tabulated");
    }
    if (!std::isfinite(u_b.x)) {
        throw InputError("velocity.ubx must be finite");
    }
    if (!std::isfinite(u_b.y)) {
        throw InputError("velocity.uby must be finite");
    }
    if (!std::isfinite(q_e)) {
        throw InputError("inlet.flux must be finite");
    }
    if (!std::isfinite(solver.tol) || !(solver.tol > 0.0)) {
        throw InputError("solver.tol must be finite and > 0");
    }
    if (solver.max_iter && *solver.max_iter < 1) {
        throw InputError("solver.max_iter must be >= 1");
    }
    roughness.validate();
}

Discretization build_fields(const ScenarioConfig& config) {
    config.validate();
    Grid grid(config.nx, config.ny, config.lateral_natural);
    CoefficientFields fields;
    const std::size_t cells = grid.cell_count();
    fields.n_psi.resize(cells);
    fields.a.resize(cells);
    fields.b.resize(cells);
    fields.h1_bar.resize(cells);

    // Few distinct intensities occur; evaluate each once.
    std::map<double, CoefficientPair> cache;
    for (int j = 0; j < grid.ny(); ++j) {
        for (int i = 0; i < grid.nx(); ++i) {
            const Vec2 c = grid.barycenter(i, j);
            const std::size_t k = grid.cell_index(i, j);
            const double n = config.roughness.n_psi_at(c.x, c.y);
            auto it = cache.find(n);
            if (it == cache.end()) {
                it = cache.emplace(n, homogenized_coefficients(RoughnessIntensity(n))).first;
            }
            fields.n_psi[k] = n;
            fields.a[k] = it->second.a;
            fields.b[k] = it->second.b;
            fields.h1_bar[k] = evaluate_gap(config.gap, c.x, c.y);
        }
    }
    return {grid, std::move(fields)};
}

}  // namespace roughlub

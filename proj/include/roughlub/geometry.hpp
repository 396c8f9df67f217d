#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "roughlub/vec2.hpp"

namespace roughlub {

// ---------------------------------------------------------------------------
// Gap profile h1 over the unit square
// ---------------------------------------------------------------------------

enum class GapKind { quadratic_channel, constant, tabulated };

/// Nodal gap values on a uniform grid covering [0,1]^2, row-major with y outer.
struct GapTable {
    std::size_t x_nodes = 0;
    std::size_t y_nodes = 0;
    std::vector<double> values;

    double at(std::size_t i, std::size_t j) const { return values[j * x_nodes + i]; }
};

/// Parses a gap table: two integers (x_nodes y_nodes, each >= 2) followed by
/// x_nodes*y_nodes positive values, whitespace or comma separated, `#` comments.
GapTable parse_gap_table(const std::string& text);
GapTable load_gap_table(const std::filesystem::path& path);

/// quadratic_channel: c0 (2x - 1)^2 + c1; constant: c0; tabulated: bilinear in `table`.
struct GapProfile {
    GapKind kind = GapKind::quadratic_channel;
    double c0 = 1.0;
    double c1 = 0.5;
    std::optional<GapTable> table;
    std::string table_path;  // as written in the config, for reporting
};

/// h1(x, y). Throws DomainError outside [0,1]^2 or if the value is not positive.
double evaluate_gap(const GapProfile& profile, double x, double y);

/// True when h1 provably does not depend on y.
bool gap_is_y_independent(const GapProfile& profile);

std::string to_string(GapKind kind);

// ---------------------------------------------------------------------------
// Rough regions
// ---------------------------------------------------------------------------

struct DirectIntensity {
    double value = 0.0;
};

/// Fully rough cell with h2(X) = amplitude cos(2 pi wavenumber X_1).
struct CosineRipple {
    double amplitude = 0.0;
    int wavenumber = 1;
};

/// Closed axis-aligned rectangle of the horizontal domain carrying one intensity.
struct RoughRegion {
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 1.0;
    double y1 = 1.0;
    std::variant<DirectIntensity, CosineRipple> source = DirectIntensity{};
    std::string label;  // used in error messages; defaults to "rough region #k"

    double n_psi() const;
    bool contains(double x, double y) const noexcept {
        return x >= x0 && x <= x1 && y >= y0 && y <= y1;
    }
    bool spans_y() const noexcept { return y0 <= 0.0 && y1 >= 1.0; }
    double area() const noexcept { return (x1 - x0) * (y1 - y0); }
};

struct RoughnessSpec {
    std::vector<RoughRegion> regions;

    /// Throws InputError for rectangles outside the domain, degenerate rectangles,
    /// positive-area overlaps, or invalid intensities.
    void validate() const;
    bool empty() const noexcept { return regions.empty(); }
    /// Intensity at a point; 0 outside every region.
    double n_psi_at(double x, double y) const;
    bool is_rough(double x, double y) const noexcept;
};

// ---------------------------------------------------------------------------
// Structured grid
// ---------------------------------------------------------------------------

enum class NodeTag {
    interior,
    inlet,      ///< x = 0, Neumann flux
    dirichlet,  ///< p = 0
    lateral,    ///< y = 0 or y = 1 with the natural condition (validation mode only)
};

/// Uniform nx-by-ny cell grid on [0,1]^2. Each cell is split into two P1 triangles
/// along the diagonal from its lower-left to its upper-right corner.
class Grid {
public:
    /// Throws InputError unless nx, ny >= 2. With `lateral_natural` the sides
    /// y = 0 and y = 1 carry the natural condition instead of p = 0.
    Grid(int nx, int ny, bool lateral_natural = false);

    int nx() const noexcept { return nx_; }
    int ny() const noexcept { return ny_; }
    bool lateral_natural() const noexcept { return lateral_natural_; }
    double hx() const noexcept { return 1.0 / nx_; }
    double hy() const noexcept { return 1.0 / ny_; }

    std::size_t node_count() const noexcept {
        return static_cast<std::size_t>(nx_ + 1) * static_cast<std::size_t>(ny_ + 1);
    }
    std::size_t cell_count() const noexcept {
        return static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_);
    }
    std::size_t node_index(int i, int j) const noexcept {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx_ + 1) +
               static_cast<std::size_t>(i);
    }
    std::size_t cell_index(int i, int j) const noexcept {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx_) +
               static_cast<std::size_t>(i);
    }
    double node_x(int i) const noexcept { return static_cast<double>(i) / nx_; }
    double node_y(int j) const noexcept { return static_cast<double>(j) / ny_; }
    Vec2 barycenter(int i, int j) const noexcept {
        return {(i + 0.5) / nx_, (j + 0.5) / ny_};
    }

    NodeTag tag(int i, int j) const noexcept;

private:
    int nx_;
    int ny_;
    bool lateral_natural_;
};

/// Per-cell coefficient samples taken at cell barycenters (row-major, y outer).
struct CoefficientFields {
    std::vector<double> n_psi;
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> h1_bar;
};

struct SolverSettings {
    double tol = 1e-10;
    /// Defaults to 10 x (number of unknowns) when unset.
    std::optional<long> max_iter;
};

/// Everything needed to set up one Reynolds problem.
struct ScenarioConfig {
    int nx = 64;
    int ny = 64;
    GapProfile gap;
    RoughnessSpec roughness;
    Vec2 u_b{1.0, 0.0};
    double q_e = 0.5;
    SolverSettings solver;
    std::string output_dir = "out";
    /// Validation-only mode: natural condition on y = 0 and y = 1.
    bool lateral_natural = false;

    /// Throws InputError naming the offending key.
    void validate() const;
};

struct Discretization {
    Grid grid;
    CoefficientFields fields;
};

/// Samples N, A, B and h1 at every cell barycenter. A cell is rough iff its
/// barycenter lies in a rough rectangle.
Discretization build_fields(const ScenarioConfig& config);

}  // namespace roughlub

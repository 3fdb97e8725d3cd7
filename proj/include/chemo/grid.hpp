// 2D uniform cell-centered grid, scalar fields on it, and cell masks.
#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace chemo {

enum class BoundaryCondition { NeumannZero };

// Rectangle [ox, ox+lx] x [oy, oy+ly] split into nx * ny equal cells.
// Cell (i, j) has its center at (ox + (i+1/2)hx, oy + (j+1/2)hy).
// All discrete operators mirror interior values across the wall faces,
// which realises the zero-flux boundary condition on the grid.
// The origin is (0, 0) for simulation grids; standalone cutoff
// constructions may use shifted working grids.
struct Grid {
    double lx = 1.0, ly = 1.0;
    int nx = 0, ny = 0;
    double hx = 0.0, hy = 0.0;
    double ox = 0.0, oy = 0.0;
    BoundaryCondition bc = BoundaryCondition::NeumannZero;

    int cells() const { return nx * ny; }
    int index(int i, int j) const { return j * nx + i; }
    double x(int i) const { return ox + (i + 0.5) * hx; }
    double y(int j) const { return oy + (j + 0.5) * hy; }
    bool in_range(int i, int j) const { return i >= 0 && i < nx && j >= 0 && j < ny; }
    // nearest cell containing the physical point (clamped to the grid)
    std::pair<int, int> cell_of(double px, double py) const;
    bool same_layout(const Grid& o) const;
};

// Throws std::invalid_argument on nonpositive extents or counts < 4.
Grid build_grid(double lx, double ly, int nx, int ny, double ox = 0.0, double oy = 0.0);

// One real value per cell, row-major with j as the outer index.
struct ScalarField {
    Grid grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const Grid& g, double fill = 0.0)
        : grid(g), values(static_cast<size_t>(g.cells()), fill) {}

    double& at(int i, int j) { return values[grid.index(i, j)]; }
    double at(int i, int j) const { return values[grid.index(i, j)]; }
    int nx() const { return grid.nx; }
    int ny() const { return grid.ny; }
};

// Samples fn(x, y) at every cell center.
ScalarField make_field(const Grid& g, const std::function<double(double, double)>& fn);

// Subset of cells, stored as one byte per cell on the same layout as a field.
struct CellMask {
    Grid grid;
    std::vector<uint8_t> cells;

    CellMask() = default;
    explicit CellMask(const Grid& g, bool fill = false)
        : grid(g), cells(static_cast<size_t>(g.cells()), fill ? 1 : 0) {}

    bool contains(int i, int j) const { return cells[grid.index(i, j)] != 0; }
    void set(int i, int j, bool v = true) { cells[grid.index(i, j)] = v ? 1 : 0; }
    int count() const;
    bool empty() const { return count() == 0; }
};

CellMask disc_mask(const Grid& g, double cx, double cy, double r);
CellMask rect_mask(const Grid& g, double x_lo, double y_lo, double x_hi, double y_hi);
// Cells where f > threshold.
CellMask threshold_mask(const ScalarField& f, double threshold);
CellMask mask_complement(const CellMask& m);
bool mask_subset(const CellMask& inner, const CellMask& outer);
CellMask mask_union(const CellMask& a, const CellMask& b);

// 4-connected component of `m` containing the seed cell; empty if the seed
// is not in the mask.
CellMask connected_component(const CellMask& m, int seed_i, int seed_j);

// Cells of `m` with at least one 4-neighbour outside `m` (grid walls do not
// count as outside).
std::vector<std::pair<int, int>> mask_boundary_cells(const CellMask& m);

// Euclidean distance (between cell centers) from each cell to the mask;
// 0 on mask cells, +inf everywhere when the mask is empty.
ScalarField distance_to_mask(const CellMask& m);

// Minimum center-to-center distance between two masks (0 if they intersect,
// +inf if either is empty).
double min_mask_distance(const CellMask& a, const CellMask& b);

}  // namespace chemo

#include "chemo/grid.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace chemo {

std::pair<int, int> Grid::cell_of(double px, double py) const {
    int i = static_cast<int>(std::floor((px - ox) / hx));
    int j = static_cast<int>(std::floor((py - oy) / hy));
    i = std::clamp(i, 0, nx - 1);
    j = std::clamp(j, 0, ny - 1);
    return {i, j};
}

bool Grid::same_layout(const Grid& o) const {
    return nx == o.nx && ny == o.ny && lx == o.lx && ly == o.ly && ox == o.ox && oy == o.oy;
}

Grid build_grid(double lx, double ly, int nx, int ny, double ox, double oy) {
    if (!(lx > 0.0) || !(ly > 0.0))
        throw std::invalid_argument("build_grid: extents must be positive");
    if (nx < 4 || ny < 4)
        throw std::invalid_argument("build_grid: need at least 4 cells per axis, got " +
                                    std::to_string(nx) + "x" + std::to_string(ny));
    Grid g;
    g.lx = lx;
    g.ly = ly;
    g.nx = nx;
    g.ny = ny;
    g.hx = lx / nx;
    g.hy = ly / ny;
    g.ox = ox;
    g.oy = oy;
    return g;
}

ScalarField make_field(const Grid& g, const std::function<double(double, double)>& fn) {
    ScalarField f(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            f.at(i, j) = fn(g.x(i), g.y(j));
    return f;
}

int CellMask::count() const {
    int n = 0;
    for (uint8_t c : cells) n += c != 0;
    return n;
}

CellMask disc_mask(const Grid& g, double cx, double cy, double r) {
    CellMask m(g);
    const double r2 = r * r;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double dx = g.x(i) - cx, dy = g.y(j) - cy;
            if (dx * dx + dy * dy <= r2) m.set(i, j);
        }
    return m;
}

CellMask rect_mask(const Grid& g, double x_lo, double y_lo, double x_hi, double y_hi) {
    CellMask m(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.x(i), y = g.y(j);
            if (x >= x_lo && x <= x_hi && y >= y_lo && y <= y_hi) m.set(i, j);
        }
    return m;
}

CellMask threshold_mask(const ScalarField& f, double threshold) {
    CellMask m(f.grid);
    for (size_t c = 0; c < f.values.size(); ++c) m.cells[c] = f.values[c] > threshold ? 1 : 0;
    return m;
}

CellMask mask_complement(const CellMask& m) {
    CellMask out(m.grid);
    for (size_t c = 0; c < m.cells.size(); ++c) out.cells[c] = m.cells[c] ? 0 : 1;
    return out;
}

bool mask_subset(const CellMask& inner, const CellMask& outer) {
    for (size_t c = 0; c < inner.cells.size(); ++c)
        if (inner.cells[c] && !outer.cells[c]) return false;
    return true;
}

CellMask mask_union(const CellMask& a, const CellMask& b) {
    CellMask out(a.grid);
    for (size_t c = 0; c < a.cells.size(); ++c) out.cells[c] = (a.cells[c] || b.cells[c]) ? 1 : 0;
    return out;
}

CellMask connected_component(const CellMask& m, int seed_i, int seed_j) {
    CellMask out(m.grid);
    if (!m.grid.in_range(seed_i, seed_j) || !m.contains(seed_i, seed_j)) return out;
    std::deque<std::pair<int, int>> queue{{seed_i, seed_j}};
    out.set(seed_i, seed_j);
    const int di[4] = {1, -1, 0, 0};
    const int dj[4] = {0, 0, 1, -1};
    while (!queue.empty()) {
        auto [i, j] = queue.front();
        queue.pop_front();
        for (int k = 0; k < 4; ++k) {
            const int ni = i + di[k], nj = j + dj[k];
            if (m.grid.in_range(ni, nj) && m.contains(ni, nj) && !out.contains(ni, nj)) {
                out.set(ni, nj);
                queue.emplace_back(ni, nj);
            }
        }
    }
    return out;
}

std::vector<std::pair<int, int>> mask_boundary_cells(const CellMask& m) {
    std::vector<std::pair<int, int>> out;
    const Grid& g = m.grid;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            if (!m.contains(i, j)) continue;
            const bool inner = (i > 0 && m.contains(i - 1, j)) || i == 0;
            const bool inner2 = (i < g.nx - 1 && m.contains(i + 1, j)) || i == g.nx - 1;
            const bool inner3 = (j > 0 && m.contains(i, j - 1)) || j == 0;
            const bool inner4 = (j < g.ny - 1 && m.contains(i, j + 1)) || j == g.ny - 1;
            if (!(inner && inner2 && inner3 && inner4)) out.emplace_back(i, j);
        }
    return out;
}

ScalarField distance_to_mask(const CellMask& m) {
    const Grid& g = m.grid;
    ScalarField d(g, std::numeric_limits<double>::infinity());
    auto boundary = mask_boundary_cells(m);
    if (m.count() == 0) return d;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            if (m.contains(i, j)) {
                d.at(i, j) = 0.0;
                continue;
            }
            double best = std::numeric_limits<double>::infinity();
            const double px = g.x(i), py = g.y(j);
            for (auto [bi, bj] : boundary) {
                const double dx = px - g.x(bi), dy = py - g.y(bj);
                best = std::min(best, dx * dx + dy * dy);
            }
            d.at(i, j) = std::sqrt(best);
        }
    return d;
}

double min_mask_distance(const CellMask& a, const CellMask& b) {
    if (a.count() == 0 || b.count() == 0) return std::numeric_limits<double>::infinity();
    for (size_t c = 0; c < a.cells.size(); ++c)
        if (a.cells[c] && b.cells[c]) return 0.0;
    const Grid& g = a.grid;
    auto ba = mask_boundary_cells(a);
    auto bb = mask_boundary_cells(b);
    double best = std::numeric_limits<double>::infinity();
    for (auto [ai, aj] : ba) {
        const double ax = g.x(ai), ay = g.y(aj);
        for (auto [bi, bj] : bb) {
            const double dx = ax - g.x(bi), dy = ay - g.y(bj);
            best = std::min(best, dx * dx + dy * dy);
        }
    }
    return std::sqrt(best);
}

}  // namespace chemo

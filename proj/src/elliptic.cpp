#include "chemo/elliptic.hpp"

#include <cmath>
#include <string>

#include "chemo/operators.hpp"

namespace chemo {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t c = 0; c < a.size(); ++c) s += a[c] * b[c];
    return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// Diagonal of (I - Lap); the mirror ghost drops one off-diagonal entry at
// each wall, so wall cells have a smaller diagonal.
std::vector<double> screened_diagonal(const Grid& g) {
    std::vector<double> d(static_cast<size_t>(g.cells()));
    const double cx = 1.0 / (g.hx * g.hx), cy = 1.0 / (g.hy * g.hy);
    for (int j = 0; j < g.ny; ++j) {
        const double dy = cy * (2 - (j == 0) - (j == g.ny - 1));
        for (int i = 0; i < g.nx; ++i) {
            const double dx = cx * (2 - (i == 0) - (i == g.nx - 1));
            d[g.index(i, j)] = 1.0 + dx + dy;
        }
    }
    return d;
}

}  // namespace

namespace detail {

void apply_screened(const ScalarField& x, ScalarField& out) {
    laplacian_into(x, out);
    for (size_t c = 0; c < out.values.size(); ++c) out.values[c] = x.values[c] - out.values[c];
}

ScalarField solve_screened_budget(const ScalarField& u, double tol, int max_iter,
                                  const ScalarField* initial_guess, EllipticStats* stats) {
    const Grid& g = u.grid;
    ScalarField x = initial_guess ? *initial_guess : ScalarField(g);
    if (initial_guess && !initial_guess->grid.same_layout(g))
        throw std::invalid_argument("solve_screened_poisson: guess grid mismatch");

    const std::vector<double> diag = screened_diagonal(g);
    const double bnorm = norm2(u.values);
    const double target = tol * (bnorm > 0.0 ? bnorm : 1.0);

    ScalarField q(g);
    detail::apply_screened(x, q);
    std::vector<double> r(u.values);
    for (size_t c = 0; c < r.size(); ++c) r[c] -= q.values[c];

    std::vector<double> z(r.size());
    for (size_t c = 0; c < r.size(); ++c) z[c] = r[c] / diag[c];
    ScalarField p(g);
    p.values = z;

    double rz = dot(r, z);
    double rnorm = norm2(r);
    int it = 0;
    while (rnorm > target && it < max_iter) {
        detail::apply_screened(p, q);
        const double alpha = rz / dot(p.values, q.values);
        for (size_t c = 0; c < r.size(); ++c) {
            x.values[c] += alpha * p.values[c];
            r[c] -= alpha * q.values[c];
        }
        for (size_t c = 0; c < r.size(); ++c) z[c] = r[c] / diag[c];
        const double rz_new = dot(r, z);
        const double beta = rz_new / rz;
        for (size_t c = 0; c < r.size(); ++c) p.values[c] = z[c] + beta * p.values[c];
        rz = rz_new;
        rnorm = norm2(r);
        ++it;
    }

    const double rel = rnorm / (bnorm > 0.0 ? bnorm : 1.0);
    if (stats) {
        stats->iterations = it;
        stats->rel_residual = rel;
    }
    if (rnorm > target)
        throw NonConvergenceError("solve_screened_poisson: residual " + std::to_string(rel) +
                                      " after " + std::to_string(it) + " iterations (target " +
                                      std::to_string(tol) + ")",
                                  rel);
    return x;
}

}  // namespace detail

ScalarField solve_screened_poisson(const ScalarField& u, const EllipticSolveConfig& cfg,
                                   const ScalarField* initial_guess, EllipticStats* stats) {
    if (!all_finite(u)) throw std::invalid_argument("solve_screened_poisson: non-finite input");
    if (!(cfg.tol > 0.0) || cfg.tol > 1e-4)
        throw std::invalid_argument("solve_screened_poisson: tol must lie in (0, 1e-4]");
    const int n = u.grid.cells();
    int budget = cfg.max_iter;
    if (budget == 0) budget = n;
    if (budget < n)
        throw std::invalid_argument("solve_screened_poisson: max_iter must be at least nx*ny");
    return detail::solve_screened_budget(u, cfg.tol, budget, initial_guess, stats);
}

double residual(const ScalarField& u, const ScalarField& v) {
    if (!u.grid.same_layout(v.grid)) throw std::invalid_argument("residual: grid mismatch");
    ScalarField av(u.grid);
    detail::apply_screened(v, av);
    double rnorm = 0.0;
    for (size_t c = 0; c < av.values.size(); ++c) {
        const double d = av.values[c] - u.values[c];
        rnorm += d * d;
    }
    rnorm = std::sqrt(rnorm);
    const double bnorm = norm2(u.values);
    return bnorm > 0.0 ? rnorm / bnorm : rnorm;
}

}  // namespace chemo

// Matrix-free solver for the screened Poisson constraint (I - Lap) v = u
// with zero-flux walls.
#pragma once

#include <stdexcept>

#include "chemo/grid.hpp"

namespace chemo {

struct EllipticSolveConfig {
    double tol = 1e-10;  // relative residual target, must lie in (0, 1e-4]
    int max_iter = 0;    // 0 selects nx*ny; explicit values below nx*ny are rejected
};

struct EllipticStats {
    int iterations = 0;
    double rel_residual = 0.0;
};

class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& msg, double residual)
        : std::runtime_error(msg), final_residual(residual) {}
    double final_residual;
};

// Solves (I - Lap) v = u by Jacobi-preconditioned conjugate gradients.
// The operator with mirrored ghosts is symmetric positive definite.
// `initial_guess` (typically the previous step's v) cuts iteration counts
// sharply in time-stepping loops. Throws NonConvergenceError if the
// residual target is not met within the iteration budget.
ScalarField solve_screened_poisson(const ScalarField& u, const EllipticSolveConfig& cfg = {},
                                   const ScalarField* initial_guess = nullptr,
                                   EllipticStats* stats = nullptr);

// ||(I - Lap) v - u||_2 / ||u||_2 (absolute norm when ||u||_2 = 0).
double residual(const ScalarField& u, const ScalarField& v);

namespace detail {

// out = x - Lap(x)
void apply_screened(const ScalarField& x, ScalarField& out);

// Same as the public solver but with an arbitrary iteration budget;
// used to exercise the non-convergence path.
ScalarField solve_screened_budget(const ScalarField& u, double tol, int max_iter,
                                  const ScalarField* initial_guess, EllipticStats* stats);

}  // namespace detail

}  // namespace chemo

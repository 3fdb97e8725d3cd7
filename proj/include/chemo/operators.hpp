// Discrete differential operators with mirror-ghost (zero-flux) walls.
#pragma once

#include <utility>

#include "chemo/grid.hpp"

namespace chemo {

// 5-point Laplacian; ghost cells mirror the first interior cell across each
// wall face, so the discrete normal derivative at the wall is zero.
ScalarField laplacian(const ScalarField& f);
void laplacian_into(const ScalarField& f, ScalarField& out);

// Centered differences at cell centers with mirrored ghosts.
std::pair<ScalarField, ScalarField> gradient(const ScalarField& f);
void gradient_into(const ScalarField& f, ScalarField& gx, ScalarField& gy);

// Conservative finite-volume divergence of the chemotactic flux u * grad(v).
// Face velocities are averages of the cell-centered gradient components,
// u at faces is first-order upwinded on the face velocity sign, and fluxes
// across the domain walls are zero. The area-weighted sum of the output
// telescopes to zero.
ScalarField advect_flux_divergence(const ScalarField& u, const ScalarField& gvx,
                                   const ScalarField& gvy);
void advect_flux_divergence_into(const ScalarField& u, const ScalarField& gvx,
                                 const ScalarField& gvy, ScalarField& out);

// Midpoint rule, compensated summation.
double integrate(const ScalarField& f);

double max_value(const ScalarField& f);
double min_value(const ScalarField& f);
double max_abs(const ScalarField& f);
bool all_finite(const ScalarField& f);

// (integral of |f|^p)^(1/p).
double lp_norm(const ScalarField& f, double p);

}  // namespace chemo

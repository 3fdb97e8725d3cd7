// Construction and certification of the smooth spatial cutoffs used for
// localized estimates: a boundary-flattening chart for graph boundaries,
// a mollified plateau between nested cell sets, and the power-sharpened
// cutoff phi = phi_tilde^(1/eta) whose discrete derivatives are controlled
// by powers of phi itself.
#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chemo/grid.hpp"

namespace chemo {

struct Vec2 {
    double x = 0.0, y = 0.0;
};

struct Mat2 {
    double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;
    Vec2 mul(const Vec2& v) const { return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y}; }
};

// Local chart that flattens the boundary graph y = f(x) (domain above the
// graph). The map is
//   Phi(x, y) = (w(x) e^y - e^{y0}, y - f(x))
// where w solves w' = w / f', w(x0) = 1. Points above the graph map to
// positive second coordinate, boundary points to zero, and the normal
// derivative of the first component vanishes along the boundary.
class BoundaryChart {
public:
    BoundaryChart(std::function<double(double)> f, std::function<double(double)> f_prime,
                  double x0, double y0, double delta, std::vector<double> xs,
                  std::vector<double> ws);

    double x0() const { return x0_; }
    double y0() const { return y0_; }
    double delta() const { return delta_; }

    // ODE solution w and its derivative w' = w / f'.
    double w(double x) const;
    double w_prime(double x) const { return w(x) / f_prime_(x); }

    Vec2 map(double x, double y) const;
    Mat2 jacobian(double x, double y) const;

    // Outward unit normal of the domain {y > f(x)} at the boundary point
    // (x, f(x)).
    Vec2 unit_normal(double x) const;
    // Directional derivative DPhi * nu at (x, f(x)).
    Vec2 normal_derivative(double x) const;

private:
    std::function<double(double)> f_, f_prime_;
    double x0_, y0_, delta_;
    std::vector<double> xs_, ws_;  // accepted integrator nodes, ascending in x
};

// Builds the chart. Requires y0 = f(x0) and f'(x0) > 0; the half-width is
// shrunk from delta_hint until f' stays positive on the whole interval.
// Throws std::invalid_argument when no positive half-width works.
BoundaryChart boundary_chart(const std::function<double(double)>& f,
                             const std::function<double(double)>& f_prime, double x0, double y0,
                             double delta_hint = 1.0);

// Plateau specification: phi_tilde should be 1 on (a neighbourhood of) K and
// supported inside V. delta = dist(K, complement of V); when zero it is
// computed from the masks.
struct PlateauSpec {
    CellMask K, V;
    double delta = 0.0;
    enum class Boundary {
        // Convolution folds across the rectangle walls (even reflection),
        // which keeps the plateau exact up to the walls and gives the
        // mollified field a vanishing wall-normal derivative.
        MirrorWalls,
        // Symmetrize K and V across the line y = 0 first and convolve in
        // free space; used for the standalone half-plane construction.
        // The grid must straddle y = 0 symmetrically.
        SymmetrizeAcrossY0,
    } boundary = Boundary::MirrorWalls;
};

// Mollified plateau: convolution of the indicator of the (delta/3)-
// neighbourhood of K against a normalized radial kernel that equals 1 below
// delta/3 and 0 above 2*delta/3 (C-infinity bump in between). The result is
// 1 deep inside K, 0 outside V, and lies in [0, 1].
// Throws std::invalid_argument when delta <= 0 (K touches the complement
// of V) or cannot be determined.
ScalarField mollified_plateau(const PlateauSpec& spec);

// Convenience: nested-disc plateau spec on a given grid.
PlateauSpec disc_plateau_spec(const Grid& g, double cx, double cy, double r_inner, double r_outer);

// Certified sharpened cutoff.
struct Cutoff {
    ScalarField phi;     // values in [0, 1]
    double eta = 0.25;   // sharpening exponent, in (0, 1/2]
    double c_phi = 0.0;  // smallest constant certifying both discrete bounds
    double worst_grad_ratio = 0.0;  // max |grad phi| / phi^(1-eta) over supp
    double worst_lap_ratio = 0.0;   // max |lap phi| / phi^(1-2 eta) over supp
    CellMask plateau;               // cells with phi == 1
    CellMask support;               // cells with phi > 0
    CellMask region_v;              // intended support region (empty = unknown)
    // Discrete analogues of the continuous constants ||phi_tilde||_C1 / eta
    // and ||phi_tilde||_C2^2 / eta^2, reported for comparison only.
    double continuous_c1_estimate = 0.0;
    double continuous_c2_estimate = 0.0;
};

struct SharpenOptions {
    // Mollified values below this are treated as outside the support before
    // sharpening. Cells beyond it vary by orders of magnitude across one
    // spacing, and centered differences there certify nothing.
    double tail_flush = 1e-2;
};

// phi = phi_tilde^(1/eta) with eta in (0, 1/2]; certifies the smallest
// c_phi with |grad_h phi| <= c_phi phi^(1-eta) and
// |lap_h phi| <= c_phi phi^(1-2 eta) at every support cell (cells with
// phi = 0 count as 0 <= 0 by the convention 0^positive = 0).
Cutoff sharpen(const ScalarField& phi_tilde, double eta, const SharpenOptions& opts = {});

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    std::string note;
};

struct CertificateReport {
    double eta = 0.0, c_phi = 0.0;
    double worst_grad_ratio = 0.0, worst_lap_ratio = 0.0;
    double continuous_c1_estimate = 0.0, continuous_c2_estimate = 0.0;
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::string to_text() const;
};

// Re-measures every certified property of a cutoff: range, plateau,
// support, wall-normal derivative, and the two derivative bounds with the
// carried c_phi.
CertificateReport verify_cutoff(const Cutoff& c);

// sup |grad_h phi| / phi over cells with phi > 0. No finite constant works
// for this eta = 0 ratio: on any compactly supported cutoff it grows
// without bound under grid refinement.
double eta_zero_gradient_ratio(const Cutoff& c);

class NoPositivityNeighborhood : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PointCutoffOptions {
    double mu0 = -1.0;        // negative selects mu(x0) / 2
    double v_fraction = 0.9;  // outer disc radius as a fraction of the room available
    SharpenOptions sharpen{};
};

struct PointCutoff {
    Cutoff cutoff;
    CellMask core;      // requested plateau disc; contained in cutoff.plateau
    CellMask region_v;  // outer disc (clipped to the grid)
    double mu0 = 0.0;
    double r_core = 0.0, r_v = 0.0;
    double x0 = 0.0, y0 = 0.0;
};

// Builds a certified cutoff around x0 whose support stays inside the
// connected component of {mu > mu0} containing x0. Throws
// NoPositivityNeighborhood when the component cannot host one at the grid
// resolution, std::invalid_argument when mu(x0) <= mu0.
PointCutoff build_point_cutoff(const ScalarField& mu, double x0, double y0, double eta,
                               const PointCutoffOptions& opts = {});

Cutoff cutoff_for_point(const ScalarField& mu, double x0, double y0, double mu0, double eta);

}  // namespace chemo

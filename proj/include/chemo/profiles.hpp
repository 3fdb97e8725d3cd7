// Smooth transition profiles shared by coefficients and mollifier kernels.
#pragma once

#include <cmath>

namespace chemo {

// C-infinity increasing step: exactly 0 for t <= 0, exactly 1 for t >= 1.
inline double bump_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

// d/dt of bump_step on (0, 1).
inline double bump_step_derivative(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    const double s = a + b;
    return a * b * (1.0 / (t * t) + 1.0 / ((1.0 - t) * (1.0 - t))) / (s * s);
}

// Quintic step: 0 at 0, 1 at 1; first and second derivatives vanish at the
// ends, so piecewise extensions are C^2.
inline double quintic_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

}  // namespace chemo

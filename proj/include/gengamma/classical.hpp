#pragma once

#include "gengamma/types.hpp"

namespace gengamma::classical {

/// Distance in the complex plane from z to the nearest non-positive integer.
double dist_to_nonpos_int(Complex z);

/// Principal-branch log-gamma, continuous on the plane cut along the
/// negative real axis (values on the cut are the limits from above).
/// Throws PoleProximityError within kPoleThreshold of 0, -1, -2, ...
Complex ln_gamma(Complex z);

/// Gamma function. Uses the reflection formula for Re z < 1/2.
Complex gamma_fn(Complex z);

/// Digamma Psi(z) = Gamma'(z)/Gamma(z).
Complex digamma(Complex z);

/// beta(x, y) = Gamma(x) Gamma(y) / Gamma(x+y), via log-gamma differences.
Complex beta_fn(Complex x, Complex y);

/// Riemann zeta for Re s > 0, |Im s| <= 30, away from s = 1. Evaluated
/// through the eta-function alternating series with Chebyshev-weight
/// acceleration; reflection to Re s <= 0 is deliberately not provided.
Complex zeta_fn(Complex s);

/// b^s = exp(s ln b) for real b > 0; exact at s = 0 and s = 1.
Complex pow_real_base(double b, Complex s);

/// sin(pi z) and cos(pi z) with exact argument reduction on the real part.
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

} // namespace gengamma::classical

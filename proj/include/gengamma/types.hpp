#pragma once

#include <complex>
#include <numbers>

namespace gengamma {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;

// Arguments closer than this to a pole are refused rather than evaluated.
inline constexpr double kPoleThreshold = 1e-8;

} // namespace gengamma

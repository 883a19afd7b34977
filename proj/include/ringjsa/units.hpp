#pragma once

#include <cmath>
#include <numbers>

namespace ringjsa {

// Internal unit system: angular frequency in rad/s, time in seconds.
// GHz (ordinary frequency) and ps only appear at the IO boundary.
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr double ghz_to_rad(double ghz) { return kTwoPi * 1e9 * ghz; }
constexpr double rad_to_ghz(double rad_per_s) { return rad_per_s / (kTwoPi * 1e9); }
constexpr double ps_to_s(double ps) { return ps * 1e-12; }
constexpr double s_to_ps(double s) { return s * 1e12; }

// Intensity-FWHM to sech^2 scale-parameter ratio: sech^2(x) = 1/2 at x = arccosh(sqrt 2).
inline const double kSech2FwhmFactor = 2.0 * std::acosh(std::sqrt(2.0));

}  // namespace ringjsa

#pragma once

#include <numbers>

// Natural units throughout: hbar = c = k_B = 1. Energies, inverse times and
// accelerations share a single unit; temperatures are energies.
//
// To restore SI values multiply by the constants below, e.g.
//   T_U[K] = hbar * a[m/s^2] / (2 pi k_B c).
namespace cuqoe::units {

inline constexpr double hbar = 1.0;
inline constexpr double c = 1.0;
inline constexpr double k_B = 1.0;

inline constexpr double pi = std::numbers::pi;

namespace si {
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double c = 299792458.0;         // m / s
inline constexpr double k_B = 1.380649e-23;      // J / K
}  // namespace si

}  // namespace cuqoe::units

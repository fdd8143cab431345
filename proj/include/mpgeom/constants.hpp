#pragma once

namespace mpg::constants {

// CODATA 2018 values, SI units.
inline constexpr const char *kVersion = "CODATA 2018";
inline constexpr double elementary_charge = 1.602176634e-19;   // C
inline constexpr double hbar = 1.054571817e-34;                // J s
inline constexpr double speed_of_light = 299792458.0;          // m/s
inline constexpr double fine_structure = 7.2973525693e-3;      // alpha

} // namespace mpg::constants

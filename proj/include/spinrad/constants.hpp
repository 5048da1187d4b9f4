#pragma once

// Physical constants in Gaussian/CGS units. All internal computation is CGS;
// SI shows up only at I/O boundaries (watt output, kelvin input).

namespace spinrad::cgs {

inline constexpr double hbar = 1.054571817e-27;        // erg s
inline constexpr double k_boltzmann = 1.380649e-16;    // erg/K
inline constexpr double c_light = 2.99792458e10;       // cm/s

inline constexpr double watt_per_erg_s = 1.0e-7;       // 1 erg/s = 1e-7 W

inline constexpr double cm_per_nm = 1.0e-7;
inline constexpr double cm_per_um = 1.0e-4;

}  // namespace spinrad::cgs

#pragma once

// Physical constants (CODATA 2018, exact SI where defined) and the
// mathematical constants used throughout the library.

namespace pcas {

inline constexpr double pi = 3.14159265358979323846;

inline constexpr double hbar = 1.054571817e-34;          // J s
inline constexpr double speed_of_light = 2.99792458e8;   // m/s (exact)
inline constexpr double k_boltzmann = 1.380649e-23;      // J/K (exact)
inline constexpr double electron_volt = 1.602176634e-19; // J (exact)

inline constexpr double zeta2 = pi * pi / 6.0;
inline constexpr double zeta3 = 1.2020569031595942854;
inline constexpr double zeta5 = 1.0369277551433699263;

// aleph = 180 / pi^3, the normalization constant of the perfect-mirror
// Casimir energy E_C = -hbar c / (4 pi aleph L^3).
inline constexpr double aleph = 180.0 / (pi * pi * pi);

} // namespace pcas

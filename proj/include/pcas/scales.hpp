#pragma once

namespace pcas {

// Plasma-model material scales.  All three fields are consistent:
// plasma_wavelength * plasma_frequency = 2 pi c and
// plasma_temperature = hbar * plasma_frequency / (2 pi kB), so that
// tau = T / plasma_temperature = 2 pi kB T / (hbar w_p).
struct MaterialParams {
  double plasma_frequency;   // rad/s
  double plasma_wavelength;  // m
  double plasma_temperature; // K

  // Gold, anchored on lambda_p = 136 nm.
  static MaterialParams gold();
  // Arbitrary plasma wavelength in meters; the other scales are derived.
  static MaterialParams from_plasma_wavelength(double lambda_p);
};

// Dimensionless coordinates: lambda = L / lambda_p and
// tau = 2 pi kB T / (hbar w_p).  The product lambda*tau = kB T L / (hbar c)
// is material independent.
struct ScaledGeometry {
  double lambda;
  double tau;
};

// Perfect-mirror reference quantities at plate separation L.
struct Normalization {
  double aleph;           // 180 / pi^3
  double casimir_energy;  // J/m^2, negative
  double casimir_force;   // Pa, negative (attractive)
  double casimir_entropy; // J K^-1 m^-2, positive
};

ScaledGeometry to_scaled(double separation, double temperature, const MaterialParams& m);

struct PhysicalGeometry {
  double separation;  // m
  double temperature; // K
};
PhysicalGeometry from_scaled(const ScaledGeometry& g, const MaterialParams& m);

// E_C = -hbar c/(4 pi aleph L^3), F_C = 3 E_C / L, S_C = zeta(3) kB/(8 pi L^2).
Normalization perfect_mirror_refs(double separation);

} // namespace pcas

#include "pcas/scales.hpp"

#include <stdexcept>

#include "pcas/constants.hpp"

namespace pcas {

MaterialParams MaterialParams::from_plasma_wavelength(double lambda_p) {
  if (!(lambda_p > 0.0))
    throw std::domain_error("MaterialParams: plasma wavelength must be > 0");
  const double omega_p = 2.0 * pi * speed_of_light / lambda_p;
  return {omega_p, lambda_p, hbar * omega_p / (2.0 * pi * k_boltzmann)};
}

MaterialParams MaterialParams::gold() { return from_plasma_wavelength(136e-9); }

ScaledGeometry to_scaled(double separation, double temperature, const MaterialParams& m) {
  if (!(separation > 0.0)) throw std::domain_error("to_scaled: separation must be > 0");
  if (temperature < 0.0) throw std::domain_error("to_scaled: temperature must be >= 0");
  return {separation / m.plasma_wavelength, temperature / m.plasma_temperature};
}

PhysicalGeometry from_scaled(const ScaledGeometry& g, const MaterialParams& m) {
  if (!(g.lambda > 0.0)) throw std::domain_error("from_scaled: lambda must be > 0");
  if (g.tau < 0.0) throw std::domain_error("from_scaled: tau must be >= 0");
  return {g.lambda * m.plasma_wavelength, g.tau * m.plasma_temperature};
}

Normalization perfect_mirror_refs(double separation) {
  if (!(separation > 0.0))
    throw std::domain_error("perfect_mirror_refs: separation must be > 0");
  const double L = separation;
  const double energy = -hbar * speed_of_light / (4.0 * pi * aleph * L * L * L);
  return {aleph, energy, 3.0 * energy / L, zeta3 * k_boltzmann / (8.0 * pi * L * L)};
}

} // namespace pcas

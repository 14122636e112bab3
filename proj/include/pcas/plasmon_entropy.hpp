#pragma once

#include <optional>

#include "pcas/quadrature.hpp"
#include "pcas/scales.hpp"

namespace pcas {

// Scaled plasmonic entropy S = S_C(L) * sigma(lambda, tau).
struct EntropyResult {
  double sigma;
  std::optional<double> absolute; // J K^-1 m^-2 when a separation is attached
};

// Closed-form entropy integral:
//   sigma = -(4/zeta3) [ sum_a (c_a/2) int (ln[1-e^{-g_a/lt}] - nbar_a g_a/lt) dz
//                        + 3 lt^2 L(sqrt(z_+)/lt) + z_+ ln(1-e^{-sqrt(z_+)/lt}) ].
EntropyResult sigma_integral(double lambda, double tau, const QuadratureConfig& cfg = {});

// Same in physical coordinates; fills the absolute entropy per unit area,
// S_C(L) * sigma.
EntropyResult sigma_at(double separation, double temperature, const MaterialParams& m,
                       const QuadratureConfig& cfg = {});

// Independent route: sigma = 2/(zeta3 aleph lambda) * d theta / d tau via a
// Richardson-extrapolated central difference with step h = 1e-4 tau.
// Steps below tau = 1e-8 underflow; use sigma_integral there.
double sigma_from_theta(double lambda, double tau, const QuadratureConfig& cfg = {});

// Perfect-reflector reference, a function of s = lambda*tau only:
// 12 s^2 for s small, 1 for s large, switched at the continuity point
// s = 1/sqrt(12).  Reference/normalization quantity only.
double sigma_perfect(double lambda, double tau);

enum class EntropyRegime {
  short_low_t,  // sigma_C [1/(pi lambda) + (5 zeta5 / (pi^2 zeta3)) (tau/(pi lambda))^2 - 1]
  short_high_t, // 1/2
  intermediate, // sigma_C (-1 + 1/(pi lambda))
  large_t,      // -(pi^2/zeta3)(ln(2 lambda) - 7 zeta3/pi^2 + 1/2)
};

double sigma_asymptote(EntropyRegime regime, double lambda, double tau);

} // namespace pcas

#pragma once

#include <optional>

#include "pcas/dispersion.hpp"
#include "pcas/quadrature.hpp"

namespace pcas {

// Scaled plasmonic free energy F = E_C(L) * phi(lambda, tau), split as
// phi = eta(lambda) + theta(lambda, tau).  phi < 0 means a repulsive
// interaction energy.
struct FreeEnergyResult {
  double eta;
  double theta;
  double phi;
  std::optional<double> absolute; // J/m^2 when a separation is attached
};

// Zero-temperature correction factor:
//   eta = -(aleph/2) sum_a c_a int_{-z_a}^inf g_a dz + (aleph/3) z_+^{3/2}.
// The three g_a integrals diverge individually (g_a -> sqrt(2) pi lambda);
// the branch-summed integrand decays exponentially and is integrated as one.
double eta(double lambda, const QuadratureConfig& cfg = {});

// Thermal correction factor:
//   theta = -aleph lt sum_a c_a int ln[1 - e^{-g_a/lt}] dz
//           - 2 aleph lt^3 L(sqrt(z_+)/lt),   lt = lambda tau.
// Exactly zero at tau = 0.
double theta(double lambda, double tau, const QuadratureConfig& cfg = {});

FreeEnergyResult phi(double lambda, double tau, const QuadratureConfig& cfg = {});

// Same in physical coordinates; fills the absolute free energy per unit
// area, E_C(L) * phi.
FreeEnergyResult phi_at(double separation, double temperature, const MaterialParams& m,
                        const QuadratureConfig& cfg = {});

// Upper-limit contribution of the closed-form (second) integral of the mode
// sum for one branch, at the common limit g_a(inf) = sqrt(2) pi lambda.
// These cancel exactly in the sum over branches.
double second_integral_upper_term(Branch b, double lambda, double tau);

// beta(tau): the short-distance thermal shape function,
//   beta = int_0^inf ln[(1-e^{-pi sqrt2/tau}) / (1-e^{-pi sqrt(2(1+e^{-sqrt z}))/tau})] dz
//        + int_0^inf ln[(1-e^{-pi sqrt2/tau}) / (1-e^{-pi sqrt(2(1-e^{-sqrt z}))/tau})] dz.
// Limits: 6 zeta(5) (tau/pi)^4 for tau << 1 and zeta(3)/4 for tau -> inf.
double beta(double tau, const QuadratureConfig& cfg = {});

// Closed-form asymptotes.
double eta_asymptotic_short(double lambda);                 // 1.790 lambda
double eta_asymptotic_large(double lambda);                 // -74.57 sqrt(lambda) + 60
// theta ~ aleph lambda tau [ 2 (lambda tau^2/pi) L(2 pi sqrt(pi lambda)/tau) + beta(tau) ]
double theta_asymptotic_short(double lambda, double tau, const QuadratureConfig& cfg = {});
// theta ~ -2 aleph (lambda tau)^3 zeta(3) (1 - 1/(pi lambda))
double theta_asymptotic_intermediate(double lambda, double tau);
// phi ~ -(aleph pi^2 lambda tau / 2)(ln(2 lambda) - 7 zeta(3)/pi^2 + 1/2)
double phi_asymptotic_large(double lambda, double tau);

} // namespace pcas

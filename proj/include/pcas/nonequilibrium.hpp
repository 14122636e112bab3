#pragma once

#include "pcas/quadrature.hpp"

namespace pcas {

// Stationary configurations with selectively heated mode populations.
struct NoneqScenario {
  enum class Kind {
    equilibrium,             // single temperature tau1
    two_plate_average,       // slabs at tau1 and tau2
    plasmons_hot,            // photons at tau1, plasmons of one plate at tau2
    propagating_plasmon_hot, // everything at tau1, propagating plus branch at tau_pr
  };
  Kind kind = Kind::equilibrium;
  double tau1 = 0.0;
  double tau2 = 0.0;
  double tau_pr = 0.0;

  static NoneqScenario equilibrium(double tau);
  static NoneqScenario two_plate(double tau1, double tau2);
  static NoneqScenario plasmons_hot(double tau_base, double tau_plasmon);
  static NoneqScenario propagating_hot(double tau_base, double tau_propagating);
};

// Plasmonic free energy for two slabs at different temperatures:
//   phi = eta(lambda) + (theta(lambda,tau2) + theta(lambda,tau1)) / 2.
double phi_noneq_plasmonic(double lambda, double tau1, double tau2,
                           const QuadratureConfig& cfg = {});

// Full interaction with the plasmonic population of one plate heated:
//   phi = phi_Lif(lambda,tau1) + (theta(lambda,tau2) - theta(lambda,tau1)) / 2.
double phi_noneq_full(double lambda, double tau1, double tau2,
                      const QuadratureConfig& cfg = {});

// Thermal free energy carried by the propagating part of the Plus branch:
//   theta_pr = -aleph lt int_{-z_+}^0 ln[1 - e^{-g_+/lt}] dz
//              - 2 aleph lt^3 [L(sqrt(z_+)/lt) - L(g_+(0)/lt)].
double theta_propagating_plus(double lambda, double tau, const QuadratureConfig& cfg = {});

// Everything at tau except the propagating plus branch at tau_pr:
//   phi = phi_Lif(lambda,tau) + theta_pr(lambda,tau_pr) - theta_pr(lambda,tau).
double phi_noneq_propagating(double lambda, double tau, double tau_pr,
                             const QuadratureConfig& cfg = {});

// Free energy factor of an arbitrary scenario.
double phi_scenario(const NoneqScenario& s, double lambda, const QuadratureConfig& cfg = {});

} // namespace pcas

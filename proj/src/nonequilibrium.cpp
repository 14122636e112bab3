#include "pcas/nonequilibrium.hpp"

#include <cmath>
#include <stdexcept>

#include "pcas/constants.hpp"
#include "pcas/errors.hpp"
#include "pcas/dispersion.hpp"
#include "pcas/lifshitz.hpp"
#include "pcas/plasmon_energy.hpp"
#include "pcas/specfun.hpp"

namespace pcas {

NoneqScenario NoneqScenario::equilibrium(double tau) {
  return {Kind::equilibrium, tau, tau, tau};
}
NoneqScenario NoneqScenario::two_plate(double tau1, double tau2) {
  return {Kind::two_plate_average, tau1, tau2, 0.0};
}
NoneqScenario NoneqScenario::plasmons_hot(double tau_base, double tau_plasmon) {
  return {Kind::plasmons_hot, tau_base, tau_plasmon, 0.0};
}
NoneqScenario NoneqScenario::propagating_hot(double tau_base, double tau_propagating) {
  return {Kind::propagating_plasmon_hot, tau_base, 0.0, tau_propagating};
}

double phi_noneq_plasmonic(double lambda, double tau1, double tau2,
                           const QuadratureConfig& cfg) {
  if (tau1 < 0.0 || tau2 < 0.0)
    throw std::domain_error("phi_noneq_plasmonic: temperatures must be >= 0");
  return eta(lambda, cfg) + 0.5 * (theta(lambda, tau2, cfg) + theta(lambda, tau1, cfg));
}

double phi_noneq_full(double lambda, double tau1, double tau2, const QuadratureConfig& cfg) {
  if (tau1 < 0.0 || tau2 < 0.0)
    throw std::domain_error("phi_noneq_full: temperatures must be >= 0");
  return phi_lifshitz(lambda, tau1, cfg) +
         0.5 * (theta(lambda, tau2, cfg) - theta(lambda, tau1, cfg));
}

double theta_propagating_plus(double lambda, double tau, const QuadratureConfig& cfg) {
  if (!(lambda > 0.0)) throw std::domain_error("theta_propagating_plus: lambda must be > 0");
  if (tau < 0.0) throw std::domain_error("theta_propagating_plus: tau must be >= 0");
  if (tau == 0.0) return 0.0;

  const double lt = lambda * tau;
  const double zp = z_plus(lambda);
  const double szp = std::sqrt(zp);

  const double integral = integrate_finite(
      [lambda, lt](double v) {
        return 2.0 * v * ln1mexp(g(Branch::plus, -v * v, lambda) / lt);
      },
      0.0, szp, cfg);

  const double lt3 = lt * lt * lt;
  const double bracket =
      L_combination(szp / lt) - L_combination(g_plus_at_lightcone(lambda) / lt);
  return finite_or_throw(-aleph * lt * integral - 2.0 * aleph * lt3 * bracket,
                         "theta_propagating_plus");
}

double phi_noneq_propagating(double lambda, double tau, double tau_pr,
                             const QuadratureConfig& cfg) {
  if (tau < 0.0 || tau_pr < 0.0)
    throw std::domain_error("phi_noneq_propagating: temperatures must be >= 0");
  return phi_lifshitz(lambda, tau, cfg) + theta_propagating_plus(lambda, tau_pr, cfg) -
         theta_propagating_plus(lambda, tau, cfg);
}

double phi_scenario(const NoneqScenario& s, double lambda, const QuadratureConfig& cfg) {
  switch (s.kind) {
    case NoneqScenario::Kind::equilibrium:
      return phi_lifshitz(lambda, s.tau1, cfg);
    case NoneqScenario::Kind::two_plate_average:
      return phi_noneq_plasmonic(lambda, s.tau1, s.tau2, cfg);
    case NoneqScenario::Kind::plasmons_hot:
      return phi_noneq_full(lambda, s.tau1, s.tau2, cfg);
    case NoneqScenario::Kind::propagating_plasmon_hot:
      return phi_noneq_propagating(lambda, s.tau1, s.tau_pr, cfg);
  }
  throw std::domain_error("phi_scenario: unknown scenario kind");
}

} // namespace pcas

#include "pcas/plasmon_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pcas/constants.hpp"
#include "pcas/errors.hpp"
#include "pcas/dispersion.hpp"
#include "pcas/plasmon_energy.hpp"
#include "pcas/specfun.hpp"

namespace pcas {
namespace {

// ln(1 - e^{-x}) - x nbar(x); both pieces diverge separately at the ends.
double entropy_kernel(double x) {
  if (x < 1e-6) {
    const double x2 = x * x;
    return std::log(x) - 1.0 - x2 / 24.0 + x2 * x2 / 960.0;
  }
  const double em = std::exp(-x);
  return ln1mexp(x) - x * em / (1.0 - em);
}

// W(x0+D) - W(x0) for W(x) = x/expm1(x), exact in the gap size.
double bose_weight_diff(double x0, double D) {
  const double num = std::exp(x0) * (D - x0 * std::expm1(D)) - D;
  return num / (std::expm1(x0 + D) * std::expm1(x0));
}

// sum_a c_a [ln(1-e^{-x_a}) - x_a nbar(x_a)] with the same difference-form
// evaluation as the free-energy kernel.
double summed_entropy_kernel(double u, double lambda, double lt) {
  const BranchSplit s = branch_split(u, lambda);
  const double x0 = s.g_zero / lt;
  const double dlo = s.gap_lower / lt;
  const double dhi = s.gap_upper / lt;
  if (dlo + dhi > 0.5)
    return entropy_kernel(s.g_minus / lt) + entropy_kernel(s.g_plus / lt) -
           2.0 * entropy_kernel(x0);
  if (x0 > 700.0) return 0.0;
  const double E = std::expm1(x0);
  const double logs = std::log1p(-std::expm1(-dhi) / E) + std::log1p(-std::expm1(dlo) / E);
  const double weights = bose_weight_diff(x0, dhi) + bose_weight_diff(x0, -dlo);
  return logs - weights;
}

std::vector<double> entropy_u_points(double lambda, double lt, const QuadratureConfig& cfg) {
  const double u_max = cfg.tail_cut_exponent + 2.0;
  std::vector<double> pts{0.0};
  for (double u = 1e-9; u < u_max; u *= 10.0) pts.push_back(u);
  const double P = 2.0 * pi * lambda;
  if (P < u_max) pts.push_back(P);
  const double cut = cfg.tail_cut_exponent;
  const double u_minus = cut * lt / std::sqrt(pi * lambda);
  const double u_zero = (cut * lt) * (cut * lt) / (2.0 * pi * lambda);
  for (double s : {u_minus, u_zero, u_minus * 1e-3, u_zero * 1e-3})
    if (s > 0.0 && s < u_max) pts.push_back(s);
  pts.push_back(u_max);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

} // namespace

EntropyResult sigma_integral(double lambda, double tau, const QuadratureConfig& cfg) {
  if (!(lambda > 0.0)) throw std::domain_error("sigma_integral: lambda must be > 0");
  if (!(tau > 0.0)) throw std::domain_error("sigma_integral: tau must be > 0");

  const double lt = lambda * tau;
  const double zp = z_plus(lambda);
  const double szp = std::sqrt(zp);

  const double prop = integrate_finite(
      [lambda, lt](double v) {
        return 2.0 * v * entropy_kernel(g(Branch::plus, -v * v, lambda) / lt);
      },
      0.0, szp, cfg);

  const double positive = integrate_breakpoints(
      [lambda, lt](double u) { return 2.0 * u * summed_entropy_kernel(u, lambda, lt); },
      entropy_u_points(lambda, lt, cfg), cfg);

  const double bracket = 0.5 * (prop + positive) +
                         3.0 * lt * lt * L_combination(szp / lt) +
                         zp * ln1mexp(szp / lt);
  return {finite_or_throw(-4.0 / zeta3 * bracket, "sigma_integral"), std::nullopt};
}

EntropyResult sigma_at(double separation, double temperature, const MaterialParams& m,
                       const QuadratureConfig& cfg) {
  const ScaledGeometry s = to_scaled(separation, temperature, m);
  EntropyResult r = sigma_integral(s.lambda, s.tau, cfg);
  r.absolute = perfect_mirror_refs(separation).casimir_entropy * r.sigma;
  return r;
}

double sigma_from_theta(double lambda, double tau, const QuadratureConfig& cfg) {
  if (!(lambda > 0.0)) throw std::domain_error("sigma_from_theta: lambda must be > 0");
  if (!(tau > 1e-8))
    throw std::domain_error("sigma_from_theta: finite-difference step underflows below tau = 1e-8");

  QuadratureConfig tight = cfg;
  tight.rel_tol = std::min(cfg.rel_tol, 1e-12);
  tight.abs_tol = std::min(cfg.abs_tol, 1e-15);

  const double h = 1e-4 * tau;
  auto central = [&](double step) {
    return (theta(lambda, tau + step, tight) - theta(lambda, tau - step, tight)) /
           (2.0 * step);
  };
  const double d1 = central(h);
  const double d2 = central(0.5 * h);
  const double deriv = (4.0 * d2 - d1) / 3.0;
  return 2.0 / (zeta3 * aleph * lambda) * deriv;
}

double sigma_perfect(double lambda, double tau) {
  const double s = lambda * tau;
  if (s < 0.0) throw std::domain_error("sigma_perfect: lambda*tau must be >= 0");
  // continuity crossover of the two limiting forms at 12 s^2 = 1
  if (s < 1.0 / std::sqrt(12.0)) return 12.0 * s * s;
  return 1.0;
}

double sigma_asymptote(EntropyRegime regime, double lambda, double tau) {
  const double lt = lambda * tau;
  const double sigma_c = 12.0 * lt * lt;
  switch (regime) {
    case EntropyRegime::short_low_t: {
      const double r = tau / (pi * lambda);
      return sigma_c *
             (1.0 / (pi * lambda) + 5.0 / (pi * pi) * zeta5 / zeta3 * r * r - 1.0);
    }
    case EntropyRegime::short_high_t:
      return 0.5;
    case EntropyRegime::intermediate:
      return sigma_c * (-1.0 + 1.0 / (lambda * pi));
    case EntropyRegime::large_t:
      return -pi * pi / zeta3 *
             (std::log(2.0 * lambda) - 7.0 * zeta3 / (pi * pi) + 0.5);
  }
  throw std::domain_error("sigma_asymptote: unknown regime");
}

} // namespace pcas

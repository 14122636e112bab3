#include "pcas/plasmon_energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pcas/constants.hpp"
#include "pcas/errors.hpp"
#include "pcas/specfun.hpp"

namespace pcas {
namespace {

// Breakpoints in u = sqrt(z) for the branch-summed integrals on z > 0.
// A decade ladder plus the structural scales min(1, 2 pi lambda) and
// 2 pi lambda; extra_scales adds e.g. thermal support boundaries.
std::vector<double> u_points(double lambda, const QuadratureConfig& cfg,
                             std::initializer_list<double> extra_scales) {
  const double u_max = cfg.tail_cut_exponent + 2.0;
  std::vector<double> pts{0.0};
  for (double u = 1e-9; u < u_max; u *= 10.0) pts.push_back(u);
  const double P = 2.0 * pi * lambda;
  if (P < u_max) pts.push_back(P);
  if (P > 1e-9 && P < 1.0) pts.push_back(std::sqrt(P)); // small-z / non-retarded handover
  for (double s : extra_scales)
    if (s > 0.0 && s < u_max) pts.push_back(s);
  pts.push_back(u_max);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

double summed_g(double u, double lambda) {
  const BranchSplit s = branch_split(u, lambda);
  return s.gap_upper - s.gap_lower;
}

// sum_a c_a ln(1 - e^{-g_a/lt}) through the difference identity
//   ln(1-e^{-x0-D}) - ln(1-e^{-x0}) = log1p(-expm1(-D)/expm1(x0)),
// which keeps the absolute error at the size of the gaps instead of the
// size of the individual logarithms.
double summed_ln1mexp(double u, double lambda, double lt) {
  const BranchSplit s = branch_split(u, lambda);
  const double x0 = s.g_zero / lt;
  const double dlo = s.gap_lower / lt;
  const double dhi = s.gap_upper / lt;
  if (dlo + dhi > 0.5)
    return ln1mexp(s.g_minus / lt) + ln1mexp(s.g_plus / lt) - 2.0 * ln1mexp(x0);
  if (x0 > 700.0) return 0.0;
  const double E = std::expm1(x0);
  return std::log1p(-std::expm1(-dhi) / E) + std::log1p(-std::expm1(dlo) / E);
}

} // namespace

double eta(double lambda, const QuadratureConfig& cfg) {
  if (!(lambda > 0.0)) throw std::domain_error("eta: lambda must be > 0");
  const double zp = z_plus(lambda);
  const double szp = std::sqrt(zp);

  // z in [-z_+, 0], parametrized z = -v^2
  const double prop = integrate_finite(
      [lambda](double v) { return 2.0 * v * g(Branch::plus, -v * v, lambda); }, 0.0, szp,
      cfg);
  const double positive = integrate_breakpoints(
      [lambda](double u) { return 2.0 * u * summed_g(u, lambda); },
      u_points(lambda, cfg, {}), cfg);

  return finite_or_throw(-0.5 * aleph * (prop + positive) + aleph / 3.0 * zp * szp,
                         "eta");
}

double theta(double lambda, double tau, const QuadratureConfig& cfg) {
  if (!(lambda > 0.0)) throw std::domain_error("theta: lambda must be > 0");
  if (tau < 0.0) throw std::domain_error("theta: tau must be >= 0");
  if (tau == 0.0) return 0.0;

  const double lt = lambda * tau;
  const double zp = z_plus(lambda);
  const double szp = std::sqrt(zp);

  const double prop = integrate_finite(
      [lambda, lt](double v) {
        return 2.0 * v * ln1mexp(g(Branch::plus, -v * v, lambda) / lt);
      },
      0.0, szp, cfg);

  // thermal support boundaries: g_minus ~ sqrt(pi lambda) u, g_zero ~ sqrt(2 pi lambda u)
  const double cut = cfg.tail_cut_exponent;
  const double u_minus = cut * lt / std::sqrt(pi * lambda);
  const double u_zero = (cut * lt) * (cut * lt) / (2.0 * pi * lambda);
  const double positive = integrate_breakpoints(
      [lambda, lt](double u) { return 2.0 * u * summed_ln1mexp(u, lambda, lt); },
      u_points(lambda, cfg, {u_minus, u_zero, u_minus * 1e-3, u_zero * 1e-3}), cfg);

  return finite_or_throw(-aleph * lt * (prop + positive) -
                             2.0 * aleph * lt * lt * lt * L_combination(szp / lt),
                         "theta");
}

FreeEnergyResult phi(double lambda, double tau, const QuadratureConfig& cfg) {
  FreeEnergyResult r{};
  r.eta = eta(lambda, cfg);
  r.theta = theta(lambda, tau, cfg);
  r.phi = r.eta + r.theta;
  return r;
}

FreeEnergyResult phi_at(double separation, double temperature, const MaterialParams& m,
                        const QuadratureConfig& cfg) {
  const ScaledGeometry s = to_scaled(separation, temperature, m);
  FreeEnergyResult r = phi(s.lambda, s.tau, cfg);
  r.absolute = perfect_mirror_refs(separation).casimir_energy * r.phi;
  return r;
}

double second_integral_upper_term(Branch b, double lambda, double tau) {
  if (!(lambda > 0.0))
    throw std::domain_error("second_integral_upper_term: lambda must be > 0");
  const double c = branch_coefficient(b);
  const double G = std::sqrt(2.0) * pi * lambda; // g_a(inf), common to all branches
  double term = -aleph * c * G * G * G / 3.0;
  if (tau > 0.0) {
    const double lt = lambda * tau;
    term += 2.0 * aleph * c * lt * lt * lt * L_combination(G / lt);
  }
  return term;
}

double beta(double tau, const QuadratureConfig& cfg) {
  if (!(tau > 0.0)) throw std::domain_error("beta: tau must be > 0");
  const double num = ln1mexp(pi * std::sqrt(2.0) / tau);

  // integrated in w = z^(1/4): the low-temperature support sits where
  // pi sqrt(2) w / tau ~ O(1)
  auto integrand = [num, tau](double w) {
    const double w2 = w * w;
    const double ep = std::exp(-w2);
    const double a1 = pi * std::sqrt(2.0 * (1.0 + ep)) / tau;
    const double q = -std::expm1(-w2); // 1 - e^{-w^2}
    const double a2 = pi * std::sqrt(2.0 * q) / tau;
    return (2.0 * num - ln1mexp(a1) - ln1mexp(a2)) * 4.0 * w * w2;
  };

  const double w_max = std::sqrt(cfg.tail_cut_exponent + 3.0);
  std::vector<double> pts{0.0};
  for (double w = 1e-10; w < w_max; w *= 10.0) pts.push_back(w);
  const double w_thermal = cfg.tail_cut_exponent * tau / (pi * std::sqrt(2.0));
  if (w_thermal > 0.0 && w_thermal < w_max) pts.push_back(w_thermal);
  pts.push_back(w_max);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  return finite_or_throw(integrate_breakpoints(integrand, pts, cfg), "beta");
}

double eta_asymptotic_short(double lambda) {
  return 1.790 * lambda; // 4-significant-figure coefficient
}

double eta_asymptotic_large(double lambda) {
  return -74.57 * std::sqrt(lambda) + 60.0; // offset = (aleph/3) pi^3
}

double theta_asymptotic_short(double lambda, double tau, const QuadratureConfig& cfg) {
  if (tau == 0.0) return 0.0;
  const double Larg = 2.0 * pi * std::sqrt(pi * lambda) / tau;
  return aleph * lambda * tau *
         (2.0 * lambda * tau * tau / pi * L_combination(Larg) + beta(tau, cfg));
}

double theta_asymptotic_intermediate(double lambda, double tau) {
  const double lt = lambda * tau;
  return -2.0 * aleph * lt * lt * lt * zeta3 * (1.0 - 1.0 / (lambda * pi));
}

double phi_asymptotic_large(double lambda, double tau) {
  return -0.5 * aleph * pi * pi * lambda * tau *
         (std::log(2.0 * lambda) - 7.0 * zeta3 / (pi * pi) + 0.5);
}

} // namespace pcas

#include "pcas/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pcas/constants.hpp"

namespace pcas {
namespace {

// Direct power series, geometric convergence for x <= 0.5.
double polylog_series(int n, double x) {
  double sum = 0.0, comp = 0.0;
  double xk = 1.0;
  for (int k = 1; k <= 60; ++k) {
    xk *= x;
    const double term = (n == 2) ? xk / (double(k) * k) : xk / (double(k) * k * k);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

// Li_2(e^-t) near t = 0 via the reflection identity
// Li_2(x) + Li_2(1-x) = pi^2/6 - ln(x) ln(1-x).
double li2_upper(double x) {
  if (x == 1.0) return zeta2;
  return zeta2 - std::log(x) * std::log1p(-x) - polylog_series(2, 1.0 - x);
}

// Li_3(e^-t) = zeta3 - zeta2 t + t^2 (3 - 2 ln t)/4 + sum_{k>=3} zeta(3-k) (-t)^k / k!.
// Only k = 3 and even k contribute (zeta vanishes at negative even integers).
double li3_upper(double x) {
  if (x == 1.0) return zeta3;
  const double t = -std::log(x); // in (0, ln 2]
  const double t2 = t * t;
  double r = zeta3 - zeta2 * t + t2 * (3.0 - 2.0 * std::log(t)) / 4.0;
  r += t * t2 / 12.0;
  const double t4 = t2 * t2;
  const double t8 = t4 * t4;
  r -= t4 / 288.0;
  r += t4 * t2 / 86400.0;
  r -= t8 / 10160640.0;                                  // zeta(-5) = -1/252
  r += t8 * t2 / 870912000.0;                            // zeta(-7) = 1/240
  r -= t8 * t4 * (1.0 / 132.0) / 479001600.0;            // zeta(-9) = -1/132
  r += t8 * t4 * t2 * (691.0 / 32760.0) / 87178291200.0; // zeta(-11) = 691/32760
  r -= t8 * t8 * (1.0 / 12.0) / 20922789888000.0;        // zeta(-13) = -1/12
  return r;
}

} // namespace

double polylog(int n, double x) {
  if (n != 2 && n != 3) throw std::domain_error("polylog: only n = 2, 3 supported");
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("polylog: x must lie in [0, 1]");
  if (x <= 0.5) return polylog_series(n, x);
  return (n == 2) ? li2_upper(x) : li3_upper(x);
}

double L_combination(double x) {
  if (!(x >= 0.0)) throw std::domain_error("L_combination: x must be >= 0");
  if (x == 0.0) return 0.0;
  if (x <= 0.2) {
    const double x2 = x * x;
    const double x4 = x2 * x2;
    return 0.25 * x2 * (1.0 - 2.0 * std::log(x)) + x2 * x / 6.0 - x4 / 96.0 +
           x4 * x2 / 17280.0 - x4 * x4 / 1451520.0;
  }
  if (x >= 50.0) return zeta3; // e^-50 below resolution of the polylogarithms
  const double e = std::exp(-x);
  return zeta3 - polylog(3, e) - x * polylog(2, e);
}

double mode_free_energy(double omega, double temperature) {
  if (omega < 0.0) throw std::domain_error("mode_free_energy: omega must be >= 0");
  if (temperature < 0.0) throw std::domain_error("mode_free_energy: T must be >= 0");
  const double zero_point = 0.5 * hbar * omega;
  if (temperature == 0.0) return zero_point;
  if (omega == 0.0) return -std::numeric_limits<double>::infinity();
  const double x = hbar * omega / (k_boltzmann * temperature);
  return zero_point + k_boltzmann * temperature * ln1mexp(x);
}

double bose_occupation(double ratio) {
  if (!(ratio > 0.0)) throw std::domain_error("bose_occupation: ratio must be > 0");
  return 1.0 / std::expm1(ratio);
}

double ln1mexp(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln1mexp: x must be > 0");
  if (x > 0.6931471805599453) return std::log1p(-std::exp(-x));
  return std::log(-std::expm1(-x));
}

} // namespace pcas

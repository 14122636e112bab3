#include "pcas/dispersion.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "pcas/constants.hpp"
#include "pcas/errors.hpp"

namespace pcas {

int branch_coefficient(Branch b) {
  switch (b) {
    case Branch::minus: return 1;
    case Branch::zero: return -2;
    case Branch::plus: return 1;
  }
  return 0;
}

int branch_exponent(Branch b) {
  switch (b) {
    case Branch::minus: return -1;
    case Branch::zero: return 0;
    case Branch::plus: return 1;
  }
  return 0;
}

namespace {

double z_plus_solve(double lambda) {
  const double P = 2.0 * pi * lambda;
  // root of F(s) = s - P cos(s/2) on (0, min(P, pi)); F is strictly increasing
  double lo = 0.0;
  double hi = std::min(P, pi);
  auto F = [P](double s) { return s - P * std::cos(0.5 * s); };
  for (int i = 0; i < 200 && hi - lo > 1e-17 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (F(mid) < 0.0 ? lo : hi) = mid;
  }
  double s = 0.5 * (lo + hi);
  for (int i = 0; i < 3; ++i) {
    const double fs = F(s);
    const double dfs = 1.0 + 0.5 * P * std::sin(0.5 * s);
    const double step = fs / dfs;
    const double next = s - step;
    if (next > 0.0 && next < pi) s = next;
  }
  return s * s;
}

std::shared_mutex z_plus_mutex;
std::unordered_map<double, double> z_plus_cache;

} // namespace

double z_plus(double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("z_plus: lambda must be > 0");
  {
    std::shared_lock lock(z_plus_mutex);
    auto it = z_plus_cache.find(lambda);
    if (it != z_plus_cache.end()) return it->second;
  }
  const double z = z_plus_solve(lambda);
  {
    std::unique_lock lock(z_plus_mutex);
    z_plus_cache.emplace(lambda, z);
  }
  return z;
}

double g_plus_at_lightcone(double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("g_plus_at_lightcone: lambda must be > 0");
  const double P = 2.0 * pi * lambda;
  return P / std::sqrt(1.0 + 0.5 * P);
}

double g(Branch b, double z, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("g: lambda must be > 0");
  const double P = 2.0 * pi * lambda;

  if (z < 0.0) {
    if (b != Branch::plus)
      throw std::domain_error("g: z < 0 only on the Plus branch");
    const double zp = z_plus(lambda);
    if (z < -zp * (1.0 + 1e-12))
      throw std::domain_error("g: z below -z_plus(lambda)");
    const double v = std::min(std::sqrt(-z), std::sqrt(zp));
    if (v == 0.0) return g_plus_at_lightcone(lambda);
    const double g2 = P * P * v / (v + std::sqrt(P * P - v * v) * std::tan(0.5 * v));
    return std::sqrt(g2);
  }

  if (z == 0.0) return b == Branch::plus ? g_plus_at_lightcone(lambda) : 0.0;

  const double u = std::sqrt(z);
  const double R = std::hypot(u, P);
  const double t = std::tanh(0.5 * u);
  double denom;
  switch (branch_exponent(b)) {
    case 1: denom = u + R * t; break;
    case 0: denom = u + R; break;
    default: denom = u + R / t; break;
  }
  return P * std::sqrt(u / denom);
}

double g_small_z(Branch b, double z, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("g_small_z: lambda must be > 0");
  if (z < 0.0) {
    if (b != Branch::plus) throw std::domain_error("g_small_z: z < 0 only on Plus");
    // coth(i v/2) = -i cot(v/2)
    const double v = std::sqrt(-z);
    const double arg = 2.0 * pi * lambda * v / std::tan(0.5 * v);
    return std::sqrt(arg);
  }
  if (z == 0.0)
    return b == Branch::plus ? std::sqrt(4.0 * pi * lambda) : 0.0;
  const double u = std::sqrt(z);
  const double t = std::tanh(0.5 * u);
  double factor;
  switch (branch_exponent(b)) {
    case 1: factor = 1.0 / t; break;
    case 0: factor = 1.0; break;
    default: factor = t; break;
  }
  return std::sqrt(2.0 * pi * lambda * u * factor);
}

double g_large_z(Branch b, double z, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("g_large_z: lambda must be > 0");
  if (z < 0.0) throw std::domain_error("g_large_z: z must be >= 0");
  const double a = branch_exponent(b);
  return 2.0 * pi * lambda / std::sqrt(2.0) * std::sqrt(1.0 + a * std::exp(-std::sqrt(z)));
}

BranchSplit branch_split(double u, double lambda) {
  if (!(lambda > 0.0) || !(u > 0.0))
    throw std::domain_error("branch_split: requires u > 0, lambda > 0");
  const double P = 2.0 * pi * lambda;
  const double R = std::hypot(u, P);
  const double t = std::tanh(0.5 * u);
  const double eu = std::exp(-u);
  const double one_minus_t = 2.0 * eu / (1.0 + eu);

  const double d_minus = u + R / t;
  const double d_zero = u + R;
  const double d_plus = u + R * t;
  const double P2u = P * P * u;

  BranchSplit s{};
  s.g_minus = std::sqrt(P2u / d_minus);
  s.g_zero = std::sqrt(P2u / d_zero);
  s.g_plus = std::sqrt(P2u / d_plus);
  s.gap_lower = P2u * R * one_minus_t / (t * d_zero * d_minus) / (s.g_zero + s.g_minus);
  s.gap_upper = P2u * R * one_minus_t / (d_zero * d_plus) / (s.g_plus + s.g_zero);
  return s;
}

std::vector<DispersionPoint> dispersion_curve(Branch b, const std::vector<double>& k_values,
                                              double separation, const MaterialParams& m) {
  if (!(separation > 0.0))
    throw std::domain_error("dispersion_curve: separation must be > 0");
  const double lambda = separation / m.plasma_wavelength;
  const double z_lo = (b == Branch::plus) ? -z_plus(lambda) : 0.0;

  std::vector<DispersionPoint> out;
  out.reserve(k_values.size());
  for (double k : k_values) {
    if (!(k > 0.0)) throw std::domain_error("dispersion_curve: k must be > 0");
    const double kt = k * separation;
    const double kt2 = kt * kt;
    // solve z + g^2(z) = kt^2; the left side increases from -kt^2 at z_lo
    auto F = [&](double z) {
      const double gz = g(b, z, lambda);
      return z + gz * gz - kt2;
    };
    double lo = z_lo, hi = kt2;
    double flo = F(lo), fhi = F(hi);
    if (!(flo <= 0.0 && fhi >= 0.0))
      throw numerical_error("dispersion_curve: bracketing failed", lo, hi);
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (!(mid > lo && mid < hi)) break; // bracket at machine resolution
      (F(mid) < 0.0 ? lo : hi) = mid;
    }
    const double z = 0.5 * (lo + hi);
    const double omega = speed_of_light / separation * g(b, z, lambda);
    out.push_back({k, omega, z, b});
  }
  return out;
}

std::vector<double> branch_crossings(Branch b, double omega_scaled, double lambda,
                                     double z_cap) {
  if (!(lambda > 0.0)) throw std::domain_error("branch_crossings: lambda must be > 0");
  std::vector<double> roots;
  if (!(omega_scaled > 0.0) || !(z_cap > 0.0)) return roots;

  const double u_cap = std::sqrt(z_cap);
  auto F = [&](double u) { return g(b, u * u, lambda) - omega_scaled; };

  // geometric scan; g varies on the scales min(1, 2 pi lambda) .. u_cap
  const int n_scan = 320;
  const double u_min = u_cap * 1e-9;
  double prev_u = 0.0;
  double prev_f = (b == Branch::plus ? g_plus_at_lightcone(lambda) : 0.0) - omega_scaled;
  const double ratio = std::pow(u_cap / u_min, 1.0 / (n_scan - 1));
  double u = u_min;
  for (int i = 0; i < n_scan; ++i, u *= ratio) {
    const double fu = F(u);
    if ((prev_f < 0.0 && fu >= 0.0) || (prev_f > 0.0 && fu <= 0.0)) {
      double lo = prev_u, hi = u;
      for (int j = 0; j < 120 && hi - lo > 1e-14 * std::max(1.0, hi); ++j) {
        const double mid = 0.5 * (lo + hi);
        const double fm = F(mid);
        if ((fm < 0.0) == (prev_f < 0.0)) lo = mid; else hi = mid;
      }
      roots.push_back(0.25 * (lo + hi) * (lo + hi)); // z = u^2 at midpoint
    }
    prev_u = u;
    prev_f = fu;
  }
  return roots;
}

} // namespace pcas

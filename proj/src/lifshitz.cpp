#include "pcas/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pcas/constants.hpp"
#include "pcas/dispersion.hpp"
#include "pcas/errors.hpp"

namespace pcas {
namespace {

std::vector<double> sorted_unique(std::vector<double> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<double> kappa_points(double X, double span) {
  std::vector<double> pts{X};
  for (double d = 1e-5; d < span; d *= 10.0) pts.push_back(X + d);
  for (double d = 2.0; d < span; d += 3.0) pts.push_back(X + d);
  pts.push_back(X + span);
  return sorted_unique(std::move(pts));
}

} // namespace

double fresnel(Polarization p, double X, double kappa, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("fresnel: lambda must be > 0");
  if (X < 0.0 || kappa < 0.0) throw std::domain_error("fresnel: X, kappa must be >= 0");
  const double P = 2.0 * pi * lambda;
  const double kappa_m = std::hypot(kappa, P);
  if (p == Polarization::te) return (kappa - kappa_m) / (kappa + kappa_m);
  if (X == 0.0) return 1.0; // eps -> infinity limit of the plasma model
  const double r = P / X;
  const double eps = 1.0 + r * r;
  return (eps * kappa - kappa_m) / (eps * kappa + kappa_m);
}

double gamma_p(Polarization p, double X, double lambda, const QuadratureConfig& cfg) {
  if (X < 0.0) throw std::domain_error("gamma_p: X must be >= 0");
  const double span = 0.5 * cfg.tail_cut_exponent + 4.0; // e^{-2 kappa} tail
  return integrate_breakpoints(
      [p, X, lambda](double kappa) {
        const double r = fresnel(p, X, kappa, lambda);
        return kappa * std::log1p(-r * r * std::exp(-2.0 * kappa));
      },
      kappa_points(X, span), cfg);
}

namespace {

double phi_lifshitz_T0(double lambda, const QuadratureConfig& cfg) {
  QuadratureConfig inner = cfg;
  inner.rel_tol = std::max(cfg.rel_tol * 0.1, 1e-13);
  const double P = 2.0 * pi * lambda;
  std::vector<double> pts{0.0};
  for (double s : {1e-4, 1e-3, 1e-2, 0.1, 0.3, 1.0, 3.0}) pts.push_back(P * s);
  for (double s : {0.5, 1.0, 3.0, 8.0, 13.0, 19.0}) pts.push_back(s);
  pts.push_back(std::max(19.0, 3.0 * P));
  pts = sorted_unique(std::move(pts));
  pts.erase(std::remove_if(pts.begin(), pts.end(),
                           [&](double x) { return x > pts.back(); }),
            pts.end());
  const double integral = integrate_breakpoints(
      [lambda, &inner](double X) {
        return gamma_p(Polarization::te, X, lambda, inner) +
               gamma_p(Polarization::tm, X, lambda, inner);
      },
      pts, cfg);
  return -aleph / pi * integral;
}

} // namespace

double phi_lifshitz(double lambda, double tau, const QuadratureConfig& cfg) {
  if (!(lambda > 0.0)) throw std::domain_error("phi_lifshitz: lambda must be > 0");
  if (tau < 0.0) throw std::domain_error("phi_lifshitz: tau must be >= 0");

  const double spacing = 2.0 * pi * lambda * tau;
  if (spacing < 0.02) return phi_lifshitz_T0(lambda, cfg);

  QuadratureConfig inner = cfg;
  inner.rel_tol = std::max(cfg.rel_tol * 0.1, 1e-13);

  double sum = 0.5 * (gamma_p(Polarization::te, 0.0, lambda, inner) +
                      gamma_p(Polarization::tm, 0.0, lambda, inner));
  double comp = 0.0;
  const long n_max = 400000;
  for (long n = 1;; ++n) {
    const double X = spacing * n;
    if (X > cfg.tail_cut_exponent + 6.0) break;
    const double term = gamma_p(Polarization::te, X, lambda, inner) +
                        gamma_p(Polarization::tm, X, lambda, inner);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (X > 1.0 && std::fabs(term) < 0.1 * cfg.rel_tol * std::fabs(sum)) break;
    if (n >= n_max)
      throw numerical_error("phi_lifshitz: Matsubara sum did not converge",
                            -2.0 * aleph * lambda * tau * sum, std::fabs(term));
  }
  return finite_or_throw(-2.0 * aleph * lambda * tau * sum, "phi_lifshitz");
}

// ---------------------------------------------------------------------------
// Real-frequency continuation, W = omega L / c.
//
// Evanescent TM sector: the argument of the logarithm is real and the
// retarded phase is piecewise constant between mode and pole curves; it
// integrates to -(pi/2) sum_a c_a |{z > 0 : g_a(z) < W}| (Minus/Plus are the
// coupled-mode zeros, Zero the squared single-interface pole of r_TM).
// ---------------------------------------------------------------------------

double im_M_evanescent_te(double, double) { return 0.0; }

double im_M_evanescent_tm(double W, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("im_M_evanescent_tm: lambda must be > 0");
  if (!(W > 0.0)) return 0.0;
  const double P = 2.0 * pi * lambda;
  const double wsp2 = 0.5 * P * P; // squared asymptote of all branches

  double z_cap = 2500.0;
  if (W * W < wsp2) {
    const double eps = 1.0 - W * W / wsp2;
    const double z0_est = P * P / (4.0 * eps);
    // all crossings run off together as W -> wsp; the coefficient-weighted
    // strip widths then cancel below double resolution
    if (z0_est > 900.0) return 0.0;
    z_cap = std::min(2500.0, 8.0 * z0_est + 50.0);
  }

  struct Event {
    double z;
    int delta; // change of sum_a c_a [g_a < W] at this z
  };
  std::vector<Event> events;
  int net = 0; // value of the indicator sum at z -> 0+
  for (Branch b : all_branches) {
    const int c = branch_coefficient(b);
    const double g0 = (b == Branch::plus) ? g_plus_at_lightcone(lambda) : 0.0;
    int ind = g0 < W ? 1 : 0;
    net += c * ind;
    for (double z : branch_crossings(b, W, lambda, z_cap)) {
      ind = 1 - ind;
      events.push_back({z, c * (2 * ind - 1)});
    }
  }
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return a.z < b.z; });

  double integral = 0.0;
  double z_prev = 0.0;
  for (const Event& e : events) {
    integral += net * (e.z - z_prev);
    net += e.delta;
    z_prev = e.z;
  }
  if (net != 0)
    throw numerical_error("im_M_evanescent_tm: unbalanced mode strip", integral, double(net));
  return -0.5 * pi * integral;
}

namespace {

// Scattering phase Theta(y) with r^2 e^{2iy} = e^{i Theta} in the totally
// reflecting zone y < min(W, P).
double phase_theta(Polarization p, double y, double W, double P) {
  const double km = std::sqrt((P - y) * (P + y));
  if (p == Polarization::te) return 2.0 * y + 4.0 * std::atan2(y, km);
  const double r = P / W;
  const double eps = 1.0 - r * r;
  return 2.0 * y + 4.0 * std::atan2(eps * y, km);
}

double principal_arg_one_minus_exp(double theta) {
  double m = std::floor(theta / (2.0 * pi));
  double frac = theta - 2.0 * pi * m;
  return 0.5 * (frac - pi);
}

} // namespace

double im_M_propagating(Polarization p, double W, double lambda,
                        const QuadratureConfig& cfg) {
  if (!(lambda > 0.0)) throw std::domain_error("im_M_propagating: lambda must be > 0");
  if (!(W > 0.0)) return 0.0;
  const double P = 2.0 * pi * lambda;
  const double y_reflect = std::min(W, P);

  // locate the phase wraps Theta = 2 pi m; Theta is not monotone for TM
  const int n_scan = 360;
  std::vector<double> pts{0.0, y_reflect};
  double y_prev = y_reflect * 1e-12;
  double th_prev = phase_theta(p, y_prev, W, P);
  const double ratio = std::pow(1.0 / 1e-12, 1.0 / (n_scan - 1));
  double y = y_prev;
  for (int i = 1; i < n_scan; ++i) {
    y = std::min(y * ratio, y_reflect);
    const double th = phase_theta(p, y, W, P);
    const double m_lo = std::floor(th_prev / (2.0 * pi));
    const double m_hi = std::floor(th / (2.0 * pi));
    if (m_lo != m_hi) {
      // one or more wraps inside (y_prev, y); bisect each target
      const int lo = int(std::min(m_lo, m_hi));
      const int hi = int(std::max(m_lo, m_hi));
      for (int m = lo + 1; m <= hi; ++m) {
        double a = y_prev, b = y;
        double fa = th_prev - 2.0 * pi * m;
        for (int j = 0; j < 80 && b - a > 1e-14 * std::max(1.0, b); ++j) {
          const double mid = 0.5 * (a + b);
          const double fm = phase_theta(p, mid, W, P) - 2.0 * pi * m;
          if ((fm < 0.0) == (fa < 0.0)) {
            a = mid;
            fa = fm;
          } else {
            b = mid;
          }
        }
        pts.push_back(0.5 * (a + b));
      }
    }
    y_prev = y;
    th_prev = th;
  }
  pts = sorted_unique(std::move(pts));

  double total = integrate_breakpoints(
      [p, W, P](double yy) {
        return yy * principal_arg_one_minus_exp(phase_theta(p, yy, W, P));
      },
      pts, cfg);

  if (W > P) {
    // transparent zone: |r| < 1, the principal logarithm has no wraps
    std::vector<double> pts2{P};
    for (double q = P + 0.5 * pi; q < W; q += 0.5 * pi) pts2.push_back(q);
    pts2.push_back(W);
    pts2 = sorted_unique(std::move(pts2));
    total += integrate_breakpoints(
        [p, W, P](double yy) {
          const double s = std::sqrt((yy - P) * (yy + P));
          double r;
          if (p == Polarization::te) {
            r = (yy - s) / (yy + s);
          } else {
            const double ratio_p = P / W;
            const double eps = 1.0 - ratio_p * ratio_p;
            r = (eps * yy - s) / (eps * yy + s);
          }
          const double r2 = r * r;
          return yy * std::atan2(-r2 * std::sin(2.0 * yy), 1.0 - r2 * std::cos(2.0 * yy));
        },
        pts2, cfg);
  }
  return total;
}

double sigma_lifshitz_lowT(double lambda, double tau, const QuadratureConfig& cfg) {
  if (!(lambda > 0.0)) throw std::domain_error("sigma_lifshitz_lowT: lambda must be > 0");
  if (!(tau > 0.0)) throw std::domain_error("sigma_lifshitz_lowT: tau must be > 0");

  // the outer integral cannot resolve structure below the inner noise floor
  QuadratureConfig inner = cfg;
  inner.rel_tol = std::clamp(1e-3 * cfg.rel_tol, 1e-13, 1e-11);
  inner.abs_tol = 1e-15;

  const double lt = lambda * tau;
  auto im_M_total = [&](double x) {
    const double W = 2.0 * x * lt;
    return im_M_evanescent_tm(W, lambda) +
           im_M_propagating(Polarization::te, W, lambda, inner) +
           im_M_propagating(Polarization::tm, W, lambda, inner);
  };

  const double x_max = 40.0;
  std::vector<double> pts{0.0};
  for (double x = 1e-7; x < 1.0; x *= 10.0) pts.push_back(x);
  for (double x = 0.25; x < x_max; x += 0.75) pts.push_back(x);
  const double P = 2.0 * pi * lambda;
  for (double Wmark : {P / std::sqrt(2.0), P}) {
    const double x = Wmark / (2.0 * lt);
    if (x > 1e-7 && x < x_max) pts.push_back(x);
  }
  pts.push_back(x_max);
  pts = sorted_unique(std::move(pts));

  const double integral = integrate_breakpoints(
      [&](double x) {
        const double sh = std::sinh(x);
        return x / (sh * sh) * im_M_total(x);
      },
      pts, cfg);
  return finite_or_throw(-4.0 / (pi * zeta3) * integral, "sigma_lifshitz_lowT");
}

double sigma_photonic_lowT(double lambda, double tau) {
  const double lt = lambda * tau;
  const double sigma_c = 12.0 * lt * lt;
  return sigma_c *
         (2.0 - 8.0 * pi * pi * tau / (45.0 * zeta3) * (2.0 + pi * lambda) / 3.0);
}

double sigma_lifshitz_asymptotic_intermediate(double lambda, double tau) {
  const double lt = lambda * tau;
  const double sigma_c = 12.0 * lt * lt;
  return sigma_c * (1.0 + 1.0 / (pi * lambda) -
                    8.0 * pi * pi * tau / (45.0 * zeta3) * (pi * lambda + 2.0) / 3.0);
}

} // namespace pcas

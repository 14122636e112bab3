#pragma once

#include <functional>
#include <vector>

namespace pcas {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 4000;
  // Exponential tails are truncated where exp(-decay) drops below
  // exp(-tail_cut_exponent) ~ 2e-15.
  double tail_cut_exponent = 34.0;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (G7,K15) on a finite interval.
double integrate_finite(const Integrand& f, double a, double b,
                        const QuadratureConfig& cfg = {});

// Same engine, seeded with the segments between consecutive breakpoints.
// `points` must be sorted ascending with at least two entries.
double integrate_breakpoints(const Integrand& f, const std::vector<double>& points,
                             const QuadratureConfig& cfg = {});

// Semi-infinite integral of f over [z_lo, infinity) with the range split as
// [z_lo, 0] + [0, (2 pi lambda)^2] + [(2 pi lambda)^2, Z_max].  The positive
// part is evaluated in u = sqrt(z), which removes the z = 0 derivative
// singularity of integrands containing sqrt(z) and coth(sqrt(z)/2).
// Z_max is set by sqrt(Z_max) = max(4 pi lambda, tail_cut_exponent).
double integrate_split(const Integrand& f, double z_lo, double lambda,
                       const QuadratureConfig& cfg = {});

} // namespace pcas

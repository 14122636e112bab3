#pragma once

#include <vector>

#include "pcas/scales.hpp"

namespace pcas {

// The three coupled surface-plasmon branches.  Minus and Zero are entirely
// evanescent; Plus crosses the light cone and has a propagating part.
enum class Branch { minus, zero, plus };

// Sum coefficients c_- = c_+ = 1, c_0 = -2 (the Zero branch is the
// twice-subtracted single-interface reference).
int branch_coefficient(Branch b);
// Exponent a in tanh^a of the dispersion function: -1, 0, +1.
int branch_exponent(Branch b);

inline constexpr Branch all_branches[3] = {Branch::minus, Branch::zero, Branch::plus};

// Parametric dispersion function, P = 2 pi lambda:
//   g_a^2(z) = P^2 sqrt(z) / (sqrt(z) + sqrt(z + P^2) tanh^a(sqrt(z)/2)).
// Domain: z >= 0 for Minus/Zero; z >= -z_plus(lambda) for Plus, where the
// interval z in [-z_plus, 0] is the propagating part evaluated through the
// real analytic continuation sqrt(z) -> i sqrt(|z|), tanh(iy/2) = i tan(y/2):
//   g_+^2(z) = P^2 v / (v + sqrt(P^2 - v^2) tan(v/2)),  v = sqrt(-z).
double g(Branch b, double z, double lambda);

// Small-z approximation g_a ~ sqrt(2 pi lambda sqrt(z) coth^a(sqrt(z)/2)),
// intended for |z| << (2 pi lambda)^2.
double g_small_z(Branch b, double z, double lambda);
// Non-retarded approximation g_a ~ (2 pi lambda / sqrt 2) sqrt(1 + a e^{-sqrt z}),
// intended for z >> (2 pi lambda)^2.
double g_large_z(Branch b, double z, double lambda);

// Unique root of sqrt(z+) = 2 pi lambda cos(sqrt(z+)/2) with sqrt(z+) in
// (0, pi).  Memoized per lambda; safe for concurrent use.
double z_plus(double lambda);

// Scaled light-cone crossing frequency of the Plus branch:
// g_+(0) = 2 pi lambda / sqrt(1 + pi lambda).
double g_plus_at_lightcone(double lambda);

struct DispersionPoint {
  double k;     // 1/m
  double omega; // rad/s
  double z;     // dimensionless parameter, z = (ck)^2 L^2/c^2 - (w L/c)^2
  Branch branch;
};

// The three branch values at z = u^2 > 0 together with the level gaps
// g_zero - g_minus and g_plus - g_zero.  The gaps are evaluated from the
// difference form
//   g_0^2 - g_-^2 = P^2 u R (1-t) / (t d_0 d_-),
//   g_+^2 - g_0^2 = P^2 u R (1-t) / (d_0 d_+),
// (d_a the denominators of g_a^2, t = tanh(u/2), R = sqrt(u^2 + P^2)), which
// stays exact where the branches collapse onto the common large-z limit and
// direct subtraction would lose everything.
struct BranchSplit {
  double g_minus;
  double g_zero;
  double g_plus;
  double gap_lower; // g_zero - g_minus, >= 0
  double gap_upper; // g_plus - g_zero, >= 0
};
BranchSplit branch_split(double u, double lambda);

// Invert the parametric pair (w, k)(z) for each requested wavevector.
std::vector<DispersionPoint> dispersion_curve(Branch b, const std::vector<double>& k_values,
                                              double separation, const MaterialParams& m);

// All z > 0 with g_b(z) = omega_scaled, ordered ascending.  z is scanned up
// to z_cap; branches approach sqrt(2) pi lambda at large z, so crossings run
// away as omega_scaled approaches that limit and callers must cap the search.
std::vector<double> branch_crossings(Branch b, double omega_scaled, double lambda,
                                     double z_cap);

} // namespace pcas

#pragma once

#include "pcas/quadrature.hpp"

namespace pcas {

enum class Polarization { te, tm };

// Fresnel reflection coefficients on the imaginary frequency axis, in the
// scaled variables X = xi L / c and kappa, with kappa_m = sqrt(kappa^2 + P^2),
// P = 2 pi lambda, and eps(iX) = 1 + (P/X)^2:
//   r_TE = (kappa - kappa_m)/(kappa + kappa_m),
//   r_TM = (eps kappa - kappa_m)/(eps kappa + kappa_m).
// The TM coefficient at X = 0 is the analytic limit r_TM = 1.
double fresnel(Polarization p, double X, double kappa, double lambda);

// Gamma_p(X) = int_X^inf dk k ln[1 - r_p^2(iX, k) e^{-2k}]; finite, negative,
// decaying like e^{-2X}.
double gamma_p(Polarization p, double X, double lambda, const QuadratureConfig& cfg = {});

// Full Casimir free energy factor from the Lifshitz formula,
//   phi_Lif = -2 aleph lambda tau sum_p sum'_n Gamma_p(2 pi n lambda tau).
// At tau = 0 (and whenever the Matsubara spacing 2 pi lambda tau < 0.02, where
// the sum is indistinguishable from its continuum limit) the primed sum is
// replaced by the integral -(aleph/pi) int_0^inf sum_p Gamma_p(X) dX.
double phi_lifshitz(double lambda, double tau, const QuadratureConfig& cfg = {});

// Entropy correction factor of the full plasma-model Casimir effect as a
// real-frequency integral,
//   sigma_Lif = -(4/(pi zeta3)) int_0^inf dx x/sinh^2 x * Im sum_p M_p(2 x lambda tau),
// where M_p(W) continues Gamma_p to frequency W + i0.  The TM evanescent
// sector contributes -(pi/2) sum_a c_a |{z > 0 : g_a(z) < W}| (the coupled
// and single-interface plasmon mode strips); the propagating sector is
// integrated on the principal branch of the complex logarithm.
double sigma_lifshitz_lowT(double lambda, double tau, const QuadratureConfig& cfg = {});

// Entropy of the propagating photonic modes for lambda tau << 1, tau << 1,
// after removal of the propagating plasmon branch:
//   sigma_ph = 12 (lambda tau)^2 [2 - (8 pi^2 tau / (45 zeta3)) (2 + pi lambda)/3].
double sigma_photonic_lowT(double lambda, double tau);

// Intermediate-distance asymptote of the full entropy,
//   sigma_Lif ~ 12 (lambda tau)^2 [1 + 1/(pi lambda)
//                                  - (8 pi^2 tau / (45 zeta3)) (pi lambda + 2)/3].
double sigma_lifshitz_asymptotic_intermediate(double lambda, double tau);

// Exposed for tests: imaginary parts of the real-frequency continuation of
// Gamma_p at scaled frequency W.
double im_M_evanescent_tm(double W, double lambda);
double im_M_evanescent_te(double W, double lambda); // identically zero
double im_M_propagating(Polarization p, double W, double lambda,
                        const QuadratureConfig& cfg = {});

} // namespace pcas

#pragma once

namespace pcas {

// Polylogarithm Li_n(x) = sum_k x^k / k^n for n in {2, 3} and x in [0, 1].
// Direct power series for x <= 0.5; above that the dilogarithm reflection
// identity resp. the log-argument expansion around x = 1 are used, so the
// endpoint values Li_n(1) = zeta(n) are exact.  Absolute error <= 1e-14.
double polylog(int n, double x);

// L(x) = zeta(3) - Li_3(e^-x) - x Li_2(e^-x), the thermal polylogarithm
// combination.  Monotone increasing from L(0) = 0 to zeta(3).
// For x <= 0.2 a series in x is used because the three terms cancel to
// O(x^2 log x):
//   L(x) = x^2/4 (1 - 2 log x) + x^3/6 - x^4/96 + x^6/17280 - x^8/1451520.
double L_combination(double x);

// Free energy of one harmonic mode: hbar w / 2 + kB T ln(1 - e^{-hbar w/kB T}).
// Returns hbar w / 2 exactly at T = 0; returns -infinity for w = 0 at T > 0
// (divergent mode population, to be handled by the caller).
double mode_free_energy(double omega, double temperature);

// Bose-Einstein occupation 1/(e^ratio - 1) for ratio > 0.
double bose_occupation(double ratio);

// ln(1 - e^{-x}) for x > 0, stable for both tiny and large x.
double ln1mexp(double x);

} // namespace pcas

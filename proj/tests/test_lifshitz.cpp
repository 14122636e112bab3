#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pcas/constants.hpp"
#include "pcas/lifshitz.hpp"
#include "pcas/plasmon_energy.hpp"
#include "pcas/plasmon_entropy.hpp"
#include "pcas/quadrature.hpp"

using namespace pcas;

TEST_CASE("fresnel coefficients") {
  const double lam = 1.0;
  const double P = 2.0 * pi * lam;
  // at X = kappa = P: eps = 2, kappa_m = P sqrt 2
  CHECK(fresnel(Polarization::tm, P, P, lam) ==
        doctest::Approx((2.0 - std::sqrt(2.0)) / (2.0 + std::sqrt(2.0))).epsilon(1e-14));
  // transparency: eps -> 1 at large X makes TM approach TE
  CHECK(fresnel(Polarization::tm, 1e8, 3.0, lam) ==
        doctest::Approx(fresnel(Polarization::te, 1e8, 3.0, lam)).epsilon(1e-10));
  // perfect-mirror limit at large lambda
  CHECK(fresnel(Polarization::tm, 1.0, 2.0, 1e7) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(fresnel(Polarization::te, 1.0, 2.0, 1e7) == doctest::Approx(-1.0).epsilon(1e-5));
  // zero-frequency TM limit
  CHECK(fresnel(Polarization::tm, 0.0, 1.0, lam) == 1.0);
  CHECK(std::fabs(fresnel(Polarization::te, 0.0, 1.0, lam)) < 1.0);
  CHECK_THROWS_AS(fresnel(Polarization::tm, -1.0, 1.0, lam), std::domain_error);
}

TEST_CASE("reflection loop integral") {
  // perfectly reflecting value: int_0^inf k ln(1 - e^{-2k}) dk = -zeta3/4,
  // with the series oracle -sum_n 1/(4 n^3)
  double series = 0.0;
  for (int n = 4000; n >= 1; --n) series -= 1.0 / (4.0 * double(n) * n * n);
  CHECK(series == doctest::Approx(-zeta3 / 4.0).epsilon(1e-8));
  QuadratureConfig tight;
  tight.rel_tol = 1e-13;
  const double I = integrate_breakpoints(
      [](double k) { return k * std::log1p(-std::exp(-2.0 * k)); },
      {0.0, 1e-4, 1e-2, 0.1, 1.0, 5.0, 12.0, 25.0}, tight);
  CHECK(std::fabs(I + zeta3 / 4.0) < 1e-12);

  // gamma_p properties
  CHECK(gamma_p(Polarization::tm, 0.0, 1.0) < 0.0);
  CHECK(std::fabs(gamma_p(Polarization::te, 50.0, 1.0)) < 1e-40);
  CHECK(std::fabs(gamma_p(Polarization::tm, 50.0, 1.0)) < 1e-40);
  // TE vanishes with lambda at zero frequency
  CHECK(std::fabs(gamma_p(Polarization::te, 0.0, 1e-4)) < 1e-6);
}

TEST_CASE("free energy factor limits") {
  // perfect-mirror normalization at large separation, zero temperature
  CHECK(phi_lifshitz(1e3, 0.0) == doctest::Approx(1.0).epsilon(1e-2));
  // frozen reference: matches an independent nested-quadrature evaluation
  CHECK(phi_lifshitz(0.02, 0.0) == doctest::Approx(0.0344237913).epsilon(1e-8));
  // always attractive (positive factor)
  for (double lam : {0.01, 0.5, 5.0, 50.0}) {
    for (double tau : {0.0, 0.018, 0.1}) {
      CHECK(phi_lifshitz(lam, tau) > 0.0);
    }
  }
}

TEST_CASE("Matsubara sum truncation is converged") {
  QuadratureConfig loose, tight;
  loose.rel_tol = 1e-6;
  tight.rel_tol = 1e-10;
  for (auto [lam, tau] : {std::pair{1.0, 0.05}, {20.0, 0.018}}) {
    CHECK(phi_lifshitz(lam, tau, loose) ==
          doctest::Approx(phi_lifshitz(lam, tau, tight)).epsilon(1e-5));
  }
  // continuum handover: values on both sides of the spacing threshold agree
  const double lam = 0.05;
  const double tau_edge = 0.02 / (2.0 * pi * lam);
  CHECK(phi_lifshitz(lam, tau_edge * 1.001, tight) ==
        doctest::Approx(phi_lifshitz(lam, tau_edge * 0.999, tight)).epsilon(1e-5));
}

TEST_CASE("plasmons dominate at short distance") {
  const double pl = phi_lifshitz(0.01, 0.018);
  const double pp = phi(0.01, 0.018).phi;
  CHECK(std::fabs(pl - pp) / std::fabs(pl) < 0.05);
}

TEST_CASE("TE evanescent sector is real") {
  CHECK(im_M_evanescent_te(0.5, 1.0) == 0.0);
  // the logarithm argument stays positive on a grid
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> kd(0.0, 10.0), Wd(0.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double k = kd(rng);
    const double r = fresnel(Polarization::te, Wd(rng), k, 1.0);
    CHECK(1.0 - r * r * std::exp(-2.0 * k) > 0.0);
  }
}

TEST_CASE("propagating sector matches its low-frequency expansion") {
  // Im M_p(W) ~ -(pi/4) W^2 + W^3 (c_p + pi lambda)/(3 pi lambda),
  // c_TE = 1, c_TM = 3
  const double lam = 1.0;
  for (double W : {0.02, 0.05}) {
    const double te = im_M_propagating(Polarization::te, W, lam);
    const double tm = im_M_propagating(Polarization::tm, W, lam);
    const double W2 = W * W, W3 = W2 * W;
    const double te_ref = -pi / 4.0 * W2 + W3 * (1.0 + pi * lam) / (3.0 * pi * lam);
    const double tm_ref = -pi / 4.0 * W2 + W3 * (3.0 + pi * lam) / (3.0 * pi * lam);
    CHECK(te == doctest::Approx(te_ref).epsilon(3.0 * W2));
    CHECK(tm == doctest::Approx(tm_ref).epsilon(3.0 * W2));
  }
}

TEST_CASE("entropy from real frequencies matches the thermodynamic derivative") {
  // independent oracle: sigma = 2/(zeta3 aleph lambda) d(phi_Lif)/d(tau)
  QuadratureConfig tight;
  tight.rel_tol = 1e-12;
  const double lam = 1.0, tau = 0.05;
  const double h = 1e-4 * tau;
  auto d = [&](double step) {
    return (phi_lifshitz(lam, tau + step, tight) - phi_lifshitz(lam, tau - step, tight)) /
           (2.0 * step);
  };
  const double deriv = (4.0 * d(0.5 * h) - d(h)) / 3.0;
  const double oracle = 2.0 / (zeta3 * aleph * lam) * deriv;

  QuadratureConfig cfg;
  cfg.rel_tol = 1e-8;
  const double rf = sigma_lifshitz_lowT(lam, tau, cfg);
  CHECK(rf == doctest::Approx(oracle).epsilon(1e-4));
}

TEST_CASE("entropy intermediate-distance reference form") {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-8;
  const double s = sigma_lifshitz_lowT(10.0, 1e-3, cfg);
  CHECK(s == doctest::Approx(sigma_lifshitz_asymptotic_intermediate(10.0, 1e-3)).epsilon(5e-2));
}

TEST_CASE("closed-form entropy budget is exact") {
  // plasmonic intermediate + propagating photonic = full intermediate
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> ld(2.0, 50.0), td(1e-4, 1e-2);
  for (int i = 0; i < 100; ++i) {
    const double lam = ld(rng);
    double tau = td(rng);
    if (lam * tau > 0.1) tau = 0.1 / lam;
    const double plasmonic = sigma_asymptote(EntropyRegime::intermediate, lam, tau);
    const double photonic = sigma_photonic_lowT(lam, tau);
    const double full = sigma_lifshitz_asymptotic_intermediate(lam, tau);
    CHECK(std::fabs(plasmonic + photonic - full) <= 1e-12 * std::fabs(full));
  }
}

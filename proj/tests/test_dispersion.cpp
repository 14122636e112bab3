#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pcas/constants.hpp"
#include "pcas/dispersion.hpp"
#include "pcas/scales.hpp"

using namespace pcas;

TEST_CASE("branch bookkeeping") {
  int csum = 0;
  for (Branch b : all_branches) csum += branch_coefficient(b);
  CHECK(csum == 0);
  CHECK(branch_exponent(Branch::minus) == -1);
  CHECK(branch_exponent(Branch::zero) == 0);
  CHECK(branch_exponent(Branch::plus) == 1);
}

TEST_CASE("dispersion function limits") {
  const double lam = 1.0;
  const double wsp = std::sqrt(2.0) * pi * lam;
  // common large-z limit, approached monotonically
  double prev = 0.0;
  for (double z : {1e2, 1e3, 1e4, 1e6}) {
    const double gz = g(Branch::zero, z, lam);
    CHECK(gz > prev);
    prev = gz;
  }
  CHECK(g(Branch::zero, 1e8, lam) == doctest::Approx(wsp).epsilon(1e-3));

  // light-cone value of the plus branch
  CHECK(g(Branch::plus, 0.0, 1.0) ==
        doctest::Approx(2.0 * pi / std::sqrt(1.0 + pi)).epsilon(1e-14));
  CHECK(g(Branch::plus, 0.0, 1.0) == doctest::Approx(3.087).epsilon(1e-3));
  CHECK(g_plus_at_lightcone(1.0) == g(Branch::plus, 0.0, 1.0));

  // g_minus^2 ~ pi lambda z at small z
  for (double lam2 : {0.3, 2.0}) {
    const double z = 1e-10;
    const double gm = g(Branch::minus, z, lam2);
    CHECK(gm * gm == doctest::Approx(pi * lam2 * z).epsilon(1e-4));
  }
  CHECK(g(Branch::minus, 0.0, 1.0) == 0.0);
  CHECK(g(Branch::zero, 0.0, 1.0) == 0.0);
}

TEST_CASE("dispersion ordering and domain") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> zd(1e-6, 1e3), ld(0.01, 100.0);
  for (int i = 0; i < 200; ++i) {
    const double z = zd(rng), lam = ld(rng);
    CHECK(g(Branch::minus, z, lam) <= g(Branch::zero, z, lam));
    CHECK(g(Branch::zero, z, lam) <= g(Branch::plus, z, lam));
  }
  CHECK_THROWS_AS(g(Branch::minus, -0.1, 1.0), std::domain_error);
  CHECK_THROWS_AS(g(Branch::zero, -0.1, 1.0), std::domain_error);
  CHECK_THROWS_AS(g(Branch::plus, -z_plus(1.0) * 1.01, 1.0), std::domain_error);
  CHECK_THROWS_AS(g(Branch::zero, 1.0, 0.0), std::domain_error);
}

TEST_CASE("analytic continuation across the light cone") {
  for (double lam : {0.05, 1.0, 30.0}) {
    const double above = g(Branch::plus, 1e-12, lam);
    const double below = g(Branch::plus, -1e-12, lam);
    CHECK(std::fabs(above - below) < 1e-10);
    // lower end of the propagating interval: g_+(-z_+) = sqrt(z_+)
    const double zp = z_plus(lam);
    CHECK(g(Branch::plus, -zp, lam) == doctest::Approx(std::sqrt(zp)).epsilon(1e-8));
  }
}

TEST_CASE("z_plus root and asymptotes") {
  // residual of the defining equation
  for (double lam : {1e-3, 0.1, 1.0, 10.0, 1e3}) {
    const double s = std::sqrt(z_plus(lam));
    CHECK(std::fabs(s - 2.0 * pi * lam * std::cos(0.5 * s)) < 1e-12);
    CHECK(s > 0.0);
    CHECK(s < pi);
  }
  CHECK(z_plus(1e-3) / std::pow(2.0 * pi * 1e-3, 2) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(z_plus(1e3) / (pi * pi) == doctest::Approx(1.0).epsilon(1e-3));

  // independent bisection oracle at lambda = 1
  {
    double lo = 0.0, hi = pi;
    auto F = [](double s) { return s - 2.0 * pi * std::cos(0.5 * s); };
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (F(mid) < 0.0 ? lo : hi) = mid;
    }
    const double oracle = 0.25 * (lo + hi) * (lo + hi);
    CHECK(z_plus(1.0) == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(z_plus(1.0) == doctest::Approx(5.61).epsilon(1e-3));
  }

  // monotone increasing and bounded by pi^2
  double prev = 0.0;
  for (double lam = 1e-3; lam < 1e4; lam *= 3.7) {
    const double z = z_plus(lam);
    CHECK(z > prev);
    CHECK(z < pi * pi);
    prev = z;
  }
}

TEST_CASE("small-z and large-z approximations against the exact form") {
  // the leading correction to the small-z form is sqrt(z)/(2 P tanh^a), so
  // the Plus branch sits at ~1.7e-3 here while Minus/Zero are below 1e-3
  CHECK(g_small_z(Branch::minus, 1.0, 100.0) ==
        doctest::Approx(g(Branch::minus, 1.0, 100.0)).epsilon(1e-3));
  CHECK(g_small_z(Branch::zero, 1.0, 100.0) ==
        doctest::Approx(g(Branch::zero, 1.0, 100.0)).epsilon(1e-3));
  CHECK(g_small_z(Branch::plus, 1.0, 100.0) ==
        doctest::Approx(g(Branch::plus, 1.0, 100.0)).epsilon(2e-3));
  for (Branch b : all_branches) {
    CHECK(g_large_z(b, 100.0, 0.01) ==
          doctest::Approx(g(b, 100.0, 0.01)).epsilon(1e-3));
  }
  // exponent zero: the non-retarded form is flat
  CHECK(g_large_z(Branch::zero, 3.0, 2.0) == std::sqrt(2.0) * pi * 2.0);
  CHECK(g_large_z(Branch::zero, 300.0, 2.0) == std::sqrt(2.0) * pi * 2.0);
}

TEST_CASE("branch split gaps match direct differences") {
  for (double lam : {0.05, 1.0, 50.0}) {
    for (double u : {1e-3, 0.3, 2.0, 8.0}) {
      const auto s = branch_split(u, lam);
      const double z = u * u;
      CHECK(s.g_minus == doctest::Approx(g(Branch::minus, z, lam)).epsilon(1e-13));
      CHECK(s.g_zero == doctest::Approx(g(Branch::zero, z, lam)).epsilon(1e-13));
      CHECK(s.g_plus == doctest::Approx(g(Branch::plus, z, lam)).epsilon(1e-13));
      CHECK(s.gap_lower == doctest::Approx(s.g_zero - s.g_minus).epsilon(1e-9));
      CHECK(s.gap_upper == doctest::Approx(s.g_plus - s.g_zero).epsilon(1e-9));
    }
  }
}

TEST_CASE("dispersion curves") {
  const auto gold = MaterialParams::gold();
  const double L = speed_of_light / gold.plasma_frequency; // lambda = 1/(2 pi)
  std::vector<double> ks;
  for (int i = 0; i < 40; ++i)
    ks.push_back(gold.plasma_frequency / speed_of_light * (0.05 + 0.25 * i));

  for (Branch b : all_branches) {
    const auto curve = dispersion_curve(b, ks, L, gold);
    for (const auto& p : curve) {
      // light-cone identity (ck)^2 - w^2 = z c^2 / L^2, checked relative to
      // the well-conditioned scale (ck)^2
      const double ck = speed_of_light * p.k;
      const double lhs = ck * ck - p.omega * p.omega;
      const double rhs = p.z * speed_of_light * speed_of_light / (L * L);
      CHECK(std::fabs(lhs - rhs) <= 1e-12 * ck * ck);
      // z sign separates evanescent from propagating
      if (p.z > 1e-9) CHECK(ck > p.omega);
      if (p.z < -1e-9) CHECK(ck < p.omega);
    }
  }

  // all branches approach w_sp = w_p/sqrt(2) at large k
  const double k_big = 400.0 * gold.plasma_frequency / speed_of_light;
  for (Branch b : all_branches) {
    const auto pt = dispersion_curve(b, {k_big}, L, gold)[0];
    CHECK(pt.omega == doctest::Approx(gold.plasma_frequency / std::sqrt(2.0)).epsilon(2e-2));
  }

  // wide plates: the reference branch reproduces the single-interface mode,
  // k^2 c^2 = w^2 (w^2 - w_p^2) / (2 w^2 - w_p^2)
  {
    const double L_wide = 40.0 * gold.plasma_wavelength;
    const double k = 2.0e6; // 1/m, k c ~ 0.6e15 rad/s
    const auto pt = dispersion_curve(Branch::zero, {k}, L_wide, gold)[0];
    const double w2 = pt.omega * pt.omega;
    const double wp2 = gold.plasma_frequency * gold.plasma_frequency;
    const double k2c2 = w2 * (w2 - wp2) / (2.0 * w2 - wp2);
    CHECK(k * k * speed_of_light * speed_of_light == doctest::Approx(k2c2).epsilon(1e-4));
  }
}

TEST_CASE("branch crossings") {
  const double lam = 1.0;
  for (double W : {0.5, 2.0, 3.5}) {
    for (Branch b : {Branch::minus, Branch::zero}) {
      const auto roots = branch_crossings(b, W, lam, 2500.0);
      if (W < std::sqrt(2.0) * pi * lam) {
        REQUIRE(roots.size() == 1);
        CHECK(g(b, roots[0], lam) == doctest::Approx(W).epsilon(1e-8));
      } else {
        CHECK(roots.empty());
      }
    }
  }
}

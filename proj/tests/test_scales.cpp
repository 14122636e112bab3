#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pcas/constants.hpp"
#include "pcas/scales.hpp"

using namespace pcas;

TEST_CASE("gold preset") {
  const auto gold = MaterialParams::gold();
  CHECK(gold.plasma_wavelength == 136e-9);
  // wavelength-frequency consistency
  CHECK(gold.plasma_wavelength * gold.plasma_frequency ==
        doctest::Approx(2.0 * pi * speed_of_light).epsilon(1e-12));
  // quoted 3-figure values: hbar w_p = 8.96 eV, T_p = 1.66e4 K (within 2%)
  CHECK(hbar * gold.plasma_frequency / electron_volt == doctest::Approx(8.96).epsilon(0.02));
  CHECK(gold.plasma_temperature == doctest::Approx(1.66e4).epsilon(0.02));
}

TEST_CASE("scaled coordinates") {
  const auto gold = MaterialParams::gold();
  const auto s0 = to_scaled(136e-9, 0.0, gold);
  CHECK(s0.lambda == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s0.tau == 0.0);

  // room temperature
  const auto s1 = to_scaled(136e-9, 300.0, gold);
  CHECK(s1.tau == doctest::Approx(1.8e-2).epsilon(0.02));

  const auto s2 = to_scaled(1.36e-6, 665.0, gold);
  CHECK(s2.lambda == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(s2.tau == doctest::Approx(0.04).epsilon(0.02));

  CHECK_THROWS_AS(to_scaled(0.0, 300.0, gold), std::domain_error);
  CHECK_THROWS_AS(to_scaled(1e-7, -1.0, gold), std::domain_error);
}

TEST_CASE("round trip and material independence of lambda*tau") {
  const auto gold = MaterialParams::gold();
  const auto other = MaterialParams::from_plasma_wavelength(98.7e-9);
  std::mt19937 rng(5150);
  std::uniform_real_distribution<double> Ld(1e-9, 1e-4), Td(0.0, 2000.0);
  for (int i = 0; i < 200; ++i) {
    const double L = Ld(rng), T = Td(rng);
    for (const auto& m : {gold, other}) {
      const auto s = to_scaled(L, T, m);
      const auto p = from_scaled(s, m);
      CHECK(p.separation == doctest::Approx(L).epsilon(1e-12));
      if (T > 0.0) CHECK(p.temperature == doctest::Approx(T).epsilon(1e-12));
    }
    const auto a = to_scaled(L, T, gold);
    const auto b = to_scaled(L, T, other);
    if (T > 0.0)
      CHECK(a.lambda * a.tau == doctest::Approx(b.lambda * b.tau).epsilon(1e-12));
    // and equals kB T L / (hbar c)
    CHECK(a.lambda * a.tau ==
          doctest::Approx(k_boltzmann * T * L / (hbar * speed_of_light)).epsilon(1e-12));
  }
}

TEST_CASE("perfect mirror references") {
  const auto n = perfect_mirror_refs(136e-9);
  CHECK(n.aleph == doctest::Approx(180.0 / (pi * pi * pi)).epsilon(1e-15));
  CHECK(n.casimir_energy < 0.0);
  CHECK(n.casimir_force < 0.0);
  CHECK(n.casimir_entropy > 0.0);
  // |F_C| at the gold plasma wavelength: quoted as approximately 3.65 Pa
  CHECK(std::fabs(n.casimir_force) == doctest::Approx(3.65).epsilon(0.05));

  const auto n2 = perfect_mirror_refs(2 * 136e-9);
  CHECK(n2.casimir_energy == doctest::Approx(n.casimir_energy / 8.0).epsilon(1e-14));
  CHECK(n2.casimir_force == doctest::Approx(n.casimir_force / 16.0).epsilon(1e-14));

  // closed form at L = 1 m
  const auto n1 = perfect_mirror_refs(1.0);
  CHECK(n1.casimir_energy ==
        doctest::Approx(-hbar * speed_of_light / (4.0 * pi * aleph)).epsilon(1e-14));
  CHECK(n1.casimir_entropy ==
        doctest::Approx(zeta3 * k_boltzmann / (8.0 * pi)).epsilon(1e-14));

  // F_C L = 3 E_C with shared constants
  for (double L : {1e-8, 1e-6, 1e-3}) {
    const auto r = perfect_mirror_refs(L);
    CHECK(r.casimir_force * L == 3.0 * r.casimir_energy);
  }

  CHECK_THROWS_AS(perfect_mirror_refs(0.0), std::domain_error);
  CHECK_THROWS_AS(perfect_mirror_refs(-1.0), std::domain_error);
}

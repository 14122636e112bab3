#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "pcas/constants.hpp"
#include "pcas/specfun.hpp"

using namespace pcas;

namespace {

// brute-force reference: 200-term Kahan-summed power series; the truncation
// error is bounded by the first omitted term
double polylog_series_ref(int n, double x, double* bound = nullptr) {
  double sum = 0.0, comp = 0.0;
  double xk = 1.0;
  for (int k = 1; k <= 200; ++k) {
    xk *= x;
    const double term = xk / std::pow(double(k), n);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  if (bound) *bound = std::pow(x, 201) / std::pow(201.0, n);
  return sum;
}

} // namespace

TEST_CASE("polylog endpoint and closed-form values") {
  CHECK(polylog(2, 1.0) == doctest::Approx(pi * pi / 6.0).epsilon(1e-15));
  CHECK(polylog(3, 1.0) == doctest::Approx(zeta3).epsilon(1e-15));
  CHECK(polylog(2, 0.0) == 0.0);
  const double li2_half = pi * pi / 12.0 - 0.5 * std::log(2.0) * std::log(2.0);
  const double li3_half = 7.0 * zeta3 / 8.0 - pi * pi * std::log(2.0) / 12.0 +
                          std::pow(std::log(2.0), 3) / 6.0;
  CHECK(polylog(2, 0.5) == doctest::Approx(li2_half).epsilon(1e-15));
  CHECK(polylog(3, 0.5) == doctest::Approx(li3_half).epsilon(1e-15));
}

TEST_CASE("polylog against the series oracle") {
  double bound = 0.0;
  const double ref = polylog_series_ref(2, 0.5, &bound);
  CHECK(bound < 1e-15);
  CHECK(std::fabs(polylog(2, 0.5) - ref) < 1e-15);

  std::mt19937 rng(987);
  std::uniform_real_distribution<double> dist(0.0, 0.85); // 200 terms resolve 1e-15 here
  for (int i = 0; i < 1000; ++i) {
    const double x = dist(rng);
    for (int n : {2, 3}) {
      const double r = polylog_series_ref(n, x, &bound);
      CHECK(std::fabs(polylog(n, x) - r) <= 1e-14 + bound);
    }
  }
}

TEST_CASE("polylog branch seam is continuous") {
  for (int n : {2, 3}) {
    const double below = polylog(n, 0.5 - 1e-12);
    const double above = polylog(n, 0.5 + 1e-12);
    CHECK(std::fabs(above - below) < 1e-11);
  }
}

TEST_CASE("polylog domain") {
  CHECK_THROWS_AS(polylog(4, 0.5), std::domain_error);
  CHECK_THROWS_AS(polylog(2, -0.1), std::domain_error);
  CHECK_THROWS_AS(polylog(2, 1.1), std::domain_error);
}

TEST_CASE("L combination limits") {
  CHECK(L_combination(0.0) == 0.0);
  CHECK(std::fabs(L_combination(50.0) - zeta3) < 1e-14);
  CHECK(std::fabs(L_combination(80.0) - zeta3) < 1e-15);
  const double x = 0.01;
  const double leading = 0.25 * x * x * (1.0 - 2.0 * std::log(x));
  CHECK(L_combination(x) == doctest::Approx(leading).epsilon(1e-2));
  CHECK_THROWS_AS(L_combination(-1e-10), std::domain_error);
}

TEST_CASE("L combination series seam and monotonicity") {
  // series/direct handover near x = 0.2: the two-sided difference is the
  // smooth variation 2 step L'(0.2), any branch mismatch would add to it
  const double step = 1e-9;
  const double lo = L_combination(0.2 - step);
  const double hi = L_combination(0.2 + step);
  const double slope = -0.2 * ln1mexp(0.2);
  CHECK(std::fabs(hi - lo - 2.0 * step * slope) < 1e-12 * hi);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(0.0, 60.0);
  for (int i = 0; i < 300; ++i) {
    double x1 = dist(rng), x2 = dist(rng);
    if (x1 > x2) std::swap(x1, x2);
    CHECK(L_combination(x1) <= L_combination(x2) + 1e-15);
    CHECK(L_combination(x2) <= zeta3 + 1e-15);
  }
}

TEST_CASE("L combination derivative identity") {
  // L'(x) = -x ln(1 - e^{-x}), checked by central differences
  for (double x : {0.1, 0.5, 1.0, 3.0, 10.0}) {
    const double h = 1e-5 * std::max(1.0, x);
    const double fd = (L_combination(x + h) - L_combination(x - h)) / (2.0 * h);
    const double exact = -x * ln1mexp(x);
    CHECK(fd == doctest::Approx(exact).epsilon(1e-6));
  }
}

TEST_CASE("mode free energy") {
  const double w = 1e15;
  CHECK(mode_free_energy(w, 0.0) == 0.5 * hbar * w);
  // hbar w / kB T = 1
  const double T = hbar * w / k_boltzmann;
  const double expected = k_boltzmann * T * (0.5 + std::log(1.0 - std::exp(-1.0)));
  CHECK(mode_free_energy(w, T) == doctest::Approx(expected).epsilon(1e-14));
  // hbar w >> kB T: thermal part suppressed
  CHECK(mode_free_energy(w, T / 60.0) == doctest::Approx(0.5 * hbar * w).epsilon(1e-15));
  CHECK(std::isinf(mode_free_energy(0.0, 300.0)));
  CHECK(mode_free_energy(0.0, 300.0) < 0.0);
  CHECK_THROWS_AS(mode_free_energy(-1.0, 300.0), std::domain_error);
}

TEST_CASE("bose occupation") {
  CHECK(bose_occupation(std::log(2.0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(bose_occupation(1.0) == doctest::Approx(1.0 / (std::exp(1.0) - 1.0)).epsilon(1e-15));
  CHECK(bose_occupation(100.0) < 4e-44);
  // monotone decreasing
  CHECK(bose_occupation(0.5) > bose_occupation(0.6));
  CHECK_THROWS_AS(bose_occupation(0.0), std::domain_error);
  CHECK_THROWS_AS(bose_occupation(-1.0), std::domain_error);
}

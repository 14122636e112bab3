#include "pcas/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "pcas/constants.hpp"
#include "pcas/errors.hpp"

namespace pcas {
namespace {

// Gauss-Kronrod (G7, K15) nodes and weights on [-1, 1].
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  double value;
  double error;
  double resabs;
};

Segment gk15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double resk = wgk[7] * fc;
  double resg = wg[3] * fc;
  double resabs = wgk[7] * std::fabs(fc);
  double fv[15];
  fv[14] = fc;
  for (int j = 0; j < 7; ++j) {
    const double x = half * xgk[j];
    const double f1 = f(center - x);
    const double f2 = f(center + x);
    fv[2 * j] = f1;
    fv[2 * j + 1] = f2;
    resk += wgk[j] * (f1 + f2);
    resabs += wgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
  }

  const double reskh = resk * 0.5;
  double resasc = wgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += wgk[j] * (std::fabs(fv[2 * j] - reskh) + std::fabs(fv[2 * j + 1] - reskh));
  }

  const double value = resk * half;
  resabs *= std::fabs(half);
  resasc *= std::fabs(half);
  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / eps50)
    err = std::max(err, eps50 * resabs);
  return {a, b, value, err, resabs};
}

double kahan_total(std::vector<Segment>& segs) {
  std::sort(segs.begin(), segs.end(),
            [](const Segment& s, const Segment& t) { return s.a < t.a; });
  double sum = 0.0, comp = 0.0;
  for (const Segment& s : segs) {
    const double y = s.value - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double adaptive(const Integrand& f, std::vector<Segment> segs, const QuadratureConfig& cfg) {
  auto worse = [](const Segment& s, const Segment& t) {
    if (s.error != t.error) return s.error < t.error;
    return s.a > t.a; // deterministic tie-break
  };

  const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
  double total = 0.0, err = 0.0, floor_err = 0.0;
  for (const Segment& s : segs) {
    if (!std::isfinite(s.value))
      throw numerical_error("quadrature: integrand produced a non-finite value", s.value, 0.0);
    total += s.value;
    err += s.error;
    floor_err += eps50 * s.resabs;
  }
  std::make_heap(segs.begin(), segs.end(), worse);

  int splits = 0;
  // the floor term recognizes when roundoff, not resolution, limits the error
  while (err > std::max({cfg.abs_tol, cfg.rel_tol * std::fabs(total), 2.0 * floor_err})) {
    if (splits >= cfg.max_subdivisions)
      throw numerical_error("quadrature: subdivision budget exhausted", kahan_total(segs), err);

    std::pop_heap(segs.begin(), segs.end(), worse);
    Segment worst = segs.back();
    segs.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // interval at machine resolution; accept its value as-is
      err -= worst.error;
      worst.error = 0.0;
      segs.push_back(worst);
      std::push_heap(segs.begin(), segs.end(), worse);
      continue;
    }
    const Segment left = gk15(f, worst.a, mid);
    const Segment right = gk15(f, mid, worst.b);
    if (!std::isfinite(left.value) || !std::isfinite(right.value))
      throw numerical_error("quadrature: integrand produced a non-finite value",
                            kahan_total(segs), err);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    floor_err += eps50 * (left.resabs + right.resabs - worst.resabs);
    segs.push_back(left);
    std::push_heap(segs.begin(), segs.end(), worse);
    segs.push_back(right);
    std::push_heap(segs.begin(), segs.end(), worse);
    ++splits;
  }
  return kahan_total(segs);
}

} // namespace

double integrate_finite(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
  if (!(a <= b)) throw std::domain_error("integrate_finite: requires a <= b");
  if (cfg.rel_tol <= 0.0 || cfg.abs_tol <= 0.0 || cfg.max_subdivisions < 10)
    throw std::domain_error("integrate_finite: invalid quadrature configuration");
  if (a == b) return 0.0;
  return adaptive(f, {gk15(f, a, b)}, cfg);
}

double integrate_breakpoints(const Integrand& f, const std::vector<double>& points,
                             const QuadratureConfig& cfg) {
  if (points.size() < 2) throw std::domain_error("integrate_breakpoints: need >= 2 points");
  std::vector<Segment> segs;
  segs.reserve(points.size() - 1);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i] <= points[i + 1]))
      throw std::domain_error("integrate_breakpoints: points must be ascending");
    if (points[i] < points[i + 1]) segs.push_back(gk15(f, points[i], points[i + 1]));
  }
  if (segs.empty()) return 0.0;
  return adaptive(f, std::move(segs), cfg);
}

double integrate_split(const Integrand& f, double z_lo, double lambda,
                       const QuadratureConfig& cfg) {
  if (lambda <= 0.0) throw std::domain_error("integrate_split: lambda must be > 0");
  double total = 0.0;
  if (z_lo < 0.0) total += integrate_finite(f, z_lo, 0.0, cfg);

  const double u_mid = 2.0 * pi * lambda; // sqrt of the split point (2 pi lambda)^2
  const double u_max = std::max(2.0 * u_mid, cfg.tail_cut_exponent);

  std::vector<double> pts;
  pts.push_back(0.0);
  for (double u = u_max * 1e-12; u < u_max; u *= 10.0) pts.push_back(u);
  if (u_mid < u_max) pts.push_back(u_mid);
  pts.push_back(u_max);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  total += integrate_breakpoints([&f](double u) { return 2.0 * u * f(u * u); }, pts, cfg);
  return total;
}

} // namespace pcas

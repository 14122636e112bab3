#include "pcas/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "pcas/constants.hpp"
#include "pcas/dispersion.hpp"
#include "pcas/errors.hpp"
#include "pcas/lifshitz.hpp"
#include "pcas/plasmon_energy.hpp"
#include "pcas/plasmon_entropy.hpp"
#include "pcas/specfun.hpp"

namespace pcas {

double phi_model(Model model, double lambda, const NoneqScenario& scenario,
                 const QuadratureConfig& cfg) {
  switch (model) {
    case Model::plasmonic: {
      const FreeEnergyResult r = phi(lambda, scenario.tau1, cfg);
      return r.phi;
    }
    case Model::lifshitz:
      return phi_lifshitz(lambda, scenario.tau1, cfg);
    case Model::noneq:
      return phi_scenario(scenario, lambda, cfg);
  }
  throw std::domain_error("phi_model: unknown model");
}

PressureResult pressure(Model model, double lambda, const NoneqScenario& scenario,
                        const QuadratureConfig& cfg, const MaterialParams* material) {
  if (!(lambda > 0.0)) throw std::domain_error("pressure: lambda must be > 0");

  auto phi_at = [&](double l) { return phi_model(model, l, scenario, cfg); };
  const double phi0 = phi_at(lambda);

  const double h = 1e-4 * lambda;
  auto central = [&](double step) {
    return (phi_at(lambda + step) - phi_at(lambda - step)) / (2.0 * step);
  };
  const double d1 = central(h);
  const double d2 = central(0.5 * h);
  const double deriv = (4.0 * d2 - d1) / 3.0;
  const double deriv_err = std::fabs(deriv - d2);
  const double scale = std::max(std::fabs(deriv), std::fabs(phi0) / lambda);
  if (deriv_err > std::max(1e-3 * scale, 1e-13))
    throw numerical_error("pressure: derivative estimates disagree (richardson vs central)",
                          deriv, deriv_err);

  PressureResult r{};
  r.dphi_dlambda = deriv;
  r.derivative_error = deriv_err;
  // P = F_C(L) [phi - (lambda/3) dphi/dlambda], F_C < 0
  r.scaled = -(phi0 - lambda / 3.0 * deriv);
  r.normalized_ref = r.scaled * 1e6 / (lambda * lambda * lambda * lambda);
  if (material) {
    const double L = lambda * material->plasma_wavelength;
    r.absolute = r.scaled * std::fabs(perfect_mirror_refs(L).casimir_force);
  }
  return r;
}

std::optional<double> inversion_distance(Model model, const NoneqScenario& scenario,
                                         const QuadratureConfig& cfg, double lambda_lo,
                                         double lambda_hi) {
  if (!(lambda_lo > 0.0 && lambda_hi > lambda_lo))
    throw std::domain_error("inversion_distance: invalid bracket");

  auto p = [&](double l) { return pressure(model, l, scenario, cfg).scaled; };

  const int n_scan = 25;
  double prev_l = lambda_lo;
  double prev_p = p(prev_l);
  const double ratio = std::pow(lambda_hi / lambda_lo, 1.0 / (n_scan - 1));
  for (int i = 1; i < n_scan; ++i) {
    const double l = lambda_lo * std::pow(ratio, i);
    const double pl = p(l);
    if ((prev_p < 0.0 && pl >= 0.0) || (prev_p > 0.0 && pl <= 0.0)) {
      double a = prev_l, b = l, fa = prev_p;
      for (int j = 0; j < 80; ++j) {
        const double mid = 0.5 * (a + b);
        const double fm = p(mid);
        if (std::fabs(fm) < 1e-12 || b - a < 1e-12 * b) return mid;
        if ((fm < 0.0) == (fa < 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      return 0.5 * (a + b);
    }
    prev_l = l;
    prev_p = pl;
  }
  return std::nullopt;
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  if (spec.points < 2) throw std::domain_error("sweep: points must be >= 2");
  if (!(spec.min < spec.max)) throw std::domain_error("sweep: min must be < max");
  if (spec.log_scale && !(spec.min > 0.0))
    throw std::domain_error("sweep: log scale requires min > 0");
  std::vector<double> grid(spec.points);
  for (int i = 0; i < spec.points; ++i) {
    const double t = double(i) / (spec.points - 1);
    grid[i] = spec.log_scale ? spec.min * std::pow(spec.max / spec.min, t)
                             : spec.min + (spec.max - spec.min) * t;
  }
  return grid;
}

std::vector<SweepRow> sweep(SweepQuantity q, const SweepSpec& spec,
                            const NoneqScenario& scenario, const QuadratureConfig& cfg) {
  std::vector<SweepRow> rows;
  for (double x : sweep_grid(spec)) {
    const double lambda = spec.axis == SweepAxis::lambda ? x : spec.fixed;
    const double tau = spec.axis == SweepAxis::tau ? x : spec.fixed;
    SweepRow row{x, 0.0, 0.0, "ok"};
    try {
      double v = 0.0;
      switch (q) {
        case SweepQuantity::eta: v = eta(lambda, cfg); break;
        case SweepQuantity::theta: v = theta(lambda, tau, cfg); break;
        case SweepQuantity::phi: v = phi(lambda, tau, cfg).phi; break;
        case SweepQuantity::sigma: v = sigma_integral(lambda, tau, cfg).sigma; break;
        case SweepQuantity::phi_lif: v = phi_lifshitz(lambda, tau, cfg); break;
        case SweepQuantity::sigma_lif: v = sigma_lifshitz_lowT(lambda, tau, cfg); break;
        case SweepQuantity::pressure: {
          NoneqScenario s = scenario;
          if (spec.axis == SweepAxis::tau) s.tau1 = tau;
          v = pressure(Model::noneq, lambda, s, cfg).scaled;
          break;
        }
      }
      row.value = v;
      row.error_estimate = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(v));
    } catch (const std::domain_error&) {
      row.status = "domain_error";
    } catch (const numerical_error& e) {
      row.status = "numerical_error";
      row.value = e.estimate();
      row.error_estimate = e.error_estimate();
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_csv(const Table& t) {
  std::string out;
  for (const auto& m : t.meta) out += "# " + m + "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out += t.columns[i];
    out += (i + 1 < t.columns.size()) ? "," : "";
  }
  if (!t.row_status.empty()) out += ",status";
  out += "\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += format_g17(row[i]);
      out += (i + 1 < row.size()) ? "," : "";
    }
    if (!t.row_status.empty()) out += "," + t.row_status[r];
    out += "\n";
  }
  return out;
}

std::string to_json(const Table& t) {
  nlohmann::ordered_json j;
  j["meta"] = t.meta;
  j["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) rows.push_back(row);
  j["rows"] = rows;
  if (!t.row_status.empty()) j["status"] = t.row_status;
  return j.dump(2) + "\n";
}

namespace {

Table figure1(const MaterialParams& m) {
  Table t;
  t.columns = {"lambda",          "k_c_over_wp",       "omega_minus_over_wp",
               "omega_zero_over_wp", "omega_plus_over_wp", "omega_single_interface_over_wp"};
  const double wp = m.plasma_frequency;
  for (double lam : {1.0 / (2.0 * pi), 1.0 / pi}) {
    const double L = lam * m.plasma_wavelength;
    for (int i = 0; i < 56; ++i) {
      const double kcwp = 0.05 * std::pow(5.0 / 0.05, i / 55.0);
      const double k = kcwp * wp / speed_of_light;
      std::vector<double> row{lam, kcwp};
      for (Branch b : all_branches) {
        const auto pt = dispersion_curve(b, {k}, L, m);
        row.push_back(pt[0].omega / wp);
      }
      // isolated interface: w0^2 = c^2 k^2 + wp^2/2 - sqrt(c^4 k^4 + wp^4/4)
      const double ck = speed_of_light * k;
      const double w0 = std::sqrt(ck * ck + 0.5 * wp * wp -
                                  std::sqrt(ck * ck * ck * ck + 0.25 * wp * wp * wp * wp));
      row.push_back(w0 / wp);
      t.rows.push_back(row);
    }
  }
  return t;
}

Table figure2() {
  Table t;
  t.columns = {"lambda", "z_plus", "small_distance_asymptote", "large_distance_asymptote"};
  for (int i = 0; i <= 60; ++i) {
    const double lam = 1e-3 * std::pow(1e6, i / 60.0);
    const double P = 2.0 * pi * lam;
    t.rows.push_back({lam, z_plus(lam), P * P, pi * pi});
  }
  return t;
}

Table figure3(const QuadratureConfig& cfg) {
  Table t;
  t.columns = {"lambda", "phi_tau_0", "phi_tau_0.018", "phi_tau_0.1"};
  for (int i = 0; i <= 40; ++i) {
    const double lam = 1e-2 * std::pow(1e4, i / 40.0);
    const double e = eta(lam, cfg);
    t.rows.push_back({lam, e, e + theta(lam, 0.018, cfg), e + theta(lam, 0.1, cfg)});
  }
  return t;
}

Table figure4(const QuadratureConfig& cfg) {
  Table t;
  t.columns = {"lambda", "theta_tau_0.018", "theta_tau_0.05", "theta_tau_0.1"};
  for (int i = 0; i <= 36; ++i) {
    const double lam = 1e-6 * std::pow(1e6, i / 36.0);
    t.rows.push_back({lam, theta(lam, 0.018, cfg), theta(lam, 0.05, cfg),
                      theta(lam, 0.1, cfg)});
  }
  return t;
}

Table figure5(const QuadratureConfig& cfg) {
  Table t;
  t.columns = {"tau", "lambda_inversion"};
  for (double tau : {0.0, 0.01, 0.02, 0.03, 0.05, 0.07, 0.1, 0.12}) {
    const auto inv = inversion_distance(Model::plasmonic, NoneqScenario::equilibrium(tau),
                                        cfg, 0.03, 3.0);
    t.rows.push_back({tau, inv ? *inv : std::numeric_limits<double>::quiet_NaN()});
    t.row_status.push_back(inv ? "ok" : "no_inversion");
  }
  return t;
}

Table figure6(const QuadratureConfig& cfg) {
  Table t;
  t.columns = {"lambda", "phi_plasmonic_tau_0", "phi_lifshitz_tau_0",
               "phi_plasmonic_tau_0.018", "phi_lifshitz_tau_0.018"};
  for (int i = 0; i <= 30; ++i) {
    const double lam = 5e-3 * std::pow(1e3, i / 30.0);
    const double e = eta(lam, cfg);
    t.rows.push_back({lam, e, phi_lifshitz(lam, 0.0, cfg), e + theta(lam, 0.018, cfg),
                      phi_lifshitz(lam, 0.018, cfg)});
  }
  return t;
}

Table figure7(const QuadratureConfig& cfg) {
  Table t;
  t.columns = {"tau", "sigma_lambda_0.01", "sigma_lambda_0.1", "sigma_lambda_10",
               "sigma_lambda_100", "beta"};
  for (int i = 0; i <= 24; ++i) {
    const double tau = 1e-3 * std::pow(3e4, i / 24.0);
    std::vector<double> row{tau};
    for (double lam : {0.01, 0.1, 10.0, 100.0})
      row.push_back(sigma_integral(lam, tau, cfg).sigma);
    row.push_back(beta(tau, cfg));
    t.rows.push_back(row);
  }
  return t;
}

Table figure8(const QuadratureConfig& cfg) {
  Table t;
  t.columns = {"lambda", "phi_tau_0.001", "phi_tau_0.01", "phi_large_asym_tau_0.001",
               "phi_large_asym_tau_0.01"};
  for (int i = 0; i <= 24; ++i) {
    const double lam = 1e2 * std::pow(1e2, i / 24.0);
    const double e = eta(lam, cfg);
    t.rows.push_back({lam, e + theta(lam, 1e-3, cfg), e + theta(lam, 1e-2, cfg),
                      phi_asymptotic_large(lam, 1e-3), phi_asymptotic_large(lam, 1e-2)});
  }
  return t;
}

Table figure9(const QuadratureConfig& cfg) {
  Table t;
  t.columns = {"lambda", "p_equilibrium", "p_plasmons_hot_cold_base", "p_plasmons_hot",
               "p_propagating_hot"};
  const double tau_room = 0.018, tau_hot = 0.04;
  for (int i = 0; i <= 38; ++i) {
    const double lam = 2.0 + i;
    auto pnorm = [&](const NoneqScenario& s) {
      return *pressure(Model::noneq, lam, s, cfg).normalized_ref;
    };
    t.rows.push_back({lam, pnorm(NoneqScenario::equilibrium(tau_room)),
                      pnorm(NoneqScenario::plasmons_hot(0.0, tau_hot)),
                      pnorm(NoneqScenario::plasmons_hot(tau_room, tau_hot)),
                      pnorm(NoneqScenario::propagating_hot(tau_room, tau_hot))});
  }
  return t;
}

} // namespace

Table figure_table(int number, const MaterialParams& m, const QuadratureConfig& cfg) {
  switch (number) {
    case 1: return figure1(m);
    case 2: return figure2();
    case 3: return figure3(cfg);
    case 4: return figure4(cfg);
    case 5: return figure5(cfg);
    case 6: return figure6(cfg);
    case 7: return figure7(cfg);
    case 8: return figure8(cfg);
    case 9: return figure9(cfg);
    default: throw std::domain_error("figure_table: figure number must be 1..9");
  }
}

} // namespace pcas

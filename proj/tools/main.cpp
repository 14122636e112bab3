#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pcas/analysis.hpp"
#include "pcas/constants.hpp"
#include "pcas/dispersion.hpp"
#include "pcas/errors.hpp"
#include "pcas/lifshitz.hpp"
#include "pcas/nonequilibrium.hpp"
#include "pcas/plasmon_energy.hpp"
#include "pcas/plasmon_entropy.hpp"
#include "pcas/scales.hpp"
#include "pcas/specfun.hpp"

namespace {

constexpr const char* version = "0.1.0";

struct GlobalOpts {
  std::string material = "gold";
  double plasma_wavelength_nm = 136.0;
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  std::string format = "csv";
  std::string output;
  std::string command_line;
};

pcas::MaterialParams material_of(const GlobalOpts& g) {
  if (g.material == "gold") return pcas::MaterialParams::gold();
  if (g.material == "custom")
    return pcas::MaterialParams::from_plasma_wavelength(g.plasma_wavelength_nm * 1e-9);
  throw std::domain_error("unknown material: " + g.material);
}

pcas::QuadratureConfig config_of(const GlobalOpts& g) {
  pcas::QuadratureConfig cfg;
  cfg.rel_tol = g.rel_tol;
  cfg.abs_tol = g.abs_tol;
  return cfg;
}

std::vector<std::string> meta_of(const GlobalOpts& g) {
  std::ostringstream tol;
  tol << "rel_tol=" << g.rel_tol << " abs_tol=" << g.abs_tol;
  std::ostringstream mat;
  mat << "material=" << g.material
      << " plasma_wavelength_nm=" << (g.material == "gold" ? 136.0 : g.plasma_wavelength_nm);
  return {std::string("plasmacas ") + version, "command: " + g.command_line, mat.str(),
          tol.str()};
}

void emit(const GlobalOpts& g, pcas::Table t) {
  auto meta = meta_of(g);
  t.meta.insert(t.meta.begin(), meta.begin(), meta.end());
  const std::string text = g.format == "json" ? pcas::to_json(t) : pcas::to_csv(t);
  if (g.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(g.output, std::ios::binary);
    if (!out) throw std::domain_error("cannot open output file: " + g.output);
    out << text;
  }
}

struct SweepFlags {
  double lambda_min = 0.0, lambda_max = 0.0;
  int points = 0;
  bool log_scale = false;
  bool active() const { return points >= 2; }
  pcas::SweepSpec spec(double fixed_tau) const {
    pcas::SweepSpec s;
    s.axis = pcas::SweepAxis::lambda;
    s.min = lambda_min;
    s.max = lambda_max;
    s.points = points;
    s.log_scale = log_scale;
    s.fixed = fixed_tau;
    return s;
  }
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& s) {
  cmd->add_option("--lambda-min", s.lambda_min, "sweep start");
  cmd->add_option("--lambda-max", s.lambda_max, "sweep end");
  cmd->add_option("--points", s.points, "number of sweep points (enables sweep mode)");
  cmd->add_flag("--log", s.log_scale, "logarithmic sweep grid");
}

pcas::Table sweep_table(pcas::SweepQuantity q, const char* name, const SweepFlags& s,
                        double tau, const pcas::NoneqScenario& scenario,
                        const pcas::QuadratureConfig& cfg) {
  pcas::Table t;
  t.columns = {"lambda", name, "error_estimate"};
  for (const auto& row : pcas::sweep(q, s.spec(tau), scenario, cfg)) {
    t.rows.push_back({row.axis_value, row.value, row.error_estimate});
    t.row_status.push_back(row.status);
  }
  return t;
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

int run_selftest() {
  int failures = 0;
  auto check = [&failures](const char* name, bool ok) {
    std::printf("%s  %s\n", ok ? "PASS" : "FAIL", name);
    if (!ok) ++failures;
  };
  using namespace pcas;
  check("L(0) == 0", L_combination(0.0) == 0.0);
  check("L(50) == zeta3", std::fabs(L_combination(50.0) - zeta3) < 1e-14);
  check("z_plus(1e3) ~ pi^2", std::fabs(z_plus(1e3) / (pi * pi) - 1.0) < 1e-3);
  check("eta(1e-3)/1e-3 ~ 1.790", std::fabs(eta(1e-3) / 1e-3 / 1.790 - 1.0) < 5e-3);
  const double s_int = sigma_integral(1.0, 0.1).sigma;
  const double s_fd = sigma_from_theta(1.0, 0.1);
  check("entropy routes agree", std::fabs(s_int / s_fd - 1.0) < 1e-6);
  const double gm = integrate_finite(
      [](double k) { return k * std::log1p(-std::exp(-2.0 * k)); }, 0.0, 25.0);
  check("perfect-mirror Gamma == -zeta3/4", std::fabs(gm + zeta3 / 4.0) < 1e-12);
  return failures == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
  GlobalOpts g;
  g.command_line = join_args(argc, argv);

  CLI::App app{"Plasmonic Casimir free energy, entropy and pressure (plasma model)"};
  app.require_subcommand(1);
  app.add_option("--material", g.material, "gold|custom")->default_val("gold");
  app.add_option("--plasma-wavelength-nm", g.plasma_wavelength_nm,
                 "plasma wavelength for --material custom");
  app.add_option("--rel-tol", g.rel_tol, "quadrature relative tolerance");
  app.add_option("--abs-tol", g.abs_tol, "quadrature absolute tolerance");
  app.add_option("--format", g.format, "csv|json")->default_val("csv");
  app.add_option("--output", g.output, "output path (default stdout)");

  double lambda = 1.0, tau = 0.0, tau1 = -1.0, tau2 = -1.0, tau_pr = -1.0;
  std::string model = "plasmonic", scenario_name = "a";
  bool entropy_full = false;
  double lambda_lo = 0.03, lambda_hi = 3.0;
  int figure_number = 0;
  SweepFlags sweep_flags;

  auto* c_phi = app.add_subcommand("phi", "plasmonic free-energy factor phi = eta + theta");
  c_phi->add_option("--lambda", lambda)->required();
  c_phi->add_option("--tau", tau);
  add_sweep_flags(c_phi, sweep_flags);

  auto* c_eta = app.add_subcommand("eta", "zero-temperature factor eta(lambda)");
  c_eta->add_option("--lambda", lambda);
  add_sweep_flags(c_eta, sweep_flags);

  auto* c_theta = app.add_subcommand("theta", "thermal factor theta(lambda, tau)");
  c_theta->add_option("--lambda", lambda);
  c_theta->add_option("--tau", tau)->required();
  add_sweep_flags(c_theta, sweep_flags);

  auto* c_entropy = app.add_subcommand("entropy", "plasmonic entropy factor sigma");
  c_entropy->add_option("--lambda", lambda);
  c_entropy->add_option("--tau", tau)->required();
  c_entropy->add_flag("--full", entropy_full, "full (all-mode) entropy instead");
  add_sweep_flags(c_entropy, sweep_flags);

  auto* c_lif = app.add_subcommand("lifshitz", "full free-energy factor phi_Lif");
  c_lif->add_option("--lambda", lambda);
  c_lif->add_option("--tau", tau);
  add_sweep_flags(c_lif, sweep_flags);

  auto* c_pressure = app.add_subcommand("pressure", "Casimir pressure");
  c_pressure->add_option("--model", model, "plasmonic|lifshitz|noneq");
  c_pressure->add_option("--lambda", lambda)->required();
  c_pressure->add_option("--tau", tau);
  c_pressure->add_option("--tau1", tau1);
  c_pressure->add_option("--tau2", tau2);
  c_pressure->add_option("--tau-pr", tau_pr);
  c_pressure->add_option("--scenario", scenario_name, "a|b|c");

  auto* c_inv = app.add_subcommand("inversion", "pressure sign-change distance");
  c_inv->add_option("--model", model, "plasmonic|lifshitz|noneq");
  c_inv->add_option("--tau", tau);
  c_inv->add_option("--tau1", tau1);
  c_inv->add_option("--tau2", tau2);
  c_inv->add_option("--tau-pr", tau_pr);
  c_inv->add_option("--scenario", scenario_name, "a|b|c");
  c_inv->add_option("--lambda-min", lambda_lo, "bracket start");
  c_inv->add_option("--lambda-max", lambda_hi, "bracket end");

  auto* c_noneq = app.add_subcommand("noneq", "non-equilibrium free energy");
  c_noneq->add_option("--scenario", scenario_name, "a|b|c")->required();
  c_noneq->add_option("--lambda", lambda)->required();
  c_noneq->add_option("--tau", tau);
  c_noneq->add_option("--tau1", tau1);
  c_noneq->add_option("--tau2", tau2);
  c_noneq->add_option("--tau-pr", tau_pr);

  auto* c_fig = app.add_subcommand("figure", "emit the dataset behind a reference figure");
  c_fig->add_option("number", figure_number, "1..9")->required();

  app.add_subcommand("selftest", "quick internal consistency checks");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  try {
    const pcas::MaterialParams mat = material_of(g);
    const pcas::QuadratureConfig cfg = config_of(g);

    auto scenario = [&]() {
      const double t1 = tau1 >= 0.0 ? tau1 : tau;
      if (scenario_name == "a") return pcas::NoneqScenario::equilibrium(t1);
      if (scenario_name == "b")
        return pcas::NoneqScenario::plasmons_hot(t1, tau2 >= 0.0 ? tau2 : t1);
      if (scenario_name == "c")
        return pcas::NoneqScenario::propagating_hot(t1, tau_pr >= 0.0 ? tau_pr : t1);
      throw std::domain_error("unknown scenario: " + scenario_name);
    };
    auto model_of = [&]() {
      if (model == "plasmonic") return pcas::Model::plasmonic;
      if (model == "lifshitz") return pcas::Model::lifshitz;
      if (model == "noneq") return pcas::Model::noneq;
      throw std::domain_error("unknown model: " + model);
    };

    if (app.got_subcommand("selftest")) return run_selftest();

    pcas::Table t;
    if (app.got_subcommand(c_phi)) {
      if (sweep_flags.active()) {
        t = sweep_table(pcas::SweepQuantity::phi, "phi", sweep_flags, tau,
                        pcas::NoneqScenario::equilibrium(tau), cfg);
      } else {
        const auto r = pcas::phi(lambda, tau, cfg);
        const double E_C =
            pcas::perfect_mirror_refs(lambda * mat.plasma_wavelength).casimir_energy;
        t.columns = {"lambda", "tau", "eta", "theta", "phi", "absolute_J_per_m2"};
        t.rows.push_back({lambda, tau, r.eta, r.theta, r.phi, E_C * r.phi});
      }
    } else if (app.got_subcommand(c_eta)) {
      if (sweep_flags.active()) {
        t = sweep_table(pcas::SweepQuantity::eta, "eta", sweep_flags, 0.0,
                        pcas::NoneqScenario::equilibrium(0.0), cfg);
      } else {
        t.columns = {"lambda", "eta"};
        t.rows.push_back({lambda, pcas::eta(lambda, cfg)});
      }
    } else if (app.got_subcommand(c_theta)) {
      if (sweep_flags.active()) {
        t = sweep_table(pcas::SweepQuantity::theta, "theta", sweep_flags, tau,
                        pcas::NoneqScenario::equilibrium(tau), cfg);
      } else {
        t.columns = {"lambda", "tau", "theta"};
        t.rows.push_back({lambda, tau, pcas::theta(lambda, tau, cfg)});
      }
    } else if (app.got_subcommand(c_entropy)) {
      if (sweep_flags.active()) {
        t = sweep_table(entropy_full ? pcas::SweepQuantity::sigma_lif
                                     : pcas::SweepQuantity::sigma,
                        "sigma", sweep_flags, tau, pcas::NoneqScenario::equilibrium(tau),
                        cfg);
      } else {
        const double sigma = entropy_full ? pcas::sigma_lifshitz_lowT(lambda, tau, cfg)
                                          : pcas::sigma_integral(lambda, tau, cfg).sigma;
        const double S_C =
            pcas::perfect_mirror_refs(lambda * mat.plasma_wavelength).casimir_entropy;
        t.columns = {"lambda", "tau", "sigma", "absolute_J_per_K_m2"};
        t.rows.push_back({lambda, tau, sigma, S_C * sigma});
      }
    } else if (app.got_subcommand(c_lif)) {
      if (sweep_flags.active()) {
        t = sweep_table(pcas::SweepQuantity::phi_lif, "phi_lif", sweep_flags, tau,
                        pcas::NoneqScenario::equilibrium(tau), cfg);
      } else {
        t.columns = {"lambda", "tau", "phi_lif"};
        t.rows.push_back({lambda, tau, pcas::phi_lifshitz(lambda, tau, cfg)});
      }
    } else if (app.got_subcommand(c_pressure)) {
      const auto r = pcas::pressure(model_of(), lambda, scenario(), cfg, &mat);
      t.columns = {"lambda", "scaled", "absolute_Pa", "normalized_fig9"};
      t.rows.push_back({lambda, r.scaled, r.absolute.value_or(0.0),
                        r.normalized_ref.value_or(0.0)});
    } else if (app.got_subcommand(c_inv)) {
      const auto r =
          pcas::inversion_distance(model_of(), scenario(), cfg, lambda_lo, lambda_hi);
      t.columns = {"lambda_inversion", "separation_m"};
      if (r) {
        t.rows.push_back({*r, *r * mat.plasma_wavelength});
        t.row_status.push_back("ok");
      } else {
        t.rows.push_back({std::nan(""), std::nan("")});
        t.row_status.push_back("no_inversion");
      }
    } else if (app.got_subcommand(c_noneq)) {
      t.columns = {"lambda", "phi_noneq"};
      t.rows.push_back({lambda, pcas::phi_scenario(scenario(), lambda, cfg)});
    } else if (app.got_subcommand(c_fig)) {
      t = pcas::figure_table(figure_number, mat, cfg);
    }
    emit(g, std::move(t));
  } catch (const pcas::numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << " (estimate " << e.estimate()
              << ", error " << e.error_estimate() << ")\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

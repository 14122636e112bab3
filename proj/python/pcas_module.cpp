#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcas/analysis.hpp"
#include "pcas/dispersion.hpp"
#include "pcas/lifshitz.hpp"
#include "pcas/nonequilibrium.hpp"
#include "pcas/plasmon_energy.hpp"
#include "pcas/plasmon_entropy.hpp"
#include "pcas/scales.hpp"
#include "pcas/specfun.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

pcas::QuadratureConfig make_cfg(double rel_tol, double abs_tol) {
  pcas::QuadratureConfig cfg;
  cfg.rel_tol = rel_tol;
  cfg.abs_tol = abs_tol;
  return cfg;
}

pcas::NoneqScenario scenario_from(const std::string& kind, double tau1, double tau2,
                                  double tau_pr) {
  if (kind == "equilibrium") return pcas::NoneqScenario::equilibrium(tau1);
  if (kind == "two_plate") return pcas::NoneqScenario::two_plate(tau1, tau2);
  if (kind == "plasmons_hot") return pcas::NoneqScenario::plasmons_hot(tau1, tau2);
  if (kind == "propagating_hot") return pcas::NoneqScenario::propagating_hot(tau1, tau_pr);
  throw std::domain_error("unknown scenario kind: " + kind);
}

} // namespace

PYBIND11_MODULE(pcas, m) {
  m.doc() = "Plasmonic Casimir free energy, entropy and pressure for plasma-model mirrors";

  py::class_<pcas::MaterialParams>(m, "MaterialParams")
      .def_readonly("plasma_frequency", &pcas::MaterialParams::plasma_frequency)
      .def_readonly("plasma_wavelength", &pcas::MaterialParams::plasma_wavelength)
      .def_readonly("plasma_temperature", &pcas::MaterialParams::plasma_temperature)
      .def_static("gold", &pcas::MaterialParams::gold)
      .def_static("from_plasma_wavelength", &pcas::MaterialParams::from_plasma_wavelength,
                  "lambda_p_m"_a);

  m.def(
      "to_scaled",
      [](double L, double T, const pcas::MaterialParams& mat) {
        const auto s = pcas::to_scaled(L, T, mat);
        return py::make_tuple(s.lambda, s.tau);
      },
      "separation_m"_a, "temperature_K"_a, "material"_a);
  m.def(
      "from_scaled",
      [](double lambda, double tau, const pcas::MaterialParams& mat) {
        const auto p = pcas::from_scaled({lambda, tau}, mat);
        return py::make_tuple(p.separation, p.temperature);
      },
      "lam"_a, "tau"_a, "material"_a);
  m.def(
      "perfect_mirror_refs",
      [](double L) {
        const auto n = pcas::perfect_mirror_refs(L);
        return py::dict("aleph"_a = n.aleph, "casimir_energy"_a = n.casimir_energy,
                        "casimir_force"_a = n.casimir_force,
                        "casimir_entropy"_a = n.casimir_entropy);
      },
      "separation_m"_a);

  m.def("polylog", &pcas::polylog, "n"_a, "x"_a);
  m.def("L_combination", &pcas::L_combination, "x"_a);
  m.def("bose_occupation", &pcas::bose_occupation, "ratio"_a);
  m.def("mode_free_energy", &pcas::mode_free_energy, "omega"_a, "temperature"_a);

  m.def("z_plus", &pcas::z_plus, "lam"_a);
  m.def(
      "g",
      [](const std::string& branch, double z, double lambda) {
        pcas::Branch b = branch == "minus"  ? pcas::Branch::minus
                         : branch == "zero" ? pcas::Branch::zero
                                            : pcas::Branch::plus;
        return pcas::g(b, z, lambda);
      },
      "branch"_a, "z"_a, "lam"_a);

  m.def(
      "eta", [](double lam, double rel, double abs) { return pcas::eta(lam, make_cfg(rel, abs)); },
      "lam"_a, "rel_tol"_a = 1e-10, "abs_tol"_a = 1e-14);
  m.def(
      "theta",
      [](double lam, double tau, double rel, double abs) {
        return pcas::theta(lam, tau, make_cfg(rel, abs));
      },
      "lam"_a, "tau"_a, "rel_tol"_a = 1e-10, "abs_tol"_a = 1e-14);
  m.def(
      "phi",
      [](double lam, double tau, double rel, double abs) {
        const auto r = pcas::phi(lam, tau, make_cfg(rel, abs));
        return py::dict("eta"_a = r.eta, "theta"_a = r.theta, "phi"_a = r.phi);
      },
      "lam"_a, "tau"_a, "rel_tol"_a = 1e-10, "abs_tol"_a = 1e-14);
  m.def(
      "beta", [](double tau, double rel) { return pcas::beta(tau, make_cfg(rel, 1e-14)); },
      "tau"_a, "rel_tol"_a = 1e-10);

  m.def(
      "sigma",
      [](double lam, double tau, double rel, double abs) {
        return pcas::sigma_integral(lam, tau, make_cfg(rel, abs)).sigma;
      },
      "lam"_a, "tau"_a, "rel_tol"_a = 1e-10, "abs_tol"_a = 1e-14);
  m.def(
      "sigma_from_theta",
      [](double lam, double tau) { return pcas::sigma_from_theta(lam, tau); }, "lam"_a,
      "tau"_a);
  m.def("sigma_perfect", &pcas::sigma_perfect, "lam"_a, "tau"_a);

  m.def(
      "phi_lifshitz",
      [](double lam, double tau, double rel, double abs) {
        return pcas::phi_lifshitz(lam, tau, make_cfg(rel, abs));
      },
      "lam"_a, "tau"_a, "rel_tol"_a = 1e-10, "abs_tol"_a = 1e-14);
  m.def(
      "sigma_lifshitz",
      [](double lam, double tau, double rel) {
        return pcas::sigma_lifshitz_lowT(lam, tau, make_cfg(rel, 1e-14));
      },
      "lam"_a, "tau"_a, "rel_tol"_a = 1e-8);

  m.def(
      "theta_propagating_plus",
      [](double lam, double tau) { return pcas::theta_propagating_plus(lam, tau); }, "lam"_a,
      "tau"_a);
  m.def(
      "phi_noneq_plasmonic",
      [](double lam, double tau1, double tau2) {
        return pcas::phi_noneq_plasmonic(lam, tau1, tau2);
      },
      "lam"_a, "tau1"_a, "tau2"_a);
  m.def(
      "phi_noneq_full",
      [](double lam, double tau1, double tau2) { return pcas::phi_noneq_full(lam, tau1, tau2); },
      "lam"_a, "tau1"_a, "tau2"_a);
  m.def(
      "phi_noneq_propagating",
      [](double lam, double tau, double tau_pr) {
        return pcas::phi_noneq_propagating(lam, tau, tau_pr);
      },
      "lam"_a, "tau"_a, "tau_pr"_a);

  m.def(
      "pressure",
      [](const std::string& model, double lam, const std::string& kind, double tau1,
         double tau2, double tau_pr) {
        pcas::Model mo = model == "plasmonic"  ? pcas::Model::plasmonic
                         : model == "lifshitz" ? pcas::Model::lifshitz
                                               : pcas::Model::noneq;
        const auto r = pcas::pressure(mo, lam, scenario_from(kind, tau1, tau2, tau_pr));
        return py::dict("scaled"_a = r.scaled, "normalized_ref"_a = *r.normalized_ref,
                        "dphi_dlambda"_a = r.dphi_dlambda);
      },
      "model"_a, "lam"_a, "scenario"_a = "equilibrium", "tau1"_a = 0.0, "tau2"_a = 0.0,
      "tau_pr"_a = 0.0);
  m.def(
      "inversion_distance",
      [](const std::string& model, const std::string& kind, double tau1, double tau2,
         double tau_pr, double lo, double hi) -> py::object {
        pcas::Model mo = model == "plasmonic"  ? pcas::Model::plasmonic
                         : model == "lifshitz" ? pcas::Model::lifshitz
                                               : pcas::Model::noneq;
        const auto r = pcas::inversion_distance(mo, scenario_from(kind, tau1, tau2, tau_pr),
                                                {}, lo, hi);
        if (!r) return py::none();
        return py::float_(*r);
      },
      "model"_a, "scenario"_a = "equilibrium", "tau1"_a = 0.0, "tau2"_a = 0.0,
      "tau_pr"_a = 0.0, "lambda_lo"_a = 0.03, "lambda_hi"_a = 3.0);
}

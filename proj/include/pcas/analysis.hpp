#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcas/nonequilibrium.hpp"
#include "pcas/quadrature.hpp"
#include "pcas/scales.hpp"

namespace pcas {

enum class Model { plasmonic, lifshitz, noneq };

// Interaction free-energy factor of a model at given lambda; for the
// non-equilibrium model the scenario selects the temperature assignment,
// otherwise scenario.tau1 is the (equilibrium) temperature.
double phi_model(Model model, double lambda, const NoneqScenario& scenario,
                 const QuadratureConfig& cfg = {});

struct PressureResult {
  double scaled;                          // P / |F_C(L)|, > 0 repulsive
  std::optional<double> absolute;         // Pa, when a material is attached
  std::optional<double> normalized_ref;   // P / (1e-6 |F_C(lambda_p)|)
  double dphi_dlambda;
  double derivative_error;                // |Richardson - finest central difference|
};

// Casimir pressure P = -dF/dL at fixed temperatures.  Differentiating
// F = E_C(L) phi(L/lambda_p, tau) gives P = F_C(L) [phi - (lambda/3) dphi/dlambda],
// so scaled = P/|F_C| = -(phi - lambda/3 dphi/dlambda).
PressureResult pressure(Model model, double lambda, const NoneqScenario& scenario,
                        const QuadratureConfig& cfg = {},
                        const MaterialParams* material = nullptr);

// Separation at which the pressure changes sign, from bracketed bisection on
// [lambda_lo, lambda_hi].  No sign change in the bracket is a regular
// "no inversion" outcome, not an error.
std::optional<double> inversion_distance(Model model, const NoneqScenario& scenario,
                                         const QuadratureConfig& cfg = {},
                                         double lambda_lo = 0.03, double lambda_hi = 3.0);

enum class SweepAxis { lambda, tau };
enum class SweepQuantity { eta, theta, phi, sigma, phi_lif, sigma_lif, pressure };

struct SweepSpec {
  SweepAxis axis = SweepAxis::lambda;
  double min = 0.0;
  double max = 0.0;
  int points = 2;
  bool log_scale = false;
  double fixed = 0.0; // the held-constant coordinate
};

struct SweepRow {
  double axis_value;
  double value;
  double error_estimate;
  std::string status; // "ok", "domain_error", "numerical_error"
};

std::vector<double> sweep_grid(const SweepSpec& spec);

// Deterministic row order (ascending axis); per-point failures are recorded
// in the row and the sweep continues.
std::vector<SweepRow> sweep(SweepQuantity q, const SweepSpec& spec,
                            const NoneqScenario& scenario, const QuadratureConfig& cfg = {});

// Tabular output. CSV: '#'-prefixed metadata lines, then a header row and
// one line per row; 17 significant digits, comma separated, LF endings.
struct Table {
  std::vector<std::string> meta;    // metadata lines, without the '#'
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> row_status; // optional, one entry per row if used
};

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

// Data behind each figure of the reference set (1..9); emits tables only.
Table figure_table(int number, const MaterialParams& m, const QuadratureConfig& cfg = {});

std::string format_g17(double v);

} // namespace pcas

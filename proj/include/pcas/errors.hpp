#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace pcas {

// Thrown when an adaptive routine fails to converge.  Carries the best
// estimate obtained so far together with its error estimate so callers can
// report diagnostics instead of just aborting.
class numerical_error : public std::runtime_error {
public:
  numerical_error(const std::string& what, double estimate, double error_estimate)
      : std::runtime_error(what), estimate_(estimate), error_estimate_(error_estimate) {}

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

private:
  double estimate_;
  double error_estimate_;
};

// Overflow guard for results assembled from several terms.
inline double finite_or_throw(double value, const char* what) {
  if (!std::isfinite(value))
    throw numerical_error(std::string(what) + ": result overflowed", value, 0.0);
  return value;
}

} // namespace pcas

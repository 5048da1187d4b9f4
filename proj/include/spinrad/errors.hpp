#pragma once

#include <stdexcept>
#include <string>

namespace spinrad {

/// Bad user-facing configuration (unknown material, missing channel slope,
/// malformed config file entry, ...). Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical routine failed to converge within its budget. Carries the best
/// estimate reached so callers can still inspect it. Maps to CLI exit code 3.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double best_estimate,
                 double error_estimate)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}

  double best_estimate() const { return best_estimate_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

}  // namespace spinrad

#pragma once

#include <stdexcept>
#include <string>

namespace banach {

// Bad user input: unknown flags, malformed config/CSV, parameters outside the
// documented ranges.  The CLI maps this to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

// An iterative solver stopped without meeting its certified-gap contract.
// Carries the bracket it did achieve, so callers can still report honest
// bounds.  The CLI maps this to exit code 3.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& msg, double lower, double upper)
      : std::runtime_error(msg), lower(lower), upper(upper) {}

  double lower;
  double upper;
};

}  // namespace banach

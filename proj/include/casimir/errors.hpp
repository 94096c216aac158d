#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Precondition violation on a physical argument (negative temperature, zero
// separation, mismatched Matsubara grids, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Arithmetic or conversion attempted between incompatible unit tags.
class UnitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Adaptive integration failed to meet its tolerance within the subdivision cap.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double error_estimate, int intervals)
      : std::runtime_error(what), error_estimate(error_estimate), intervals(intervals) {}

  double error_estimate;
  int intervals;
};

// Malformed run configuration; `path` points at the offending field.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path(path) {}

  std::string path;
};

}  // namespace casimir

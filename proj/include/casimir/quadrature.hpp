#pragma once

#include <functional>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir::quadrature {

struct Options {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;
  int max_intervals = 4000;
  // Initial partition points inside (a, b); adaptivity refines from there.
  // Sharp spectral peaks must be seeded here or uniform rules miss them.
  std::vector<double> breakpoints;
  // Throw QuadratureError instead of returning an unconverged result.
  bool throw_on_failure = true;
};

struct Result {
  double value = 0.0;
  double error = 0.0;  // absolute error estimate
  int intervals = 0;
  int evaluations = 0;
  bool converged = false;
};

// Globally adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b].
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opt = {});

}  // namespace casimir::quadrature

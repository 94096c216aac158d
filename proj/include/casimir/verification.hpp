#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "casimir/friction_engine.hpp"
#include "casimir/response_kernel.hpp"

namespace casimir::oracle {

// One brute-force check: a reference value, the independently computed value,
// and whether the deviation stayed inside the budget.  Seeds and node counts
// are always recorded so every report can be reproduced bit-for-bit.
struct OracleReport {
  std::string name;
  double reference_value = 0.0;
  double computed_value = 0.0;
  double rel_error = 0.0;
  double budget = 0.0;
  long samples_or_nodes = 0;
  std::uint64_t seed = 0;
  std::string rng = "none";
  double std_error = 0.0;  // Monte-Carlo standard error, 0 for deterministic oracles
  bool converged = true;
  bool passed = false;
};

std::string to_json(const OracleReport& report);
std::string to_json(const std::vector<OracleReport>& reports);

// Monte-Carlo integration of the xx coupling over two half-spaces at gap d,
// against the closed-form constant 3 pi / 8.  The semi-infinite ranges are
// compactified with algebraic maps; the r^-8 decay keeps the mapped integrand
// bounded.  Budget 0.5%.
OracleReport halfspace_constant_oracle(double d_m, long mc_samples, std::uint64_t seed);

// Central finite differences of the dipole tensor against the analytic
// force tensor over random separations spanning four decades, axis-aligned
// cases included.  Budget 1e-6 on the max relative deviation.
OracleReport finite_difference_oracle(int n_points, std::uint64_t seed);

// Matsubara convolution against direct imaginary-time integration of the
// reconstructed correlation product.  The lambda route reconstructs each
// g_a from its own series at a richer truncation, so the reported error is
// the convolution's truncation deficit and shrinks as N grows.
OracleReport matsubara_identity_oracle(double beta_per_eV, const kernel::OscillatorModel& osc1,
                                       const kernel::OscillatorModel& osc2, int truncation);

// Dense quadrature against the closed form across a descending sigma/q list;
// convergence must be monotone and within 1% at sigma/q = 1e-3.
std::vector<OracleReport> delta_limit_oracle(const materials::DrudeMaterial& mat,
                                             const std::vector<double>& sigma_over_q,
                                             const engine::Scenario& scenario);

enum class Profile { Fast, Full };

struct SuiteOptions {
  Profile profile = Profile::Fast;
  std::uint64_t seed = 20260808;
  // Test seam: scales the half-space reference constant so suites can verify
  // that an injected error trips the exit status.
  double halfspace_reference_scale = 1.0;
};

std::vector<OracleReport> run_suite(const SuiteOptions& options);

bool all_passed(const std::vector<OracleReport>& reports);

}  // namespace casimir::oracle

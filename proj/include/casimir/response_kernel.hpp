#pragma once

#include <Eigen/Core>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir::kernel {

// One sharp harmonic oscillator: static polarizability alpha0 (a volume in the
// Gaussian-units bookkeeping, m^3) and eigenfrequency as an energy (eV).
struct OscillatorModel {
  double alpha0;
  double omega_eV;

  OscillatorModel(double alpha0, double omega_eV) : alpha0(alpha0), omega_eV(omega_eV) {
    if (alpha0 < 0.0) throw DomainError("OscillatorModel: alpha0 must be >= 0");
    if (omega_eV <= 0.0) throw DomainError("OscillatorModel: omega must be > 0");
  }
};

// Imaginary-frequency propagator of a sharp oscillator evaluated at energy K:
// alpha0 * omega^2 / (K^2 + omega^2).  Even in K, alpha0 at K = 0, decays as
// alpha0 * omega^2 / K^2.
double oscillator_propagator(const OscillatorModel& osc, double K_eV);

// An even, real Matsubara series g~(K_n) at K_n = 2*pi*n/beta, truncated at
// |n| <= N.  Values are stored for n >= 0; the even extension is implied.
class MatsubaraSeries {
 public:
  MatsubaraSeries(double beta_per_eV, std::vector<double> values);
  static MatsubaraSeries from_oscillator(const OscillatorModel& osc, double beta_per_eV,
                                         int truncation);

  double beta() const { return beta_; }
  int truncation() const { return static_cast<int>(values_.size()) - 1; }
  double frequency(int n) const;  // K_n in eV
  // g~(K_n); zero beyond the truncation.
  double value(int n) const;

 private:
  double beta_;
  std::vector<double> values_;
};

// Truncation for which the analytic 1/K^2 propagator tails keep the
// convolution's truncated mass below rel_tail of the n = 0 term.
int suggested_truncation(const OscillatorModel& osc1, const OscillatorModel& osc2,
                         double beta_per_eV, double rel_tail = 1e-9);

// Discrete Matsubara convolution (1/beta) sum_{n0} g1(K_{n0}) g2(K_{n-n0}),
// both series truncated at the same N (terms with |n - n0| > N drop out).
// Truncation tail: the omitted terms decay like n0^{-4}, so the absolute tail
// is bounded by (2/(3 N^3)) * alpha1 w1^2 alpha2 w2^2 (beta/(2 pi))^4 / beta.
double matsubara_convolution(const MatsubaraSeries& g1, const MatsubaraSeries& g2, int n);

// g(lambda) = (1/beta) sum_n g~(K_n) e^{-i K_n lambda}, real by evenness.
// Requires 0 <= lambda <= beta.
double imaginary_time_correlation(const MatsubaraSeries& g, double lambda);

// Two-oscillator friction weight (omega^matched energy in eV):
//   H = (omega / (2 sinh(beta omega / 2)))^2 * alpha1 * alpha2.
// Evaluated through log-sinh once beta*omega/2 > 30 so deep suppression does
// not round through huge intermediate ratios.
double two_oscillator_H(double alpha1, double alpha2, double omega_eV, double T_K);

// Result of the sharp-oscillator friction formula.  The delta factor
// delta(omega1 - omega2) is never replaced by a number: the coefficient is the
// weight it multiplies, and the reported force is identically zero unless the
// two eigenfrequencies match within `tol`.
struct DeltaWeightedForce {
  Eigen::Vector3d coefficient;  // -G v H (pi beta / 2), per unit delta weight
  double omega1_eV;
  double omega2_eV;
  bool delta_matched;

  Eigen::Vector3d reported_force() const {
    return delta_matched ? coefficient : Eigen::Vector3d::Zero();
  }
};

DeltaWeightedForce sharp_oscillator_friction(const Eigen::Matrix3d& coupling,
                                             const Eigen::Vector3d& velocity, double H,
                                             double beta_per_eV, double omega1_eV,
                                             double omega2_eV, double tol_eV);

}  // namespace casimir::kernel

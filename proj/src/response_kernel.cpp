#include "casimir/response_kernel.hpp"

#include <algorithm>
#include <cmath>

#include "casimir/numerics.hpp"
#include "casimir/quantities.hpp"

namespace casimir::kernel {

double oscillator_propagator(const OscillatorModel& osc, double K_eV) {
  const double w2 = osc.omega_eV * osc.omega_eV;
  return osc.alpha0 * w2 / (K_eV * K_eV + w2);
}

MatsubaraSeries::MatsubaraSeries(double beta_per_eV, std::vector<double> values)
    : beta_(beta_per_eV), values_(std::move(values)) {
  if (beta_ <= 0.0) throw DomainError("MatsubaraSeries: beta must be > 0");
  if (values_.empty()) throw DomainError("MatsubaraSeries: need at least the n = 0 value");
}

MatsubaraSeries MatsubaraSeries::from_oscillator(const OscillatorModel& osc,
                                                 double beta_per_eV, int truncation) {
  if (truncation < 0) throw DomainError("MatsubaraSeries: truncation must be >= 0");
  std::vector<double> vals(static_cast<std::size_t>(truncation) + 1);
  for (int n = 0; n <= truncation; ++n) {
    const double K = 2.0 * M_PI * n / beta_per_eV;
    vals[static_cast<std::size_t>(n)] = oscillator_propagator(osc, K);
  }
  return MatsubaraSeries(beta_per_eV, std::move(vals));
}

double MatsubaraSeries::frequency(int n) const { return 2.0 * M_PI * n / beta_; }

double MatsubaraSeries::value(int n) const {
  const int k = std::abs(n);
  if (k >= static_cast<int>(values_.size())) return 0.0;
  return values_[static_cast<std::size_t>(k)];
}

int suggested_truncation(const OscillatorModel& osc1, const OscillatorModel& osc2,
                         double beta_per_eV, double rel_tail) {
  if (beta_per_eV <= 0.0) throw DomainError("suggested_truncation: beta must be > 0");
  if (rel_tail <= 0.0) throw DomainError("suggested_truncation: rel_tail must be > 0");
  const double scale = beta_per_eV / (2.0 * M_PI);
  // Absolute truncation tail of the convolution: the omitted terms fall off
  // like n^-4, so sum_{|n0| > N} <= (2/3) c / N^3 with
  const double c = osc1.alpha0 * osc2.alpha0 * std::pow(osc1.omega_eV * scale, 2) *
                   std::pow(osc2.omega_eV * scale, 2) / beta_per_eV;
  // All terms are positive, so any single retained term bounds the value from
  // below.  The middle term of the n = 4 convolution is the smallest such
  // floor over the low harmonics the oracles compare.
  const double k2 = 2.0 * M_PI * 2.0 / beta_per_eV;
  const double floor = std::max(
      oscillator_propagator(osc1, k2) * oscillator_propagator(osc2, k2) / beta_per_eV,
      1e-300);
  const double n_cubed = 2.0 * c / (3.0 * rel_tail * floor);
  const int n = static_cast<int>(std::ceil(std::cbrt(std::max(n_cubed, 1.0))));
  return std::clamp(n, 16, 200000);
}

double matsubara_convolution(const MatsubaraSeries& g1, const MatsubaraSeries& g2, int n) {
  if (g1.beta() != g2.beta()) {
    throw DomainError("matsubara_convolution: series have different beta");
  }
  if (g1.truncation() != g2.truncation()) {
    throw DomainError("matsubara_convolution: series have different truncation");
  }
  const int N = g1.truncation();
  if (std::abs(n) > N) {
    throw DomainError("matsubara_convolution: |n| exceeds the truncation");
  }
  double sum = 0.0;
  for (int n0 = -N; n0 <= N; ++n0) {
    sum += g1.value(n0) * g2.value(n - n0);
  }
  return sum / g1.beta();
}

double imaginary_time_correlation(const MatsubaraSeries& g, double lambda) {
  if (lambda < 0.0 || lambda > g.beta()) {
    throw DomainError("imaginary_time_correlation: lambda outside [0, beta]");
  }
  double sum = g.value(0);
  for (int n = 1; n <= g.truncation(); ++n) {
    sum += 2.0 * g.value(n) * std::cos(g.frequency(n) * lambda);
  }
  return sum / g.beta();
}

double two_oscillator_H(double alpha1, double alpha2, double omega_eV, double T_K) {
  if (alpha1 < 0.0 || alpha2 < 0.0) throw DomainError("two_oscillator_H: alpha must be >= 0");
  if (omega_eV < 0.0) throw DomainError("two_oscillator_H: omega must be >= 0");
  const double beta =
      units::beta_from_temperature({T_K, units::Unit::TemperatureK}).value;
  if (omega_eV == 0.0) {
    return alpha1 * alpha2 / (beta * beta);
  }
  const double x = 0.5 * beta * omega_eV;
  if (x > 30.0) {
    const double log_factor = std::log(0.5 * omega_eV) - numerics::log_sinh(x);
    return alpha1 * alpha2 * std::exp(2.0 * log_factor);
  }
  const double factor = omega_eV / (2.0 * std::sinh(x));
  return alpha1 * alpha2 * factor * factor;
}

DeltaWeightedForce sharp_oscillator_friction(const Eigen::Matrix3d& coupling,
                                             const Eigen::Vector3d& velocity, double H,
                                             double beta_per_eV, double omega1_eV,
                                             double omega2_eV, double tol_eV) {
  if (!coupling.isApprox(coupling.transpose(), 1e-12)) {
    throw DomainError("sharp_oscillator_friction: coupling tensor must be symmetric");
  }
  if (beta_per_eV <= 0.0) throw DomainError("sharp_oscillator_friction: beta must be > 0");
  DeltaWeightedForce out;
  out.coefficient = -(M_PI * beta_per_eV / 2.0) * H * (coupling * velocity);
  out.omega1_eV = omega1_eV;
  out.omega2_eV = omega2_eV;
  out.delta_matched = std::abs(omega1_eV - omega2_eV) <= tol_eV;
  return out;
}

}  // namespace casimir::kernel

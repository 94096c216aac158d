#include "casimir/materials.hpp"

#include <algorithm>
#include <cmath>

#include "casimir/quadrature.hpp"

namespace casimir::materials {

DrudeMaterial gold() { return DrudeMaterial(9.0, 0.035); }

double drude_susceptibility(const DrudeMaterial& mat, double zeta_eV) {
  if (zeta_eV <= 0.0) {
    throw DomainError("drude_susceptibility: the Drude response has a pole at zeta = 0");
  }
  return mat.omega_p_eV * mat.omega_p_eV / (zeta_eV * (zeta_eV + mat.nu_eV));
}

double drude_permittivity(const DrudeMaterial& mat, double zeta_eV) {
  return 1.0 + drude_susceptibility(mat, zeta_eV);
}

double surface_response(const DrudeMaterial& mat, double K_eV) {
  if (K_eV < 0.0) throw DomainError("surface_response: K must be >= 0");
  const double q2 = 0.5 * mat.omega_p_eV * mat.omega_p_eV;
  return q2 / (K_eV * K_eV + q2 + mat.nu_eV * K_eV);
}

double dilute_effective_response(double rho_per_m3, double alpha_K) {
  if (rho_per_m3 <= 0.0) throw DomainError("dilute_effective_response: rho must be > 0");
  return 4.0 * M_PI * rho_per_m3 * alpha_K;
}

double alpha_from_surface_response(double rho_per_m3, double surface_response_value) {
  if (rho_per_m3 <= 0.0) throw DomainError("alpha_from_surface_response: rho must be > 0");
  return 2.0 * surface_response_value / (4.0 * M_PI * rho_per_m3);
}

double drude_spectral_density(const DrudeMaterial& mat, double m_eV) {
  if (m_eV <= 0.0) throw DomainError("drude_spectral_density: m must be > 0");
  if (mat.nu_eV <= 0.0) {
    throw DomainError("drude_spectral_density: needs nu > 0 (the sigma -> 0 density is a point mass)");
  }
  const double q2 = 0.5 * mat.omega_p_eV * mat.omega_p_eV;
  const double sigma = mat.nu_eV;
  const double x = q2 - m_eV * m_eV;
  const double sm = sigma * m_eV;
  return q2 * sm / (M_PI * (x * x + sm * sm));
}

SpectralDistribution point_distribution(double alpha0, double omega_eV) {
  if (alpha0 < 0.0) throw DomainError("point_distribution: alpha0 must be >= 0");
  if (omega_eV <= 0.0) throw DomainError("point_distribution: omega must be > 0");
  SpectralDistribution dist;
  dist.atoms.push_back({omega_eV * omega_eV, alpha0});
  dist.support_min_eV2 = omega_eV * omega_eV;
  dist.support_max_eV2 = omega_eV * omega_eV;
  return dist;
}

SpectralDistribution tabulated_distribution(std::vector<double> mu_eV2,
                                            std::vector<double> alpha) {
  if (mu_eV2.size() != alpha.size() || mu_eV2.size() < 2) {
    throw DomainError("tabulated_distribution: need matching grids with >= 2 points");
  }
  for (std::size_t i = 0; i + 1 < mu_eV2.size(); ++i) {
    if (mu_eV2[i + 1] <= mu_eV2[i]) {
      throw DomainError("tabulated_distribution: m^2 grid must be strictly increasing");
    }
  }
  for (double a : alpha) {
    if (a < 0.0) throw DomainError("tabulated_distribution: density must be >= 0");
  }

  SpectralDistribution dist;
  dist.support_min_eV2 = mu_eV2.front();
  dist.support_max_eV2 = mu_eV2.back();
  dist.grid_mu_eV2 = mu_eV2;
  dist.grid_alpha = alpha;
  dist.density = [mu = std::move(mu_eV2), al = std::move(alpha)](double x) {
    if (x < mu.front() || x > mu.back()) return 0.0;
    const auto it = std::upper_bound(mu.begin(), mu.end(), x);
    const std::size_t hi = std::min(static_cast<std::size_t>(it - mu.begin()), mu.size() - 1);
    const std::size_t lo = hi == 0 ? 0 : hi - 1;
    if (hi == lo) return al[lo];
    const double t = (x - mu[lo]) / (mu[hi] - mu[lo]);
    return al[lo] + t * (al[hi] - al[lo]);
  };
  return dist;
}

SpectralDistribution drude_surface_distribution(const DrudeMaterial& mat,
                                                double m_max_over_q) {
  if (m_max_over_q <= 1.0) {
    throw DomainError("drude_surface_distribution: support must extend beyond the peak");
  }
  const double q = mat.q_eV();
  SpectralDistribution dist;
  dist.density = [mat](double mu) {
    const double m = std::sqrt(mu);
    return drude_spectral_density(mat, m) / mu;
  };
  dist.support_min_eV2 = 0.0;
  dist.support_max_eV2 = (m_max_over_q * q) * (m_max_over_q * q);
  dist.peak_mu_eV2 = {q * q};
  dist.peak_width_eV2 = mat.nu_eV * q;
  return dist;
}

SpectralDistribution drude_resonance_band(const DrudeMaterial& mat, double window_widths) {
  if (window_widths <= 0.0) {
    throw DomainError("drude_resonance_band: window must be positive");
  }
  const double q2 = 0.5 * mat.omega_p_eV * mat.omega_p_eV;
  const double width = mat.nu_eV * mat.q_eV();
  SpectralDistribution dist = drude_surface_distribution(mat);
  dist.support_min_eV2 = std::max(q2 - window_widths * width, 0.01 * q2);
  dist.support_max_eV2 = q2 + window_widths * width;
  return dist;
}

namespace {

// Trapezoid reconstruction on the tabulated grid.  Error is O(h^2/12 * f'')
// per panel in mu; refinement means supplying a denser table.
double reconstruct_tabulated(const SpectralDistribution& dist, double K2) {
  const auto& mu = dist.grid_mu_eV2;
  const auto& al = dist.grid_alpha;
  auto f = [&](std::size_t i) { return al[i] * mu[i] / (K2 + mu[i]); };
  double full = 0.0;
  for (std::size_t i = 0; i + 1 < mu.size(); ++i) {
    full += 0.5 * (f(i) + f(i + 1)) * (mu[i + 1] - mu[i]);
  }
  return full;
}

}  // namespace

double reconstruct_alpha(const SpectralDistribution& dist, double K_eV) {
  const double K2 = K_eV * K_eV;

  double total = 0.0;
  for (const auto& atom : dist.atoms) {
    total += atom.weight * atom.mu_eV2 / (K2 + atom.mu_eV2);
  }
  if (!dist.has_density() || dist.support_max_eV2 <= dist.support_min_eV2) {
    return total;
  }
  if (!dist.grid_mu_eV2.empty()) {
    return total + reconstruct_tabulated(dist, K2);
  }

  // Integrate over m rather than m^2: d(m^2) = 2m dm keeps the integrand
  // bounded down to m = 0 for densities with an m^{-1} edge.
  const double m_lo = std::sqrt(std::max(dist.support_min_eV2, 0.0));
  const double m_hi = std::sqrt(dist.support_max_eV2);
  auto integrand = [&](double m) {
    const double mu = m * m;
    return 2.0 * m * dist.density(mu) * mu / (K2 + mu);
  };

  quadrature::Options opt;
  opt.rel_tol = 1e-8;
  opt.max_intervals = 20000;
  for (double peak : dist.peak_mu_eV2) {
    const double mp = std::sqrt(peak);
    opt.breakpoints.push_back(mp);
    for (double widths : {1.0, 5.0, 50.0}) {
      const double delta = widths * dist.peak_width_eV2;
      if (peak - delta > 0.0) opt.breakpoints.push_back(std::sqrt(peak - delta));
      opt.breakpoints.push_back(std::sqrt(peak + delta));
    }
  }
  // Log-spaced coarse partition so a wide support cannot hide the peak.
  for (double f = m_hi / 4.0; f > 4.0 * std::max(m_lo, m_hi * 1e-6); f /= 4.0) {
    opt.breakpoints.push_back(f);
  }

  const auto result = quadrature::integrate(integrand, m_lo, m_hi, opt);
  return total + result.value;
}

}  // namespace casimir::materials

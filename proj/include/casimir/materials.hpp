#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir::materials {

// Free-electron metal: plasma frequency and damping carried as energies
// (hbar*omega_p, hbar*nu, both eV).  The surface-plasmon energy is
// q = hbar*omega_p / sqrt(2).
struct DrudeMaterial {
  double omega_p_eV;
  double nu_eV;

  DrudeMaterial(double omega_p_eV, double nu_eV) : omega_p_eV(omega_p_eV), nu_eV(nu_eV) {
    if (omega_p_eV <= 0.0) throw DomainError("DrudeMaterial: omega_p must be > 0");
    if (nu_eV < 0.0) throw DomainError("DrudeMaterial: nu must be >= 0");
  }

  double q_eV() const { return omega_p_eV / std::sqrt(2.0); }
};

// Built-in gold parameters.
DrudeMaterial gold();

// eps - 1 = omega_p^2 / (zeta (zeta + nu)) on the imaginary-frequency axis,
// all quantities as energies.  Computed directly so the surface response can
// be formed without cancellation at large zeta.
double drude_susceptibility(const DrudeMaterial& mat, double zeta_eV);

// eps itself; diverges at zeta = 0 (DomainError).
double drude_permittivity(const DrudeMaterial& mat, double zeta_eV);

// (eps - 1)/(eps + 1) from a susceptibility chi = eps - 1.
inline double surface_response_from_susceptibility(double chi) { return chi / (chi + 2.0); }

// Half-space surface response q^2 / (K^2 + q^2 + sigma |K|) for K >= 0.
// Identical (algebraically) to routing K through the permittivity.
double surface_response(const DrudeMaterial& mat, double K_eV);

// Dilute bookkeeping 4 pi rho alpha_K and its dense replacement
// 2 (eps - 1)/(eps + 1).  `dilute_effective_response` forms the former;
// `alpha_from_surface_response` inverts the substitution back to a
// per-particle polarizability.
double dilute_effective_response(double rho_per_m3, double alpha_K);
double alpha_from_surface_response(double rho_per_m3, double surface_response_value);

// Spectral weight of the Drude surface response: the rho-free quantity
// 4 pi rho m^2 alpha_I(m^2) whose reconstruction through
//   alpha(K) = int alpha_I(m^2) m^2 / (K^2 + m^2) d(m^2)
// reproduces surface_response exactly.  Taken from the discontinuity of the
// surface response across K -> +-im:
//   (1/pi) * q^2 sigma m / ((q^2 - m^2)^2 + sigma^2 m^2).
// Peaked at m ~= q with width sigma*q in m^2; integrates (against 1/m^2)
// to surface_response(0) = 1.
double drude_spectral_density(const DrudeMaterial& mat, double m_eV);

// A point mass in the m^2 spectral variable: alpha_I contribution
// weight * delta(m^2 - mu).
struct SpectralAtom {
  double mu_eV2;
  double weight;
};

// alpha_I(m^2) as a density over mu = m^2 on [support_min, support_max],
// plus optional sharp atoms handled analytically.  `peaks` seeds adaptive
// refinement around narrow features of the given width.
struct SpectralDistribution {
  std::function<double(double)> density;
  double support_min_eV2 = 0.0;
  double support_max_eV2 = 0.0;
  std::vector<double> peak_mu_eV2;
  double peak_width_eV2 = 0.0;
  std::vector<SpectralAtom> atoms;
  // Populated for tabulated data; reconstruction then uses the trapezoid
  // rule on the grid (error h^2/12 * d2f/dmu2 per panel, so accuracy is set
  // by the table resolution).
  std::vector<double> grid_mu_eV2;
  std::vector<double> grid_alpha;

  bool has_density() const { return static_cast<bool>(density); }
};

// Sharp oscillator as a spectral distribution (single atom at (hbar w)^2).
SpectralDistribution point_distribution(double alpha0, double omega_eV);

// Tabulated alpha_I on a strictly increasing m^2 grid, linear interpolation.
SpectralDistribution tabulated_distribution(std::vector<double> mu_eV2,
                                            std::vector<double> alpha);

// Full-support spectral view of the Drude surface response (density
// drude_spectral_density / m^2, i.e. the "alpha_I" that rebuilds the surface
// response itself).  Support reaches m = m_max_over_q * q; the omitted
// m^{-5/2} tail of the sum rule is ~ 2 sigma / (3 pi R^3 q).
SpectralDistribution drude_surface_distribution(const DrudeMaterial& mat,
                                                double m_max_over_q = 50.0);

// The same density restricted to the resonance band
// |m^2 - q^2| <= window_widths * sigma*q, the narrow-oscillator model of the
// surface plasmon that the dense friction route integrates over.
SpectralDistribution drude_resonance_band(const DrudeMaterial& mat,
                                          double window_widths = 12.0);

// alpha(K) = int alpha_I(m^2) m^2/(K^2 + m^2) d(m^2) + atom contributions.
// Adaptive quadrature with forced refinement near declared peaks.
double reconstruct_alpha(const SpectralDistribution& dist, double K_eV);

}  // namespace casimir::materials

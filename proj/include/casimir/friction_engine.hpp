#pragma once

#include <string_view>
#include <variant>

#include "casimir/materials.hpp"

namespace casimir::engine {

enum class Route { DiluteQuadrature, DenseClosedForm, DenseQuadrature };

std::string_view route_name(Route r);

struct QuadratureDiagnostics {
  double rel_error = 0.0;        // relative error estimate of the band integral
  int nodes = 0;                 // integrand evaluations
  bool spectral_overlap = true;  // false when the two bands do not overlap
};

// Friction force per unit area.  The force always satisfies
// force = -prefactor * exp(suppression_log); the pieces are reported
// separately because the suppression is exponentially small for metals and
// products of raw doubles would underflow long before the logs lose meaning.
struct FrictionReport {
  double force_per_area_Pa = 0.0;  // <= 0 (drag)
  double prefactor_Pa = 0.0;
  double suppression_log = 0.0;
  Route route = Route::DenseClosedForm;
  QuadratureDiagnostics diagnostics;
};

struct HBandResult {
  double value = 0.0;  // natural units (alpha volumes): m^6
  double error = 0.0;
  bool spectral_overlap = true;
  int nodes = 0;
};

// Band friction weight
//   H = (pi beta / 2) int m^4 alpha_I1(m^2) alpha_I2(m^2) / sinh^2(beta m / 2) dm
// over the overlap of the two supports, assembled in log space once
// beta m / 2 > 30.  Disjoint supports give exactly zero with the overlap
// flag cleared.
HBandResult band_H(const materials::SpectralDistribution& dist1,
                   const materials::SpectralDistribution& dist2, double T_K);

using MaterialSpec = std::variant<materials::DrudeMaterial, materials::SpectralDistribution>;

// Two half-spaces at gap d moving at relative speed v along x.
struct Scenario {
  MaterialSpec material1;
  MaterialSpec material2;
  double d_m;
  double v_mps;
  double T_K;
  double rho1_per_m3 = 1.0;  // dilute bookkeeping; cancels on the dense route
  double rho2_per_m3 = 1.0;

  const materials::DrudeMaterial& drude1() const;
  const materials::DrudeMaterial& drude2() const;
};

void validate(const Scenario& scn);

// Per-particle polarizability density for the resonance band of a Drude
// half-space, obtained from the dense substitution 4 pi rho alpha ->
// 2 (eps-1)/(eps+1) and scaled by 1/sqrt(2) per plate.  With that scale the
// narrow-band limit of the assembled half-space force coincides with the
// closed form; the bare substitution would give exactly twice it.
materials::SpectralDistribution band_polarizability_density(const materials::DrudeMaterial& mat,
                                                            double rho_per_m3,
                                                            double window_widths = 12.0);

// F = -G v H per unit area with G = 3 pi rho1 rho2 / (8 d^4), reported in Pa.
FrictionReport dilute_friction(const Scenario& scn);

// Equal Drude plates:
//   F = -(3 kT v / (128 pi nu d^4)) * (x / sinh x)^2,  x = beta q / 2.
FrictionReport dense_friction_closed_form(const Scenario& scn);

// Same force through the spectral band quadrature; materials may differ.
// Converges to the closed form as sigma/q -> 0 and is independent of the
// bookkeeping densities.
FrictionReport dense_friction_quadrature(const Scenario& scn);

// Pieces of the closed form, exposed for reporting and for the oracles.
double closed_form_prefactor_Pa(double kT_eV, double v_mps, double nu_eV, double d_m);
double suppression_log_from_half_beta_q(double half_beta_q);

}  // namespace casimir::engine

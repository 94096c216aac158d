#include "casimir/friction_engine.hpp"

#include <algorithm>
#include <cmath>

#include "casimir/coupling_geometry.hpp"
#include "casimir/numerics.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/quantities.hpp"

namespace casimir::engine {

std::string_view route_name(Route r) {
  switch (r) {
    case Route::DiluteQuadrature: return "dilute-quadrature";
    case Route::DenseClosedForm: return "dense-closed-form";
    case Route::DenseQuadrature: return "dense-quadrature";
  }
  return "?";
}

const materials::DrudeMaterial& Scenario::drude1() const {
  const auto* mat = std::get_if<materials::DrudeMaterial>(&material1);
  if (!mat) throw DomainError("scenario: material1 is not a Drude material");
  return *mat;
}

const materials::DrudeMaterial& Scenario::drude2() const {
  const auto* mat = std::get_if<materials::DrudeMaterial>(&material2);
  if (!mat) throw DomainError("scenario: material2 is not a Drude material");
  return *mat;
}

void validate(const Scenario& scn) {
  if (scn.d_m <= 0.0) throw DomainError("scenario: separation must be > 0");
  if (scn.T_K <= 0.0) throw DomainError("scenario: temperature must be > 0");
  if (scn.v_mps < 0.0) throw DomainError("scenario: speed must be >= 0");
  if (scn.rho1_per_m3 <= 0.0 || scn.rho2_per_m3 <= 0.0) {
    throw DomainError("scenario: densities must be > 0");
  }
}

namespace {

// m^4 alpha1 alpha2 / sinh^2(beta m / 2), switching to a log-space assembly
// in the deeply suppressed regime.
double band_integrand(double m, double a1a2, double beta) {
  if (a1a2 <= 0.0) return 0.0;
  const double x = 0.5 * beta * m;
  if (x > 30.0) {
    return std::exp(std::log(a1a2) + 4.0 * std::log(m) - 2.0 * numerics::log_sinh(x));
  }
  const double s = std::sinh(x);
  return a1a2 * m * m * m * m / (s * s);
}

}  // namespace

HBandResult band_H(const materials::SpectralDistribution& dist1,
                   const materials::SpectralDistribution& dist2, double T_K) {
  const double beta =
      units::beta_from_temperature({T_K, units::Unit::TemperatureK}).value;

  for (const auto& a : dist1.atoms) {
    for (const auto& b : dist2.atoms) {
      if (a.mu_eV2 == b.mu_eV2 && a.weight > 0.0 && b.weight > 0.0) {
        throw DomainError(
            "band_H: coincident sharp oscillators carry a delta weight, not a finite band "
            "integral; use sharp_oscillator_friction");
      }
    }
  }

  HBandResult out;
  out.spectral_overlap = false;

  // Sharp atoms against the partner's continuous density:
  //   int m^4 w delta(m^2 - mu) alpha(m^2) / sinh^2 dm
  //     = w m^3 alpha(mu) / (2 sinh^2(beta m / 2)) at m = sqrt(mu).
  auto cross_atom_term = [&](const materials::SpectralAtom& atom,
                             const materials::SpectralDistribution& other) {
    if (!other.has_density()) return 0.0;
    if (atom.mu_eV2 < other.support_min_eV2 || atom.mu_eV2 > other.support_max_eV2) return 0.0;
    out.spectral_overlap = true;
    const double m = std::sqrt(atom.mu_eV2);
    return 0.5 * band_integrand(m, atom.weight * other.density(atom.mu_eV2), beta) / m;
  };

  double total = 0.0;
  for (const auto& atom : dist1.atoms) total += cross_atom_term(atom, dist2);
  for (const auto& atom : dist2.atoms) total += cross_atom_term(atom, dist1);

  if (dist1.has_density() && dist2.has_density()) {
    const double mu_lo = std::max(dist1.support_min_eV2, dist2.support_min_eV2);
    const double mu_hi = std::min(dist1.support_max_eV2, dist2.support_max_eV2);
    if (mu_lo < mu_hi) {
      out.spectral_overlap = true;
      const double m_lo = std::sqrt(std::max(mu_lo, 0.0));
      const double m_hi = std::sqrt(mu_hi);
      auto integrand = [&](double m) {
        const double mu = m * m;
        return band_integrand(m, dist1.density(mu) * dist2.density(mu), beta);
      };

      quadrature::Options opt;
      opt.rel_tol = 1e-6;
      opt.max_intervals = 20000;
      auto add_peaks = [&](const materials::SpectralDistribution& d) {
        for (double peak : d.peak_mu_eV2) {
          for (double widths : {0.0, 1.0, 5.0, 50.0}) {
            const double lo = peak - widths * d.peak_width_eV2;
            const double hi = peak + widths * d.peak_width_eV2;
            if (lo > 0.0) opt.breakpoints.push_back(std::sqrt(lo));
            if (hi > 0.0) opt.breakpoints.push_back(std::sqrt(hi));
          }
        }
      };
      add_peaks(dist1);
      add_peaks(dist2);

      const auto result = quadrature::integrate(integrand, m_lo, m_hi, opt);
      total += result.value;
      out.error = result.error;
      out.nodes = result.evaluations;
    }
  }

  out.value = (M_PI * beta / 2.0) * total;
  out.error *= M_PI * beta / 2.0;
  return out;
}

materials::SpectralDistribution band_polarizability_density(const materials::DrudeMaterial& mat,
                                                            double rho_per_m3,
                                                            double window_widths) {
  if (rho_per_m3 <= 0.0) throw DomainError("band_polarizability_density: rho must be > 0");
  if (mat.nu_eV <= 0.0) throw DomainError("band_polarizability_density: needs nu > 0");
  materials::SpectralDistribution band = materials::drude_resonance_band(mat, window_widths);
  const double scale = 2.0 / (std::sqrt(2.0) * 4.0 * M_PI * rho_per_m3);
  auto surface_density = band.density;
  band.density = [surface_density, scale](double mu) { return scale * surface_density(mu); };
  return band;
}

namespace {

FrictionReport assemble_band_force(const materials::SpectralDistribution& dist1,
                                   const materials::SpectralDistribution& dist2,
                                   const Scenario& scn, Route route) {
  const HBandResult h = band_H(dist1, dist2, scn.T_K);
  const double g =
      geometry::halfspace_coupling(scn.d_m, scn.rho1_per_m3, scn.rho2_per_m3);
  const units::Quantity natural{-g * scn.v_mps * h.value, units::Unit::NaturalPressure};

  FrictionReport report;
  report.force_per_area_Pa = units::to_si_pressure(natural).value;
  report.route = route;
  report.diagnostics.spectral_overlap = h.spectral_overlap;
  report.diagnostics.nodes = h.nodes;
  report.diagnostics.rel_error = h.value > 0.0 ? h.error / h.value : 0.0;
  report.prefactor_Pa = std::abs(report.force_per_area_Pa);
  report.suppression_log = 0.0;
  return report;
}

}  // namespace

FrictionReport dilute_friction(const Scenario& scn) {
  validate(scn);
  auto band_of = [&](const MaterialSpec& spec, double rho) -> materials::SpectralDistribution {
    if (const auto* mat = std::get_if<materials::DrudeMaterial>(&spec)) {
      return band_polarizability_density(*mat, rho);
    }
    return std::get<materials::SpectralDistribution>(spec);
  };
  const auto dist1 = band_of(scn.material1, scn.rho1_per_m3);
  const auto dist2 = band_of(scn.material2, scn.rho2_per_m3);
  return assemble_band_force(dist1, dist2, scn, Route::DiluteQuadrature);
}

double closed_form_prefactor_Pa(double kT_eV, double v_mps, double nu_eV, double d_m) {
  if (nu_eV <= 0.0) {
    throw DomainError(
        "closed-form friction: damping must be positive; the force is inversely "
        "proportional to the damping");
  }
  if (d_m <= 0.0) throw DomainError("closed-form friction: separation must be > 0");
  const double d2 = d_m * d_m;
  const double natural = 3.0 * v_mps * (kT_eV / nu_eV) / (128.0 * M_PI * d2 * d2);
  return units::to_si_pressure({natural, units::Unit::NaturalPressure}).value;
}

double suppression_log_from_half_beta_q(double half_beta_q) {
  if (half_beta_q <= 0.0) throw DomainError("suppression log: beta q must be > 0");
  return 2.0 * (std::log(half_beta_q) - numerics::log_sinh(half_beta_q));
}

FrictionReport dense_friction_closed_form(const Scenario& scn) {
  validate(scn);
  const auto& m1 = scn.drude1();
  const auto& m2 = scn.drude2();
  if (m1.omega_p_eV != m2.omega_p_eV || m1.nu_eV != m2.nu_eV) {
    throw DomainError("dense_friction_closed_form: plates must be equal");
  }

  const double kT =
      units::thermal_energy({scn.T_K, units::Unit::TemperatureK}).value;
  const double half_beta_q = 0.5 * m1.q_eV() / kT;

  FrictionReport report;
  report.route = Route::DenseClosedForm;
  report.prefactor_Pa = closed_form_prefactor_Pa(kT, scn.v_mps, m1.nu_eV, scn.d_m);
  report.suppression_log = suppression_log_from_half_beta_q(half_beta_q);
  report.force_per_area_Pa = -report.prefactor_Pa * std::exp(report.suppression_log);
  return report;
}

FrictionReport dense_friction_quadrature(const Scenario& scn) {
  validate(scn);
  const auto& m1 = scn.drude1();
  const auto& m2 = scn.drude2();
  const auto dist1 = band_polarizability_density(m1, scn.rho1_per_m3);
  const auto dist2 = band_polarizability_density(m2, scn.rho2_per_m3);

  FrictionReport report = assemble_band_force(dist1, dist2, scn, Route::DenseQuadrature);

  const bool equal_plates = m1.omega_p_eV == m2.omega_p_eV && m1.nu_eV == m2.nu_eV;
  if (equal_plates && report.force_per_area_Pa != 0.0) {
    const double kT =
        units::thermal_energy({scn.T_K, units::Unit::TemperatureK}).value;
    report.prefactor_Pa = closed_form_prefactor_Pa(kT, scn.v_mps, m1.nu_eV, scn.d_m);
    report.suppression_log =
        std::log(std::abs(report.force_per_area_Pa) / report.prefactor_Pa);
  }
  return report;
}

}  // namespace casimir::engine

#pragma once

#include <string_view>

#include "casimir/errors.hpp"

namespace casimir::units {

// Unit tags carried by boundary values.  The library computes internally in
// eV-based natural units: every energy-like symbol (K, m, q, sigma, kT) is an
// energy in eV, beta is in 1/eV, geometry stays in metres.  Force per unit
// area accumulates in the "natural pressure" bookkeeping unit 1/(m^3 s); a
// single factor of hbar converts it to pascals at the reporting boundary.
enum class Unit {
  EnergyEv,
  InverseEnergyEv,
  LengthM,
  SpeedMps,
  TemperatureK,
  PressurePa,
  NaturalPressure,
  FrequencyPerS,
  Dimensionless,
};

std::string_view unit_name(Unit u);

struct Quantity {
  double value = 0.0;
  Unit unit = Unit::Dimensionless;

  Quantity operator+(const Quantity& rhs) const;
  Quantity operator-(const Quantity& rhs) const;
  Quantity operator*(double s) const { return {value * s, unit}; }
  Quantity operator/(double s) const { return {value / s, unit}; }

  // Ratio of two like quantities; the unit tags cancel.
  double ratio(const Quantity& rhs) const;
};

namespace constants {
// CODATA 2018 exact values.
inline constexpr double hbar_J_s = 1.054571817e-34;
inline constexpr double k_boltzmann_J_per_K = 1.380649e-23;
inline constexpr double elementary_charge_C = 1.602176634e-19;
inline constexpr double electron_volt_J = elementary_charge_C;
inline constexpr double k_boltzmann_eV_per_K = k_boltzmann_J_per_K / electron_volt_J;
}  // namespace constants

// kT in eV for a temperature in kelvin.
Quantity thermal_energy(const Quantity& temperature);

// beta = 1/(k_B T) in 1/eV.  Throws DomainError for T <= 0.
Quantity beta_from_temperature(const Quantity& temperature);

// Scalar energy conversions used by the reporting layer.
inline double ev_to_joule(double ev) { return ev * constants::electron_volt_J; }
inline double joule_to_ev(double joule) { return joule / constants::electron_volt_J; }

// Natural force-per-area (1/(m^3 s)) -> Pa.  The factor is exactly hbar:
// G [1/m^10] * v [m/s] * H [m^6] carries 1/(m^3 s), and hbar restores J/m^3.
Quantity to_si_pressure(const Quantity& natural);
Quantity to_natural_pressure(const Quantity& pascals);

}  // namespace casimir::units

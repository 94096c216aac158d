#include "casimir/quantities.hpp"

#include <string>

namespace casimir::units {

namespace {

void require_unit(const Quantity& q, Unit expected, const char* where) {
  if (q.unit != expected) {
    throw UnitError(std::string(where) + ": expected " + std::string(unit_name(expected)) +
                    ", got " + std::string(unit_name(q.unit)));
  }
}

}  // namespace

std::string_view unit_name(Unit u) {
  switch (u) {
    case Unit::EnergyEv: return "eV";
    case Unit::InverseEnergyEv: return "1/eV";
    case Unit::LengthM: return "m";
    case Unit::SpeedMps: return "m/s";
    case Unit::TemperatureK: return "K";
    case Unit::PressurePa: return "Pa";
    case Unit::NaturalPressure: return "1/(m^3 s)";
    case Unit::FrequencyPerS: return "1/s";
    case Unit::Dimensionless: return "1";
  }
  return "?";
}

Quantity Quantity::operator+(const Quantity& rhs) const {
  if (unit != rhs.unit) {
    throw UnitError("addition of mismatched units: " + std::string(unit_name(unit)) + " + " +
                    std::string(unit_name(rhs.unit)));
  }
  return {value + rhs.value, unit};
}

Quantity Quantity::operator-(const Quantity& rhs) const {
  if (unit != rhs.unit) {
    throw UnitError("subtraction of mismatched units: " + std::string(unit_name(unit)) + " - " +
                    std::string(unit_name(rhs.unit)));
  }
  return {value - rhs.value, unit};
}

double Quantity::ratio(const Quantity& rhs) const {
  if (unit != rhs.unit) {
    throw UnitError("ratio of mismatched units: " + std::string(unit_name(unit)) + " / " +
                    std::string(unit_name(rhs.unit)));
  }
  return value / rhs.value;
}

Quantity thermal_energy(const Quantity& temperature) {
  require_unit(temperature, Unit::TemperatureK, "thermal_energy");
  if (temperature.value <= 0.0) {
    throw DomainError("thermal_energy: temperature must be positive");
  }
  return {constants::k_boltzmann_eV_per_K * temperature.value, Unit::EnergyEv};
}

Quantity beta_from_temperature(const Quantity& temperature) {
  const Quantity kt = thermal_energy(temperature);
  return {1.0 / kt.value, Unit::InverseEnergyEv};
}

Quantity to_si_pressure(const Quantity& natural) {
  require_unit(natural, Unit::NaturalPressure, "to_si_pressure");
  return {natural.value * constants::hbar_J_s, Unit::PressurePa};
}

Quantity to_natural_pressure(const Quantity& pascals) {
  require_unit(pascals, Unit::PressurePa, "to_natural_pressure");
  return {pascals.value / constants::hbar_J_s, Unit::NaturalPressure};
}

}  // namespace casimir::units

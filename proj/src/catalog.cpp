#include "casimir/catalog.hpp"

#include <fstream>

#include <json.hpp>

#include "casimir/errors.hpp"

namespace casimir::catalog {

std::vector<MaterialRecord> builtin_catalog() {
  return {{"gold", 9.0, 0.035}};
}

std::vector<MaterialRecord> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(path, "cannot open material catalog");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path, std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) {
    throw ConfigError(path, "catalog must be a JSON array of records");
  }

  std::vector<MaterialRecord> records;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& rec = j[i];
    const std::string where = path + "[" + std::to_string(i) + "]";
    if (!rec.is_object() || !rec.contains("name") || !rec.contains("omega_p_eV") ||
        !rec.contains("nu_eV")) {
      throw ConfigError(where, "record needs name, omega_p_eV, nu_eV");
    }
    if (!rec["name"].is_string() || !rec["omega_p_eV"].is_number() || !rec["nu_eV"].is_number()) {
      throw ConfigError(where, "name must be a string; omega_p_eV and nu_eV numbers");
    }
    records.push_back({rec["name"].get<std::string>(), rec["omega_p_eV"].get<double>(),
                       rec["nu_eV"].get<double>()});
  }
  return records;
}

std::vector<MaterialRecord> merge(std::vector<MaterialRecord> base,
                                  const std::vector<MaterialRecord>& extra) {
  for (const auto& rec : extra) {
    bool replaced = false;
    for (auto& existing : base) {
      if (existing.name == rec.name) {
        existing = rec;
        replaced = true;
        break;
      }
    }
    if (!replaced) base.push_back(rec);
  }
  return base;
}

materials::DrudeMaterial find_material(const std::vector<MaterialRecord>& records,
                                       const std::string& name) {
  for (const auto& rec : records) {
    if (rec.name == name) {
      return materials::DrudeMaterial(rec.omega_p_eV, rec.nu_eV);
    }
  }
  std::string names;
  for (const auto& rec : records) {
    if (!names.empty()) names += ", ";
    names += rec.name;
  }
  throw ConfigError("material", "unknown material '" + name + "'; available: " + names);
}

}  // namespace casimir::catalog

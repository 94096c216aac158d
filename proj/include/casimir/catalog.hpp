#pragma once

#include <string>
#include <vector>

#include "casimir/materials.hpp"

namespace casimir::catalog {

struct MaterialRecord {
  std::string name;
  double omega_p_eV;
  double nu_eV;
};

// Built-in records; gold ships by default.
std::vector<MaterialRecord> builtin_catalog();

// Load records from a JSON file: [{"name": ..., "omega_p_eV": ..., "nu_eV": ...}].
// Loaded entries shadow built-ins of the same name.
std::vector<MaterialRecord> load_catalog(const std::string& path);

std::vector<MaterialRecord> merge(std::vector<MaterialRecord> base,
                                  const std::vector<MaterialRecord>& extra);

// Throws ConfigError listing the available names when lookup fails.
materials::DrudeMaterial find_material(const std::vector<MaterialRecord>& records,
                                       const std::string& name);

}  // namespace casimir::catalog

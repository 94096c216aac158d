#pragma once

#include <optional>
#include <string>
#include <vector>

#include "casimir/catalog.hpp"
#include "casimir/friction_engine.hpp"

namespace casimir::cli {

enum class OutputFormat { Table, Csv, Json };

OutputFormat parse_format(const std::string& name);

struct SweepSpec {
  std::string param;  // d_nm, v_mps, T_K, nu_eV, omega_p_eV
  double from = 0.0;
  double to = 0.0;
  int points = 0;
  bool log_scale = false;
};

// A full run description.  Every numeric key carries its unit in the name so
// no config value is ambiguous.
struct RunConfig {
  materials::DrudeMaterial material1{9.0, 0.035};
  materials::DrudeMaterial material2{9.0, 0.035};
  double d_nm = 10.0;
  double v_mps = 100.0;
  double T_K = 300.0;
  engine::Route route = engine::Route::DenseClosedForm;
  std::optional<double> rho1_per_m3;
  std::optional<double> rho2_per_m3;
  OutputFormat format = OutputFormat::Table;
  std::optional<SweepSpec> sweep;
};

// Defaults reproduce the shipped gold scenario.
RunConfig default_config();

RunConfig parse_config_text(const std::string& text,
                            const std::vector<catalog::MaterialRecord>& records);
RunConfig parse_config_file(const std::string& path,
                            const std::vector<catalog::MaterialRecord>& records);

engine::Scenario to_scenario(const RunConfig& config);

engine::FrictionReport evaluate(const RunConfig& config);

struct SweepRow {
  double param_value;
  engine::FrictionReport report;
};

// Evaluates the sweep, in parameter order, using up to `jobs` worker threads.
std::vector<SweepRow> run_sweep(const RunConfig& config, int jobs);

// Rendering.  Sweep CSV columns are exactly:
//   param_value, force_Pa, prefactor_Pa, suppression_log
std::string format_report(const RunConfig& config, const engine::FrictionReport& report,
                          OutputFormat format);
std::string format_sweep(const RunConfig& config, const std::vector<SweepRow>& rows,
                         OutputFormat format);

}  // namespace casimir::cli

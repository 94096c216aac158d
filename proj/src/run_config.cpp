#include "casimir/run_config.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "casimir/quantities.hpp"

namespace casimir::cli {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& path, bool positive,
                      bool allow_zero = false) {
  if (!j.is_number()) {
    throw ConfigError(path, "must be a number");
  }
  const double value = j.get<double>();
  if (positive && (value < 0.0 || (!allow_zero && value == 0.0))) {
    throw ConfigError(path, allow_zero ? "must be >= 0" : "must be > 0");
  }
  return value;
}

materials::DrudeMaterial parse_material(const json& j, const std::string& path,
                                        const std::vector<catalog::MaterialRecord>& records) {
  if (j.is_string()) {
    try {
      return catalog::find_material(records, j.get<std::string>());
    } catch (const ConfigError& e) {
      throw ConfigError(path, e.what());
    }
  }
  if (j.is_object()) {
    if (!j.contains("omega_p_eV") || !j.contains("nu_eV")) {
      throw ConfigError(path, "inline material needs omega_p_eV and nu_eV");
    }
    const double wp = require_number(j["omega_p_eV"], path + ".omega_p_eV", true);
    const double nu = require_number(j["nu_eV"], path + ".nu_eV", true, true);
    return materials::DrudeMaterial(wp, nu);
  }
  throw ConfigError(path, "must be a catalog name or an inline {omega_p_eV, nu_eV} object");
}

std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12e", value);
  return buf;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ConfigError("format", "must be one of table, csv, json");
}

RunConfig default_config() { return RunConfig{}; }

RunConfig parse_config_text(const std::string& text,
                            const std::vector<catalog::MaterialRecord>& records) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError("$", std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError("$", "config must be a JSON object");
  }

  RunConfig config;
  if (j.contains("material")) {
    config.material1 = parse_material(j["material"], "$.material", records);
    config.material2 = config.material1;
  }
  if (j.contains("material2")) {
    config.material2 = parse_material(j["material2"], "$.material2", records);
  }
  if (j.contains("d_nm")) config.d_nm = require_number(j["d_nm"], "$.d_nm", true);
  if (j.contains("v_mps")) config.v_mps = require_number(j["v_mps"], "$.v_mps", true, true);
  if (j.contains("T_K")) config.T_K = require_number(j["T_K"], "$.T_K", true);
  if (j.contains("route")) {
    if (!j["route"].is_string()) throw ConfigError("$.route", "must be a string");
    const std::string route = j["route"].get<std::string>();
    if (route == "dense-closed-form") {
      config.route = engine::Route::DenseClosedForm;
    } else if (route == "dense-quadrature") {
      config.route = engine::Route::DenseQuadrature;
    } else if (route == "dilute-quadrature") {
      config.route = engine::Route::DiluteQuadrature;
    } else {
      throw ConfigError("$.route",
                        "must be one of dense-closed-form, dense-quadrature, dilute-quadrature");
    }
  }
  if (j.contains("rho1_per_m3")) {
    config.rho1_per_m3 = require_number(j["rho1_per_m3"], "$.rho1_per_m3", true);
  }
  if (j.contains("rho2_per_m3")) {
    config.rho2_per_m3 = require_number(j["rho2_per_m3"], "$.rho2_per_m3", true);
  }
  if (j.contains("format")) {
    if (!j["format"].is_string()) throw ConfigError("$.format", "must be a string");
    config.format = parse_format(j["format"].get<std::string>());
  }
  if (j.contains("sweep")) {
    const auto& s = j["sweep"];
    if (!s.is_object()) throw ConfigError("$.sweep", "must be an object");
    SweepSpec spec;
    if (!s.contains("param") || !s["param"].is_string()) {
      throw ConfigError("$.sweep.param", "must name the swept parameter");
    }
    spec.param = s["param"].get<std::string>();
    const bool known = spec.param == "d_nm" || spec.param == "v_mps" || spec.param == "T_K" ||
                       spec.param == "nu_eV" || spec.param == "omega_p_eV";
    if (!known) {
      throw ConfigError("$.sweep.param",
                        "must be one of d_nm, v_mps, T_K, nu_eV, omega_p_eV");
    }
    if (!s.contains("from") || !s.contains("to") || !s.contains("points")) {
      throw ConfigError("$.sweep", "needs from, to, points");
    }
    spec.from = require_number(s["from"], "$.sweep.from", false);
    spec.to = require_number(s["to"], "$.sweep.to", false);
    if (!s["points"].is_number_integer() || s["points"].get<int>() <= 0) {
      throw ConfigError("$.sweep.points", "must be a positive integer");
    }
    spec.points = s["points"].get<int>();
    if (s.contains("scale")) {
      if (!s["scale"].is_string()) throw ConfigError("$.sweep.scale", "must be a string");
      const std::string scale = s["scale"].get<std::string>();
      if (scale == "log") {
        spec.log_scale = true;
      } else if (scale == "linear") {
        spec.log_scale = false;
      } else {
        throw ConfigError("$.sweep.scale", "must be log or linear");
      }
    }
    if (spec.log_scale && (spec.from <= 0.0 || spec.to <= 0.0)) {
      throw ConfigError("$.sweep", "log scale needs positive endpoints");
    }
    config.sweep = spec;
  }
  return config;
}

RunConfig parse_config_file(const std::string& path,
                            const std::vector<catalog::MaterialRecord>& records) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(path, "cannot open config file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), records);
}

engine::Scenario to_scenario(const RunConfig& config) {
  engine::Scenario scn{config.material1, config.material2, config.d_nm * 1e-9,
                       config.v_mps,     config.T_K,       1.0,
                       1.0};
  if (config.rho1_per_m3) scn.rho1_per_m3 = *config.rho1_per_m3;
  if (config.rho2_per_m3) scn.rho2_per_m3 = *config.rho2_per_m3;
  return scn;
}

engine::FrictionReport evaluate(const RunConfig& config) {
  const engine::Scenario scn = to_scenario(config);
  switch (config.route) {
    case engine::Route::DenseClosedForm: return engine::dense_friction_closed_form(scn);
    case engine::Route::DenseQuadrature: return engine::dense_friction_quadrature(scn);
    case engine::Route::DiluteQuadrature: {
      if (!config.rho1_per_m3 || !config.rho2_per_m3) {
        throw ConfigError("$.rho1_per_m3",
                          "dilute route needs rho1_per_m3 and rho2_per_m3");
      }
      return engine::dilute_friction(scn);
    }
  }
  throw ConfigError("$.route", "no route selected");
}

std::vector<SweepRow> run_sweep(const RunConfig& config, int jobs) {
  if (!config.sweep) {
    throw ConfigError("$.sweep", "sweep block missing");
  }
  const SweepSpec& spec = *config.sweep;

  std::vector<double> values(static_cast<std::size_t>(spec.points));
  for (int i = 0; i < spec.points; ++i) {
    const double t = spec.points == 1 ? 0.0 : static_cast<double>(i) / (spec.points - 1);
    values[static_cast<std::size_t>(i)] =
        spec.log_scale ? spec.from * std::pow(spec.to / spec.from, t)
                       : spec.from + (spec.to - spec.from) * t;
  }

  auto apply = [&](double value) {
    RunConfig point = config;
    point.sweep.reset();
    if (spec.param == "d_nm") {
      point.d_nm = value;
    } else if (spec.param == "v_mps") {
      point.v_mps = value;
    } else if (spec.param == "T_K") {
      point.T_K = value;
    } else if (spec.param == "nu_eV") {
      point.material1 = materials::DrudeMaterial(point.material1.omega_p_eV, value);
      point.material2 = materials::DrudeMaterial(point.material2.omega_p_eV, value);
    } else {  // omega_p_eV
      point.material1 = materials::DrudeMaterial(value, point.material1.nu_eV);
      point.material2 = materials::DrudeMaterial(value, point.material2.nu_eV);
    }
    return point;
  };

  std::vector<SweepRow> rows(values.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error_message;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= values.size() || failed.load()) break;
      try {
        rows[i].param_value = values[i];
        rows[i].report = evaluate(apply(values[i]));
      } catch (const std::exception& e) {
        std::scoped_lock lock(error_mutex);
        failed.store(true);
        if (error_message.empty()) error_message = e.what();
      }
    }
  };

  const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(values.size())));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n_threads));
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  if (failed.load()) {
    throw ConfigError("$.sweep", "sweep point failed: " + error_message);
  }
  return rows;
}

namespace {

json report_to_json(const RunConfig& config, const engine::FrictionReport& report) {
  const double kT =
      units::thermal_energy({config.T_K, units::Unit::TemperatureK}).value;
  const double beta = 1.0 / kT;

  json j;
  j["route"] = std::string(engine::route_name(report.route));
  j["force_Pa"] = report.force_per_area_Pa;
  j["prefactor_Pa"] = report.prefactor_Pa;
  j["suppression_log"] = report.suppression_log;
  j["diagnostics"] = {{"rel_error", report.diagnostics.rel_error},
                      {"nodes", report.diagnostics.nodes},
                      {"spectral_overlap", report.diagnostics.spectral_overlap}};

  json inputs;
  inputs["material1"] = {{"omega_p_eV", config.material1.omega_p_eV},
                         {"nu_eV", config.material1.nu_eV},
                         {"q_eV", config.material1.q_eV()}};
  inputs["material2"] = {{"omega_p_eV", config.material2.omega_p_eV},
                         {"nu_eV", config.material2.nu_eV},
                         {"q_eV", config.material2.q_eV()}};
  inputs["d_nm"] = config.d_nm;
  inputs["d_m"] = config.d_nm * 1e-9;
  inputs["v_mps"] = config.v_mps;
  inputs["T_K"] = config.T_K;
  inputs["kT_eV"] = kT;
  inputs["kT_J"] = units::ev_to_joule(kT);
  inputs["beta_per_eV"] = beta;
  inputs["half_beta_q"] = 0.5 * beta * config.material1.q_eV();
  inputs["nu_per_s"] =
      units::ev_to_joule(config.material1.nu_eV) / units::constants::hbar_J_s;
  if (config.rho1_per_m3) inputs["rho1_per_m3"] = *config.rho1_per_m3;
  if (config.rho2_per_m3) inputs["rho2_per_m3"] = *config.rho2_per_m3;
  j["inputs"] = inputs;
  return j;
}

}  // namespace

std::string format_report(const RunConfig& config, const engine::FrictionReport& report,
                          OutputFormat format) {
  if (format == OutputFormat::Json) {
    return report_to_json(config, report).dump(2) + "\n";
  }
  if (format == OutputFormat::Csv) {
    std::ostringstream out;
    out << "force_Pa,prefactor_Pa,suppression_log\n";
    out << fmt(report.force_per_area_Pa) << "," << fmt(report.prefactor_Pa) << ","
        << fmt(report.suppression_log) << "\n";
    return out.str();
  }

  const double kT =
      units::thermal_energy({config.T_K, units::Unit::TemperatureK}).value;
  std::ostringstream out;
  out << "route            " << engine::route_name(report.route) << "\n";
  out << "force_Pa         " << fmt(report.force_per_area_Pa) << "\n";
  out << "prefactor_Pa     " << fmt(report.prefactor_Pa) << "\n";
  out << "suppression_log  " << fmt(report.suppression_log) << "\n";
  out << "--- inputs ---\n";
  out << "material1        omega_p = " << fmt(config.material1.omega_p_eV)
      << " eV, nu = " << fmt(config.material1.nu_eV)
      << " eV, q = " << fmt(config.material1.q_eV()) << " eV\n";
  out << "material2        omega_p = " << fmt(config.material2.omega_p_eV)
      << " eV, nu = " << fmt(config.material2.nu_eV)
      << " eV, q = " << fmt(config.material2.q_eV()) << " eV\n";
  out << "d                " << fmt(config.d_nm) << " nm = " << fmt(config.d_nm * 1e-9)
      << " m\n";
  out << "v                " << fmt(config.v_mps) << " m/s\n";
  out << "T                " << fmt(config.T_K) << " K (kT = " << fmt(kT)
      << " eV = " << fmt(units::ev_to_joule(kT)) << " J)\n";
  out << "beta             " << fmt(1.0 / kT) << " 1/eV\n";
  out << "half_beta_q      " << fmt(0.5 * config.material1.q_eV() / kT) << "\n";
  if (config.rho1_per_m3) out << "rho1             " << fmt(*config.rho1_per_m3) << " 1/m^3\n";
  if (config.rho2_per_m3) out << "rho2             " << fmt(*config.rho2_per_m3) << " 1/m^3\n";
  if (!report.diagnostics.spectral_overlap) {
    out << "note             no spectral overlap between the plates\n";
  }
  return out.str();
}

std::string format_sweep(const RunConfig& config, const std::vector<SweepRow>& rows,
                         OutputFormat format) {
  if (format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& row : rows) {
      arr.push_back({{"param_value", row.param_value},
                     {"force_Pa", row.report.force_per_area_Pa},
                     {"prefactor_Pa", row.report.prefactor_Pa},
                     {"suppression_log", row.report.suppression_log}});
    }
    json j;
    j["param"] = config.sweep ? config.sweep->param : "";
    j["rows"] = arr;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  if (format == OutputFormat::Table) {
    out << "param = " << (config.sweep ? config.sweep->param : "") << "\n";
  }
  out << "param_value,force_Pa,prefactor_Pa,suppression_log\n";
  for (const auto& row : rows) {
    out << fmt(row.param_value) << "," << fmt(row.report.force_per_area_Pa) << ","
        << fmt(row.report.prefactor_Pa) << "," << fmt(row.report.suppression_log) << "\n";
  }
  return out.str();
}

}  // namespace casimir::cli

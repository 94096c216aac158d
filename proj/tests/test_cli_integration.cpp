// End-to-end checks of the installed CLI: runs the real binary and inspects
// stdout/exit codes.  The binary path is baked in by the build.

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int g_failures = 0;

#define EXPECT(cond, what)                                                      \
  do {                                                                          \
    if (!(cond)) {                                                              \
      ++g_failures;                                                             \
      std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << "  " << (what)     \
                << "\n";                                                        \
    }                                                                           \
  } while (0)

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(CASIMIR_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buffer{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  while (fgets(buffer.data(), buffer.size(), pipe)) {
    output += buffer.data();
  }
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string write_config(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << text;
  return path.string();
}

}  // namespace

int main() {
  // Default compute: the shipped gold scenario.
  {
    const auto result = run("compute");
    EXPECT(result.exit_code == 0, "compute exits cleanly");
    EXPECT(result.output.find("5.81") != std::string::npos,
           "prefactor near 5.81 mPa in: " + result.output);
    EXPECT(result.output.find("dense-closed-form") != std::string::npos,
           "route echoed");

    const auto again = run("compute");
    EXPECT(result.output == again.output, "byte-identical output on rerun");
  }

  // JSON output parses and carries both unit systems.
  {
    const auto result = run("compute --format json");
    EXPECT(result.exit_code == 0, "json compute exits cleanly");
    const auto j = nlohmann::json::parse(result.output, nullptr, false);
    EXPECT(!j.is_discarded(), "json output parses");
    if (!j.is_discarded()) {
      EXPECT(j.contains("force_Pa"), "force field present");
      EXPECT(j["inputs"].contains("kT_eV") && j["inputs"].contains("kT_J"),
             "natural and SI echoes present");
      const double prefactor = j["prefactor_Pa"].get<double>();
      EXPECT(std::abs(prefactor / 5.81e-3 - 1.0) < 0.01, "prefactor within 1%");
    }
  }

  // Zero velocity: zero force.
  {
    const auto path = write_config("cf_zero_v.json", R"({"v_mps": 0.0})");
    const auto result = run("compute --config " + path + " --format json");
    EXPECT(result.exit_code == 0, "v=0 compute exits cleanly");
    const auto j = nlohmann::json::parse(result.output, nullptr, false);
    EXPECT(!j.is_discarded() && j["force_Pa"].get<double>() == 0.0, "v=0 gives F=0");
  }

  // Unknown material: catalog error listing names.
  {
    const auto path = write_config("cf_bad_mat.json", R"({"material": "latinum"})");
    const auto result = run("compute --config " + path);
    EXPECT(result.exit_code != 0, "unknown material fails");
    EXPECT(result.output.find("available: gold") != std::string::npos,
           "error lists catalog names: " + result.output);
  }

  // Sweep: exact CSV columns and d^-4 scaling.
  {
    const auto path = write_config("cf_sweep.json", R"({
      "sweep": {"param": "d_nm", "from": 10.0, "to": 100.0, "points": 3, "scale": "log"}
    })");
    const auto result = run("sweep --config " + path + " --format csv --jobs 2");
    EXPECT(result.exit_code == 0, "sweep exits cleanly");
    EXPECT(result.output.rfind("param_value,force_Pa,prefactor_Pa,suppression_log\n", 0) == 0,
           "exact CSV header, got: " + result.output.substr(0, 60));

    double first_force = 0.0, last_force = 0.0, first_d = 0.0, last_d = 0.0;
    int row = 0;
    std::istringstream lines(result.output);
    std::string line;
    std::getline(lines, line);  // header
    while (std::getline(lines, line)) {
      const auto comma = line.find(',');
      const double d = std::stod(line.substr(0, comma));
      const double force = std::stod(line.substr(comma + 1));
      if (row == 0) {
        first_d = d;
        first_force = force;
      }
      last_d = d;
      last_force = force;
      ++row;
    }
    EXPECT(row == 3, "three sweep rows");
    const double expected = std::pow(last_d / first_d, -4.0);
    EXPECT(std::abs(last_force / first_force / expected - 1.0) < 1e-9,
           "force scales as d^-4 across the sweep");
  }

  // Materials listing.
  {
    const auto result = run("materials list");
    EXPECT(result.exit_code == 0, "materials list exits cleanly");
    EXPECT(result.output.find("gold") != std::string::npos, "gold is listed");

    const auto extra = write_config("cf_extra_materials.json",
                                    R"([{"name": "silver", "omega_p_eV": 9.6, "nu_eV": 0.023}])");
    const auto with_extra = run("materials list --materials " + extra);
    EXPECT(with_extra.output.find("silver") != std::string::npos, "catalog file merged");
  }

  // Verify: clean exit, JSON array with seeds and sample counts.
  {
    const auto result = run("verify --profile fast --seed 4242");
    EXPECT(result.exit_code == 0, "verify fast passes: " + result.output);
    const auto j = nlohmann::json::parse(result.output, nullptr, false);
    EXPECT(!j.is_discarded() && j.is_array() && !j.empty(), "verify emits a JSON array");
    if (!j.is_discarded() && j.is_array()) {
      bool has_seed = true, has_nodes = true;
      for (const auto& rec : j) {
        has_seed = has_seed && rec.contains("seed");
        has_nodes = has_nodes && rec.contains("samples_or_nodes");
      }
      EXPECT(has_seed && has_nodes, "reports include seeds and node counts");
    }
  }

  if (g_failures == 0) {
    std::cout << "cli_integration: all checks passed\n";
    return 0;
  }
  std::cerr << "cli_integration: " << g_failures << " check(s) failed\n";
  return 1;
}

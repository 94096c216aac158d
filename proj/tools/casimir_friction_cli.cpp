// casimir-friction: friction force per unit area between parallel half-spaces
// in slow relative motion.
//
// Subcommands:
//   compute    single scenario -> force report
//   sweep      one-parameter sweep -> CSV/JSON rows
//   verify     brute-force oracle suite -> JSON reports, exit status
//   materials  catalog listing

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "casimir/catalog.hpp"
#include "casimir/run_config.hpp"
#include "casimir/verification.hpp"

namespace {

using casimir::cli::OutputFormat;
using casimir::cli::RunConfig;

struct CommonArgs {
  std::string config_path;
  std::string format;
  std::string materials_path;
};

std::vector<casimir::catalog::MaterialRecord> load_records(const CommonArgs& args) {
  auto records = casimir::catalog::builtin_catalog();
  if (!args.materials_path.empty()) {
    records = casimir::catalog::merge(records, casimir::catalog::load_catalog(args.materials_path));
  }
  return records;
}

RunConfig load_config(const CommonArgs& args) {
  const auto records = load_records(args);
  RunConfig config = args.config_path.empty()
                         ? casimir::cli::default_config()
                         : casimir::cli::parse_config_file(args.config_path, records);
  if (!args.format.empty()) {
    config.format = casimir::cli::parse_format(args.format);
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir friction between parallel half-spaces"};
  app.require_subcommand(1);

  CommonArgs args;
  int jobs = 1;
  std::uint64_t seed = 20260808;
  std::string profile = "fast";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", args.config_path, "JSON run configuration");
    cmd->add_option("--format", args.format, "table, csv or json");
    cmd->add_option("--materials", args.materials_path, "extra material catalog (JSON)");
  };

  CLI::App* compute = app.add_subcommand("compute", "evaluate one scenario");
  add_common(compute);

  CLI::App* sweep = app.add_subcommand("sweep", "evaluate a parameter sweep");
  add_common(sweep);
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  CLI::App* verify = app.add_subcommand("verify", "run the oracle suite");
  verify->add_option("--profile", profile, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--seed", seed, "oracle RNG seed");

  CLI::App* materials_cmd = app.add_subcommand("materials", "material catalog");
  CLI::App* materials_list = materials_cmd->add_subcommand("list", "list known materials");
  materials_list->add_option("--materials", args.materials_path,
                             "extra material catalog (JSON)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) {
      const RunConfig config = load_config(args);
      const auto report = casimir::cli::evaluate(config);
      std::cout << casimir::cli::format_report(config, report, config.format);
      return 0;
    }
    if (sweep->parsed()) {
      RunConfig config = load_config(args);
      if (!config.sweep) {
        std::cerr << "error: config has no sweep block\n";
        return 1;
      }
      const auto rows = casimir::cli::run_sweep(config, jobs);
      std::cout << casimir::cli::format_sweep(config, rows, config.format);
      return 0;
    }
    if (verify->parsed()) {
      casimir::oracle::SuiteOptions options;
      options.profile = profile == "full" ? casimir::oracle::Profile::Full
                                          : casimir::oracle::Profile::Fast;
      options.seed = seed;
      const auto reports = casimir::oracle::run_suite(options);
      std::cout << casimir::oracle::to_json(reports) << "\n";
      if (!casimir::oracle::all_passed(reports)) {
        for (const auto& r : reports) {
          if (!r.passed) {
            std::cerr << "FAILED oracle: " << r.name << " rel_error=" << r.rel_error
                      << " budget=" << r.budget << "\n";
          }
        }
        return 1;
      }
      return 0;
    }
    if (materials_cmd->parsed()) {
      for (const auto& rec : load_records(args)) {
        std::printf("%-16s omega_p_eV=%-10.6g nu_eV=%-10.6g\n", rec.name.c_str(),
                    rec.omega_p_eV, rec.nu_eV);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

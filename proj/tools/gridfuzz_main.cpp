#include <iostream>
#include <string>

#include "gridfuzz/runner.hpp"

#include <CLI11.hpp>

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy reliability assessment for radial distribution networks"};
  app.require_subcommand(1);

  gridfuzz::RunConfig config;
  std::string arith = "paper";
  std::string defuzz = "late";
  std::string format = "csv";
  std::string rules_path;
  std::string catalog_path;

  auto* run_cmd = app.add_subcommand(
      "run", "Evaluate every scenario and write index and improvement reports");
  run_cmd->add_option("--network", config.network_path, "Network JSON file")
      ->required();
  run_cmd->add_option("--scenarios", config.scenarios_path, "Scenario CSV file")
      ->required();
  run_cmd->add_option("--rules", rules_path,
                      "Rule file overriding the generated default bases");
  run_cmd->add_option("--catalog", catalog_path,
                      "Catalog JSON overriding the built-in variables");
  run_cmd->add_option("--benchmark", config.benchmark_id,
                      "Case id improvements are measured against")
      ->required();
  run_cmd->add_option("--arith", arith, "Fuzzy division mode: paper|interval-safe")
      ->check(CLI::IsMember({"paper", "interval-safe"}));
  run_cmd->add_option("--defuzz", defuzz, "Defuzzification stage: early|late")
      ->check(CLI::IsMember({"early", "late"}));
  run_cmd->add_option("--format", format, "Report format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  run_cmd->add_option("--resolution", config.resolution,
                      "Samples per fuzzy-set grid (default 1001)")
      ->check(CLI::Range(static_cast<std::size_t>(2),
                         static_cast<std::size_t>(1000000)));
  run_cmd->add_flag("--per-km", config.per_km_rates,
                    "Scale line failure rates by section length");
  run_cmd->add_option("--jobs", config.jobs, "Worker threads for case evaluation")
      ->check(CLI::Range(1u, 256u));
  run_cmd->add_option("--out", config.out_dir, "Output directory")->required();

  std::string catalog_out;
  auto* catalog_cmd = app.add_subcommand(
      "catalog", "Export the built-in linguistic catalog as editable JSON");
  catalog_cmd->add_option("--out", catalog_out, "Destination file")->required();

  CLI11_PARSE(app, argc, argv);

  if (catalog_cmd->parsed()) {
    try {
      gridfuzz::Catalog::builtin().save(catalog_out);
      std::cout << "wrote " << catalog_out << "\n";
      return 0;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }

  if (!rules_path.empty()) {
    config.rules_path = rules_path;
  }
  if (!catalog_path.empty()) {
    config.catalog_path = catalog_path;
  }
  config.arith = arith == "paper" ? gridfuzz::DivisionMode::paper
                                  : gridfuzz::DivisionMode::interval_safe;
  config.defuzz = defuzz == "late" ? gridfuzz::DefuzzMode::late
                                   : gridfuzz::DefuzzMode::early;
  config.format = format == "csv" ? gridfuzz::OutputFormat::csv
                                  : gridfuzz::OutputFormat::json;
  return gridfuzz::run(config, std::cout, std::cerr);
}

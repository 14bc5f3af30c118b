#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gridfuzz/indices.hpp"
#include "gridfuzz/scenario.hpp"

#include <json.hpp>

namespace gridfuzz {

enum class OutputFormat { csv, json };

struct RunConfig {
  std::string network_path;
  std::string scenarios_path;
  std::string out_dir;
  std::string benchmark_id;
  std::optional<std::string> rules_path;
  std::optional<std::string> catalog_path;
  DivisionMode arith = DivisionMode::paper;
  DefuzzMode defuzz = DefuzzMode::late;
  OutputFormat format = OutputFormat::csv;
  std::size_t resolution = SampledFuzzySet::kDefaultResolution;
  bool per_km_rates = false;
  unsigned jobs = 1;
};

/// Evaluates one scenario over the whole network: assess every path
/// component (component-level attributes and crisp overrides win over the
/// scenario's uniform inputs), aggregate per load point, compute system
/// indices.
SystemIndices evaluate_case(const Network& net, const ComponentAssessor& assessor,
                            const Scenario& scenario, DefuzzMode defuzz,
                            DivisionMode arith, bool per_km_rates);

/// Runs every scenario (optionally on `jobs` worker threads; results are
/// ordered by scenario regardless) and returns the per-case indices.
std::vector<std::pair<std::string, SystemIndices>> evaluate_all(
    const Network& net, const ComponentAssessor& assessor,
    const std::vector<Scenario>& scenarios, DefuzzMode defuzz, DivisionMode arith,
    bool per_km_rates, unsigned jobs);

// Report serialization. JSON reports round-trip exactly: parsing an emitted
// document reproduces the SystemIndices bit for bit.
std::string indices_to_csv(const std::vector<std::pair<std::string, SystemIndices>>& cases);
nlohmann::ordered_json indices_to_json(
    const std::vector<std::pair<std::string, SystemIndices>>& cases);
std::vector<std::pair<std::string, SystemIndices>> indices_from_json(
    const nlohmann::json& j);
std::string improvement_to_csv(const ImprovementReport& report);
nlohmann::ordered_json improvement_to_json(const ImprovementReport& report);

/// Shortest round-trip decimal form of v.
std::string format_double(double v);

/// Full pipeline: load inputs, evaluate all cases, write indices.*,
/// improvement.* and run_meta.json into config.out_dir. Nothing is written
/// unless every case evaluated. Returns a process exit status.
int run(const RunConfig& config, std::ostream& log, std::ostream& err);

}  // namespace gridfuzz

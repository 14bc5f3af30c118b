#pragma once

#include <string>
#include <vector>

#include "gridfuzz/inference.hpp"

namespace gridfuzz {

/// One what-if case: uniform line and transformer conditions applied to
/// every component of the kind (unless a component carries its own).
struct Scenario {
  std::string id;
  LineInputs line{};
  TransformerInputs transformer{};
  std::string note;
};

struct ParsedScenarios {
  std::vector<Scenario> scenarios;
  std::vector<std::string> warnings;  // clamped values, one entry per field
};

/// CSV with header
///   case,line_age_yr,line_exposure,wind_kmh,xfmr_age_yr,xfmr_moisture,xfmr_checks_per_yr
/// and an optional trailing `note` column. Exposure and moisture are
/// fractions in [0, 1] and are converted to percent. Values outside a
/// catalog domain are clamped to the nearest bound with a warning.
ParsedScenarios parse_scenarios(const std::string& path, const Catalog& catalog);

}  // namespace gridfuzz

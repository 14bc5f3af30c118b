#pragma once

#include <string>
#include <vector>

#include "gridfuzz/network.hpp"

namespace gridfuzz {

struct LoadPointIndices {
  std::string id;
  double failure_rate = 0.0;         // failures/year
  double annual_outage = 0.0;        // hours/year
  double energy_not_supplied = 0.0;  // kWh/year
};

struct SystemIndices {
  double lambda_total = 0.0;  // failures/year, summed over load points
  double u_total = 0.0;       // hours/year, summed over load points
  double saifi = 0.0;         // interruptions / customer-year
  double saidi = 0.0;         // hours / customer-year
  double ens = 0.0;           // kWh/year
  std::vector<LoadPointIndices> load_points;
};

bool operator==(const LoadPointIndices& a, const LoadPointIndices& b);
bool operator==(const SystemIndices& a, const SystemIndices& b);

enum class DefuzzMode {
  /// Defuzzify each load point's rate and outage first, then apply the crisp
  /// index formulas.
  early,
  /// Propagate fuzzy numbers through the customer/load-weighted sums and
  /// defuzzify once per index.
  late,
};

/// Customer-weighted system indices over all load points. `rels` must align
/// with net.load_points().
SystemIndices system_indices(const Network& net,
                             const std::vector<LoadPointReliability>& rels,
                             DefuzzMode mode,
                             DivisionMode arith = DivisionMode::paper);

struct ImprovementRow {
  std::string case_id;
  double lambda_pct = 0.0;
  double u_pct = 0.0;
  double saifi_pct = 0.0;
  double saidi_pct = 0.0;
  double ens_pct = 0.0;
};

/// Percentage deltas versus a benchmark case: (benchmark - case) / benchmark
/// * 100 per index, so positive numbers are improvements.
struct ImprovementReport {
  std::string benchmark_id;
  std::vector<ImprovementRow> rows;
};

ImprovementReport improvement_report(
    const std::vector<std::pair<std::string, SystemIndices>>& cases,
    const std::string& benchmark_id);

}  // namespace gridfuzz

#include "gridfuzz/indices.hpp"

namespace gridfuzz {

bool operator==(const LoadPointIndices& a, const LoadPointIndices& b) {
  return a.id == b.id && a.failure_rate == b.failure_rate &&
         a.annual_outage == b.annual_outage &&
         a.energy_not_supplied == b.energy_not_supplied;
}

bool operator==(const SystemIndices& a, const SystemIndices& b) {
  return a.lambda_total == b.lambda_total && a.u_total == b.u_total &&
         a.saifi == b.saifi && a.saidi == b.saidi && a.ens == b.ens &&
         a.load_points == b.load_points;
}

SystemIndices system_indices(const Network& net,
                             const std::vector<LoadPointReliability>& rels,
                             DefuzzMode mode, DivisionMode arith) {
  const auto& lps = net.load_points();
  if (rels.size() != lps.size()) {
    throw Error("reliability results do not cover every load point");
  }

  double total_customers = 0.0;
  for (const auto& lp : lps) {
    total_customers += static_cast<double>(lp.customers);
  }

  SystemIndices out;
  out.load_points.reserve(lps.size());

  if (mode == DefuzzMode::early) {
    double saifi_num = 0.0;
    double saidi_num = 0.0;
    for (std::size_t i = 0; i < lps.size(); ++i) {
      const auto& lp = lps[i];
      const double lam = rels[i].failure_rate.mean_of_maximum();
      const double u = rels[i].annual_outage.mean_of_maximum();
      const double ens_i = lp.peak_load_kw * lp.load_factor * u;
      out.lambda_total += lam;
      out.u_total += u;
      saifi_num += lam * static_cast<double>(lp.customers);
      saidi_num += u * static_cast<double>(lp.customers);
      out.ens += ens_i;
      out.load_points.push_back({lp.id, lam, u, ens_i});
    }
    out.saifi = saifi_num / total_customers;
    out.saidi = saidi_num / total_customers;
    return out;
  }

  FuzzyTrapezoid lambda_sum = FuzzyTrapezoid::crisp(0.0);
  FuzzyTrapezoid u_sum = FuzzyTrapezoid::crisp(0.0);
  FuzzyTrapezoid saifi_num = FuzzyTrapezoid::crisp(0.0);
  FuzzyTrapezoid saidi_num = FuzzyTrapezoid::crisp(0.0);
  FuzzyTrapezoid ens_sum = FuzzyTrapezoid::crisp(0.0);
  for (std::size_t i = 0; i < lps.size(); ++i) {
    const auto& lp = lps[i];
    const auto customers = FuzzyTrapezoid::crisp(static_cast<double>(lp.customers));
    const auto ens_i = mul(rels[i].annual_outage,
                           FuzzyTrapezoid::crisp(lp.peak_load_kw * lp.load_factor));
    lambda_sum = add(lambda_sum, rels[i].failure_rate);
    u_sum = add(u_sum, rels[i].annual_outage);
    saifi_num = add(saifi_num, mul(rels[i].failure_rate, customers));
    saidi_num = add(saidi_num, mul(rels[i].annual_outage, customers));
    ens_sum = add(ens_sum, ens_i);
    out.load_points.push_back({lp.id, rels[i].failure_rate.mean_of_maximum(),
                               rels[i].annual_outage.mean_of_maximum(),
                               ens_i.mean_of_maximum()});
  }
  const auto n_total = FuzzyTrapezoid::crisp(total_customers);
  out.lambda_total = lambda_sum.mean_of_maximum();
  out.u_total = u_sum.mean_of_maximum();
  out.saifi = div(saifi_num, n_total, arith).mean_of_maximum();
  out.saidi = div(saidi_num, n_total, arith).mean_of_maximum();
  out.ens = ens_sum.mean_of_maximum();
  return out;
}

namespace {

double delta_pct(double benchmark, double value) {
  return (benchmark - value) / benchmark * 100.0;
}

}  // namespace

ImprovementReport improvement_report(
    const std::vector<std::pair<std::string, SystemIndices>>& cases,
    const std::string& benchmark_id) {
  const SystemIndices* benchmark = nullptr;
  for (const auto& [id, indices] : cases) {
    if (id == benchmark_id) {
      benchmark = &indices;
      break;
    }
  }
  if (benchmark == nullptr) {
    throw UnknownBenchmark("no case with id '" + benchmark_id + "'");
  }

  ImprovementReport report;
  report.benchmark_id = benchmark_id;
  report.rows.reserve(cases.size());
  for (const auto& [id, indices] : cases) {
    ImprovementRow row;
    row.case_id = id;
    row.lambda_pct = delta_pct(benchmark->lambda_total, indices.lambda_total);
    row.u_pct = delta_pct(benchmark->u_total, indices.u_total);
    row.saifi_pct = delta_pct(benchmark->saifi, indices.saifi);
    row.saidi_pct = delta_pct(benchmark->saidi, indices.saidi);
    row.ens_pct = delta_pct(benchmark->ens, indices.ens);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace gridfuzz

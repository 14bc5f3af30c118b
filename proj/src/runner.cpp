#include "gridfuzz/runner.hpp"

#include <atomic>
#include <charconv>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

namespace gridfuzz {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return {buf, res.ptr};
}

SystemIndices evaluate_case(const Network& net, const ComponentAssessor& assessor,
                            const Scenario& scenario, DefuzzMode defuzz,
                            DivisionMode arith, bool per_km_rates) {
  const ComponentAssessFn assess = [&](const Component& c) -> ComponentReliability {
    if (c.failure_rate_override && c.repair_time_override) {
      return {*c.failure_rate_override, *c.repair_time_override};
    }
    ComponentReliability rel = [&] {
      switch (c.kind) {
        case ComponentKind::line: {
          auto r = assessor.assess_line(c.line_inputs.value_or(scenario.line));
          if (per_km_rates) {
            r.failure_rate = mul(r.failure_rate, FuzzyTrapezoid::crisp(c.length_km));
          }
          return r;
        }
        case ComponentKind::transformer:
          return assessor.assess_transformer(
              c.transformer_inputs.value_or(scenario.transformer));
        default:
          throw Error("component '" + c.id + "' (" + to_string(c.kind) +
                      ") has no fuzzy model and no complete overrides");
      }
    }();
    if (c.failure_rate_override) {
      rel.failure_rate = *c.failure_rate_override;
    }
    if (c.repair_time_override) {
      rel.repair_time = *c.repair_time_override;
    }
    return rel;
  };

  std::vector<LoadPointReliability> rels;
  rels.reserve(net.load_points().size());
  for (const auto& lp : net.load_points()) {
    rels.push_back(loadpoint_reliability(net, lp, assess));
  }
  return system_indices(net, rels, defuzz, arith);
}

std::vector<std::pair<std::string, SystemIndices>> evaluate_all(
    const Network& net, const ComponentAssessor& assessor,
    const std::vector<Scenario>& scenarios, DefuzzMode defuzz, DivisionMode arith,
    bool per_km_rates, unsigned jobs) {
  std::vector<std::pair<std::string, SystemIndices>> results(scenarios.size());
  const auto eval_one = [&](std::size_t i) {
    results[i] = {scenarios[i].id,
                  evaluate_case(net, assessor, scenarios[i], defuzz, arith,
                                per_km_rates)};
  };

  if (jobs <= 1 || scenarios.size() <= 1) {
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
      eval_one(i);
    }
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  const unsigned n_workers =
      std::min<unsigned>(jobs, static_cast<unsigned>(scenarios.size()));
  workers.reserve(n_workers);
  for (unsigned w = 0; w < n_workers; ++w) {
    workers.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= scenarios.size() || failed.load()) {
          return;
        }
        try {
          eval_one(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) {
            first_error = std::current_exception();
          }
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& w : workers) {
    w.join();
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }
  return results;
}

std::string indices_to_csv(
    const std::vector<std::pair<std::string, SystemIndices>>& cases) {
  std::string out = "case,lambda,u,saifi,saidi,ens\n";
  for (const auto& [id, s] : cases) {
    out += id;
    out += ',';
    out += format_double(s.lambda_total);
    out += ',';
    out += format_double(s.u_total);
    out += ',';
    out += format_double(s.saifi);
    out += ',';
    out += format_double(s.saidi);
    out += ',';
    out += format_double(s.ens);
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json indices_to_json(
    const std::vector<std::pair<std::string, SystemIndices>>& cases) {
  nlohmann::ordered_json j;
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& [id, s] : cases) {
    nlohmann::ordered_json jc;
    jc["case"] = id;
    jc["lambda"] = s.lambda_total;
    jc["u"] = s.u_total;
    jc["saifi"] = s.saifi;
    jc["saidi"] = s.saidi;
    jc["ens"] = s.ens;
    jc["load_points"] = nlohmann::ordered_json::array();
    for (const auto& lp : s.load_points) {
      nlohmann::ordered_json jl;
      jl["id"] = lp.id;
      jl["lambda"] = lp.failure_rate;
      jl["u"] = lp.annual_outage;
      jl["ens"] = lp.energy_not_supplied;
      jc["load_points"].push_back(std::move(jl));
    }
    j["cases"].push_back(std::move(jc));
  }
  return j;
}

std::vector<std::pair<std::string, SystemIndices>> indices_from_json(
    const nlohmann::json& j) {
  std::vector<std::pair<std::string, SystemIndices>> cases;
  try {
    for (const auto& jc : j.at("cases")) {
      SystemIndices s;
      s.lambda_total = jc.at("lambda").get<double>();
      s.u_total = jc.at("u").get<double>();
      s.saifi = jc.at("saifi").get<double>();
      s.saidi = jc.at("saidi").get<double>();
      s.ens = jc.at("ens").get<double>();
      for (const auto& jl : jc.at("load_points")) {
        s.load_points.push_back({jl.at("id").get<std::string>(),
                                 jl.at("lambda").get<double>(),
                                 jl.at("u").get<double>(),
                                 jl.at("ens").get<double>()});
      }
      cases.emplace_back(jc.at("case").get<std::string>(), std::move(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("indices report: ") + e.what());
  }
  return cases;
}

std::string improvement_to_csv(const ImprovementReport& report) {
  std::string out = "case,lambda_pct,u_pct,saifi_pct,saidi_pct,ens_pct\n";
  for (const auto& row : report.rows) {
    out += row.case_id;
    out += ',';
    out += format_double(row.lambda_pct);
    out += ',';
    out += format_double(row.u_pct);
    out += ',';
    out += format_double(row.saifi_pct);
    out += ',';
    out += format_double(row.saidi_pct);
    out += ',';
    out += format_double(row.ens_pct);
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json improvement_to_json(const ImprovementReport& report) {
  nlohmann::ordered_json j;
  j["benchmark"] = report.benchmark_id;
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json jr;
    jr["case"] = row.case_id;
    jr["lambda_pct"] = row.lambda_pct;
    jr["u_pct"] = row.u_pct;
    jr["saifi_pct"] = row.saifi_pct;
    jr["saidi_pct"] = row.saidi_pct;
    jr["ens_pct"] = row.ens_pct;
    j["cases"].push_back(std::move(jr));
  }
  return j;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write '" + path.string() + "'");
  }
  out << content;
  if (!out) {
    throw Error("write failed for '" + path.string() + "'");
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& log, std::ostream& err) {
  try {
    const Network net = Network::load(config.network_path);
    const Catalog catalog = config.catalog_path ? Catalog::load(*config.catalog_path)
                                                : Catalog::builtin();

    std::vector<RuleBase> rule_overrides;
    std::vector<std::string> warnings;
    if (config.rules_path) {
      auto parsed = parse_rule_file(*config.rules_path, catalog);
      rule_overrides = std::move(parsed.bases);
      warnings.insert(warnings.end(), parsed.warnings.begin(),
                      parsed.warnings.end());
    }
    const ComponentAssessor assessor(catalog, std::move(rule_overrides),
                                     config.resolution);

    auto parsed = parse_scenarios(config.scenarios_path, catalog);
    warnings.insert(warnings.end(), parsed.warnings.begin(), parsed.warnings.end());
    for (const auto& w : warnings) {
      log << "warning: " << w << "\n";
    }

    bool benchmark_found = false;
    for (const auto& s : parsed.scenarios) {
      benchmark_found = benchmark_found || s.id == config.benchmark_id;
    }
    if (!benchmark_found) {
      throw UnknownBenchmark("benchmark case '" + config.benchmark_id +
                             "' is not in the scenario file");
    }

    const auto cases =
        evaluate_all(net, assessor, parsed.scenarios, config.defuzz, config.arith,
                     config.per_km_rates, config.jobs);
    const auto report = improvement_report(cases, config.benchmark_id);

    // Render everything before touching the filesystem so a failure cannot
    // leave partial outputs behind.
    const bool csv = config.format == OutputFormat::csv;
    const std::string indices_name = csv ? "indices.csv" : "indices.json";
    const std::string improvement_name = csv ? "improvement.csv" : "improvement.json";
    const std::string indices_body =
        csv ? indices_to_csv(cases) : indices_to_json(cases).dump(2) + "\n";
    const std::string improvement_body =
        csv ? improvement_to_csv(report) : improvement_to_json(report).dump(2) + "\n";

    nlohmann::ordered_json meta;
    meta["network"] = config.network_path;
    meta["scenarios"] = config.scenarios_path;
    meta["catalog"] = config.catalog_path ? *config.catalog_path : "builtin";
    meta["rules"] = config.rules_path ? *config.rules_path : "generated-default";
    meta["benchmark"] = config.benchmark_id;
    meta["arith_mode"] =
        config.arith == DivisionMode::paper ? "paper" : "interval-safe";
    meta["defuzz_mode"] = config.defuzz == DefuzzMode::late ? "late" : "early";
    meta["format"] = csv ? "csv" : "json";
    meta["resolution"] = config.resolution;
    meta["line_rate_interpretation"] =
        config.per_km_rates ? "per-km" : "per-section";
    meta["system_aggregation"] =
        "lambda and u are plain sums of the load-point values";
    meta["cases"] = cases.size();
    meta["load_points"] = net.load_points().size();
    meta["warnings"] = warnings;
    const std::string meta_body = meta.dump(2) + "\n";

    std::filesystem::create_directories(config.out_dir);
    const std::filesystem::path out_dir(config.out_dir);
    write_file(out_dir / indices_name, indices_body);
    write_file(out_dir / improvement_name, improvement_body);
    write_file(out_dir / "run_meta.json", meta_body);

    log << "evaluated " << cases.size() << " cases over "
        << net.load_points().size() << " load points\n";
    log << "wrote " << (out_dir / indices_name).string() << ", "
        << (out_dir / improvement_name).string() << ", "
        << (out_dir / "run_meta.json").string() << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gridfuzz

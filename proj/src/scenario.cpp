#include "gridfuzz/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gridfuzz {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    fields.push_back(trim(field));
  }
  if (!line.empty() && line.back() == ',') {
    fields.push_back("");
  }
  return fields;
}

double parse_number(const std::string& path, std::size_t row,
                    const std::string& field, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) {
      throw std::invalid_argument(value);
    }
    return v;
  } catch (const std::exception&) {
    throw ParseError(path, row, "field '" + field + "' is not a number: '" +
                                    value + "'");
  }
}

const std::vector<std::string> kHeader = {
    "case",        "line_age_yr",   "line_exposure",      "wind_kmh",
    "xfmr_age_yr", "xfmr_moisture", "xfmr_checks_per_yr",
};

}  // namespace

ParsedScenarios parse_scenarios(const std::string& path, const Catalog& catalog) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot read scenario file '" + path + "'");
  }

  ParsedScenarios out;
  std::string line;
  std::size_t row = 0;

  if (!std::getline(in, line)) {
    throw ParseError(path, 1, "missing header row");
  }
  ++row;
  auto header = split_csv(line);
  bool has_note = false;
  if (header.size() == kHeader.size() + 1 && header.back() == "note") {
    has_note = true;
    header.pop_back();
  }
  if (header != kHeader) {
    throw ParseError(path, 1, "unexpected header; expected "
                              "case,line_age_yr,line_exposure,wind_kmh,"
                              "xfmr_age_yr,xfmr_moisture,xfmr_checks_per_yr");
  }

  const auto clamp_to = [&](const char* variable, const char* field, double v,
                            const std::string& case_id) {
    const auto& var = catalog.variable(variable);
    const double c = var.clamp(v);
    if (c != v) {
      std::ostringstream os;
      os << "case " << case_id << ": " << field << " " << v << " clamped to "
         << c;
      out.warnings.push_back(os.str());
    }
    return c;
  };

  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) {
      continue;
    }
    const auto fields = split_csv(line);
    const std::size_t expected = kHeader.size() + (has_note ? 1 : 0);
    if (fields.size() != kHeader.size() && fields.size() != expected) {
      throw ParseError(path, row, "expected " + std::to_string(expected) +
                                      " fields, got " +
                                      std::to_string(fields.size()));
    }

    Scenario s;
    s.id = fields[0];
    if (s.id.empty()) {
      throw ParseError(path, row, "empty case id");
    }
    for (const auto& prev : out.scenarios) {
      if (prev.id == s.id) {
        throw ParseError(path, row, "duplicate case id '" + s.id + "'");
      }
    }
    const double age = parse_number(path, row, "line_age_yr", fields[1]);
    const double exposure = parse_number(path, row, "line_exposure", fields[2]);
    const double wind = parse_number(path, row, "wind_kmh", fields[3]);
    const double xage = parse_number(path, row, "xfmr_age_yr", fields[4]);
    const double moisture = parse_number(path, row, "xfmr_moisture", fields[5]);
    const double checks = parse_number(path, row, "xfmr_checks_per_yr", fields[6]);
    if (fields.size() > kHeader.size()) {
      s.note = fields[7];
    }

    s.line.age_years = clamp_to(kLineAge, "line_age_yr", age, s.id);
    s.line.exposure_pct =
        clamp_to(kLineExposure, "line_exposure", exposure * 100.0, s.id);
    s.line.wind_kmh = clamp_to(kWeather, "wind_kmh", wind, s.id);
    s.transformer.age_years = clamp_to(kXfmrAge, "xfmr_age_yr", xage, s.id);
    s.transformer.moisture_pct =
        clamp_to(kXfmrMoisture, "xfmr_moisture", moisture * 100.0, s.id);
    s.transformer.checks_per_year =
        clamp_to(kXfmrMaintenance, "xfmr_checks_per_yr", checks, s.id);

    out.scenarios.push_back(std::move(s));
  }

  if (out.scenarios.empty()) {
    throw ParseError(path, row, "scenario file defines no cases");
  }
  return out;
}

}  // namespace gridfuzz

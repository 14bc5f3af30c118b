#include "gridfuzz/linguistic.hpp"

#include <algorithm>
#include <fstream>

namespace gridfuzz {

LinguisticVariable::LinguisticVariable(std::string name, std::string unit,
                                       double domain_lo, double domain_hi,
                                       VariableKind kind,
                                       std::vector<LinguisticTerm> terms)
    : name_(std::move(name)),
      unit_(std::move(unit)),
      domain_lo_(domain_lo),
      domain_hi_(domain_hi),
      kind_(kind),
      terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw Error("variable '" + name_ + "' has no terms");
  }
  if (domain_lo_ > domain_hi_) {
    throw Error("variable '" + name_ + "' has an inverted domain");
  }
  if (domain_lo_ == domain_hi_) {
    // Degenerate domain: only crisp terms at the single point make sense.
    for (const auto& t : terms_) {
      if (!(t.shape.is_crisp() && t.shape.a1() == domain_lo_)) {
        throw Error("variable '" + name_ +
                    "' has a degenerate domain but non-crisp terms");
      }
    }
    return;
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& s = terms_[i].shape;
    if (s.a1() < domain_lo_ || s.a4() > domain_hi_) {
      throw Error("term '" + terms_[i].label + "' of '" + name_ +
                  "' lies outside the domain");
    }
    if (i > 0 && terms_[i - 1].shape.a1() > s.a1()) {
      throw Error("terms of '" + name_ + "' are not ordered by support start");
    }
  }
  // Coverage without gaps: consecutive supports must touch or overlap and the
  // outer supports must reach the domain bounds.
  if (terms_.front().shape.a1() > domain_lo_ ||
      terms_.back().shape.a4() < domain_hi_) {
    throw Error("terms of '" + name_ + "' do not cover the domain");
  }
  for (std::size_t i = 0; i + 1 < terms_.size(); ++i) {
    if (terms_[i + 1].shape.a1() > terms_[i].shape.a4()) {
      throw Error("terms '" + terms_[i].label + "' and '" + terms_[i + 1].label +
                  "' of '" + name_ + "' leave a coverage gap");
    }
  }
}

const LinguisticTerm* LinguisticVariable::find_term(const std::string& label) const {
  for (const auto& t : terms_) {
    if (t.label == label) {
      return &t;
    }
  }
  return nullptr;
}

std::size_t LinguisticVariable::term_index(const std::string& label) const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].label == label) {
      return i;
    }
  }
  throw UnknownTerm("variable '" + name_ + "' has no term '" + label + "'");
}

double LinguisticVariable::clamp(double x) const {
  return std::min(std::max(x, domain_lo_), domain_hi_);
}

LinguisticVariable make_variable(std::string name, std::string unit,
                                 double domain_lo, double domain_hi,
                                 VariableKind kind,
                                 const std::vector<TermSupport>& supports) {
  std::vector<LinguisticTerm> terms;
  terms.reserve(supports.size());
  for (std::size_t i = 0; i < supports.size(); ++i) {
    const auto& s = supports[i];
    const double left_peak = (i == 0) ? s.start : supports[i - 1].end;
    const double right_peak = (i + 1 == supports.size()) ? s.end : supports[i + 1].start;
    terms.push_back({s.label, FuzzyTrapezoid(s.start, left_peak, right_peak, s.end)});
  }
  return {std::move(name), std::move(unit), domain_lo, domain_hi, kind,
          std::move(terms)};
}

double FuzzifiedInput::grade(const std::string& term) const {
  for (const auto& [label, g] : grades) {
    if (label == term) {
      return g;
    }
  }
  throw UnknownTerm("no grade for term '" + term + "' of variable '" + variable + "'");
}

FuzzifiedInput fuzzify(const LinguisticVariable& v, double x) {
  FuzzifiedInput out;
  out.variable = v.name();
  const double cx = v.clamp(x);
  out.clamped = cx != x;
  out.grades.reserve(v.terms().size());
  for (const auto& t : v.terms()) {
    out.grades.emplace_back(t.label, t.shape.membership(cx));
  }
  return out;
}

Catalog::Catalog(std::vector<LinguisticVariable> variables)
    : variables_(std::move(variables)) {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    for (std::size_t j = i + 1; j < variables_.size(); ++j) {
      if (variables_[i].name() == variables_[j].name()) {
        throw Error("duplicate variable '" + variables_[i].name() + "'");
      }
    }
  }
}

bool Catalog::contains(const std::string& name) const {
  for (const auto& v : variables_) {
    if (v.name() == name) {
      return true;
    }
  }
  return false;
}

const LinguisticVariable& Catalog::variable(const std::string& name) const {
  for (const auto& v : variables_) {
    if (v.name() == name) {
      return v;
    }
  }
  throw UnknownVariable("no variable named '" + name + "'");
}

Catalog Catalog::builtin() {
  std::vector<LinguisticVariable> vars;
  vars.push_back(make_variable(kLineAge, "years", 0, 30, VariableKind::input,
                               {{"young", 0, 8},
                                {"middle-aged", 4, 22},
                                {"old", 18, 30}}));
  vars.push_back(make_variable(kLineExposure, "%", 0, 100, VariableKind::input,
                               {{"low", 0, 40},
                                {"average", 20, 80},
                                {"high", 60, 100}}));
  vars.push_back(make_variable(kWeather, "km/h", 0, 100, VariableKind::input,
                               {{"normal", 0, 80},
                                {"adverse", 30, 100}}));
  vars.push_back(make_variable(kLineFailureRate, "failures/year", 0.8, 3.0,
                               VariableKind::output,
                               {{"very-low", 0.8, 1.2},
                                {"low", 1.1, 1.5},
                                {"average", 1.4, 2.0},
                                {"high", 1.9, 2.5},
                                {"very-high", 2.4, 3.0}}));
  vars.push_back(make_variable(kLineRepairTime, "hours", 4, 20,
                               VariableKind::output,
                               {{"good", 4, 6},
                                {"suitable", 5, 9},
                                {"bad", 7, 15},
                                {"very-bad", 12, 20}}));
  vars.push_back(make_variable(kXfmrAge, "years", 0, 35, VariableKind::input,
                               {{"young", 0, 10},
                                {"middle-aged", 5, 25},
                                {"old", 20, 35}}));
  vars.push_back(make_variable(kXfmrMoisture, "%", 0, 100, VariableKind::input,
                               {{"low", 0, 40},
                                {"average", 20, 80},
                                {"high", 60, 100}}));
  vars.push_back(make_variable(kXfmrMaintenance, "checks/year", 0, 10,
                               VariableKind::input,
                               {{"unsuitable", 0, 7},
                                {"suitable", 3, 10}}));
  vars.push_back(make_variable(kXfmrFailureRate, "failures/year", 0.8, 2.5,
                               VariableKind::output,
                               {{"very-low", 0.8, 1.2},
                                {"low", 1.1, 1.5},
                                {"average", 1.3, 1.7},
                                {"high", 1.6, 2.2},
                                {"very-high", 1.9, 2.5}}));
  vars.emplace_back(kXfmrRepairTime, "hours", 200.0, 200.0, VariableKind::output,
                    std::vector<LinguisticTerm>{
                        {"constant", FuzzyTrapezoid::crisp(200.0)}});
  return Catalog(std::move(vars));
}

nlohmann::ordered_json Catalog::to_json() const {
  nlohmann::ordered_json j;
  j["variables"] = nlohmann::ordered_json::array();
  for (const auto& v : variables_) {
    nlohmann::ordered_json jv;
    jv["name"] = v.name();
    jv["unit"] = v.unit();
    jv["kind"] = v.kind() == VariableKind::input ? "input" : "output";
    jv["domain"] = {v.domain_lo(), v.domain_hi()};
    jv["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : v.terms()) {
      nlohmann::ordered_json jt;
      jt["label"] = t.label;
      jt["shape"] = {t.shape.a1(), t.shape.a2(), t.shape.a3(), t.shape.a4()};
      jv["terms"].push_back(std::move(jt));
    }
    j["variables"].push_back(std::move(jv));
  }
  return j;
}

Catalog Catalog::from_json(const nlohmann::json& j) {
  try {
    std::vector<LinguisticVariable> vars;
    for (const auto& jv : j.at("variables")) {
      const std::string kind_str = jv.at("kind").get<std::string>();
      if (kind_str != "input" && kind_str != "output") {
        throw Error("variable kind must be 'input' or 'output'");
      }
      std::vector<LinguisticTerm> terms;
      for (const auto& jt : jv.at("terms")) {
        const auto& s = jt.at("shape");
        if (!s.is_array() || s.size() != 4) {
          throw Error("term shape must be a quadruple");
        }
        terms.push_back({jt.at("label").get<std::string>(),
                         FuzzyTrapezoid(s[0].get<double>(), s[1].get<double>(),
                                        s[2].get<double>(), s[3].get<double>())});
      }
      vars.emplace_back(jv.at("name").get<std::string>(),
                        jv.value("unit", std::string{}),
                        jv.at("domain").at(0).get<double>(),
                        jv.at("domain").at(1).get<double>(),
                        kind_str == "input" ? VariableKind::input
                                            : VariableKind::output,
                        std::move(terms));
    }
    return Catalog(std::move(vars));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("catalog: ") + e.what());
  }
}

void Catalog::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write catalog file '" + path + "'");
  }
  out << to_json().dump(2) << "\n";
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot read catalog file '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return from_json(j);
}

}  // namespace gridfuzz

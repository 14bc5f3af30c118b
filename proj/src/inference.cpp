#include "gridfuzz/inference.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace gridfuzz {

SeverityMap default_severity_map() {
  SeverityMap m;
  m[kLineAge] = {{"young", 0}, {"middle-aged", 1}, {"old", 2}};
  m[kLineExposure] = {{"low", 0}, {"average", 1}, {"high", 2}};
  m[kWeather] = {{"normal", 0}, {"adverse", 1}};
  m[kXfmrAge] = {{"young", 0}, {"middle-aged", 1}, {"old", 2}};
  m[kXfmrMoisture] = {{"low", 0}, {"average", 1}, {"high", 2}};
  m[kXfmrMaintenance] = {{"suitable", 0}, {"unsuitable", 1}};
  return m;
}

RuleBase::RuleBase(std::string output_variable, std::vector<Rule> rules,
                   SeverityMap severity)
    : output_variable_(std::move(output_variable)),
      rules_(std::move(rules)),
      severity_(std::move(severity)) {
  for (const auto& r : rules_) {
    if (r.consequent.first != output_variable_) {
      throw Error("rule consequent targets '" + r.consequent.first +
                  "' but the base is for '" + output_variable_ + "'");
    }
    if (!(r.weight > 0.0 && r.weight <= 1.0)) {
      throw Error("rule weight must lie in (0, 1]");
    }
    if (r.antecedents.empty()) {
      throw Error("rule has no antecedents");
    }
  }
}

void RuleBase::validate_against(const Catalog& catalog) const {
  const auto& out = catalog.variable(output_variable_);
  for (const auto& r : rules_) {
    for (const auto& [var, term] : r.antecedents) {
      const auto& v = catalog.variable(var);
      if (v.find_term(term) == nullptr) {
        throw UnknownTerm("variable '" + var + "' has no term '" + term + "'");
      }
    }
    if (out.find_term(r.consequent.second) == nullptr) {
      throw UnknownTerm("variable '" + output_variable_ + "' has no term '" +
                        r.consequent.second + "'");
    }
  }
}

bool RuleBase::is_incomplete(const Catalog& catalog) const {
  // Collect the antecedent variables actually used, then walk the cartesian
  // product of their terms and look for a combination no rule matches. A rule
  // matches when each of its antecedents names the combination's term.
  std::vector<std::string> vars;
  for (const auto& r : rules_) {
    for (const auto& [var, term] : r.antecedents) {
      if (std::find(vars.begin(), vars.end(), var) == vars.end()) {
        vars.push_back(var);
      }
    }
  }
  if (vars.empty()) {
    return true;
  }
  std::vector<std::size_t> sizes;
  sizes.reserve(vars.size());
  for (const auto& v : vars) {
    sizes.push_back(catalog.variable(v).terms().size());
  }
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    bool matched = false;
    for (const auto& r : rules_) {
      bool ok = true;
      for (const auto& [var, term] : r.antecedents) {
        const auto it = std::find(vars.begin(), vars.end(), var);
        const auto pos = static_cast<std::size_t>(it - vars.begin());
        if (catalog.variable(var).terms()[idx[pos]].label != term) {
          ok = false;
          break;
        }
      }
      if (ok) {
        matched = true;
        break;
      }
    }
    if (!matched) {
      return true;
    }
    std::size_t d = 0;
    while (d < idx.size() && ++idx[d] == sizes[d]) {
      idx[d] = 0;
      ++d;
    }
    if (d == idx.size()) {
      break;
    }
  }
  return false;
}

RuleBase generate_default_rules(const Catalog& catalog,
                                const std::vector<std::string>& input_variables,
                                const std::string& output_variable,
                                const SeverityMap& severity) {
  const auto& out = catalog.variable(output_variable);
  const auto& out_terms = out.terms();
  if (out_terms.size() < 2) {
    throw UnorderedOutput("output '" + output_variable +
                          "' needs at least two terms to form a ladder");
  }
  for (std::size_t i = 0; i + 1 < out_terms.size(); ++i) {
    if (!(out_terms[i].shape.a1() < out_terms[i + 1].shape.a1() &&
          out_terms[i].shape.a4() < out_terms[i + 1].shape.a4())) {
      throw UnorderedOutput("terms of '" + output_variable +
                            "' are not a strictly ordered ladder");
    }
  }

  struct InputInfo {
    const LinguisticVariable* var;
    const std::map<std::string, int>* ordinals;
    int max_ordinal;
  };
  std::vector<InputInfo> infos;
  infos.reserve(input_variables.size());
  for (const auto& name : input_variables) {
    const auto& var = catalog.variable(name);
    const auto sev_it = severity.find(name);
    if (sev_it == severity.end()) {
      throw Error("no severity ordinals for variable '" + name + "'");
    }
    int max_ord = 0;
    for (const auto& t : var.terms()) {
      const auto ord_it = sev_it->second.find(t.label);
      if (ord_it == sev_it->second.end()) {
        throw Error("no severity ordinal for term '" + t.label + "' of '" +
                    name + "'");
      }
      max_ord = std::max(max_ord, ord_it->second);
    }
    if (max_ord <= 0) {
      throw Error("severity ordinals of '" + name + "' are all zero");
    }
    infos.push_back({&var, &sev_it->second, max_ord});
  }
  if (infos.empty()) {
    throw Error("rule generation needs at least one input variable");
  }

  // Normalized severity score = (sum_i ord_i/max_i) / n. Consequent index =
  // floor(score * (T-1)), evaluated exactly over a common denominator so the
  // boundary combinations cannot drift across a rounding edge.
  long long denom_product = 1;
  for (const auto& info : infos) {
    denom_product *= info.max_ordinal;
  }
  const long long t_minus_1 = static_cast<long long>(out_terms.size()) - 1;
  const long long full_denom = denom_product * static_cast<long long>(infos.size());

  std::vector<Rule> rules;
  std::vector<std::size_t> idx(infos.size(), 0);
  while (true) {
    long long score_num = 0;
    Rule rule;
    rule.antecedents.reserve(infos.size());
    for (std::size_t i = 0; i < infos.size(); ++i) {
      const auto& term = infos[i].var->terms()[idx[i]];
      const int ord = infos[i].ordinals->at(term.label);
      score_num += static_cast<long long>(ord) * (denom_product / infos[i].max_ordinal);
      rule.antecedents.emplace_back(infos[i].var->name(), term.label);
    }
    const auto consequent_index =
        static_cast<std::size_t>((t_minus_1 * score_num) / full_denom);
    rule.consequent = {output_variable, out_terms[consequent_index].label};
    rules.push_back(std::move(rule));

    std::size_t d = 0;
    while (d < idx.size() && ++idx[d] == infos[d].var->terms().size()) {
      idx[d] = 0;
      ++d;
    }
    if (d == idx.size()) {
      break;
    }
  }
  return RuleBase(output_variable, std::move(rules), severity);
}

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    tokens.push_back(tok);
  }
  return tokens;
}

}  // namespace

ParsedRules parse_rule_file(const std::string& path, const Catalog& catalog) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot read rule file '" + path + "'");
  }

  std::vector<std::string> base_order;
  std::map<std::string, std::vector<Rule>> grouped;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    const auto tokens = tokenize(raw);
    if (tokens.empty()) {
      continue;
    }
    if (upper(tokens[0]) != "IF") {
      throw ParseError(path, line_no, "rule must start with IF");
    }

    Rule rule;
    std::size_t pos = 1;
    bool in_consequent = false;
    while (pos < tokens.size()) {
      const std::string var = tokens[pos];
      if (pos + 2 >= tokens.size() || upper(tokens[pos + 1]) != "IS") {
        throw ParseError(path, line_no, "expected '<variable> IS <term>'");
      }
      const std::string term = tokens[pos + 2];
      const auto& v = catalog.variable(var);
      if (v.find_term(term) == nullptr) {
        throw UnknownTerm(path + ":" + std::to_string(line_no) +
                          ": variable '" + var + "' has no term '" + term + "'");
      }
      if (in_consequent) {
        rule.consequent = {var, term};
      } else {
        rule.antecedents.emplace_back(var, term);
      }
      pos += 3;
      if (pos == tokens.size()) {
        break;
      }
      const std::string kw = upper(tokens[pos]);
      if (kw == "AND" && !in_consequent) {
        ++pos;
      } else if (kw == "THEN" && !in_consequent) {
        in_consequent = true;
        ++pos;
      } else if (kw == "WEIGHT" && in_consequent) {
        if (pos + 1 >= tokens.size()) {
          throw ParseError(path, line_no, "WEIGHT needs a value");
        }
        try {
          rule.weight = std::stod(tokens[pos + 1]);
        } catch (const std::exception&) {
          throw ParseError(path, line_no, "WEIGHT value is not a number");
        }
        if (!(rule.weight > 0.0 && rule.weight <= 1.0)) {
          throw ParseError(path, line_no, "WEIGHT must lie in (0, 1]");
        }
        pos += 2;
        if (pos != tokens.size()) {
          throw ParseError(path, line_no, "trailing tokens after WEIGHT");
        }
      } else {
        throw ParseError(path, line_no, "expected AND, THEN or WEIGHT, got '" +
                                            tokens[pos] + "'");
      }
    }
    if (!in_consequent || rule.consequent.first.empty()) {
      throw ParseError(path, line_no, "rule has no THEN clause");
    }
    if (rule.antecedents.empty()) {
      throw ParseError(path, line_no, "rule has no antecedents");
    }
    if (grouped.find(rule.consequent.first) == grouped.end()) {
      base_order.push_back(rule.consequent.first);
    }
    grouped[rule.consequent.first].push_back(std::move(rule));
  }

  ParsedRules out;
  if (grouped.empty()) {
    out.warnings.push_back("incomplete rule base: '" + path + "' defines no rules");
    return out;
  }
  for (const auto& name : base_order) {
    RuleBase base(name, std::move(grouped[name]));
    base.validate_against(catalog);
    if (base.is_incomplete(catalog)) {
      out.warnings.push_back("incomplete rule base for '" + name +
                             "': some input combinations fire no rule");
    }
    out.bases.push_back(std::move(base));
  }
  return out;
}

SampledFuzzySet infer(const RuleBase& rb, const Catalog& catalog,
                      const std::vector<FuzzifiedInput>& inputs,
                      std::size_t resolution) {
  const auto& out = catalog.variable(rb.output_variable());
  SampledFuzzySet agg(out.domain_lo(), out.domain_hi(), resolution);

  const auto lookup = [&](const std::string& var) -> const FuzzifiedInput& {
    for (const auto& in : inputs) {
      if (in.variable == var) {
        return in;
      }
    }
    throw MissingInput("no fuzzified input for variable '" + var + "'");
  };

  for (const auto& rule : rb.rules()) {
    double strength = 1.0;
    for (const auto& [var, term] : rule.antecedents) {
      strength = std::min(strength, lookup(var).grade(term));
    }
    strength *= rule.weight;
    if (strength <= 0.0) {
      continue;
    }
    const auto* term = out.find_term(rule.consequent.second);
    if (term == nullptr) {
      throw UnknownTerm("variable '" + rb.output_variable() + "' has no term '" +
                        rule.consequent.second + "'");
    }
    agg.fold_max_scaled(term->shape, strength);
  }
  return agg;
}

ComponentAssessor::ComponentAssessor(Catalog catalog, std::size_t resolution)
    : ComponentAssessor(std::move(catalog), std::vector<RuleBase>{}, resolution) {}

ComponentAssessor::ComponentAssessor(Catalog catalog, std::vector<RuleBase> overrides,
                                     std::size_t resolution)
    : catalog_(std::move(catalog)),
      line_rate_(generate_default_rules(catalog_, {kLineAge, kLineExposure, kWeather},
                                        kLineFailureRate, default_severity_map())),
      line_repair_(generate_default_rules(catalog_, {kLineAge, kLineExposure, kWeather},
                                          kLineRepairTime, default_severity_map())),
      xfmr_rate_(generate_default_rules(catalog_,
                                        {kXfmrAge, kXfmrMoisture, kXfmrMaintenance},
                                        kXfmrFailureRate, default_severity_map())),
      xfmr_repair_(FuzzyTrapezoid::crisp(0.0)),
      resolution_(resolution) {
  const auto& repair_var = catalog_.variable(kXfmrRepairTime);
  if (repair_var.terms().size() != 1) {
    throw Error("'" + std::string(kXfmrRepairTime) +
                "' must carry exactly one term");
  }
  xfmr_repair_ = repair_var.terms().front().shape;

  for (auto& base : overrides) {
    base.validate_against(catalog_);
    if (base.output_variable() == kLineFailureRate) {
      line_rate_ = std::move(base);
    } else if (base.output_variable() == kLineRepairTime) {
      line_repair_ = std::move(base);
    } else if (base.output_variable() == kXfmrFailureRate) {
      xfmr_rate_ = std::move(base);
    } else {
      throw Error("rule base targets unknown output '" + base.output_variable() +
                  "'");
    }
  }
}

ComponentReliability ComponentAssessor::assess_line(const LineInputs& in) const {
  const std::vector<FuzzifiedInput> fuzzified = {
      fuzzify(catalog_.variable(kLineAge), in.age_years),
      fuzzify(catalog_.variable(kLineExposure), in.exposure_pct),
      fuzzify(catalog_.variable(kWeather), in.wind_kmh),
  };
  const auto rate = infer(line_rate_, catalog_, fuzzified, resolution_);
  const auto repair = infer(line_repair_, catalog_, fuzzified, resolution_);
  return {rate.bounding_trapezoid(), repair.bounding_trapezoid()};
}

ComponentReliability ComponentAssessor::assess_transformer(
    const TransformerInputs& in) const {
  const std::vector<FuzzifiedInput> fuzzified = {
      fuzzify(catalog_.variable(kXfmrAge), in.age_years),
      fuzzify(catalog_.variable(kXfmrMoisture), in.moisture_pct),
      fuzzify(catalog_.variable(kXfmrMaintenance), in.checks_per_year),
  };
  const auto rate = infer(xfmr_rate_, catalog_, fuzzified, resolution_);
  return {rate.bounding_trapezoid(), xfmr_repair_};
}

}  // namespace gridfuzz

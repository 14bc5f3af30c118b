#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gridfuzz/linguistic.hpp"
#include "gridfuzz/sampled.hpp"

namespace gridfuzz {

/// Conjunctive if-then rule: every antecedent (variable, term) pair must
/// hold; the firing strength is the weighted minimum of the grades.
struct Rule {
  std::vector<std::pair<std::string, std::string>> antecedents;
  std::pair<std::string, std::string> consequent;
  double weight = 1.0;
};

/// Severity ordinal per term, per variable. Higher ordinals mean conditions
/// that push the output up the ladder.
using SeverityMap = std::map<std::string, std::map<std::string, int>>;

/// Ordinals for the built-in catalog. Note that maintenance is reversed:
/// more checks per year is the benign end.
SeverityMap default_severity_map();

class RuleBase {
 public:
  RuleBase(std::string output_variable, std::vector<Rule> rules,
           SeverityMap severity = {});

  const std::string& output_variable() const { return output_variable_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const SeverityMap& severity() const { return severity_; }

  /// Every referenced variable and term must exist in the catalog.
  void validate_against(const Catalog& catalog) const;

  /// True when some combination of input terms matches no rule.
  bool is_incomplete(const Catalog& catalog) const;

 private:
  std::string output_variable_;
  std::vector<Rule> rules_;
  SeverityMap severity_;
};

/// Enumerates the full cartesian product of the input variables' terms and
/// maps each combination onto the output ladder by its normalized severity
/// score: index = floor(score * (T-1)), evaluated in exact integer
/// arithmetic. Throws UnorderedOutput when the output terms are not a
/// strictly ordered ladder.
RuleBase generate_default_rules(const Catalog& catalog,
                                const std::vector<std::string>& input_variables,
                                const std::string& output_variable,
                                const SeverityMap& severity);

struct ParsedRules {
  std::vector<RuleBase> bases;  // one per consequent variable
  std::vector<std::string> warnings;
};

/// Rule file: one rule per line,
///   IF <var> IS <term> [AND <var> IS <term>]* THEN <var> IS <term> [WEIGHT <w>]
/// with '#' starting a comment. Rules are grouped into one base per output
/// variable; incompleteness is a warning, not an error.
ParsedRules parse_rule_file(const std::string& path, const Catalog& catalog);

/// Mamdani evaluation: min conjunction, product implication, max
/// aggregation, sampled on the output variable's domain.
SampledFuzzySet infer(const RuleBase& rb, const Catalog& catalog,
                      const std::vector<FuzzifiedInput>& inputs,
                      std::size_t resolution = SampledFuzzySet::kDefaultResolution);

struct LineInputs {
  double age_years;
  double exposure_pct;
  double wind_kmh;
};

struct TransformerInputs {
  double age_years;
  double moisture_pct;
  double checks_per_year;
};

struct ComponentReliability {
  FuzzyTrapezoid failure_rate;  // failures/year
  FuzzyTrapezoid repair_time;   // hours
};

/// Runs fuzzify -> infer -> bounding trapezoid for lines and transformers.
/// Lines infer both failure rate and repair time from age, tree exposure and
/// wind speed; transformers infer failure rate from age, oil moisture and
/// maintenance checks and carry the catalog's fixed repair time.
class ComponentAssessor {
 public:
  explicit ComponentAssessor(Catalog catalog,
                             std::size_t resolution = SampledFuzzySet::kDefaultResolution);
  ComponentAssessor(Catalog catalog, std::vector<RuleBase> overrides,
                    std::size_t resolution = SampledFuzzySet::kDefaultResolution);

  ComponentReliability assess_line(const LineInputs& in) const;
  ComponentReliability assess_transformer(const TransformerInputs& in) const;

  const Catalog& catalog() const { return catalog_; }
  const RuleBase& line_rate_rules() const { return line_rate_; }
  const RuleBase& line_repair_rules() const { return line_repair_; }
  const RuleBase& transformer_rate_rules() const { return xfmr_rate_; }
  std::size_t resolution() const { return resolution_; }

 private:
  Catalog catalog_;
  RuleBase line_rate_;
  RuleBase line_repair_;
  RuleBase xfmr_rate_;
  FuzzyTrapezoid xfmr_repair_;
  std::size_t resolution_;
};

}  // namespace gridfuzz

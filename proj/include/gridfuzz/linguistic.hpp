#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gridfuzz/fuzzy.hpp"

#include <json.hpp>

namespace gridfuzz {

struct LinguisticTerm {
  std::string label;
  FuzzyTrapezoid shape;
};

enum class VariableKind { input, output };

/// A named quantity with a closed domain and an ordered list of labeled
/// membership functions. Terms must be ordered by support start, stay inside
/// the domain, cover it without gaps, and overlap their neighbours.
class LinguisticVariable {
 public:
  LinguisticVariable(std::string name, std::string unit, double domain_lo,
                     double domain_hi, VariableKind kind,
                     std::vector<LinguisticTerm> terms);

  const std::string& name() const { return name_; }
  const std::string& unit() const { return unit_; }
  double domain_lo() const { return domain_lo_; }
  double domain_hi() const { return domain_hi_; }
  VariableKind kind() const { return kind_; }
  const std::vector<LinguisticTerm>& terms() const { return terms_; }

  const LinguisticTerm* find_term(const std::string& label) const;
  std::size_t term_index(const std::string& label) const;  // throws UnknownTerm

  double clamp(double x) const;

 private:
  std::string name_;
  std::string unit_;
  double domain_lo_;
  double domain_hi_;
  VariableKind kind_;
  std::vector<LinguisticTerm> terms_;
};

/// Support range for one term; full trapezoids are derived by the breakpoint
/// rule in make_variable.
struct TermSupport {
  std::string label;
  double start;
  double end;
};

/// Builds a variable from labeled supports: term i becomes
/// (start_i, previous end (or start_i), next start (or end_i), end_i),
/// giving shoulder edges at the domain boundaries and 0.5 crossovers in
/// every interior overlap.
LinguisticVariable make_variable(std::string name, std::string unit,
                                 double domain_lo, double domain_hi,
                                 VariableKind kind,
                                 const std::vector<TermSupport>& supports);

/// Grades of one crisp input against every term of a variable.
struct FuzzifiedInput {
  std::string variable;
  std::vector<std::pair<std::string, double>> grades;  // in term order
  bool clamped = false;

  double grade(const std::string& term) const;
};

/// Grades x against every term. Out-of-domain values are clamped to the
/// nearest bound and the result is flagged.
FuzzifiedInput fuzzify(const LinguisticVariable& v, double x);

/// The full set of input and output variables the assessors work against.
class Catalog {
 public:
  explicit Catalog(std::vector<LinguisticVariable> variables);

  /// Built-in catalog for distribution lines and transformers: line age /
  /// tree exposure / wind speed driving failure rate and repair time, and
  /// transformer age / oil moisture / maintenance checks driving failure
  /// rate with a fixed 200 h repair time.
  static Catalog builtin();

  const std::vector<LinguisticVariable>& variables() const { return variables_; }
  bool contains(const std::string& name) const;
  const LinguisticVariable& variable(const std::string& name) const;

  nlohmann::ordered_json to_json() const;
  static Catalog from_json(const nlohmann::json& j);
  void save(const std::string& path) const;
  static Catalog load(const std::string& path);

 private:
  std::vector<LinguisticVariable> variables_;
};

// Variable names used by the built-in catalog and the component assessors.
inline constexpr const char* kLineAge = "line_age";
inline constexpr const char* kLineExposure = "line_exposure";
inline constexpr const char* kWeather = "weather";
inline constexpr const char* kLineFailureRate = "line_failure_rate";
inline constexpr const char* kLineRepairTime = "line_repair_time";
inline constexpr const char* kXfmrAge = "xfmr_age";
inline constexpr const char* kXfmrMoisture = "xfmr_moisture";
inline constexpr const char* kXfmrMaintenance = "xfmr_maintenance";
inline constexpr const char* kXfmrFailureRate = "xfmr_failure_rate";
inline constexpr const char* kXfmrRepairTime = "xfmr_repair_time";

}  // namespace gridfuzz

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridfuzz/inference.hpp"

#include <json.hpp>

namespace gridfuzz {

enum class ComponentKind { line, transformer, breaker, fuse };

const char* to_string(ComponentKind kind);

struct Component {
  std::string id;
  ComponentKind kind = ComponentKind::line;
  double length_km = 0.0;  // lines only
  std::optional<LineInputs> line_inputs;
  std::optional<TransformerInputs> transformer_inputs;
  std::optional<FuzzyTrapezoid> failure_rate_override;
  std::optional<FuzzyTrapezoid> repair_time_override;
};

struct Bus {
  std::string name;
  double voltage_kv = 0.0;
};

struct Feeder {
  std::string name;
  std::vector<std::string> sections;  // line ids, source first
};

struct LoadPoint {
  std::string id;
  long customers = 0;
  double peak_load_kw = 0.0;
  double load_factor = 0.0;
  std::vector<std::string> path;  // component ids, source first
};

/// Radial distribution network: every load point is fed through a unique
/// series path of components. Loading validates ids, per-kind data and
/// radiality.
class Network {
 public:
  static Network load(const std::string& path);
  static Network from_json(const nlohmann::json& j);

  const std::vector<Bus>& buses() const { return buses_; }
  const std::vector<Feeder>& feeders() const { return feeders_; }
  const std::vector<LoadPoint>& load_points() const { return load_points_; }
  const std::map<std::string, Component>& components() const { return components_; }

  const Component& component(const std::string& id) const;

  std::size_t count(ComponentKind kind) const;

 private:
  Network() = default;
  void validate() const;

  std::vector<Bus> buses_;
  std::vector<Feeder> feeders_;
  std::vector<LoadPoint> load_points_;
  std::map<std::string, Component> components_;
};

struct LoadPointReliability {
  FuzzyTrapezoid failure_rate;   // failures/year
  FuzzyTrapezoid annual_outage;  // hours/year
};

using ComponentAssessFn = std::function<ComponentReliability(const Component&)>;

/// Series aggregation along the load point's path: the failure rate is the
/// sum of the component rates, the annual outage the sum of rate*repair
/// products.
LoadPointReliability loadpoint_reliability(const Network& net, const LoadPoint& lp,
                                           const ComponentAssessFn& assess);

}  // namespace gridfuzz

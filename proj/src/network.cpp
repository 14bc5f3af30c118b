#include "gridfuzz/network.hpp"

#include <fstream>
#include <set>

namespace gridfuzz {

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::line:
      return "line";
    case ComponentKind::transformer:
      return "transformer";
    case ComponentKind::breaker:
      return "breaker";
    case ComponentKind::fuse:
      return "fuse";
  }
  return "?";
}

namespace {

FuzzyTrapezoid trapezoid_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw ParseError("override must be a quadruple [a1, a2, a3, a4]");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
          j[3].get<double>()};
}

void read_overrides(const nlohmann::json& j, Component& c) {
  if (j.contains("lambda_override")) {
    c.failure_rate_override = trapezoid_from_json(j.at("lambda_override"));
  }
  if (j.contains("repair_override")) {
    c.repair_time_override = trapezoid_from_json(j.at("repair_override"));
  }
}

}  // namespace

const Component& Network::component(const std::string& id) const {
  const auto it = components_.find(id);
  if (it == components_.end()) {
    throw DanglingReference("no component with id '" + id + "'");
  }
  return it->second;
}

std::size_t Network::count(ComponentKind kind) const {
  std::size_t n = 0;
  for (const auto& [id, c] : components_) {
    if (c.kind == kind) {
      ++n;
    }
  }
  return n;
}

Network Network::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot read network file '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return from_json(j);
}

Network Network::from_json(const nlohmann::json& j) {
  Network net;
  try {
    for (const auto& jb : j.value("buses", nlohmann::json::array())) {
      net.buses_.push_back({jb.at("name").get<std::string>(),
                            jb.at("voltage_kv").get<double>()});
    }

    const auto insert_component = [&net](Component c) {
      if (net.components_.count(c.id) != 0) {
        throw ParseError("duplicate component id '" + c.id + "'");
      }
      net.components_.emplace(c.id, std::move(c));
    };

    for (const auto& jf : j.at("feeders")) {
      Feeder f;
      f.name = jf.at("name").get<std::string>();
      for (const auto& js : jf.at("sections")) {
        Component c;
        c.id = js.at("id").get<std::string>();
        c.kind = ComponentKind::line;
        c.length_km = js.at("length_km").get<double>();
        if (c.length_km < 0.0) {
          throw ParseError("section '" + c.id + "' has negative length");
        }
        if (js.contains("attributes")) {
          const auto& ja = js.at("attributes");
          c.line_inputs = LineInputs{ja.at("age_years").get<double>(),
                                     ja.at("exposure_pct").get<double>(),
                                     ja.at("wind_kmh").get<double>()};
        }
        read_overrides(js, c);
        f.sections.push_back(c.id);
        insert_component(std::move(c));
      }
      net.feeders_.push_back(std::move(f));
    }

    for (const auto& jt : j.at("transformers")) {
      Component c;
      c.id = jt.at("id").get<std::string>();
      c.kind = ComponentKind::transformer;
      if (jt.contains("attributes")) {
        const auto& ja = jt.at("attributes");
        c.transformer_inputs =
            TransformerInputs{ja.at("age_years").get<double>(),
                              ja.at("moisture_pct").get<double>(),
                              ja.at("checks_per_year").get<double>()};
      }
      read_overrides(jt, c);
      insert_component(std::move(c));
    }

    for (const auto& jd : j.value("devices", nlohmann::json::array())) {
      Component c;
      c.id = jd.at("id").get<std::string>();
      const std::string kind = jd.at("kind").get<std::string>();
      if (kind == "breaker") {
        c.kind = ComponentKind::breaker;
      } else if (kind == "fuse") {
        c.kind = ComponentKind::fuse;
      } else {
        throw ParseError("device '" + c.id + "' has unsupported kind '" + kind + "'");
      }
      read_overrides(jd, c);
      // Protection devices have no fuzzy model; they are only usable with
      // fixed crisp data.
      if (!c.failure_rate_override || !c.repair_time_override) {
        throw ParseError("device '" + c.id +
                         "' needs lambda_override and repair_override");
      }
      insert_component(std::move(c));
    }

    for (const auto& jl : j.at("load_points")) {
      LoadPoint lp;
      lp.id = jl.at("id").get<std::string>();
      lp.customers = jl.at("customers").get<long>();
      lp.peak_load_kw = jl.at("peak_load_kw").get<double>();
      lp.load_factor = jl.at("load_factor").get<double>();
      for (const auto& jp : jl.at("path")) {
        lp.path.push_back(jp.get<std::string>());
      }
      if (lp.customers <= 0) {
        throw ParseError("load point '" + lp.id + "' needs customers > 0");
      }
      if (!(lp.peak_load_kw > 0.0)) {
        throw ParseError("load point '" + lp.id + "' needs peak_load_kw > 0");
      }
      if (!(lp.load_factor > 0.0 && lp.load_factor <= 1.0)) {
        throw ParseError("load point '" + lp.id + "' needs load_factor in (0, 1]");
      }
      if (lp.path.empty()) {
        throw ParseError("load point '" + lp.id + "' has an empty path");
      }
      net.load_points_.push_back(std::move(lp));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("network: ") + e.what());
  }

  net.validate();
  return net;
}

void Network::validate() const {
  // Every path id must exist, and the union of per-path parent links must
  // form a forest: a component fed from two different upstream components,
  // or a parent chain that loops, breaks radiality.
  std::map<std::string, std::string> parent;
  for (const auto& lp : load_points_) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < lp.path.size(); ++i) {
      const auto& id = lp.path[i];
      if (components_.find(id) == components_.end()) {
        throw DanglingReference("load point '" + lp.id +
                                "' references missing component '" + id + "'");
      }
      if (!seen.insert(id).second) {
        throw NonRadialTopology("load point '" + lp.id +
                                "' visits component '" + id + "' twice");
      }
      if (i > 0) {
        const auto& up = lp.path[i - 1];
        const auto it = parent.find(id);
        if (it == parent.end()) {
          parent.emplace(id, up);
        } else if (it->second != up) {
          throw NonRadialTopology("component '" + id +
                                  "' is fed from both '" + it->second +
                                  "' and '" + up + "'");
        }
      }
    }
  }
  for (const auto& [start, up] : parent) {
    std::set<std::string> visited{start};
    std::string cur = up;
    while (true) {
      if (!visited.insert(cur).second) {
        throw NonRadialTopology("components around '" + cur + "' form a loop");
      }
      const auto it = parent.find(cur);
      if (it == parent.end()) {
        break;
      }
      cur = it->second;
    }
  }
  for (const auto& f : feeders_) {
    for (const auto& id : f.sections) {
      if (components_.find(id) == components_.end()) {
        throw DanglingReference("feeder '" + f.name +
                                "' references missing section '" + id + "'");
      }
    }
  }
}

LoadPointReliability loadpoint_reliability(const Network& net, const LoadPoint& lp,
                                           const ComponentAssessFn& assess) {
  FuzzyTrapezoid rate = FuzzyTrapezoid::crisp(0.0);
  FuzzyTrapezoid outage = FuzzyTrapezoid::crisp(0.0);
  for (const auto& id : lp.path) {
    const auto rel = assess(net.component(id));
    rate = add(rate, rel.failure_rate);
    outage = add(outage, mul(rel.failure_rate, rel.repair_time));
  }
  return {rate, outage};
}

}  // namespace gridfuzz

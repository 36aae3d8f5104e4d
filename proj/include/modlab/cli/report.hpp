#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "modlab/classifier.hpp"
#include "modlab/config.hpp"

namespace modlab::cli {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline Json caps_json(const Caps& c) {
  return Json{{"ring_order", c.ring_order},
              {"module_order", c.module_order},
              {"hom_count", c.hom_count},
              {"filter_left_ideals", c.filter_left_ideals}};
}

inline Json pairs_json(const std::vector<std::pair<std::string, std::string>>& ws) {
  Json out = Json::array();
  for (const auto& [k, v] : ws) out.push_back(Json{{"kind", k}, {"detail", v}});
  return out;
}

inline Json verdict_json(const TheoremVerdict& v, bool timing) {
  Json j{{"id", v.id},
         {"ring", v.ring},
         {"kind", v.kind},
         {"universe", Json{{"depth", v.params.depth}, {"size", v.universe_size}}},
         {"sides", Json::array()},
         {"agree", v.agree},
         {"witnesses", pairs_json(v.witnesses)},
         {"notes", v.notes}};
  for (const auto& s : v.sides) j["sides"].push_back(Json{{"label", s.label}, {"value", s.value}});
  if (timing) j["runtime_ms"] = v.runtime_ms;
  return j;
}

inline Json classification_json(const RingClassification& c) {
  Json flags = Json::object();
  for (const auto& [k, v] : c.flags()) flags[k] = v;
  return Json{{"flags", flags}, {"witnesses", pairs_json(c.witnesses)}};
}

inline Json firstness_json(const FirstnessReport& r) {
  Json verdicts = Json::object();
  for (const auto& [k, v] : r.verdicts) verdicts[k] = v;
  return Json{{"module", r.module}, {"verdicts", verdicts}, {"witnesses", pairs_json(r.witnesses)}};
}

namespace detail {
inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  return j.dump();
}

inline void flatten(const Json& j, const std::string& prefix, const std::string& indent, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), indent, out);
  } else if (j.is_array()) {
    bool scalars = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (scalars) {
      std::string s;
      for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "; " : "") + scalar_text(j[i]);
      out += indent + prefix + ": " + (j.empty() ? "(none)" : s) + "\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", indent, out);
    }
  } else {
    out += indent + prefix + ": " + scalar_text(j) + "\n";
  }
}
} // namespace detail

/// Human-readable rendering of a structured report: one block per check,
/// nested fields flattened to dotted keys.
inline std::string render_text(const Json& report) {
  std::string out = "modlab report (engine " + report.value("engine_version", std::string("?")) + ")\n";
  if (report.contains("ring")) out += "ring: " + report["ring"].get<std::string>() + "\n";
  if (report.contains("provenance")) detail::flatten(report["provenance"], "", "", out);
  if (report.contains("checks")) {
    std::size_t i = 0;
    for (const auto& c : report["checks"]) {
      out += "\n[" + std::to_string(++i) + "] " + c.value("check", std::string()) + "\n";
      for (auto it = c.begin(); it != c.end(); ++it)
        if (it.key() != "check") detail::flatten(it.value(), it.key(), "    ", out);
    }
  }
  for (auto it = report.begin(); it != report.end(); ++it) {
    const auto& k = it.key();
    if (k == "engine_version" || k == "schema_version" || k == "ring" || k == "provenance" || k == "checks")
      continue;
    detail::flatten(it.value(), k, "", out);
  }
  return out;
}

} // namespace modlab::cli

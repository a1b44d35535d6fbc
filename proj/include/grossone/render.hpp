#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "grossone/paradoxes.hpp"
#include "grossone/series.hpp"

namespace grossone {

inline std::string render_text(const ParadoxReport& r) {
  std::string out = r.name + ": " + (r.resolved() ? "RESOLVED" : "UNRESOLVED") + "\n";
  for (const auto& c : r.claims) out += std::string("  [") + (c.ok ? "ok" : "FAIL") + "] " + c.desc + ": " + c.value + "\n";
  out += "  " + r.narrative;
  return out;
}

inline nlohmann::json to_json(const ParadoxReport& r) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : r.claims) claims.push_back({{"desc", c.desc}, {"value", c.value}, {"ok", c.ok}});
  return {{"name", r.name}, {"claims", std::move(claims)}, {"resolved", r.resolved()}};
}

inline std::string render_text(const RamanujanAudit& a) {
  return "-3c(n) = " + format(a.lhs) + "\n" + "grouped = " + format(a.rhs) + "\n" +
         "consistent: " + (a.consistent ? "true" : "false");
}

inline nlohmann::json to_json(const RamanujanAudit& a) {
  return {{"lhs", format(a.lhs)}, {"rhs", format(a.rhs)}, {"consistent", a.consistent}};
}

}  // namespace grossone

#include "ultra/cli/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace ultra::cli {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

std::string render_text(const Report& r) {
  std::string out;
  auto line = [&](const std::string& k, const std::string& v) { out += k + " = " + v + "\n"; };
  line("command", r.command);
  line("graph", r.graph_file);
  line("graph.vertices", std::to_string(r.vertices));
  line("graph.edges", std::to_string(r.edges));
  for (const auto& c : r.checks) {
    out += "\n";
    line(c.name, c.pass ? "true" : "false");
    line(c.name + ".cases", std::to_string(c.cases));
    for (const auto& [k, v] : c.details) line(c.name + "." + k, v);
    for (const auto& w : c.witnesses) line(c.name + ".witness", w);
  }
  if (!r.facts.empty()) out += "\n";
  for (const auto& [k, v] : r.facts) line(k, v);
  if (r.timing_ms) line("timing_ms", format_ms(*r.timing_ms));
  out += "\n";
  line("result", r.passed() ? "pass" : "fail");
  return out;
}

std::string render_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["command"] = r.command;
  j["graph"] = {{"file", r.graph_file}, {"vertices", r.vertices}, {"edges", r.edges}};
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json details = ordered_json::object();
    details["cases"] = std::to_string(c.cases);
    for (const auto& [k, v] : c.details) details[k] = v;
    j["checks"].push_back({{"name", c.name},
                           {"pass", c.pass},
                           {"witnesses", c.witnesses},
                           {"details", std::move(details)}});
  }
  ordered_json facts = ordered_json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  j["facts"] = std::move(facts);
  j["pass"] = r.passed();
  j["timing_ms"] = r.timing_ms ? ordered_json(*r.timing_ms) : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

}  // namespace ultra::cli

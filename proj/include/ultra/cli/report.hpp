#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ultra/check.hpp"

namespace ultra::cli {

struct Report {
  std::string command;
  std::string graph_file;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<CheckResult> checks;
  /// Informational values that never affect the exit code.
  std::vector<std::pair<std::string, std::string>> facts;
  /// Only filled when timing was requested, so reports stay byte-stable.
  std::optional<double> timing_ms;

  [[nodiscard]] bool passed() const;
};

/// `key = value` lines; one block per check, facts last.
std::string render_text(const Report& r);
/// {command, graph, checks: [{name, pass, witnesses, details}], facts, timing_ms}
std::string render_json(const Report& r);

}  // namespace ultra::cli

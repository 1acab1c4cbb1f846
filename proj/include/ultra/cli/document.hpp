#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ultra/ultragraph.hpp"

namespace ultra::cli {

/// A parsed `.ug` document. `graph` is present only when there are no
/// errors; `description` keeps the declarations with their line numbers.
struct UltragraphDocument {
  std::string text;
  GraphDescription description;
  std::optional<Ultragraph> graph;
  std::vector<Diagnostic> errors;
  std::vector<Diagnostic> warnings;

  [[nodiscard]] bool ok() const { return graph.has_value(); }
};

/// Grammar, one declaration per line, `#` starts a comment:
///   ultragraph
///   vertex <id>
///   edge <id> <source> { <id>+ }
/// The header must be the first line with any tokens on it.
UltragraphDocument parse(std::string text);

/// Canonical text: header, vertices, then edges, each in index order.
std::string emit(const Ultragraph& g);

std::string format_diagnostic(const Diagnostic& d);

}  // namespace ultra::cli

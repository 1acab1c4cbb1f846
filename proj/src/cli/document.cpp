#include "ultra/cli/document.hpp"

#include <sstream>

namespace ultra::cli {

namespace {

/// Whitespace-separated tokens, with `{` and `}` always standing alone.
std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (char c : line) {
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      flush();
    } else if (c == '{' || c == '}') {
      flush();
      out.emplace_back(1, c);
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

}  // namespace

UltragraphDocument parse(std::string text) {
  UltragraphDocument doc;
  doc.text = std::move(text);
  std::istringstream in(doc.text);
  std::string line;
  int number = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++number;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (!header) {
      if (tokens.size() == 1 && tokens[0] == "ultragraph") {
        header = true;
        continue;
      }
      doc.errors.push_back({number, "missing header: expected 'ultragraph'"});
      header = true;  // report once, then keep reading declarations
    }
    const auto& kw = tokens[0];
    if (kw == "vertex") {
      if (tokens.size() != 2) {
        doc.errors.push_back({number, "expected 'vertex <id>'"});
        continue;
      }
      doc.description.vertex(tokens[1], number);
    } else if (kw == "edge") {
      if (tokens.size() < 5 || tokens[3] != "{" || tokens.back() != "}") {
        doc.errors.push_back({number, "expected 'edge <id> <source> { <id>+ }'"});
        continue;
      }
      // `{ }` parses to an empty range, which validation reports.
      std::vector<std::string> range(tokens.begin() + 4, tokens.end() - 1);
      bool nested = false;
      for (const auto& t : range) nested = nested || t == "{" || t == "}";
      if (nested) {
        doc.errors.push_back({number, "unbalanced braces in range"});
        continue;
      }
      doc.description.edge(tokens[1], tokens[2], std::move(range), number);
    } else if (kw == "ultragraph") {
      doc.errors.push_back({number, "duplicate header"});
    } else {
      doc.errors.push_back({number, "unknown declaration '" + kw + "'"});
    }
  }
  if (!header) doc.errors.push_back({number == 0 ? 1 : number, "missing header: expected 'ultragraph'"});

  auto report = validate(doc.description);
  doc.errors.insert(doc.errors.end(), report.errors.begin(), report.errors.end());
  if (doc.errors.empty()) {
    doc.graph = Ultragraph::build(doc.description);
    doc.warnings = validate(*doc.graph).warnings;
    // Attach sink warnings to the vertex declarations.
    for (auto& w : doc.warnings) {
      for (const auto& v : doc.description.vertices) {
        if (w.line == 0 && w.message.find("'" + v.name + "'") != std::string::npos) w.line = v.line;
      }
    }
  }
  return doc;
}

std::string emit(const Ultragraph& g) {
  std::string out = "ultragraph\n";
  for (VertexId v : g.vertices()) out += "vertex " + g.vertex_name(v) + "\n";
  for (EdgeId e : g.edges()) {
    out += "edge " + g.edge_name(e) + " " + g.vertex_name(g.source(e)) + " {";
    for (VertexId w : g.range(e).members()) out += " " + g.vertex_name(w);
    out += " }\n";
  }
  return out;
}

std::string format_diagnostic(const Diagnostic& d) {
  return d.line > 0 ? "line " + std::to_string(d.line) + ": " + d.message : d.message;
}

}  // namespace ultra::cli

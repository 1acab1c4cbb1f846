#include "ultra/ultragraph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "ultra/errors.hpp"

namespace ultra {

GraphDescription& GraphDescription::vertex(std::string name, int line) {
  vertices.push_back({std::move(name), line});
  return *this;
}

GraphDescription& GraphDescription::edge(std::string name, std::string source,
                                         std::vector<std::string> range, int line) {
  edges.push_back({std::move(name), std::move(source), std::move(range), line});
  return *this;
}

bool is_identifier(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
  });
}

namespace {

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

void structural_errors(const GraphDescription& d, std::vector<Diagnostic>& errors) {
  std::set<std::string, std::less<>> vertices;
  for (const auto& v : d.vertices) {
    if (!is_identifier(v.name)) {
      errors.push_back({v.line, "invalid vertex identifier " + quoted(v.name)});
    } else if (!vertices.insert(v.name).second) {
      errors.push_back({v.line, "duplicate vertex id " + quoted(v.name)});
    }
  }
  std::set<std::string, std::less<>> edges;
  for (const auto& e : d.edges) {
    if (!is_identifier(e.name)) {
      errors.push_back({e.line, "invalid edge identifier " + quoted(e.name)});
    } else if (!edges.insert(e.name).second) {
      errors.push_back({e.line, "duplicate edge id " + quoted(e.name)});
    }
    if (!vertices.contains(e.source)) {
      errors.push_back({e.line, "edge " + quoted(e.name) + ": unknown source vertex " +
                                    quoted(e.source)});
    }
    if (e.range.empty()) {
      errors.push_back({e.line, "edge " + quoted(e.name) + ": empty range"});
    }
    for (const auto& r : e.range) {
      if (!vertices.contains(r)) {
        errors.push_back({e.line, "edge " + quoted(e.name) + ": unknown range vertex " +
                                      quoted(r)});
      }
    }
  }
}

}  // namespace

ValidationReport validate(const GraphDescription& description) {
  ValidationReport report;
  structural_errors(description, report.errors);
  if (!report.errors.empty()) return report;
  return validate(Ultragraph::build(description));
}

ValidationReport validate(const Ultragraph& g) {
  ValidationReport report;
  for (VertexId v : g.vertices()) {
    // A finite ultragraph has no infinite emitters, so singular == sink.
    if (g.is_sink(v)) {
      report.sinks.push_back(g.vertex_name(v));
      report.singular_vertices.push_back(g.vertex_name(v));
      report.warnings.push_back(
          {0, "vertex " + quoted(g.vertex_name(v)) +
                  " is a sink; groupoid and simplicity operations will refuse this graph"});
    }
  }
  return report;
}

Ultragraph Ultragraph::build(const GraphDescription& description) {
  std::vector<Diagnostic> errors;
  structural_errors(description, errors);
  if (!errors.empty()) {
    std::ostringstream msg;
    msg << "malformed ultragraph:";
    for (const auto& d : errors) {
      msg << "\n  ";
      if (d.line > 0) msg << "line " << d.line << ": ";
      msg << d.message;
    }
    throw UltragraphError(msg.str());
  }

  Ultragraph g;
  for (const auto& v : description.vertices) g.vertex_names_.push_back(v.name);
  std::sort(g.vertex_names_.begin(), g.vertex_names_.end());
  for (std::size_t i = 0; i < g.vertex_names_.size(); ++i) {
    g.vertex_index_.emplace(g.vertex_names_[i], VertexId{static_cast<std::uint32_t>(i)});
  }

  std::vector<const EdgeDecl*> decls;
  for (const auto& e : description.edges) decls.push_back(&e);
  std::sort(decls.begin(), decls.end(),
            [](const EdgeDecl* a, const EdgeDecl* b) { return a->name < b->name; });
  g.out_edges_.resize(g.vertex_names_.size());
  for (std::size_t i = 0; i < decls.size(); ++i) {
    const EdgeId id{static_cast<std::uint32_t>(i)};
    g.edge_names_.push_back(decls[i]->name);
    g.edge_index_.emplace(decls[i]->name, id);
    g.single_char_edges_ = g.single_char_edges_ && decls[i]->name.size() == 1;
    const VertexId src = g.vertex_index_.at(decls[i]->source);
    g.sources_.push_back(src);
    VertexSet range;
    for (const auto& r : decls[i]->range) range.insert(g.vertex_index_.at(r));
    g.ranges_.push_back(std::move(range));
    g.out_edges_[src.value].push_back(id);
  }
  return g;
}

const std::string& Ultragraph::vertex_name(VertexId v) const { return vertex_names_.at(v.value); }
const std::string& Ultragraph::edge_name(EdgeId e) const { return edge_names_.at(e.value); }

std::optional<VertexId> Ultragraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Ultragraph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Ultragraph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw DomainError("unknown vertex '" + std::string(name) + "'");
}

EdgeId Ultragraph::edge(std::string_view name) const {
  if (auto e = find_edge(name)) return *e;
  throw DomainError("unknown edge '" + std::string(name) + "'");
}

VertexSet Ultragraph::vertex_set(std::initializer_list<std::string_view> names) const {
  VertexSet s;
  for (auto n : names) s.insert(vertex(n));
  return s;
}

std::vector<EdgeId> Ultragraph::word(std::initializer_list<std::string_view> names) const {
  std::vector<EdgeId> w;
  for (auto n : names) w.push_back(edge(n));
  return w;
}

std::vector<VertexId> Ultragraph::vertices() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < vertex_count(); ++i) out.push_back(VertexId{static_cast<std::uint32_t>(i)});
  return out;
}

std::vector<EdgeId> Ultragraph::edges() const {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < edge_count(); ++i) out.push_back(EdgeId{static_cast<std::uint32_t>(i)});
  return out;
}

bool Ultragraph::has_sinks() const {
  return std::any_of(out_edges_.begin(), out_edges_.end(),
                     [](const auto& out) { return out.empty(); });
}

void Ultragraph::require_no_sinks(std::string_view operation) const {
  for (VertexId v : vertices()) {
    if (is_sink(v)) {
      throw SinksPresentError(std::string(operation) + " requires an ultragraph without sinks; '" +
                              vertex_name(v) + "' is a sink");
    }
  }
}

bool Ultragraph::is_path(std::span<const EdgeId> word) const {
  for (EdgeId e : word) {
    if (e.value >= edge_count()) return false;
  }
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (!adjacent(word[i - 1], word[i])) return false;
  }
  return true;
}

std::string Ultragraph::format_set(const VertexSet& set) const {
  std::string out = "{";
  bool first = true;
  for (VertexId v : set.members()) {
    if (!first) out += ',';
    first = false;
    out += v.value < vertex_count() ? vertex_names_[v.value] : "#" + std::to_string(v.value);
  }
  out += '}';
  return out;
}

std::string Ultragraph::format_word(std::span<const EdgeId> word) const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0 && !single_char_edges_) out += '.';
    out += edge_name(word[i]);
  }
  return out;
}

GraphDescription Ultragraph::describe() const {
  GraphDescription d;
  for (const auto& name : vertex_names_) d.vertex(name);
  for (std::size_t i = 0; i < edge_count(); ++i) {
    std::vector<std::string> range;
    for (VertexId v : ranges_[i].members()) range.push_back(vertex_names_[v.value]);
    d.edge(edge_names_[i], vertex_names_[sources_[i].value], std::move(range));
  }
  return d;
}

bool operator==(const Ultragraph& a, const Ultragraph& b) {
  return a.vertex_names_ == b.vertex_names_ && a.edge_names_ == b.edge_names_ &&
         a.sources_ == b.sources_ && a.ranges_ == b.ranges_;
}

std::vector<EdgeId> emitted_edges(const Ultragraph& g, const VertexSet& set) {
  std::vector<EdgeId> out;
  for (EdgeId e : g.edges()) {
    if (set.contains(g.source(e))) out.push_back(e);
  }
  return out;
}

bool is_infinite_emitter(const Ultragraph& g, const VertexSet& set) {
  // ε(A) ⊆ G¹, which is finite here.
  (void)g;
  (void)set;
  return false;
}

namespace {

/// Breadth-first search over the edge-adjacency relation e → f iff
/// s(f) ∈ r(e), starting from the edges emitted by `from`. Stops at the
/// first edge satisfying `accept` and returns the word leading to it.
template <class Accept>
std::optional<std::vector<EdgeId>> edge_bfs(const Ultragraph& g, VertexId from, Accept accept) {
  const std::size_t n = g.edge_count();
  std::vector<int> parent(n, -2);  // -2 unvisited, -1 root
  std::deque<EdgeId> queue;
  for (EdgeId e : g.emitted_by(from)) {
    parent[e.value] = -1;
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const EdgeId e = queue.front();
    queue.pop_front();
    if (accept(e)) {
      std::vector<EdgeId> word;
      for (int cur = static_cast<int>(e.value); cur != -1; cur = parent[cur]) {
        word.push_back(EdgeId{static_cast<std::uint32_t>(cur)});
      }
      std::reverse(word.begin(), word.end());
      return word;
    }
    for (VertexId w : g.range(e).members()) {
      for (EdgeId f : g.emitted_by(w)) {
        if (parent[f.value] == -2) {
          parent[f.value] = static_cast<int>(e.value);
          queue.push_back(f);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool reaches(const Ultragraph& g, VertexId from, VertexId to) {
  if (from == to) return true;
  return edge_bfs(g, from, [&](EdgeId e) { return g.range(e).contains(to); }).has_value();
}

VertexSet reachable_from(const Ultragraph& g, VertexId from) {
  VertexSet out = VertexSet::singleton(from);
  edge_bfs(g, from, [&](EdgeId e) {
    out = out | g.range(e);
    return false;
  });
  return out;
}

std::optional<std::vector<EdgeId>> reaches_set(const Ultragraph& g, VertexId from,
                                               const VertexSet& target) {
  if (target.empty()) throw DomainError("reaches_set: target set must be nonempty");
  return edge_bfs(g, from, [&](EdgeId e) { return target.is_subset_of(g.range(e)); });
}

namespace fixtures {

Ultragraph gx() {
  return Ultragraph::build(GraphDescription{}
                               .vertex("v")
                               .vertex("w")
                               .vertex("u")
                               .edge("e", "v", {"w", "u"})
                               .edge("f", "w", {"v"})
                               .edge("g", "u", {"w"}));
}

Ultragraph gy() {
  return Ultragraph::build(GraphDescription{}.vertex("v").edge("e", "v", {"v"}));
}

Ultragraph gw() {
  return Ultragraph::build(GraphDescription{}
                               .vertex("a")
                               .vertex("b")
                               .edge("p", "a", {"a"})
                               .edge("q", "b", {"b"}));
}

}  // namespace fixtures

}  // namespace ultra

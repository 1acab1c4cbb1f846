#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ultra/vertex_set.hpp"

namespace ultra {

/// One `edge` declaration before name resolution.
struct EdgeDecl {
  std::string name;
  std::string source;
  std::vector<std::string> range;
  int line = 0;
};

/// Unresolved ultragraph description, as read from a document or written
/// in code. It may be malformed; `validate` reports what is wrong and
/// `Ultragraph::build` refuses it.
struct GraphDescription {
  struct VertexDecl {
    std::string name;
    int line = 0;
  };
  std::vector<VertexDecl> vertices;
  std::vector<EdgeDecl> edges;

  GraphDescription& vertex(std::string name, int line = 0);
  GraphDescription& edge(std::string name, std::string source,
                         std::vector<std::string> range, int line = 0);
};

struct Diagnostic {
  int line = 0;  // 0 when the description did not come from a document
  std::string message;
};

struct ValidationReport {
  std::vector<std::string> sinks;
  std::vector<std::string> singular_vertices;
  std::vector<Diagnostic> errors;
  std::vector<Diagnostic> warnings;

  [[nodiscard]] bool ok() const { return errors.empty(); }
};

/// A finite ultragraph. Vertices and edges are indexed in lexicographic
/// order of their names; every range set is nonempty.
class Ultragraph {
 public:
  /// Throws UltragraphError listing every structural error.
  static Ultragraph build(const GraphDescription& description);

  [[nodiscard]] std::size_t vertex_count() const { return vertex_names_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edge_names_.size(); }

  [[nodiscard]] const std::string& vertex_name(VertexId v) const;
  [[nodiscard]] const std::string& edge_name(EdgeId e) const;
  [[nodiscard]] std::optional<VertexId> find_vertex(std::string_view name) const;
  [[nodiscard]] std::optional<EdgeId> find_edge(std::string_view name) const;
  /// Throws DomainError on unknown names.
  [[nodiscard]] VertexId vertex(std::string_view name) const;
  [[nodiscard]] EdgeId edge(std::string_view name) const;
  [[nodiscard]] VertexSet vertex_set(std::initializer_list<std::string_view> names) const;
  [[nodiscard]] std::vector<EdgeId> word(std::initializer_list<std::string_view> names) const;

  [[nodiscard]] VertexId source(EdgeId e) const { return sources_[e.value]; }
  [[nodiscard]] const VertexSet& range(EdgeId e) const { return ranges_[e.value]; }
  /// s^{-1}(v), in edge order.
  [[nodiscard]] std::span<const EdgeId> emitted_by(VertexId v) const {
    return out_edges_[v.value];
  }

  [[nodiscard]] std::vector<VertexId> vertices() const;
  [[nodiscard]] std::vector<EdgeId> edges() const;
  [[nodiscard]] VertexSet all_vertices() const { return VertexSet::first_n(vertex_count()); }

  [[nodiscard]] bool is_sink(VertexId v) const { return out_edges_[v.value].empty(); }
  [[nodiscard]] bool has_sinks() const;
  /// Throws SinksPresentError naming the operation.
  void require_no_sinks(std::string_view operation) const;

  /// Edges f that may follow e in a path, i.e. s(f) in r(e).
  [[nodiscard]] bool adjacent(EdgeId e, EdgeId f) const {
    return ranges_[e.value].contains(sources_[f.value]);
  }
  [[nodiscard]] bool is_path(std::span<const EdgeId> word) const;

  /// "{u,w}" with members in canonical order.
  [[nodiscard]] std::string format_set(const VertexSet& set) const;
  /// Concatenated names when all are single characters ("efg"), otherwise
  /// dot separated ("e1.e2").
  [[nodiscard]] std::string format_word(std::span<const EdgeId> word) const;

  [[nodiscard]] GraphDescription describe() const;

  friend bool operator==(const Ultragraph& a, const Ultragraph& b);

 private:
  Ultragraph() = default;

  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::vector<VertexId> sources_;
  std::vector<VertexSet> ranges_;
  std::vector<std::vector<EdgeId>> out_edges_;
  bool single_char_edges_ = true;
};

/// Structural check of an unresolved description: unknown vertices,
/// duplicate ids, invalid identifiers and empty ranges are errors; sinks are
/// warnings.
ValidationReport validate(const GraphDescription& description);
ValidationReport validate(const Ultragraph& g);

[[nodiscard]] bool is_identifier(std::string_view token);

/// ε(A): edges whose source lies in A.
std::vector<EdgeId> emitted_edges(const Ultragraph& g, const VertexSet& set);

/// Whether ε(A) is infinite. Always false: only finite ultragraphs are
/// modelled, but Y∞ and simplicity condition (2) are written against it.
bool is_infinite_emitter(const Ultragraph& g, const VertexSet& set);

/// w ≥ v: a path α with s(α) = w and v ∈ r(α), including the length-0 path {w}.
bool reaches(const Ultragraph& g, VertexId from, VertexId to);

/// All v with from ≥ v.
VertexSet reachable_from(const Ultragraph& g, VertexId from);

/// A shortest edge word α with s(α) = from and A ⊆ r(α) (v →_α A). Words
/// of equal length are tie-broken by breadth-first order over edge indices.
std::optional<std::vector<EdgeId>> reaches_set(const Ultragraph& g, VertexId from,
                                               const VertexSet& target);

/// The three in-repo fixtures.
namespace fixtures {
Ultragraph gx();  // v→{w,u} by e, w→{v} by f, u→{w} by g
Ultragraph gy();  // single loop e at v
Ultragraph gw();  // disjoint loops p at a and q at b
}  // namespace fixtures

}  // namespace ultra

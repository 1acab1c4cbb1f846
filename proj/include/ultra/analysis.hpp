#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ultra/check.hpp"
#include "ultra/lattice.hpp"
#include "ultra/ultrapath.hpp"
#include "ultra/ultragraph.hpp"

namespace ultra {

/// e₁…eₙ with s(e₁) = base, base ∈ r(eₙ) and s(eᵢ) ≠ base for i ≥ 2.
struct Loop {
  VertexId base;
  std::vector<EdgeId> word;

  friend bool operator==(const Loop&, const Loop&) = default;
};

/// Loops at v of length ≤ max_len, shortest first, then by edge indices.
/// At most `limit` loops are returned.
std::vector<Loop> loops_at(const Ultragraph& g, VertexId v, std::size_t max_len,
                           std::size_t limit = kDefaultPathLimit);

struct ConditionK {
  bool holds = true;
  std::size_t bound = 0;
  /// Up to two loops per vertex, in vertex order.
  std::vector<std::vector<Loop>> loops;
  /// Vertices hosting exactly one loop within the bound.
  std::vector<VertexId> failing;
};

/// Every vertex hosting a loop hosts at least two, searched to length
/// `bound` (2|E| when 0).
ConditionK condition_K(const Ultragraph& g, std::size_t bound = 0);

struct Cofinality {
  bool holds = true;
  /// A vertex v and a cycle of edges none of whose sources v reaches.
  std::optional<VertexId> vertex;
  std::vector<EdgeId> cycle;
};

/// Decided by cycle detection in the edges whose sources v does not reach.
/// Throws SinksPresentError on sinks.
Cofinality is_cofinal(const Ultragraph& g);

struct Condition2 {
  bool holds = true;
  /// No lattice set emits infinitely many edges.
  bool vacuous = true;
};

Condition2 condition_2(const Ultragraph& g, const LatticeG0& lat);

enum class Verdict { SimpleByThm, NotCoveredByThm };
const char* to_string(Verdict v);

struct StructureReport {
  ConditionK condition_K;
  Cofinality cofinal;
  Condition2 condition_2;
  bool loop_free = false;
  bool essentially_principal = false;
  Verdict simplicity = Verdict::NotCoveredByThm;
  std::vector<std::string> reasons;
};

/// SimpleByThm iff (K), cofinality and condition (2) all hold. The verdict
/// never claims non-simplicity. `loop_bound` is passed to condition_K.
/// Throws SinksPresentError on sinks.
StructureReport simplicity_verdict(const Ultragraph& g, const LatticeG0& lat,
                                   std::size_t loop_bound = 0);

/// No vertex hosts a loop.
bool is_loop_free(const Ultragraph& g);

struct SkewProduct {
  Ultragraph graph;
  /// (vertex of g, level) for each skew vertex, by index.
  std::vector<std::pair<VertexId, long>> vertex_origin;
  std::vector<std::pair<EdgeId, long>> edge_origin;
};

/// G ×₁ ℤ restricted to levels [−k, k]; (e,n) : (s(e),n) → r(e)×{n+1} for
/// n < k. Vertex (v,n) is named v_L<n> with "m" for a minus sign.
SkewProduct skew_product(const Ultragraph& g, std::size_t k);

/// (g has no singular vertices) ⟺ (levels −k+1..k−1 of the skew window have
/// none). Throws DomainError for k < 2.
bool check_singular_equivalence(const Ultragraph& g, std::size_t k);

/// |s′⁻¹(v,n)| = |s⁻¹(v)| at every interior level.
bool check_skew_fibers(const Ultragraph& g, std::size_t k);

/// For every ordered pair of lassos (γ₁, γ₂) within the bounds, an element
/// (γ₂[0,depth)·β·σʲγ₁, lag, γ₁) of the groupoid: the orbit of γ₁ meets the
/// depth-`depth` cylinder of γ₂. Throws SinksPresentError on sinks.
CheckResult check_minimality_echo(const Ultragraph& g, std::size_t prefix_bound,
                                  std::size_t cycle_bound, std::size_t depth);

}  // namespace ultra

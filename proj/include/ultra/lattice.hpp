#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ultra/ultragraph.hpp"
#include "ultra/vertex_set.hpp"

namespace ultra {

/// Why a set is in the lattice. A set that is both a singleton and an edge
/// range is marked Singleton.
enum class SetOrigin { Empty, Singleton, EdgeRange, Derived };

const char* to_string(SetOrigin origin);

/// The lattice G⁰: the closure of {∅} ∪ {{v}} ∪ {r(e)} under pairwise union
/// and intersection. Stores ∅ so that ∪ and ∩ stay total; ∅ is never a
/// legal ultrapath.
class LatticeG0 {
 public:
  /// Sets in canonical order.
  [[nodiscard]] std::span<const VertexSet> sets() const { return sets_; }
  [[nodiscard]] SetOrigin origin(std::size_t index) const { return origins_.at(index); }
  [[nodiscard]] std::size_t size() const { return sets_.size(); }
  [[nodiscard]] bool contains(const VertexSet& s) const { return index_.contains(s); }
  [[nodiscard]] std::optional<std::size_t> index_of(const VertexSet& s) const;
  /// All sets except ∅, canonical order.
  [[nodiscard]] std::vector<VertexSet> nonempty_sets() const;
  /// Nonempty lattice sets contained in `bound`, canonical order.
  [[nodiscard]] std::vector<VertexSet> nonempty_subsets_of(const VertexSet& bound) const;

  friend bool operator==(const LatticeG0& a, const LatticeG0& b) { return a.sets_ == b.sets_; }

 private:
  friend LatticeG0 make_lattice(std::vector<VertexSet>, std::vector<SetOrigin>);

  std::vector<VertexSet> sets_;
  std::vector<SetOrigin> origins_;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> index_;
};

inline constexpr std::size_t kDefaultLatticeLimit = std::size_t{1} << 16;

/// Worklist fixpoint of pairwise ∪/∩ over `generators`, deduplicated,
/// canonical order. Throws SizeLimitError once more than `max_size` sets
/// are produced.
std::vector<VertexSet> close_under_union_intersection(std::vector<VertexSet> generators,
                                                      std::size_t max_size);

/// Requires max_size ≥ |V| + |E| + 1 (DomainError otherwise).
LatticeG0 generate_lattice(const Ultragraph& g, std::size_t max_size = kDefaultLatticeLimit);

/// Whether χ_A is additive on the lattice: χ_A(∅) = 0 and
/// χ_A(B∪C) = χ_A(B) + χ_A(C) − χ_A(B∩C) for all B, C, where χ_A(B) = [A ⊆ B].
/// Throws DomainError if A ∉ lat or A = ∅.
bool is_ultraset(const Ultragraph& g, const LatticeG0& lat, const VertexSet& set);

/// Exhaustive pairwise check that the lattice is closed under ∪ and ∩.
bool is_closed_under_union_intersection(const LatticeG0& lat);

}  // namespace ultra

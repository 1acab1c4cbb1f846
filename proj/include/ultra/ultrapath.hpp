#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ultra/lattice.hpp"
#include "ultra/ultragraph.hpp"
#include "ultra/vertex_set.hpp"

namespace ultra {

/// An element of the ultrapath space p: either a lattice set A (length 0,
/// empty word) or a pair (α, A) with α a path and A ⊆ r(α) a nonempty
/// lattice set.
struct Ultrapath {
  std::vector<EdgeId> word;
  VertexSet terminal;

  static Ultrapath set(VertexSet a) { return Ultrapath{{}, std::move(a)}; }

  [[nodiscard]] std::size_t length() const { return word.size(); }
  [[nodiscard]] bool is_set() const { return word.empty(); }
  /// r(x)
  [[nodiscard]] const VertexSet& range() const { return terminal; }

  friend bool operator==(const Ultrapath&, const Ultrapath&) = default;
  /// Canonical order: by length, then edge word, then terminal set.
  friend std::strong_ordering operator<=>(const Ultrapath& a, const Ultrapath& b);
};

/// (α, r(α)) for a nonempty path α.
Ultrapath embed_path(const Ultragraph& g, std::vector<EdgeId> word);

/// Validates and builds; throws DomainError when the word is not a path,
/// the terminal is empty, outside r(α), or not a lattice set.
Ultrapath make_ultrapath(const Ultragraph& g, const LatticeG0& lat, std::vector<EdgeId> word,
                         VertexSet terminal);

[[nodiscard]] bool is_valid(const Ultragraph& g, const LatticeG0& lat, const Ultrapath& x);

/// s(x): {s(e₁)} for |x| ≥ 1, the set itself for |x| = 0.
VertexSet source(const Ultragraph& g, const Ultrapath& x);

/// x·y, defined iff r(x) ∩ s(y) ≠ ∅:
///  both of positive length: (αβ, B) when s(β) ∈ A;
///  both sets: x ∩ y;
///  x a set: y when s(y) ∈ x;
///  y a set: x_y = (α, A ∩ y).
/// Throws DomainError when an operand does not belong to `g`.
std::optional<Ultrapath> concat(const Ultragraph& g, const Ultrapath& x, const Ultrapath& y);

/// Some x′ with x = y·x′ and s(x′) ∩ r(y) ≠ ∅. When |x| = |y| the remainder
/// is the length-0 path terminal(x), the smallest witness.
std::optional<Ultrapath> initial_segment(const Ultragraph& g, const Ultrapath& x,
                                         const Ultrapath& y);

bool comparable(const Ultragraph& g, const Ultrapath& x, const Ultrapath& y);

inline constexpr std::size_t kDefaultPathLimit = 1'000'000;

/// Every ultrapath of length ≤ max_len in canonical order.
std::vector<Ultrapath> enumerate_paths(const Ultragraph& g, const LatticeG0& lat,
                                       std::size_t max_len,
                                       std::size_t max_count = kDefaultPathLimit);

/// Every edge path of length exactly n, lexicographic.
std::vector<std::vector<EdgeId>> enumerate_words(const Ultragraph& g, std::size_t n,
                                                 std::size_t max_count = kDefaultPathLimit);

std::string format(const Ultragraph& g, const Ultrapath& x);

/// An eventually periodic infinite path prefix·cycle·cycle·…, always held in
/// canonical form: the cycle is primitive and the prefix is as short as
/// possible. Two lassos are equal iff their unrolled edge sequences are.
class LassoPath {
 public:
  /// Validates adjacency (including cycle wrap-around) and canonicalizes.
  static LassoPath make(const Ultragraph& g, std::vector<EdgeId> prefix,
                        std::vector<EdgeId> cycle);
  /// Canonicalizes without checking adjacency. The cycle must be nonempty.
  static LassoPath canonical(std::vector<EdgeId> prefix, std::vector<EdgeId> cycle);

  [[nodiscard]] std::span<const EdgeId> prefix() const { return prefix_; }
  [[nodiscard]] std::span<const EdgeId> cycle() const { return cycle_; }

  /// i-th edge of the unrolled word, 0-based.
  [[nodiscard]] EdgeId at(std::size_t i) const;
  [[nodiscard]] std::vector<EdgeId> unroll(std::size_t n) const;
  [[nodiscard]] VertexId source(const Ultragraph& g) const { return g.source(at(0)); }
  /// σᵏ: drops the first k edges.
  [[nodiscard]] LassoPath drop(std::size_t k) const;
  [[nodiscard]] bool starts_with(std::span<const EdgeId> word) const;

  friend bool operator==(const LassoPath&, const LassoPath&) = default;
  /// By prefix length, cycle length, then the words.
  friend std::strong_ordering operator<=>(const LassoPath& a, const LassoPath& b);

 private:
  LassoPath(std::vector<EdgeId> prefix, std::vector<EdgeId> cycle)
      : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {}

  std::vector<EdgeId> prefix_;
  std::vector<EdgeId> cycle_;
};

[[nodiscard]] bool is_valid(const Ultragraph& g, const LassoPath& gamma);

/// y·γ, defined iff s(γ) ∈ r(y); A·γ = γ for a set A ∋ s(γ).
std::optional<LassoPath> concat_lasso(const Ultragraph& g, const Ultrapath& y,
                                      const LassoPath& gamma);

/// Canonical lassos with |prefix| ≤ prefix_bound and |cycle| ≤ cycle_bound,
/// sorted. Throws SinksPresentError if g has sinks.
std::vector<LassoPath> enumerate_lassos(const Ultragraph& g, std::size_t prefix_bound,
                                        std::size_t cycle_bound,
                                        std::size_t max_count = kDefaultPathLimit);

/// σ(γ) = e₂e₃…
LassoPath shift(const LassoPath& gamma);

/// "e(fe)^inf"
std::string format(const Ultragraph& g, const LassoPath& gamma);

}  // namespace ultra

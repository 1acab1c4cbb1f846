#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ultra/check.hpp"
#include "ultra/lattice.hpp"
#include "ultra/semigroup.hpp"
#include "ultra/ultragraph.hpp"
#include "ultra/ultrapath.hpp"

namespace ultra {

/// Ultrapaths of length ≤ max_len whose range is an ultraset emitting
/// infinitely many edges. Always empty for a finite ultragraph.
std::vector<Ultrapath> compute_Y_infinity(const Ultragraph& g, const LatticeG0& lat,
                                          std::size_t max_len);

/// A point of the unit space X = Y∞ ∪ p^∞. On finite ultragraphs Y∞ is
/// empty, so every boundary path is an infinite path (held as a lasso).
class BoundaryPath {
 public:
  BoundaryPath(LassoPath gamma) : value_(std::move(gamma)) {}  // NOLINT(implicit)
  /// Admits y only if it lies in Y∞; throws DomainError otherwise, which on
  /// a finite ultragraph is always.
  static BoundaryPath finite(const Ultragraph& g, const LatticeG0& lat, Ultrapath y);

  [[nodiscard]] bool is_infinite() const { return std::holds_alternative<LassoPath>(value_); }
  /// Throws DomainError for the finite variant.
  [[nodiscard]] const LassoPath& lasso() const;

  friend bool operator==(const BoundaryPath&, const BoundaryPath&) = default;

 private:
  explicit BoundaryPath(Ultrapath y) : value_(std::move(y)) {}
  std::variant<Ultrapath, LassoPath> value_;
};

/// (x, y, μ) with left = x·μ, right = y·μ, r(x) = r(y).
struct GroupoidWitness {
  Ultrapath x;
  Ultrapath y;
  LassoPath mu;
};

/// (x·μ, |x| − |y|, y·μ). Equality compares (left, lag, right) only.
class GroupoidElement {
 public:
  /// Throws DomainError unless r(x) = r(y) and s(μ) ∈ r(x).
  static GroupoidElement make(const Ultragraph& g, Ultrapath x, Ultrapath y, LassoPath mu);
  /// The element (left, lag, right) if left and right share a tail at that
  /// lag, with the shortest witness (singleton terminal {s(μ)}).
  static std::optional<GroupoidElement> from_triple(const Ultragraph& g, const LassoPath& left,
                                                    long lag, const LassoPath& right);
  /// (γ, 0, γ)
  static GroupoidElement unit(const Ultragraph& g, const LassoPath& gamma);

  [[nodiscard]] const LassoPath& left() const { return left_; }
  [[nodiscard]] long lag() const { return lag_; }
  [[nodiscard]] const LassoPath& right() const { return right_; }
  [[nodiscard]] const GroupoidWitness& witness() const { return witness_; }
  [[nodiscard]] bool is_unit() const { return lag_ == 0 && left_ == right_; }

  friend bool operator==(const GroupoidElement& a, const GroupoidElement& b) {
    return a.lag_ == b.lag_ && a.left_ == b.left_ && a.right_ == b.right_;
  }
  friend std::strong_ordering operator<=>(const GroupoidElement& a, const GroupoidElement& b);

 private:
  GroupoidElement(LassoPath left, long lag, LassoPath right, GroupoidWitness witness)
      : left_(std::move(left)), lag_(lag), right_(std::move(right)), witness_(std::move(witness)) {}

  LassoPath left_;
  long lag_;
  LassoPath right_;
  GroupoidWitness witness_;
};

/// Defined iff right(a) = left(b); lags add.
std::optional<GroupoidElement> compose(const Ultragraph& g, const GroupoidElement& a,
                                       const GroupoidElement& b);
GroupoidElement inverse(const Ultragraph& g, const GroupoidElement& a);

std::string format(const Ultragraph& g, const GroupoidElement& a);

/// A′(x, y) = {(x·μ, |x| − |y|, y·μ)} ∩ 𝔊_G for a non-ω generator (x, y).
class Bisection {
 public:
  /// Throws DomainError for ω: A′(ω) is empty and is represented by an
  /// absent optional instead.
  explicit Bisection(SGElement generator);
  [[nodiscard]] const SGElement& generator() const { return generator_; }
  [[nodiscard]] long lag() const;
  friend bool operator==(const Bisection&, const Bisection&) = default;

 private:
  SGElement generator_;
};

bool bisection_member(const Ultragraph& g, const Bisection& b, const GroupoidElement& a);

/// A′(st) = A′(s)A′(t); empty when st = ω.
std::optional<Bisection> bisection_product(const Ultragraph& g, const Bisection& b1,
                                           const Bisection& b2);

/// A′(x,y) ∩ A′(z,w), decided from the words and terminals directly. On a
/// sink-free ultragraph the intersection is always empty or a single
/// bisection, which is returned.
std::optional<Bisection> bisection_intersection(const Ultragraph& g, const Bisection& b1,
                                                const Bisection& b2);

/// Bisections containing a and b respectively and intersecting trivially,
/// found by lengthening the shortest witnesses. Absent only if a = b or
/// nothing separates them within max_depth extra edges.
std::optional<std::pair<Bisection, Bisection>> separate(const Ultragraph& g,
                                                        const GroupoidElement& a,
                                                        const GroupoidElement& b,
                                                        std::size_t max_depth = 64);

/// D_(y,y);K,Q = D_(y,y) minus D_(y·e, y·e) for e ∈ K, minus D_(y_C, y_C) for
/// C ∈ Q, as a subset of the unit space.
class CylinderSet {
 public:
  /// Throws DomainError unless K ⊆ ε(r(base)) and no C ∈ Q contains r(base).
  static CylinderSet make(const Ultragraph& g, Ultrapath base, std::vector<EdgeId> excluded_edges = {},
                          std::vector<VertexSet> excluded_sets = {});

  [[nodiscard]] const Ultrapath& base() const { return base_; }
  [[nodiscard]] const std::vector<EdgeId>& excluded_edges() const { return excluded_edges_; }
  [[nodiscard]] const std::vector<VertexSet>& excluded_sets() const { return excluded_sets_; }
  /// Depth at which refinement is exact: |base| for a pure cylinder with
  /// maximal terminal, |base| + 1 otherwise.
  [[nodiscard]] std::size_t min_depth(const Ultragraph& g) const;

 private:
  CylinderSet(Ultrapath base, std::vector<EdgeId> k, std::vector<VertexSet> q)
      : base_(std::move(base)), excluded_edges_(std::move(k)), excluded_sets_(std::move(q)) {}

  Ultrapath base_;
  std::vector<EdgeId> excluded_edges_;
  std::vector<VertexSet> excluded_sets_;
};

bool cylinder_member(const Ultragraph& g, const BoundaryPath& chi, const CylinderSet& c);
/// Membership of the first edges of a boundary path, |word| ≥ |base| + 1.
bool cylinder_member_word(const Ultragraph& g, std::span<const EdgeId> word, const CylinderSet& c);

/// A depth-d normal form: the sorted edge words α of length d whose pure
/// cylinders D_(α, r(α)) partition the union of the inputs.
using Refinement = std::vector<std::vector<EdgeId>>;

/// Throws SinksPresentError on sinks and DomainError when d is below some
/// input's min_depth.
Refinement refine_to_depth(const Ultragraph& g, const std::vector<CylinderSet>& sets,
                           std::size_t d);

/// The cylinder of an idempotent bisection A′(x,x) of the unit space.
/// Throws DomainError for a non-idempotent generator.
CylinderSet unit_cylinder(const Ultragraph& g, const Bisection& b);

/// Depth-d refinement of A′(A,A), the empty list for A = ∅.
Refinement refine_unit_set(const Ultragraph& g, const VertexSet& a, std::size_t d);

Refinement refinement_union(const Refinement& a, const Refinement& b);
Refinement refinement_intersection(const Refinement& a, const Refinement& b);

/// For every pair of nonempty lattice sets at depth d:
///   A′(A∩B) = A′(A) ∩ A′(B),  A′(A∪B) = A′(A) ∪ A′(B),
///   A′(A) = ⋃_{s(e) ∈ A} A′(e,e) ∪ G′(A) with G′(A) = ∅.
CheckResult check_projection_identities(const Ultragraph& g, const LatticeG0& lat,
                                        std::size_t d);

/// q_A = 1_{A′(A,A)} for nonempty lattice sets A, t_e = 1_{A′((e,r(e)), r(e))}.
struct CKFamily {
  std::map<VertexSet, Bisection> projections;
  std::map<EdgeId, Bisection> isometries;
};

/// Throws SinksPresentError on sinks.
CKFamily ck_family(const Ultragraph& g, const LatticeG0& lat);

struct CheckReport {
  std::vector<CheckResult> checks;
  [[nodiscard]] bool pass() const;
};

/// Relations (i)-(iv) and range orthogonality for `family`, both as
/// semigroup identities and exactly on depth-`depth` refinements. Requires
/// depth ≥ 2 and no sinks.
CheckReport verify_ck(const Ultragraph& g, const LatticeG0& lat, const CKFamily& family,
                      std::size_t depth);

// Sampled groupoid checks.

/// (x·μ, |x|−|y|, y·μ) for every non-ω (x, y) ∈ element_set(g, lat, max_len)
/// and every lasso μ within the bounds, deduplicated and sorted.
std::vector<GroupoidElement> sample_elements(const Ultragraph& g, const LatticeG0& lat,
                                             std::size_t max_len, std::size_t prefix_bound,
                                             std::size_t cycle_bound);

/// Associativity where defined, a·a⁻¹·a = a, inverse involution, units
/// neutral, lag additive.
CheckResult check_groupoid_laws(const Ultragraph& g, const std::vector<GroupoidElement>& sample);

/// For every pair of generators from element_set(g, lat, max_len): an element
/// c of the sample lies in A′(st) iff c = a₁a₂ with a₁ ∈ A′(s), a₂ ∈ A′(t).
/// The reverse inclusion uses the forced decomposition a₁ = (left(c),
/// |x₁|−|y₁|, y₁·σ^{|x₁|}(left(c))), so it does not depend on the sample
/// being closed under products.
CheckResult check_bisection_homomorphism(const Ultragraph& g, const LatticeG0& lat,
                                         std::size_t max_len,
                                         const std::vector<GroupoidElement>& sample);

/// bisection_intersection agrees with membership on the sample.
CheckResult check_bisection_intersections(const Ultragraph& g, const LatticeG0& lat,
                                          std::size_t max_len,
                                          const std::vector<GroupoidElement>& sample);

/// Every pair of distinct sampled elements is separated by disjoint bisections.
CheckResult check_separation(const Ultragraph& g, const std::vector<GroupoidElement>& sample);

}  // namespace ultra

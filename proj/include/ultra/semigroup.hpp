#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ultra/check.hpp"
#include "ultra/lattice.hpp"
#include "ultra/ultragraph.hpp"
#include "ultra/ultrapath.hpp"

namespace ultra {

/// An element of S_G: the zero ω or a pair (x, y) of ultrapaths with
/// r(x) = r(y).
class SGElement {
 public:
  static SGElement omega() { return SGElement(); }
  /// Throws DomainError unless r(left) = r(right).
  static SGElement pair(Ultrapath left, Ultrapath right);
  /// (x, x)
  static SGElement diagonal(const Ultrapath& x) { return pair(x, x); }

  [[nodiscard]] bool is_omega() const { return !pair_.has_value(); }
  [[nodiscard]] const Ultrapath& left() const;
  [[nodiscard]] const Ultrapath& right() const;

  friend bool operator==(const SGElement&, const SGElement&) = default;
  /// ω first, then by (left, right).
  friend std::strong_ordering operator<=>(const SGElement& a, const SGElement& b);

 private:
  SGElement() = default;
  std::optional<std::pair<Ultrapath, Ultrapath>> pair_;
};

/// Which clause of the product produced a value.
enum class ProductRule {
  RangeMeet = 1,       // (x, r(x))(r(y), y) = (x·r(y), y·r(x))
  LeftRemainder = 2,   // (w, z)(z·x′, y) = (w·x′, y)
  RightRemainder = 3,  // (w, x·z′)(x, y) = (w, y·z′)
};

struct RuleApplication {
  ProductRule rule;
  SGElement value;
};

/// Every rule that applies to s·t with its value. Empty means s·t = ω.
std::vector<RuleApplication> applicable_rules(const Ultragraph& g, const SGElement& s,
                                              const SGElement& t);

/// The product of S_G. In builds without NDEBUG all applicable rules are
/// evaluated and required to agree.
SGElement product(const Ultragraph& g, const SGElement& s, const SGElement& t);

/// (x, y)* = (y, x), ω* = ω.
SGElement star(const SGElement& s);

bool is_idempotent(const SGElement& s);

/// e ≤ f iff e·f = e. Throws DomainError on non-idempotent input.
bool idempotent_leq(const Ultragraph& g, const SGElement& e, const SGElement& f);

/// The length/range description of the same order: for e = (z, z),
/// f = (x, x) it holds iff z·x ≠ ω and (|z| > |x| or (|z| = |x| and
/// r(z) ⊆ r(x))). ω lies below everything.
bool idempotent_leq_by_shape(const Ultragraph& g, const SGElement& e, const SGElement& f);

/// The constant semicharacter, identified with ω.
struct OmegaCharacter {
  friend bool operator==(const OmegaCharacter&, const OmegaCharacter&) = default;
};

/// A point of the unit space of the universal groupoid: an ultrapath, an
/// infinite path (as a lasso), or ω.
using Semicharacter = std::variant<Ultrapath, LassoPath, OmegaCharacter>;

/// χ(e) ∈ {0, 1}. For an ultrapath y: (x,x)(y,y) ≠ ω and either |x| < |y|
/// or |x| = |y| with r(x) ⊇ r(y). For a lasso γ: γ = x·γ′ with
/// s(γ′) ∈ r(x). Throws DomainError on non-idempotent e.
int eval(const Ultragraph& g, const Semicharacter& chi, const SGElement& e);

/// The members of `universe` on which χ is 1, in canonical order.
std::vector<SGElement> filter_of(const Ultragraph& g, const Semicharacter& chi,
                                 const std::vector<SGElement>& universe);

/// {(x, x) : x ∈ enumerate_paths(g, lat, max_len)}, canonical order.
std::vector<SGElement> idempotent_universe(const Ultragraph& g, const LatticeG0& lat,
                                           std::size_t max_len);

/// {(x, y) : x, y ∈ enumerate_paths(g, lat, max_len), r(x) = r(y)} ∪ {ω},
/// canonical order.
std::vector<SGElement> element_set(const Ultragraph& g, const LatticeG0& lat,
                                   std::size_t max_len);

std::string format(const Ultragraph& g, const SGElement& s);
std::string format(const Ultragraph& g, const Semicharacter& chi);

// Exhaustive law checks over a finite element set. Each stops at the first
// counterexample in canonical iteration order.

CheckResult check_associativity(const Ultragraph& g, const std::vector<SGElement>& elements);
/// star(s) is a generalized inverse of s and the only one inside the set.
CheckResult check_unique_inverse(const Ultragraph& g, const std::vector<SGElement>& elements);
/// All applicable product rules agree on every pair.
CheckResult check_rule_agreement(const Ultragraph& g, const std::vector<SGElement>& elements);
/// Idempotents commute; ss* and s*s are idempotent.
CheckResult check_idempotents(const Ultragraph& g, const std::vector<SGElement>& elements);
/// idempotent_leq agrees with idempotent_leq_by_shape on every idempotent pair.
CheckResult check_order_coherence(const Ultragraph& g, const std::vector<SGElement>& elements);
/// Distinct semicharacters (ultrapaths of length ≤ max_len, lassos within
/// the bounds) have distinct filters over the idempotents of length
/// ≤ universe_len, and every lasso filter reaches length universe_len.
CheckResult check_filter_injectivity(const Ultragraph& g, const LatticeG0& lat,
                                     std::size_t max_len, std::size_t prefix_bound,
                                     std::size_t cycle_bound, std::size_t universe_len);

}  // namespace ultra

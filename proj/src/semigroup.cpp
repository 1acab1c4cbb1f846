#include "ultra/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "ultra/errors.hpp"

namespace ultra {

SGElement SGElement::pair(Ultrapath left, Ultrapath right) {
  if (left.range() != right.range()) throw DomainError("SGElement: r(x) must equal r(y)");
  SGElement s;
  s.pair_.emplace(std::move(left), std::move(right));
  return s;
}

const Ultrapath& SGElement::left() const {
  if (!pair_) throw DomainError("SGElement: ω has no components");
  return pair_->first;
}

const Ultrapath& SGElement::right() const {
  if (!pair_) throw DomainError("SGElement: ω has no components");
  return pair_->second;
}

std::strong_ordering operator<=>(const SGElement& a, const SGElement& b) {
  if (a.is_omega() || b.is_omega()) return b.is_omega() <=> a.is_omega();
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

namespace {

Ultrapath must_concat(const Ultragraph& g, const Ultrapath& x, const Ultrapath& y) {
  auto out = concat(g, x, y);
  if (!out) throw std::logic_error("product: remainder does not concatenate");
  return std::move(*out);
}

}  // namespace

std::vector<RuleApplication> applicable_rules(const Ultragraph& g, const SGElement& s,
                                              const SGElement& t) {
  std::vector<RuleApplication> out;
  if (s.is_omega() || t.is_omega()) return out;
  const Ultrapath& w = s.left();
  const Ultrapath& z = s.right();
  const Ultrapath& x = t.left();
  const Ultrapath& y = t.right();

  // z = r(w) and x = r(y) are forced by r(w) = r(z), r(x) = r(y).
  if (z.is_set() && x.is_set()) {
    const VertexSet meet = z.terminal & x.terminal;
    if (!meet.empty()) {
      out.push_back({ProductRule::RangeMeet,
                     SGElement::pair(must_concat(g, w, x), must_concat(g, y, z))});
    }
  }
  if (auto rest = initial_segment(g, x, z)) {
    out.push_back({ProductRule::LeftRemainder, SGElement::pair(must_concat(g, w, *rest), y)});
  }
  if (auto rest = initial_segment(g, z, x)) {
    out.push_back({ProductRule::RightRemainder, SGElement::pair(w, must_concat(g, y, *rest))});
  }
  return out;
}

SGElement product(const Ultragraph& g, const SGElement& s, const SGElement& t) {
#ifndef NDEBUG
  auto rules = applicable_rules(g, s, t);
  if (rules.empty()) return SGElement::omega();
  for (const auto& r : rules) {
    assert(r.value == rules.front().value && "product rules disagree");
  }
  return rules.front().value;
#else
  if (s.is_omega() || t.is_omega()) return SGElement::omega();
  const Ultrapath& w = s.left();
  const Ultrapath& z = s.right();
  const Ultrapath& x = t.left();
  const Ultrapath& y = t.right();
  if (auto rest = initial_segment(g, x, z)) return SGElement::pair(must_concat(g, w, *rest), y);
  if (auto rest = initial_segment(g, z, x)) return SGElement::pair(w, must_concat(g, y, *rest));
  if (z.is_set() && x.is_set() && z.terminal.intersects(x.terminal)) {
    return SGElement::pair(must_concat(g, w, x), must_concat(g, y, z));
  }
  return SGElement::omega();
#endif
}

SGElement star(const SGElement& s) {
  if (s.is_omega()) return s;
  return SGElement::pair(s.right(), s.left());
}

bool is_idempotent(const SGElement& s) { return s.is_omega() || s.left() == s.right(); }

namespace {

void require_idempotent(const SGElement& e, const char* op) {
  if (!is_idempotent(e)) throw DomainError(std::string(op) + ": argument is not idempotent");
}

}  // namespace

bool idempotent_leq(const Ultragraph& g, const SGElement& e, const SGElement& f) {
  require_idempotent(e, "idempotent_leq");
  require_idempotent(f, "idempotent_leq");
  return product(g, e, f) == e;
}

bool idempotent_leq_by_shape(const Ultragraph& g, const SGElement& e, const SGElement& f) {
  require_idempotent(e, "idempotent_leq_by_shape");
  require_idempotent(f, "idempotent_leq_by_shape");
  if (e.is_omega()) return true;
  if (f.is_omega()) return false;
  if (product(g, e, f).is_omega()) return false;
  const Ultrapath& z = e.left();
  const Ultrapath& x = f.left();
  if (z.length() != x.length()) return z.length() > x.length();
  return z.terminal.is_subset_of(x.terminal);
}

int eval(const Ultragraph& g, const Semicharacter& chi, const SGElement& e) {
  require_idempotent(e, "eval");
  if (std::holds_alternative<OmegaCharacter>(chi)) return 1;
  if (e.is_omega()) return 0;
  const Ultrapath& x = e.left();
  if (const auto* y = std::get_if<Ultrapath>(&chi)) {
    if (product(g, e, SGElement::diagonal(*y)).is_omega()) return 0;
    if (x.length() < y->length()) return 1;
    return x.length() == y->length() && y->terminal.is_subset_of(x.terminal) ? 1 : 0;
  }
  const auto& gamma = std::get<LassoPath>(chi);
  if (!gamma.starts_with(x.word)) return 0;
  return x.terminal.contains(g.source(gamma.at(x.length()))) ? 1 : 0;
}

std::vector<SGElement> filter_of(const Ultragraph& g, const Semicharacter& chi,
                                 const std::vector<SGElement>& universe) {
  std::vector<SGElement> out;
  for (const auto& e : universe) {
    if (eval(g, chi, e) == 1) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SGElement> idempotent_universe(const Ultragraph& g, const LatticeG0& lat,
                                           std::size_t max_len) {
  std::vector<SGElement> out;
  for (const auto& x : enumerate_paths(g, lat, max_len)) out.push_back(SGElement::diagonal(x));
  return out;
}

std::vector<SGElement> element_set(const Ultragraph& g, const LatticeG0& lat,
                                   std::size_t max_len) {
  const auto paths = enumerate_paths(g, lat, max_len);
  std::vector<SGElement> out{SGElement::omega()};
  for (const auto& x : paths) {
    for (const auto& y : paths) {
      if (x.range() == y.range()) out.push_back(SGElement::pair(x, y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format(const Ultragraph& g, const SGElement& s) {
  if (s.is_omega()) return "omega";
  return "(" + format(g, s.left()) + "," + format(g, s.right()) + ")";
}

std::string format(const Ultragraph& g, const Semicharacter& chi) {
  if (const auto* y = std::get_if<Ultrapath>(&chi)) return format(g, *y);
  if (const auto* gamma = std::get_if<LassoPath>(&chi)) return format(g, *gamma);
  return "omega";
}

// ---------------------------------------------------------------------------
// Law checks

CheckResult check_associativity(const Ultragraph& g, const std::vector<SGElement>& elements) {
  CheckResult r("associativity");
  const std::size_t n = elements.size();
  // ab[i*n + j] = elements[i]·elements[j]
  std::vector<SGElement> ab;
  ab.reserve(n * n);
  for (const auto& a : elements) {
    for (const auto& b : elements) ab.push_back(product(g, a, b));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SGElement& lhs_inner = ab[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        ++r.cases;
        const SGElement lhs = product(g, lhs_inner, elements[k]);
        const SGElement rhs = product(g, elements[i], ab[j * n + k]);
        if (lhs != rhs) {
          r.fail(format(g, elements[i]) + " " + format(g, elements[j]) + " " +
                 format(g, elements[k]));
          return r;
        }
      }
    }
  }
  r.detail("elements", std::to_string(n));
  return r;
}

CheckResult check_unique_inverse(const Ultragraph& g, const std::vector<SGElement>& elements) {
  CheckResult r("unique_inverse");
  for (const auto& s : elements) {
    const SGElement ss = star(s);
    if (star(ss) != s || product(g, product(g, s, ss), s) != s ||
        product(g, product(g, ss, s), ss) != ss) {
      r.fail("star fails on " + format(g, s));
      return r;
    }
    for (const auto& t : elements) {
      ++r.cases;
      if (t == ss) continue;
      if (product(g, product(g, s, t), s) == s && product(g, product(g, t, s), t) == t) {
        r.fail("second inverse " + format(g, t) + " of " + format(g, s));
        return r;
      }
    }
  }
  r.detail("elements", std::to_string(elements.size()));
  return r;
}

CheckResult check_rule_agreement(const Ultragraph& g, const std::vector<SGElement>& elements) {
  CheckResult r("rule_agreement");
  std::size_t overlaps = 0;
  for (const auto& s : elements) {
    for (const auto& t : elements) {
      ++r.cases;
      const auto rules = applicable_rules(g, s, t);
      if (rules.size() > 1) ++overlaps;
      for (const auto& app : rules) {
        if (app.value != rules.front().value) {
          r.fail(format(g, s) + " " + format(g, t));
          return r;
        }
      }
    }
  }
  r.detail("overlapping_pairs", std::to_string(overlaps));
  return r;
}

CheckResult check_idempotents(const Ultragraph& g, const std::vector<SGElement>& elements) {
  CheckResult r("idempotents");
  std::vector<SGElement> idem;
  for (const auto& s : elements) {
    ++r.cases;
    const SGElement a = product(g, s, star(s));
    const SGElement b = product(g, star(s), s);
    if (!is_idempotent(a) || !is_idempotent(b) || product(g, a, a) != a ||
        product(g, b, b) != b) {
      r.fail("ss* or s*s not idempotent for " + format(g, s));
      return r;
    }
    if (is_idempotent(s)) idem.push_back(s);
  }
  for (const auto& e : idem) {
    for (const auto& f : idem) {
      ++r.cases;
      if (product(g, e, f) != product(g, f, e)) {
        r.fail("idempotents do not commute: " + format(g, e) + " " + format(g, f));
        return r;
      }
    }
  }
  r.detail("idempotent_count", std::to_string(idem.size()));
  return r;
}

CheckResult check_order_coherence(const Ultragraph& g, const std::vector<SGElement>& elements) {
  CheckResult r("order_coherence");
  std::vector<SGElement> idem;
  for (const auto& s : elements) {
    if (is_idempotent(s)) idem.push_back(s);
  }
  std::size_t related = 0;
  for (const auto& e : idem) {
    for (const auto& f : idem) {
      ++r.cases;
      const bool by_product = idempotent_leq(g, e, f);
      if (by_product) ++related;
      if (by_product != idempotent_leq_by_shape(g, e, f)) {
        r.fail(format(g, e) + " <= " + format(g, f));
        return r;
      }
    }
  }
  r.detail("related_pairs", std::to_string(related));
  return r;
}

CheckResult check_filter_injectivity(const Ultragraph& g, const LatticeG0& lat,
                                     std::size_t max_len, std::size_t prefix_bound,
                                     std::size_t cycle_bound, std::size_t universe_len) {
  CheckResult r("filter_injectivity");
  const auto universe = idempotent_universe(g, lat, universe_len);
  std::vector<Semicharacter> chars;
  for (auto& y : enumerate_paths(g, lat, max_len)) chars.emplace_back(std::move(y));
  const std::size_t finite_count = chars.size();
  for (auto& gamma : enumerate_lassos(g, prefix_bound, cycle_bound)) {
    chars.emplace_back(std::move(gamma));
  }

  std::vector<std::vector<bool>> masks;
  masks.reserve(chars.size());
  for (const auto& chi : chars) {
    std::vector<bool> mask(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) mask[i] = eval(g, chi, universe[i]) == 1;
    masks.push_back(std::move(mask));
  }

  for (std::size_t i = finite_count; i < chars.size(); ++i) {
    bool deep = false;
    for (std::size_t k = 0; k < universe.size() && !deep; ++k) {
      deep = masks[i][k] && universe[k].left().length() == universe_len;
    }
    if (!deep) {
      r.fail("lasso filter misses length " + std::to_string(universe_len) + ": " +
             format(g, chars[i]));
      return r;
    }
  }

  std::set<std::vector<bool>> seen;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    ++r.cases;
    if (!seen.insert(masks[i]).second) {
      auto j = static_cast<std::size_t>(
          std::find(masks.begin(), masks.end(), masks[i]) - masks.begin());
      r.fail("equal filters: " + format(g, chars[j]) + " and " + format(g, chars[i]));
      return r;
    }
  }
  r.detail("ultrapaths", std::to_string(finite_count));
  r.detail("lassos", std::to_string(chars.size() - finite_count));
  r.detail("universe", std::to_string(universe.size()));
  return r;
}

}  // namespace ultra

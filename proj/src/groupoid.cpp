#include "ultra/groupoid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "ultra/errors.hpp"

namespace ultra {

std::vector<Ultrapath> compute_Y_infinity(const Ultragraph& g, const LatticeG0& lat,
                                          std::size_t max_len) {
  std::vector<Ultrapath> out;
  for (auto& y : enumerate_paths(g, lat, max_len)) {
    if (is_ultraset(g, lat, y.range()) && is_infinite_emitter(g, y.range())) {
      out.push_back(std::move(y));
    }
  }
  return out;
}

BoundaryPath BoundaryPath::finite(const Ultragraph& g, const LatticeG0& lat, Ultrapath y) {
  if (!is_valid(g, lat, y) || !is_ultraset(g, lat, y.range()) ||
      !is_infinite_emitter(g, y.range())) {
    throw DomainError("boundary path: " + format(g, y) + " is not in Y_infinity");
  }
  return BoundaryPath(std::move(y));
}

const LassoPath& BoundaryPath::lasso() const {
  if (const auto* gamma = std::get_if<LassoPath>(&value_)) return *gamma;
  throw DomainError("boundary path is finite");
}

// ---------------------------------------------------------------------------
// Groupoid elements

namespace {

/// (γ₁…γ_m, {s(γ_{m+1})}), or the set {s(γ)} when m = 0.
Ultrapath head_with_point(const Ultragraph& g, const LassoPath& gamma, std::size_t m) {
  return Ultrapath{gamma.unroll(m), VertexSet::singleton(g.source(gamma.at(m)))};
}

}  // namespace

GroupoidElement GroupoidElement::make(const Ultragraph& g, Ultrapath x, Ultrapath y,
                                      LassoPath mu) {
  if (x.range() != y.range()) throw DomainError("groupoid element: r(x) must equal r(y)");
  auto left = concat_lasso(g, x, mu);
  auto right = concat_lasso(g, y, mu);
  if (!left || !right) throw DomainError("groupoid element: s(mu) must lie in r(x)");
  const long lag = static_cast<long>(x.length()) - static_cast<long>(y.length());
  return GroupoidElement(std::move(*left), lag, std::move(*right),
                         GroupoidWitness{std::move(x), std::move(y), std::move(mu)});
}

std::optional<GroupoidElement> GroupoidElement::from_triple(const Ultragraph& g,
                                                            const LassoPath& left, long lag,
                                                            const LassoPath& right) {
  // Once both tails are past their prefixes they are rotations of pure
  // cycles, and shifting preserves (in)equality; so m0 is the last depth
  // worth trying.
  const long lp = static_cast<long>(left.prefix().size());
  const long rp = static_cast<long>(right.prefix().size());
  const long start = std::max(0L, lag);
  const long m0 = std::max({lp, rp + lag, start});
  for (long m = start; m <= m0; ++m) {
    const auto mu = left.drop(static_cast<std::size_t>(m));
    if (mu == right.drop(static_cast<std::size_t>(m - lag))) {
      return GroupoidElement(left, lag, right,
                             GroupoidWitness{head_with_point(g, left, static_cast<std::size_t>(m)),
                                             head_with_point(g, right,
                                                             static_cast<std::size_t>(m - lag)),
                                             mu});
    }
  }
  return std::nullopt;
}

GroupoidElement GroupoidElement::unit(const Ultragraph& g, const LassoPath& gamma) {
  return *from_triple(g, gamma, 0, gamma);
}

std::strong_ordering operator<=>(const GroupoidElement& a, const GroupoidElement& b) {
  if (auto c = a.left_ <=> b.left_; c != 0) return c;
  if (auto c = a.lag_ <=> b.lag_; c != 0) return c;
  return a.right_ <=> b.right_;
}

std::optional<GroupoidElement> compose(const Ultragraph& g, const GroupoidElement& a,
                                       const GroupoidElement& b) {
  if (a.right() != b.left()) return std::nullopt;
  auto out = GroupoidElement::from_triple(g, a.left(), a.lag() + b.lag(), b.right());
  if (!out) throw std::logic_error("compose: composable elements have no common tail");
  return out;
}

GroupoidElement inverse(const Ultragraph& g, const GroupoidElement& a) {
  return *GroupoidElement::from_triple(g, a.right(), -a.lag(), a.left());
}

std::string format(const Ultragraph& g, const GroupoidElement& a) {
  return "(" + format(g, a.left()) + "," + std::to_string(a.lag()) + "," +
         format(g, a.right()) + ")";
}

// ---------------------------------------------------------------------------
// Bisections

Bisection::Bisection(SGElement generator) : generator_(std::move(generator)) {
  if (generator_.is_omega()) throw DomainError("bisection of omega is empty");
}

long Bisection::lag() const {
  return static_cast<long>(generator_.left().length()) -
         static_cast<long>(generator_.right().length());
}

namespace {

/// γ = x·μ for some μ; returns the offset |x| when it holds.
bool has_head(const Ultragraph& g, const LassoPath& gamma, const Ultrapath& x) {
  return gamma.starts_with(x.word) && x.terminal.contains(g.source(gamma.at(x.length())));
}

}  // namespace

bool bisection_member(const Ultragraph& g, const Bisection& b, const GroupoidElement& a) {
  const Ultrapath& x = b.generator().left();
  const Ultrapath& y = b.generator().right();
  if (a.lag() != b.lag()) return false;
  if (!has_head(g, a.left(), x) || !has_head(g, a.right(), y)) return false;
  return a.left().drop(x.length()) == a.right().drop(y.length());
}

std::optional<Bisection> bisection_product(const Ultragraph& g, const Bisection& b1,
                                           const Bisection& b2) {
  SGElement st = product(g, b1.generator(), b2.generator());
  if (st.is_omega()) return std::nullopt;
  return Bisection(std::move(st));
}

std::optional<Bisection> bisection_intersection(const Ultragraph& g, const Bisection& b1,
                                                const Bisection& b2) {
  if (b1.lag() != b2.lag()) return std::nullopt;
  const bool first_shorter =
      b1.generator().left().length() <= b2.generator().left().length();
  const SGElement& s = first_shorter ? b1.generator() : b2.generator();
  const SGElement& t = first_shorter ? b2.generator() : b1.generator();
  const Ultrapath& x = s.left();
  const Ultrapath& y = s.right();
  const Ultrapath& z = t.left();
  const Ultrapath& w = t.right();
  const std::size_t d = z.length() - x.length();

  if (d == 0) {
    // Same words on both sides; the tails μ start in r(x) ∩ r(z).
    if (x.word != z.word || y.word != w.word) return std::nullopt;
    VertexSet meet = x.terminal & z.terminal;
    if (meet.empty()) return std::nullopt;
    return Bisection(SGElement::pair(Ultrapath{x.word, meet}, Ultrapath{y.word, meet}));
  }
  // z = x·β·…, w = y·β·… with the same β of length d, entering r(x).
  if (!std::equal(x.word.begin(), x.word.end(), z.word.begin())) return std::nullopt;
  if (!std::equal(y.word.begin(), y.word.end(), w.word.begin())) return std::nullopt;
  if (!std::equal(z.word.begin() + static_cast<std::ptrdiff_t>(x.length()), z.word.end(),
                  w.word.begin() + static_cast<std::ptrdiff_t>(y.length()), w.word.end())) {
    return std::nullopt;
  }
  if (!x.terminal.contains(g.source(z.word[x.length()]))) return std::nullopt;
  return Bisection(t);
}

std::optional<std::pair<Bisection, Bisection>> separate(const Ultragraph& g,
                                                        const GroupoidElement& a,
                                                        const GroupoidElement& b,
                                                        std::size_t max_depth) {
  if (a == b) return std::nullopt;
  auto deepen = [&](const GroupoidElement& c, std::size_t n) {
    const std::size_t m = c.witness().x.length() + n;
    const std::size_t k = c.witness().y.length() + n;
    return Bisection(SGElement::pair(head_with_point(g, c.left(), m),
                                     head_with_point(g, c.right(), k)));
  };
  for (std::size_t n = 0; n <= max_depth; ++n) {
    Bisection u = deepen(a, n);
    Bisection v = deepen(b, n);
    if (!bisection_intersection(g, u, v)) return std::make_pair(std::move(u), std::move(v));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cylinders

CylinderSet CylinderSet::make(const Ultragraph& g, Ultrapath base,
                              std::vector<EdgeId> excluded_edges,
                              std::vector<VertexSet> excluded_sets) {
  for (EdgeId e : excluded_edges) {
    if (e.value >= g.edge_count() || !base.range().contains(g.source(e))) {
      throw DomainError("cylinder: excluded edge is not emitted by r(base)");
    }
  }
  for (const auto& c : excluded_sets) {
    if (base.range().is_subset_of(c)) {
      throw DomainError("cylinder: excluded set " + g.format_set(c) + " contains r(base)");
    }
  }
  std::sort(excluded_edges.begin(), excluded_edges.end());
  excluded_edges.erase(std::unique(excluded_edges.begin(), excluded_edges.end()),
                       excluded_edges.end());
  std::sort(excluded_sets.begin(), excluded_sets.end());
  excluded_sets.erase(std::unique(excluded_sets.begin(), excluded_sets.end()),
                      excluded_sets.end());
  return CylinderSet(std::move(base), std::move(excluded_edges), std::move(excluded_sets));
}

std::size_t CylinderSet::min_depth(const Ultragraph& g) const {
  const bool pure = excluded_edges_.empty() && excluded_sets_.empty();
  if (pure && !base_.is_set() && base_.terminal == g.range(base_.word.back())) {
    return base_.length();
  }
  return base_.length() + 1;
}

bool cylinder_member_word(const Ultragraph& g, std::span<const EdgeId> word,
                          const CylinderSet& c) {
  const Ultrapath& y = c.base();
  if (word.size() <= y.length()) throw DomainError("cylinder_member_word: word too short");
  if (!std::equal(y.word.begin(), y.word.end(), word.begin())) return false;
  const EdgeId next = word[y.length()];
  const VertexId s = g.source(next);
  if (!y.terminal.contains(s)) return false;
  const auto& k = c.excluded_edges();
  if (std::binary_search(k.begin(), k.end(), next)) return false;
  for (const auto& set : c.excluded_sets()) {
    if (set.contains(s)) return false;
  }
  return true;
}

bool cylinder_member(const Ultragraph& g, const BoundaryPath& chi, const CylinderSet& c) {
  const LassoPath& gamma = chi.lasso();
  return cylinder_member_word(g, gamma.unroll(c.base().length() + 1), c);
}

Refinement refine_to_depth(const Ultragraph& g, const std::vector<CylinderSet>& sets,
                           std::size_t d) {
  g.require_no_sinks("refine_to_depth");
  for (const auto& c : sets) {
    if (d < c.min_depth(g)) {
      throw DomainError("refine_to_depth: depth " + std::to_string(d) + " is below " +
                        std::to_string(c.min_depth(g)) + " for base " + format(g, c.base()));
    }
  }
  Refinement out;
  if (sets.empty()) return out;
  for (auto& word : enumerate_words(g, d)) {
    const bool inside = std::any_of(sets.begin(), sets.end(), [&](const CylinderSet& c) {
      if (c.min_depth(g) == d && d == c.base().length()) return word == c.base().word;
      return cylinder_member_word(g, word, c);
    });
    if (inside) out.push_back(std::move(word));
  }
  return out;
}

CylinderSet unit_cylinder(const Ultragraph& g, const Bisection& b) {
  if (!is_idempotent(b.generator())) {
    throw DomainError("unit_cylinder: generator " + format(g, b.generator()) +
                      " is not idempotent");
  }
  return CylinderSet::make(g, b.generator().left());
}

Refinement refine_unit_set(const Ultragraph& g, const VertexSet& a, std::size_t d) {
  if (a.empty()) {
    g.require_no_sinks("refine_unit_set");
    return {};
  }
  return refine_to_depth(g, {CylinderSet::make(g, Ultrapath::set(a))}, d);
}

Refinement refinement_union(const Refinement& a, const Refinement& b) {
  Refinement out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Refinement refinement_intersection(const Refinement& a, const Refinement& b) {
  Refinement out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

std::string format_refinement(const Ultragraph& g, const Refinement& r) {
  std::string out = "[";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i > 0) out += ",";
    out += g.format_word(r[i]);
  }
  return out + "]";
}

Refinement edge_range_refinement(const Ultragraph& g, EdgeId e, std::size_t d) {
  return refine_to_depth(g, {CylinderSet::make(g, embed_path(g, {e}))}, d);
}

}  // namespace

CheckResult check_projection_identities(const Ultragraph& g, const LatticeG0& lat,
                                        std::size_t d) {
  CheckResult r("projection_identities");
  r.detail("depth", std::to_string(d));
  const auto sets = lat.nonempty_sets();
  std::vector<Refinement> refined;
  for (const auto& a : sets) refined.push_back(refine_unit_set(g, a, d));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      ++r.cases;
      const auto& a = sets[i];
      const auto& b = sets[j];
      if (refine_unit_set(g, a & b, d) != refinement_intersection(refined[i], refined[j])) {
        r.fail("meet fails for " + g.format_set(a) + ", " + g.format_set(b));
        return r;
      }
      if (refine_unit_set(g, a | b, d) != refinement_union(refined[i], refined[j])) {
        r.fail("join fails for " + g.format_set(a) + ", " + g.format_set(b));
        return r;
      }
    }
    Refinement edges;
    for (EdgeId e : emitted_edges(g, sets[i])) {
      edges = refinement_union(edges, edge_range_refinement(g, e, d));
    }
    if (edges != refined[i]) {
      r.fail("edge decomposition fails for " + g.format_set(sets[i]) + ": " +
             format_refinement(g, refined[i]) + " vs " + format_refinement(g, edges));
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Cuntz–Krieger family

CKFamily ck_family(const Ultragraph& g, const LatticeG0& lat) {
  g.require_no_sinks("ck_family");
  CKFamily family;
  for (const auto& a : lat.nonempty_sets()) {
    family.projections.emplace(a, Bisection(SGElement::diagonal(Ultrapath::set(a))));
  }
  for (EdgeId e : g.edges()) {
    family.isometries.emplace(
        e, Bisection(SGElement::pair(embed_path(g, {e}), Ultrapath::set(g.range(e)))));
  }
  return family;
}

bool CheckReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

std::string format_bisection(const Ultragraph& g, const std::optional<Bisection>& b) {
  return b ? format(g, b->generator()) : std::string("empty");
}

/// Refinement of an idempotent bisection, or nothing (with a reason) when
/// the generator is not idempotent.
std::optional<Refinement> refine_projection(const Ultragraph& g, const std::optional<Bisection>& b,
                                            std::size_t d) {
  if (!b) return Refinement{};
  if (!is_idempotent(b->generator())) return std::nullopt;
  return refine_to_depth(g, {unit_cylinder(g, *b)}, d);
}

}  // namespace

CheckReport verify_ck(const Ultragraph& g, const LatticeG0& lat, const CKFamily& family,
                      std::size_t depth) {
  g.require_no_sinks("verify_ck");
  if (depth < 2) throw DomainError("verify_ck: depth must be at least 2");
  CheckReport report;

  auto q = [&](const VertexSet& a) -> std::optional<Bisection> {
    auto it = family.projections.find(a);
    if (it == family.projections.end()) return std::nullopt;
    return it->second;
  };
  auto t = [&](EdgeId e) -> std::optional<Bisection> {
    auto it = family.isometries.find(e);
    if (it == family.isometries.end()) return std::nullopt;
    return it->second;
  };
  auto t_range = [&](const Bisection& te) { return bisection_product(g, te, Bisection(star(te.generator()))); };

  {
    CheckResult c("coverage");
    const auto sets = lat.nonempty_sets();
    for (const auto& a : sets) {
      ++c.cases;
      if (!q(a)) c.fail("missing q_" + g.format_set(a));
    }
    for (const auto& [a, b] : family.projections) {
      if (!lat.contains(a) || a.empty()) c.fail("q indexed by " + g.format_set(a));
    }
    for (EdgeId e : g.edges()) {
      ++c.cases;
      if (!t(e)) c.fail("missing t_" + g.edge_name(e));
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c("q_empty_is_zero");
    ++c.cases;
    if (family.projections.contains(VertexSet{})) c.fail("q_{} is present");
    if (!refine_unit_set(g, VertexSet{}, depth).empty()) c.fail("A'(empty) refines nonempty");
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c("i_meet_and_join");
    c.detail("depth", std::to_string(depth));
    const auto sets = lat.nonempty_sets();
    for (const auto& a : sets) {
      for (const auto& b : sets) {
        if (!c.pass) break;
        ++c.cases;
        const auto qa = q(a), qb = q(b);
        if (!qa || !qb) continue;  // reported by coverage
        const auto meet = (a & b).empty() ? std::nullopt : q(a & b);
        const auto join = q(a | b);
        const auto prod = bisection_product(g, *qa, *qb);
        if (prod != meet) {
          c.fail("q_" + g.format_set(a) + " q_" + g.format_set(b) + " = " +
                 format_bisection(g, prod) + " but q_" + g.format_set(a & b) + " = " +
                 format_bisection(g, meet));
          break;
        }
        const auto ra = refine_projection(g, qa, depth);
        const auto rb = refine_projection(g, qb, depth);
        const auto rm = refine_projection(g, meet, depth);
        const auto rj = refine_projection(g, join, depth);
        if (!ra || !rb || !rm || !rj) {
          c.fail("non-idempotent projection among q_" + g.format_set(a) + ", q_" +
                 g.format_set(b));
          break;
        }
        if (refinement_intersection(*ra, *rb) != *rm) {
          c.fail("A'(A) meet A'(B) != A'(A meet B) for " + g.format_set(a) + ", " +
                 g.format_set(b) + ": " + format_refinement(g, refinement_intersection(*ra, *rb)) +
                 " vs " + format_refinement(g, *rm));
          break;
        }
        if (refinement_union(*ra, *rb) != *rj) {
          c.fail("q_{A join B} != q_A + q_B - q_{A meet B} for " + g.format_set(a) + ", " +
                 g.format_set(b) + ": " + format_refinement(g, *rj) + " vs " +
                 format_refinement(g, refinement_union(*ra, *rb)));
          break;
        }
        // Indicator form of the same identity, word by word.
        for (const auto& word : refinement_union(*rj, refinement_union(*ra, *rb))) {
          auto in = [&](const Refinement& r) {
            return std::binary_search(r.begin(), r.end(), word) ? 1 : 0;
          };
          if (in(*rj) != in(*ra) + in(*rb) - in(*rm)) {
            c.fail("indicator additivity fails at " + g.format_word(word));
            break;
          }
        }
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c("ii_source_projection");
    for (EdgeId e : g.edges()) {
      ++c.cases;
      const auto te = t(e);
      const auto qr = q(g.range(e));
      if (!te) continue;
      const auto lhs = bisection_product(g, Bisection(star(te->generator())), *te);
      if (lhs != qr) {
        c.fail("t_" + g.edge_name(e) + "* t_" + g.edge_name(e) + " = " +
               format_bisection(g, lhs) + " but q_r(" + g.edge_name(e) + ") = " +
               format_bisection(g, qr));
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c("iii_range_below_source");
    for (EdgeId e : g.edges()) {
      ++c.cases;
      const auto te = t(e);
      const auto qs = q(VertexSet::singleton(g.source(e)));
      if (!te || !qs) continue;
      const auto range = t_range(*te);
      const std::string name = "t_" + g.edge_name(e) + " t_" + g.edge_name(e) + "*";
      if (!range || !is_idempotent(range->generator()) || !is_idempotent(qs->generator())) {
        c.fail(name + " or q_s(" + g.edge_name(e) + ") is not a projection");
        continue;
      }
      if (!idempotent_leq(g, range->generator(), qs->generator())) {
        c.fail(name + " = " + format(g, range->generator()) + " not below " +
               format(g, qs->generator()));
        continue;
      }
      const auto rr = refine_projection(g, range, depth);
      const auto rq = refine_projection(g, qs, depth);
      if (refinement_intersection(*rr, *rq) != *rr) {
        c.fail(name + " refinement not inside q_s(" + g.edge_name(e) + ")");
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c("iv_vertex_decomposition");
    for (VertexId v : g.vertices()) {
      const auto out = g.emitted_by(v);
      if (out.empty()) continue;  // excluded by the 0 < |s^-1(v)| hypothesis
      ++c.cases;
      const auto qv = q(VertexSet::singleton(v));
      const auto rq = refine_projection(g, qv, depth);
      Refinement sum;
      std::size_t total = 0;
      bool ok = rq.has_value();
      for (EdgeId e : out) {
        const auto te = t(e);
        if (!te) continue;  // the summand is absent from the family
        const auto rr = ok ? refine_projection(g, t_range(*te), depth) : std::nullopt;
        if (!rr) {
          ok = false;
          break;
        }
        total += rr->size();
        sum = refinement_union(sum, *rr);
      }
      if (!ok) {
        c.fail("non-projection term at " + g.vertex_name(v));
      } else if (total != sum.size()) {
        c.fail("ranges overlap at " + g.vertex_name(v));
      } else if (sum != *rq) {
        c.fail("q_" + g.vertex_name(v) + " = " + format_refinement(g, *rq) + " but sum = " +
               format_refinement(g, sum));
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c("orthogonal_ranges");
    for (EdgeId e : g.edges()) {
      for (EdgeId f : g.edges()) {
        if (!(e < f)) continue;
        ++c.cases;
        const auto te = t(e), tf = t(f);
        if (!te || !tf) continue;
        const auto re = t_range(*te), rf = t_range(*tf);
        if (!re || !rf) continue;
        if (bisection_product(g, *re, *rf).has_value()) {
          c.fail("ranges of t_" + g.edge_name(e) + " and t_" + g.edge_name(f) + " meet");
        }
      }
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Sampled groupoid checks

std::vector<GroupoidElement> sample_elements(const Ultragraph& g, const LatticeG0& lat,
                                             std::size_t max_len, std::size_t prefix_bound,
                                             std::size_t cycle_bound) {
  const auto lassos = enumerate_lassos(g, prefix_bound, cycle_bound);
  std::set<GroupoidElement> out;
  for (const auto& s : element_set(g, lat, max_len)) {
    if (s.is_omega()) continue;
    for (const auto& mu : lassos) {
      if (!s.left().range().contains(mu.source(g))) continue;
      out.insert(GroupoidElement::make(g, s.left(), s.right(), mu));
    }
  }
  return {out.begin(), out.end()};
}

CheckResult check_groupoid_laws(const Ultragraph& g, const std::vector<GroupoidElement>& sample) {
  CheckResult r("groupoid_laws");
  std::map<LassoPath, std::vector<const GroupoidElement*>> by_left;
  for (const auto& a : sample) by_left[a.left()].push_back(&a);

  for (const auto& a : sample) {
    ++r.cases;
    const auto ai = inverse(g, a);
    if (inverse(g, ai) != a || ai.lag() != -a.lag()) {
      r.fail("inverse is not an involution at " + format(g, a));
      return r;
    }
    const auto unit_l = GroupoidElement::unit(g, a.left());
    const auto unit_r = GroupoidElement::unit(g, a.right());
    if (compose(g, unit_l, a) != a || compose(g, a, unit_r) != a) {
      r.fail("units are not neutral at " + format(g, a));
      return r;
    }
    const auto aai = compose(g, a, ai);
    if (!aai || !aai->is_unit() || aai->left() != a.left() || compose(g, *aai, a) != a) {
      r.fail("a a^-1 a != a at " + format(g, a));
      return r;
    }
  }
  for (const auto& a : sample) {
    auto bs = by_left.find(a.right());
    if (bs == by_left.end()) continue;
    for (const auto* b : bs->second) {
      const auto ab = compose(g, a, *b);
      if (!ab || ab->lag() != a.lag() + b->lag()) {
        r.fail("lag is not additive at " + format(g, a) + " " + format(g, *b));
        return r;
      }
      auto cs = by_left.find(b->right());
      if (cs == by_left.end()) continue;
      for (const auto* c : cs->second) {
        ++r.cases;
        const auto lhs = compose(g, *ab, *c);
        const auto bc = compose(g, *b, *c);
        const auto rhs = compose(g, a, *bc);
        if (lhs != rhs) {
          r.fail("not associative: " + format(g, a) + " " + format(g, *b) + " " + format(g, *c));
          return r;
        }
      }
    }
  }
  r.detail("sample", std::to_string(sample.size()));
  return r;
}

CheckResult check_bisection_homomorphism(const Ultragraph& g, const LatticeG0& lat,
                                         std::size_t max_len,
                                         const std::vector<GroupoidElement>& sample) {
  CheckResult r("bisection_homomorphism");
  std::vector<Bisection> gens;
  for (const auto& s : element_set(g, lat, max_len)) {
    if (!s.is_omega()) gens.emplace_back(s);
  }
  std::vector<std::vector<std::size_t>> members(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t k = 0; k < sample.size(); ++k) {
      if (bisection_member(g, gens[i], sample[k])) members[i].push_back(k);
    }
  }
  std::size_t products = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Ultrapath& x1 = gens[i].generator().left();
    const Ultrapath& y1 = gens[i].generator().right();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const auto prod = bisection_product(g, gens[i], gens[j]);
      // Forward: composable pairs from the sample land in A'(st).
      std::map<LassoPath, std::vector<std::size_t>> right_members;
      for (std::size_t k : members[j]) right_members[sample[k].left()].push_back(k);
      for (std::size_t a : members[i]) {
        auto it = right_members.find(sample[a].right());
        if (it == right_members.end()) continue;
        for (std::size_t b : it->second) {
          ++r.cases;
          ++products;
          const auto c = compose(g, sample[a], sample[b]);
          if (!prod || !bisection_member(g, *prod, *c)) {
            r.fail(format(g, *c) + " = a1 a2 lies outside A'(" +
                   format(g, product(g, gens[i].generator(), gens[j].generator())) + ")");
            return r;
          }
        }
      }
      // Backward: c in A'(st) forces a1 and then a2 = a1^-1 c.
      for (const auto& c : sample) {
        ++r.cases;
        const bool in_product = prod && bisection_member(g, *prod, c);
        bool decomposes = false;
        if (has_head(g, c.left(), x1)) {
          const LassoPath mu = c.left().drop(x1.length());
          const auto a1 = GroupoidElement::make(g, x1, y1, mu);
          const auto a2 = compose(g, inverse(g, a1), c);
          decomposes = bisection_member(g, gens[i], a1) && a2 &&
                       bisection_member(g, gens[j], *a2);
        }
        if (in_product != decomposes) {
          r.fail(format(g, c) + (in_product ? " in " : " not in ") + "A'(st) for s = " +
                 format(g, gens[i].generator()) + ", t = " + format(g, gens[j].generator()));
          return r;
        }
      }
    }
  }
  r.detail("generators", std::to_string(gens.size()));
  r.detail("sample", std::to_string(sample.size()));
  r.detail("composable_pairs", std::to_string(products));
  return r;
}

CheckResult check_bisection_intersections(const Ultragraph& g, const LatticeG0& lat,
                                          std::size_t max_len,
                                          const std::vector<GroupoidElement>& sample) {
  CheckResult r("bisection_intersections");
  std::vector<Bisection> gens;
  for (const auto& s : element_set(g, lat, max_len)) {
    if (!s.is_omega()) gens.emplace_back(s);
  }
  for (const auto& b1 : gens) {
    for (const auto& b2 : gens) {
      const auto meet = bisection_intersection(g, b1, b2);
      for (const auto& c : sample) {
        ++r.cases;
        const bool both = bisection_member(g, b1, c) && bisection_member(g, b2, c);
        const bool in_meet = meet && bisection_member(g, *meet, c);
        if (both != in_meet) {
          r.fail(format(g, c) + " against " + format(g, b1.generator()) + " and " +
                 format(g, b2.generator()));
          return r;
        }
      }
    }
  }
  return r;
}

CheckResult check_separation(const Ultragraph& g, const std::vector<GroupoidElement>& sample) {
  CheckResult r("hausdorff_separation");
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      ++r.cases;
      const auto sep = separate(g, sample[i], sample[j]);
      if (!sep || !bisection_member(g, sep->first, sample[i]) ||
          !bisection_member(g, sep->second, sample[j])) {
        r.fail(format(g, sample[i]) + " and " + format(g, sample[j]) + " not separated");
        return r;
      }
    }
  }
  return r;
}

}  // namespace ultra

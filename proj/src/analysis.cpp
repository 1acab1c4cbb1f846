#include "ultra/analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ultra/errors.hpp"
#include "ultra/groupoid.hpp"
#include "ultra/ultrapath.hpp"

namespace ultra {

namespace {

/// Loops at v by iterative deepening, so the first `stop_after` found are
/// the shortest ones. Returns true if the search stopped early. Walks only
/// continue through vertices that reach v.
bool search_loops(const Ultragraph& g, VertexId v, std::size_t max_len, std::size_t stop_after,
                  std::vector<Loop>& out) {
  std::vector<bool> back(g.vertex_count());
  for (VertexId w : g.vertices()) back[w.value] = reachable_from(g, w).contains(v);
  std::vector<EdgeId> walk;
  std::function<bool(std::size_t)> dfs = [&](std::size_t len) -> bool {
    if (walk.size() == len) {
      if (g.range(walk.back()).contains(v)) {
        out.push_back(Loop{v, walk});
        if (out.size() >= stop_after) return true;
      }
      return false;
    }
    const auto next = [&](EdgeId f) {
      walk.push_back(f);
      const bool stop = dfs(len);
      walk.pop_back();
      return stop;
    };
    if (walk.empty()) {
      for (EdgeId f : g.emitted_by(v)) {
        if (next(f)) return true;
      }
      return false;
    }
    for (VertexId w : g.range(walk.back()).members()) {
      if (w == v || !back[w.value]) continue;
      for (EdgeId f : g.emitted_by(w)) {
        if (next(f)) return true;
      }
    }
    return false;
  };
  for (std::size_t len = 1; len <= max_len; ++len) {
    if (dfs(len)) return true;
  }
  return false;
}

}  // namespace

std::vector<Loop> loops_at(const Ultragraph& g, VertexId v, std::size_t max_len,
                           std::size_t limit) {
  if (v.value >= g.vertex_count()) throw DomainError("loops_at: unknown vertex");
  std::vector<Loop> out;
  if (search_loops(g, v, max_len, limit + 1, out)) {
    throw SizeLimitError("loops_at: more than " + std::to_string(limit) + " loops at " +
                         g.vertex_name(v));
  }
  return out;
}

ConditionK condition_K(const Ultragraph& g, std::size_t bound) {
  ConditionK out;
  out.bound = bound == 0 ? 2 * g.edge_count() : bound;
  for (VertexId v : g.vertices()) {
    std::vector<Loop> loops;
    search_loops(g, v, out.bound, 2, loops);
    if (loops.size() == 1) {
      out.holds = false;
      out.failing.push_back(v);
    }
    out.loops.push_back(std::move(loops));
  }
  return out;
}

Cofinality is_cofinal(const Ultragraph& g) {
  g.require_no_sinks("is_cofinal");
  Cofinality out;
  const std::size_t n = g.edge_count();
  for (VertexId v : g.vertices()) {
    const VertexSet reached = reachable_from(g, v);
    std::vector<bool> bad(n);
    for (EdgeId e : g.edges()) bad[e.value] = !reached.contains(g.source(e));

    // Colouring DFS over bad edges; a back edge closes a cycle.
    std::vector<int> colour(n, 0);
    std::vector<EdgeId> stack;
    std::function<std::optional<std::vector<EdgeId>>(EdgeId)> visit =
        [&](EdgeId e) -> std::optional<std::vector<EdgeId>> {
      colour[e.value] = 1;
      stack.push_back(e);
      for (VertexId w : g.range(e).members()) {
        for (EdgeId f : g.emitted_by(w)) {
          if (!bad[f.value]) continue;
          if (colour[f.value] == 1) {
            auto it = std::find(stack.begin(), stack.end(), f);
            return std::vector<EdgeId>(it, stack.end());
          }
          if (colour[f.value] == 0) {
            if (auto c = visit(f)) return c;
          }
        }
      }
      stack.pop_back();
      colour[e.value] = 2;
      return std::nullopt;
    };
    for (EdgeId e : g.edges()) {
      if (!bad[e.value] || colour[e.value] != 0) continue;
      if (auto cycle = visit(e)) {
        out.holds = false;
        out.vertex = v;
        out.cycle = std::move(*cycle);
        return out;
      }
    }
  }
  return out;
}

Condition2 condition_2(const Ultragraph& g, const LatticeG0& lat) {
  Condition2 out;
  for (const auto& a : lat.nonempty_sets()) {
    if (!is_infinite_emitter(g, a)) continue;
    out.vacuous = false;
    for (VertexId v : g.vertices()) {
      if (!reaches_set(g, v, a)) out.holds = false;
    }
  }
  return out;
}

const char* to_string(Verdict v) {
  return v == Verdict::SimpleByThm ? "SimpleByThm" : "NotCoveredByThm";
}

StructureReport simplicity_verdict(const Ultragraph& g, const LatticeG0& lat,
                                   std::size_t loop_bound) {
  g.require_no_sinks("simplicity_verdict");
  StructureReport r;
  r.condition_K = condition_K(g, loop_bound);
  r.cofinal = is_cofinal(g);
  r.condition_2 = condition_2(g, lat);
  r.loop_free = is_loop_free(g);
  r.essentially_principal = r.condition_K.holds;
  for (VertexId v : r.condition_K.failing) {
    r.reasons.push_back("condition (K) fails: " + g.vertex_name(v) + " hosts exactly one loop " +
                        g.format_word(r.condition_K.loops[v.value].front().word));
  }
  if (!r.cofinal.holds) {
    r.reasons.push_back("not cofinal: " + g.vertex_name(*r.cofinal.vertex) +
                        " reaches no source on the cycle " + g.format_word(r.cofinal.cycle));
  }
  if (!r.condition_2.holds) r.reasons.push_back("condition (2) fails");
  r.simplicity = r.reasons.empty() ? Verdict::SimpleByThm : Verdict::NotCoveredByThm;
  return r;
}

bool is_loop_free(const Ultragraph& g) {
  // A shortest loop repeats no edge, so length |E| is enough.
  for (VertexId v : g.vertices()) {
    std::vector<Loop> loops;
    if (search_loops(g, v, g.edge_count(), 1, loops)) return false;
  }
  return true;
}

namespace {

std::string level_suffix(long n) {
  return "_L" + (n < 0 ? "m" + std::to_string(-n) : std::to_string(n));
}

}  // namespace

SkewProduct skew_product(const Ultragraph& g, std::size_t k) {
  if (k < 1) throw DomainError("skew_product: window must be at least 1");
  const long top = static_cast<long>(k);
  GraphDescription d;
  std::map<std::string, std::pair<VertexId, long>> vertex_names;
  std::map<std::string, std::pair<EdgeId, long>> edge_names;
  for (long n = -top; n <= top; ++n) {
    for (VertexId v : g.vertices()) {
      auto name = g.vertex_name(v) + level_suffix(n);
      vertex_names.emplace(name, std::make_pair(v, n));
      d.vertex(std::move(name));
    }
  }
  for (long n = -top; n < top; ++n) {
    for (EdgeId e : g.edges()) {
      std::vector<std::string> range;
      for (VertexId w : g.range(e).members()) range.push_back(g.vertex_name(w) + level_suffix(n + 1));
      auto name = g.edge_name(e) + level_suffix(n);
      edge_names.emplace(name, std::make_pair(e, n));
      d.edge(name, g.vertex_name(g.source(e)) + level_suffix(n), std::move(range));
    }
  }
  SkewProduct out{Ultragraph::build(d), {}, {}};
  for (VertexId v : out.graph.vertices()) {
    out.vertex_origin.push_back(vertex_names.at(out.graph.vertex_name(v)));
  }
  for (EdgeId e : out.graph.edges()) {
    out.edge_origin.push_back(edge_names.at(out.graph.edge_name(e)));
  }
  return out;
}

namespace {

bool interior(const SkewProduct& s, VertexId v, std::size_t k) {
  const long n = s.vertex_origin[v.value].second;
  return n > -static_cast<long>(k) && n < static_cast<long>(k);
}

}  // namespace

bool check_singular_equivalence(const Ultragraph& g, std::size_t k) {
  if (k < 2) throw DomainError("check_singular_equivalence: window must be at least 2");
  const auto s = skew_product(g, k);
  // Finite graphs have no infinite emitters, so singular means sink.
  bool skew_regular = true;
  for (VertexId v : s.graph.vertices()) {
    if (interior(s, v, k) && s.graph.is_sink(v)) skew_regular = false;
  }
  return !g.has_sinks() == skew_regular;
}

bool check_skew_fibers(const Ultragraph& g, std::size_t k) {
  const auto s = skew_product(g, k);
  for (VertexId v : s.graph.vertices()) {
    if (!interior(s, v, k)) continue;
    const VertexId base = s.vertex_origin[v.value].first;
    if (s.graph.emitted_by(v).size() != g.emitted_by(base).size()) return false;
    for (EdgeId e : s.graph.emitted_by(v)) {
      if (g.source(s.edge_origin[e.value].first) != base) return false;
    }
  }
  return true;
}

CheckResult check_minimality_echo(const Ultragraph& g, std::size_t prefix_bound,
                                  std::size_t cycle_bound, std::size_t depth) {
  g.require_no_sinks("check_minimality_echo");
  if (depth == 0) throw DomainError("check_minimality_echo: depth must be at least 1");
  CheckResult r("minimality_echo");
  r.detail("depth", std::to_string(depth));
  const auto lassos = enumerate_lassos(g, prefix_bound, cycle_bound);
  for (const auto& target : lassos) {
    const auto head = target.unroll(depth);
    for (const auto& gamma : lassos) {
      ++r.cases;
      // Shortest bridge β from r(head) to some s(γ_j), j within one period.
      const std::size_t period = gamma.prefix().size() + gamma.cycle().size();
      std::optional<std::pair<std::vector<EdgeId>, std::size_t>> best;
      for (std::size_t j = 0; j < period; ++j) {
        const VertexId t = g.source(gamma.at(j));
        for (VertexId w : g.range(head.back()).members()) {
          std::optional<std::vector<EdgeId>> beta;
          if (w == t) {
            beta.emplace();
          } else {
            beta = reaches_set(g, w, VertexSet::singleton(t));
          }
          if (beta && (!best || beta->size() < best->first.size())) best.emplace(*beta, j);
        }
      }
      if (!best) {
        r.fail("orbit of " + format(g, gamma) + " misses the cylinder of " + g.format_word(head));
        continue;
      }
      const auto& [beta, j] = *best;
      const auto tail = gamma.drop(j);
      std::vector<EdgeId> prefix = head;
      prefix.insert(prefix.end(), beta.begin(), beta.end());
      prefix.insert(prefix.end(), tail.prefix().begin(), tail.prefix().end());
      const auto left =
          LassoPath::make(g, std::move(prefix), {tail.cycle().begin(), tail.cycle().end()});
      const long lag = static_cast<long>(depth + beta.size()) - static_cast<long>(j);
      const auto a = GroupoidElement::from_triple(g, left, lag, gamma);
      if (!a || !a->left().starts_with(head) || a->right() != gamma) {
        r.fail("bridge from " + format(g, gamma) + " to " + g.format_word(head) + " is not an element");
      }
    }
  }
  r.detail("lassos", std::to_string(lassos.size()));
  return r;
}

}  // namespace ultra

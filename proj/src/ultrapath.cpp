#include "ultra/ultrapath.hpp"

#include <algorithm>
#include <set>

#include "ultra/errors.hpp"

namespace ultra {

std::strong_ordering operator<=>(const Ultrapath& a, const Ultrapath& b) {
  if (auto c = a.word.size() <=> b.word.size(); c != 0) return c;
  if (auto c = a.word <=> b.word; c != 0) return c;
  return a.terminal <=> b.terminal;
}

Ultrapath embed_path(const Ultragraph& g, std::vector<EdgeId> word) {
  if (word.empty()) throw DomainError("embed_path: empty word");
  if (!g.is_path(word)) throw DomainError("embed_path: not a path");
  VertexSet terminal = g.range(word.back());
  return Ultrapath{std::move(word), std::move(terminal)};
}

bool is_valid(const Ultragraph& g, const LatticeG0& lat, const Ultrapath& x) {
  if (x.terminal.empty() || !lat.contains(x.terminal)) return false;
  if (x.terminal.extent() > g.vertex_count()) return false;
  if (x.word.empty()) return true;
  return g.is_path(x.word) && x.terminal.is_subset_of(g.range(x.word.back()));
}

Ultrapath make_ultrapath(const Ultragraph& g, const LatticeG0& lat, std::vector<EdgeId> word,
                         VertexSet terminal) {
  Ultrapath x{std::move(word), std::move(terminal)};
  if (!is_valid(g, lat, x)) {
    throw DomainError("not an ultrapath: " + format(g, x));
  }
  return x;
}

namespace {

void require_member(const Ultragraph& g, const Ultrapath& x, const char* op) {
  const bool ok = !x.terminal.empty() && x.terminal.extent() <= g.vertex_count() &&
                  g.is_path(x.word) &&
                  (x.word.empty() || x.terminal.is_subset_of(g.range(x.word.back())));
  if (!ok) throw DomainError(std::string(op) + ": operand is not an ultrapath of this graph");
}

}  // namespace

VertexSet source(const Ultragraph& g, const Ultrapath& x) {
  if (x.is_set()) return x.terminal;
  return VertexSet::singleton(g.source(x.word.front()));
}

std::optional<Ultrapath> concat(const Ultragraph& g, const Ultrapath& x, const Ultrapath& y) {
  require_member(g, x, "concat");
  require_member(g, y, "concat");
  if (x.is_set() && y.is_set()) {
    VertexSet meet = x.terminal & y.terminal;
    if (meet.empty()) return std::nullopt;
    return Ultrapath::set(std::move(meet));
  }
  if (x.is_set()) {
    if (!x.terminal.contains(g.source(y.word.front()))) return std::nullopt;
    return y;
  }
  if (y.is_set()) {
    VertexSet meet = x.terminal & y.terminal;
    if (meet.empty()) return std::nullopt;
    return Ultrapath{x.word, std::move(meet)};
  }
  if (!x.terminal.contains(g.source(y.word.front()))) return std::nullopt;
  Ultrapath out{x.word, y.terminal};
  out.word.insert(out.word.end(), y.word.begin(), y.word.end());
  return out;
}

std::optional<Ultrapath> initial_segment(const Ultragraph& g, const Ultrapath& x,
                                         const Ultrapath& y) {
  if (y.length() > x.length()) return std::nullopt;
  if (y.length() == x.length()) {
    // x = y·B with B a set: same word and terminal(x) = terminal(y) ∩ B.
    if (x.word != y.word || !x.terminal.is_subset_of(y.terminal)) return std::nullopt;
    return Ultrapath::set(x.terminal);
  }
  if (y.is_set()) {
    if (!y.terminal.contains(g.source(x.word.front()))) return std::nullopt;
    return x;
  }
  if (!std::equal(y.word.begin(), y.word.end(), x.word.begin())) return std::nullopt;
  const EdgeId next = x.word[y.length()];
  if (!y.terminal.contains(g.source(next))) return std::nullopt;
  return Ultrapath{std::vector<EdgeId>(x.word.begin() + static_cast<std::ptrdiff_t>(y.length()),
                                       x.word.end()),
                   x.terminal};
}

bool comparable(const Ultragraph& g, const Ultrapath& x, const Ultrapath& y) {
  return initial_segment(g, x, y).has_value() || initial_segment(g, y, x).has_value();
}

std::vector<std::vector<EdgeId>> enumerate_words(const Ultragraph& g, std::size_t n,
                                                 std::size_t max_count) {
  std::vector<std::vector<EdgeId>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<EdgeId> current;
  auto extend = [&](auto&& self) -> void {
    if (current.size() == n) {
      if (out.size() >= max_count) {
        throw SizeLimitError("path enumeration exceeds " + std::to_string(max_count) + " words");
      }
      out.push_back(current);
      return;
    }
    for (EdgeId f : g.edges()) {
      if (!current.empty() && !g.adjacent(current.back(), f)) continue;
      current.push_back(f);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

std::vector<Ultrapath> enumerate_paths(const Ultragraph& g, const LatticeG0& lat,
                                       std::size_t max_len, std::size_t max_count) {
  std::vector<Ultrapath> out;
  auto push = [&](Ultrapath x) {
    if (out.size() >= max_count) {
      throw SizeLimitError("ultrapath enumeration exceeds " + std::to_string(max_count) +
                           " paths");
    }
    out.push_back(std::move(x));
  };
  for (auto& a : lat.nonempty_sets()) push(Ultrapath::set(std::move(a)));
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (auto& word : enumerate_words(g, len, max_count)) {
      for (auto& a : lat.nonempty_subsets_of(g.range(word.back()))) {
        push(Ultrapath{word, std::move(a)});
      }
    }
  }
  return out;
}

std::string format(const Ultragraph& g, const Ultrapath& x) {
  if (x.is_set()) return g.format_set(x.terminal);
  return "(" + g.format_word(x.word) + "," + g.format_set(x.terminal) + ")";
}

// ---------------------------------------------------------------------------
// Lassos

namespace {

std::vector<EdgeId> primitive_root(std::vector<EdgeId> cycle) {
  const std::size_t n = cycle.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = cycle[i] == cycle[i - p];
    if (periodic) {
      cycle.resize(p);
      return cycle;
    }
  }
  return cycle;
}

}  // namespace

LassoPath LassoPath::canonical(std::vector<EdgeId> prefix, std::vector<EdgeId> cycle) {
  if (cycle.empty()) throw DomainError("lasso cycle must be nonempty");
  cycle = primitive_root(std::move(cycle));
  // Absorb matching prefix tail into the cycle: p·a·(c·a)^∞ = p·(a·c)^∞.
  while (!prefix.empty() && prefix.back() == cycle.back()) {
    prefix.pop_back();
    std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
  }
  return LassoPath(std::move(prefix), std::move(cycle));
}

bool is_valid(const Ultragraph& g, const LassoPath& gamma) {
  std::vector<EdgeId> walk(gamma.prefix().begin(), gamma.prefix().end());
  walk.insert(walk.end(), gamma.cycle().begin(), gamma.cycle().end());
  walk.push_back(gamma.cycle().front());
  return g.is_path(walk);
}

LassoPath LassoPath::make(const Ultragraph& g, std::vector<EdgeId> prefix,
                          std::vector<EdgeId> cycle) {
  LassoPath out = canonical(std::move(prefix), std::move(cycle));
  if (!is_valid(g, out)) throw DomainError("lasso violates edge adjacency: " + format(g, out));
  return out;
}

EdgeId LassoPath::at(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return cycle_[(i - prefix_.size()) % cycle_.size()];
}

std::vector<EdgeId> LassoPath::unroll(std::size_t n) const {
  std::vector<EdgeId> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

LassoPath LassoPath::drop(std::size_t k) const {
  if (k <= prefix_.size()) {
    return canonical(std::vector<EdgeId>(prefix_.begin() + static_cast<std::ptrdiff_t>(k),
                                         prefix_.end()),
                     cycle_);
  }
  std::vector<EdgeId> rotated = cycle_;
  const std::size_t offset = (k - prefix_.size()) % cycle_.size();
  std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(offset),
              rotated.end());
  return LassoPath({}, std::move(rotated));
}

bool LassoPath::starts_with(std::span<const EdgeId> word) const {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (at(i) != word[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const LassoPath& a, const LassoPath& b) {
  if (auto c = a.prefix_.size() <=> b.prefix_.size(); c != 0) return c;
  if (auto c = a.cycle_.size() <=> b.cycle_.size(); c != 0) return c;
  if (auto c = a.prefix_ <=> b.prefix_; c != 0) return c;
  return a.cycle_ <=> b.cycle_;
}

std::optional<LassoPath> concat_lasso(const Ultragraph& g, const Ultrapath& y,
                                      const LassoPath& gamma) {
  if (!y.terminal.contains(gamma.source(g))) return std::nullopt;
  if (y.is_set()) return gamma;
  std::vector<EdgeId> prefix = y.word;
  prefix.insert(prefix.end(), gamma.prefix().begin(), gamma.prefix().end());
  return LassoPath::canonical(std::move(prefix),
                              std::vector<EdgeId>(gamma.cycle().begin(), gamma.cycle().end()));
}

std::vector<LassoPath> enumerate_lassos(const Ultragraph& g, std::size_t prefix_bound,
                                        std::size_t cycle_bound, std::size_t max_count) {
  g.require_no_sinks("enumerate_lassos");
  std::vector<std::vector<EdgeId>> cycles;
  for (std::size_t len = 1; len <= cycle_bound; ++len) {
    for (auto& word : enumerate_words(g, len, max_count)) {
      if (g.adjacent(word.back(), word.front())) cycles.push_back(std::move(word));
    }
  }
  std::vector<std::vector<EdgeId>> prefixes;
  for (std::size_t len = 0; len <= prefix_bound; ++len) {
    for (auto& word : enumerate_words(g, len, max_count)) prefixes.push_back(std::move(word));
  }
  std::set<LassoPath> found;
  for (const auto& c : cycles) {
    for (const auto& p : prefixes) {
      if (!p.empty() && !g.adjacent(p.back(), c.front())) continue;
      found.insert(LassoPath::canonical(p, c));
      if (found.size() > max_count) {
        throw SizeLimitError("lasso enumeration exceeds " + std::to_string(max_count));
      }
    }
  }
  return {found.begin(), found.end()};
}

LassoPath shift(const LassoPath& gamma) { return gamma.drop(1); }

std::string format(const Ultragraph& g, const LassoPath& gamma) {
  return g.format_word(gamma.prefix()) + "(" + g.format_word(gamma.cycle()) + ")^inf";
}

}  // namespace ultra

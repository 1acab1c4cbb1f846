#include "ultra/lattice.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "ultra/errors.hpp"

namespace ultra {

const char* to_string(SetOrigin origin) {
  switch (origin) {
    case SetOrigin::Empty: return "empty";
    case SetOrigin::Singleton: return "singleton";
    case SetOrigin::EdgeRange: return "edge-range";
    case SetOrigin::Derived: return "derived";
  }
  return "?";
}

LatticeG0 make_lattice(std::vector<VertexSet> sets, std::vector<SetOrigin> origins) {
  LatticeG0 lat;
  lat.sets_ = std::move(sets);
  lat.origins_ = std::move(origins);
  for (std::size_t i = 0; i < lat.sets_.size(); ++i) lat.index_.emplace(lat.sets_[i], i);
  return lat;
}

std::optional<std::size_t> LatticeG0::index_of(const VertexSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexSet> LatticeG0::nonempty_sets() const {
  std::vector<VertexSet> out;
  for (const auto& s : sets_) {
    if (!s.empty()) out.push_back(s);
  }
  return out;
}

std::vector<VertexSet> LatticeG0::nonempty_subsets_of(const VertexSet& bound) const {
  std::vector<VertexSet> out;
  for (const auto& s : sets_) {
    if (!s.empty() && s.is_subset_of(bound)) out.push_back(s);
  }
  return out;
}

std::vector<VertexSet> close_under_union_intersection(std::vector<VertexSet> generators,
                                                      std::size_t max_size) {
  std::vector<VertexSet> sets;
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<VertexSet> worklist;
  auto add = [&](VertexSet s) {
    if (seen.insert(s).second) {
      if (seen.size() > max_size) {
        throw SizeLimitError("lattice closure exceeds " + std::to_string(max_size) + " sets");
      }
      worklist.push_back(std::move(s));
    }
  };
  for (auto& s : generators) add(std::move(s));
  // Each set popped from the worklist is combined with every set already
  // settled, so every pair is combined once wherever it appears.
  while (!worklist.empty()) {
    VertexSet current = std::move(worklist.back());
    worklist.pop_back();
    for (std::size_t i = 0, n = sets.size(); i < n; ++i) {
      add(current | sets[i]);
      add(current & sets[i]);
    }
    sets.push_back(std::move(current));
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

LatticeG0 generate_lattice(const Ultragraph& g, std::size_t max_size) {
  const std::size_t floor = g.vertex_count() + g.edge_count() + 1;
  if (max_size < floor) {
    throw DomainError("generate_lattice: max_size must be at least |V| + |E| + 1 = " +
                      std::to_string(floor));
  }
  std::vector<VertexSet> generators{VertexSet{}};
  for (VertexId v : g.vertices()) generators.push_back(VertexSet::singleton(v));
  for (EdgeId e : g.edges()) generators.push_back(g.range(e));
  auto sets = close_under_union_intersection(generators, max_size);

  std::unordered_set<VertexSet, VertexSetHash> ranges;
  for (EdgeId e : g.edges()) ranges.insert(g.range(e));
  std::vector<SetOrigin> origins;
  origins.reserve(sets.size());
  for (const auto& s : sets) {
    if (s.empty()) {
      origins.push_back(SetOrigin::Empty);
    } else if (s.size() == 1) {
      origins.push_back(SetOrigin::Singleton);
    } else if (ranges.contains(s)) {
      origins.push_back(SetOrigin::EdgeRange);
    } else {
      origins.push_back(SetOrigin::Derived);
    }
  }
  return make_lattice(std::move(sets), std::move(origins));
}

bool is_ultraset(const Ultragraph& g, const LatticeG0& lat, const VertexSet& set) {
  (void)g;
  if (set.empty()) throw DomainError("is_ultraset: the empty set is not a semicharacter");
  if (!lat.contains(set)) throw DomainError("is_ultraset: set is not in the lattice");
  auto chi = [&](const VertexSet& b) { return set.is_subset_of(b) ? 1 : 0; };
  if (chi(VertexSet{}) != 0) return false;
  const auto sets = lat.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i; j < sets.size(); ++j) {
      const auto& b = sets[i];
      const auto& c = sets[j];
      if (chi(b | c) != chi(b) + chi(c) - chi(b & c)) return false;
    }
  }
  return true;
}

bool is_closed_under_union_intersection(const LatticeG0& lat) {
  const auto sets = lat.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!lat.contains(sets[i] | sets[j]) || !lat.contains(sets[i] & sets[j])) return false;
    }
  }
  return true;
}

}  // namespace ultra

#include "support.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace ultra::testing {

Ultragraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& opts) {
  std::uniform_int_distribution<int> nv_dist(1, opts.max_vertices);
  const int nv = nv_dist(rng);
  const int min_edges = opts.sink_free ? nv : 0;
  std::uniform_int_distribution<int> ne_dist(min_edges, std::max(min_edges, opts.max_edges));
  const int ne = ne_dist(rng);
  std::uniform_int_distribution<int> vertex_dist(0, nv - 1);
  std::uniform_int_distribution<std::uint64_t> subset_dist(1, (std::uint64_t{1} << nv) - 1);

  GraphDescription d;
  for (int i = 0; i < nv; ++i) d.vertex(std::string(1, static_cast<char>('a' + i)));
  for (int j = 0; j < ne; ++j) {
    // The first nv edges of a sink-free graph give every vertex an edge.
    const int src = (opts.sink_free && j < nv) ? j : vertex_dist(rng);
    std::uint64_t bits = subset_dist(rng);
    while (opts.max_range > 0 && std::popcount(bits) > opts.max_range) bits = subset_dist(rng);
    std::vector<std::string> range;
    for (int i = 0; i < nv; ++i) {
      if (bits >> i & 1U) range.emplace_back(1, static_cast<char>('a' + i));
    }
    d.edge("e" + std::to_string(j), std::string(1, static_cast<char>('a' + src)),
           std::move(range));
  }
  return Ultragraph::build(d);
}

std::vector<Ultragraph> random_graphs(std::uint64_t seed, int count,
                                      const RandomGraphOptions& opts) {
  std::mt19937_64 rng(seed);
  std::vector<Ultragraph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_graph(rng, opts));
  return out;
}

Mask mask_of(const VertexSet& s) {
  Mask m = 0;
  for (VertexId v : s.members()) m |= Mask{1} << v.value;
  return m;
}

Mask range_mask(const Ultragraph& g, EdgeId e) { return mask_of(g.range(e)); }

std::set<Mask> brute_force_lattice(const Ultragraph& g) {
  std::set<Mask> family{0};
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) family.insert(Mask{1} << v);
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) family.insert(range_mask(g, EdgeId{e}));
  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<Mask> snapshot(family.begin(), family.end());
    for (Mask a : snapshot) {
      for (Mask b : snapshot) {
        changed |= family.insert(a | b).second;
        changed |= family.insert(a & b).second;
      }
    }
  }
  return family;
}

std::vector<std::vector<bool>> reach_matrix(const Ultragraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) r[v][v] = true;
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    const std::uint32_t s = g.source(EdgeId{e}).value;
    const Mask m = range_mask(g, EdgeId{e});
    for (std::size_t v = 0; v < n; ++v) {
      if (m >> v & 1U) r[s][v] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (r[i][k] && r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

bool bfs_reaches(const Ultragraph& g, VertexId w, VertexId v) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::uint32_t> queue{w.value};
  seen[w.value] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t x = queue[head];
    if (x == v.value) return true;
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
      if (g.source(EdgeId{e}).value != x) continue;
      const Mask m = range_mask(g, EdgeId{e});
      for (std::uint32_t y = 0; y < g.vertex_count(); ++y) {
        if ((m >> y & 1U) && !seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  return false;
}

int count_loops(const Ultragraph& g, VertexId v, std::size_t bound, int cap) {
  const std::uint32_t ne = static_cast<std::uint32_t>(g.edge_count());
  // walks[e] = number of admissible walks (capped) of the current length
  // starting at v and ending with edge e.
  std::vector<int> walks(ne, 0);
  for (std::uint32_t e = 0; e < ne; ++e) walks[e] = g.source(EdgeId{e}) == v ? 1 : 0;
  int loops = 0;
  for (std::size_t len = 1; len <= bound; ++len) {
    for (std::uint32_t e = 0; e < ne; ++e) {
      if (walks[e] > 0 && (range_mask(g, EdgeId{e}) >> v.value & 1U)) {
        loops = std::min(cap, loops + walks[e]);
      }
    }
    if (loops >= cap) return cap;
    std::vector<int> next(ne, 0);
    for (std::uint32_t e = 0; e < ne; ++e) {
      if (walks[e] == 0) continue;
      const Mask m = range_mask(g, EdgeId{e});
      for (std::uint32_t f = 0; f < ne; ++f) {
        const std::uint32_t s = g.source(EdgeId{f}).value;
        if (s == v.value || !(m >> s & 1U)) continue;
        next[f] = std::min(cap, next[f] + walks[e]);
      }
    }
    walks = std::move(next);
  }
  return loops;
}

std::vector<std::string> loops_by_search(const Ultragraph& g, VertexId v, std::size_t bound) {
  std::vector<std::string> out;
  std::vector<std::uint32_t> walk;
  std::function<void()> dfs = [&] {
    if (!walk.empty()) {
      bool interior_ok = true;
      for (std::size_t i = 1; i < walk.size(); ++i) {
        interior_ok = interior_ok && g.source(EdgeId{walk[i]}) != v;
      }
      if (!interior_ok) return;
      if (range_mask(g, EdgeId{walk.back()}) >> v.value & 1U) {
        std::string name;
        for (auto e : walk) name += g.edge_name(EdgeId{e});
        out.push_back(name);
      }
    }
    if (walk.size() == bound) return;
    for (std::uint32_t f = 0; f < g.edge_count(); ++f) {
      const std::uint32_t s = g.source(EdgeId{f}).value;
      if (walk.empty() ? s != v.value : !(range_mask(g, EdgeId{walk.back()}) >> s & 1U)) {
        continue;
      }
      walk.push_back(f);
      dfs();
      walk.pop_back();
    }
  };
  dfs();
  std::sort(out.begin(), out.end());
  return out;
}

bool cofinal_by_lassos(const Ultragraph& g) {
  const auto reach = reach_matrix(g);
  const std::size_t ne = g.edge_count();
  auto follows = [&](std::uint32_t e, std::uint32_t f) {
    return (range_mask(g, EdgeId{e}) >> g.source(EdgeId{f}).value & 1U) != 0;
  };
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    auto good = [&](std::uint32_t e) { return reach[v][g.source(EdgeId{e}).value]; };
    // Search for a lasso p·c^∞ with every edge of its first 2|E| positions
    // unreached from v. Lassos with |p| + |c| ≤ 2|E| have all their edges
    // among those positions.
    std::vector<std::uint32_t> walk;
    std::function<bool()> dfs = [&]() -> bool {
      // Split the current walk into prefix and closed cycle.
      for (std::size_t split = 0; split < walk.size(); ++split) {
        const std::size_t clen = walk.size() - split;
        if (split > ne || clen > ne) continue;
        if (split > 0 && !follows(walk[split - 1], walk[split])) continue;
        if (follows(walk.back(), walk[split])) return true;
      }
      if (walk.size() == 2 * ne) return false;
      for (std::uint32_t f = 0; f < ne; ++f) {
        if (good(f)) continue;
        if (!walk.empty() && !follows(walk.back(), f)) continue;
        walk.push_back(f);
        if (dfs()) return true;
        walk.pop_back();
      }
      return false;
    };
    if (dfs()) return false;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> all_words(const Ultragraph& g, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  if (n == 0) return {{}};
  std::vector<std::uint32_t> w;
  std::function<void()> dfs = [&] {
    if (w.size() == n) {
      out.push_back(w);
      return;
    }
    for (std::uint32_t f = 0; f < g.edge_count(); ++f) {
      if (!w.empty() && !(range_mask(g, EdgeId{w.back()}) >> g.source(EdgeId{f}).value & 1U)) {
        continue;
      }
      w.push_back(f);
      dfs();
      w.pop_back();
    }
  };
  dfs();
  return out;
}

}  // namespace ultra::testing

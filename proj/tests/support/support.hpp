#pragma once

// Test-only helpers: seeded random ultragraphs and brute-force oracles that
// share no code with the library beyond the Ultragraph accessors.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ultra/ultragraph.hpp"

namespace ultra::testing {

inline constexpr std::uint64_t kSeed = 20261014;

struct RandomGraphOptions {
  int max_vertices = 6;
  int max_edges = 8;
  bool sink_free = false;
  int max_range = 0;  // largest range set; 0 means any size
};

Ultragraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& opts = {});
std::vector<Ultragraph> random_graphs(std::uint64_t seed, int count,
                                      const RandomGraphOptions& opts = {});

/// Vertex sets as bitmasks over vertex indices (|V| ≤ 64).
using Mask = std::uint64_t;
Mask mask_of(const VertexSet& s);
Mask range_mask(const Ultragraph& g, EdgeId e);

/// Closure of {∅, {v}, r(e)} by iterating ∪/∩ over the whole family until
/// nothing new appears.
std::set<Mask> brute_force_lattice(const Ultragraph& g);

/// reach[w][v] = w ≥ v, by Floyd–Warshall over the one-step relation
/// w → v iff some edge from w has v in its range, plus reflexivity.
std::vector<std::vector<bool>> reach_matrix(const Ultragraph& g);

/// Vertex-level breadth-first search for w ≥ v.
bool bfs_reaches(const Ultragraph& g, VertexId w, VertexId v);

/// Number of loops based at v of length ≤ bound, saturated at `cap`,
/// counted by dynamic programming over walks that avoid v as an interior
/// source.
int count_loops(const Ultragraph& g, VertexId v, std::size_t bound, int cap = 2);

/// Every loop at v of length ≤ bound as a word of edge names joined by "",
/// found by plain depth-first search over all walks.
std::vector<std::string> loops_by_search(const Ultragraph& g, VertexId v, std::size_t bound);

/// Cofinality by search over lassos with |prefix| ≤ |E| and |cycle| ≤ |E|:
/// true iff for every vertex v and every such lasso γ some n ≤ 2|E| has
/// v ≥ s(γ_n). Branches stop as soon as a reached source is seen, since
/// every lasso extending that branch then satisfies the condition.
bool cofinal_by_lassos(const Ultragraph& g);

/// All edge words of length exactly n, as index vectors.
std::vector<std::vector<std::uint32_t>> all_words(const Ultragraph& g, std::size_t n);

}  // namespace ultra::testing

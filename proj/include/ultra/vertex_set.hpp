#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace ultra {

struct VertexId {
  std::uint32_t value = 0;
  auto operator<=>(const VertexId&) const = default;
};

struct EdgeId {
  std::uint32_t value = 0;
  auto operator<=>(const EdgeId&) const = default;
};

/// A finite set of vertices stored as a bitset over vertex indices.
///
/// Vertex indices follow the lexicographic order of vertex names, so the
/// ordering below (lexicographic on the sorted member sequence) is the
/// canonical set order used for all emitted output.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> members);

  static VertexSet singleton(VertexId v);
  /// {0, 1, ..., n-1}
  static VertexSet first_n(std::size_t n);

  void insert(VertexId v);
  void erase(VertexId v);
  [[nodiscard]] bool contains(VertexId v) const;
  [[nodiscard]] bool empty() const { return words_.empty(); }
  [[nodiscard]] std::size_t size() const;
  /// One past the largest member index, 0 for the empty set.
  [[nodiscard]] std::size_t extent() const;

  [[nodiscard]] bool is_subset_of(const VertexSet& other) const;
  [[nodiscard]] bool intersects(const VertexSet& other) const;
  [[nodiscard]] std::vector<VertexId> members() const;

  friend VertexSet operator|(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator&(const VertexSet& a, const VertexSet& b);

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b);

  [[nodiscard]] std::size_t hash() const;

 private:
  void trim();

  // Trailing zero words are always trimmed, so equal sets compare equal.
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace ultra

template <>
struct std::hash<ultra::VertexSet> {
  std::size_t operator()(const ultra::VertexSet& s) const { return s.hash(); }
};

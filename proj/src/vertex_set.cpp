#include "ultra/vertex_set.hpp"

#include <algorithm>
#include <bit>

namespace ultra {

namespace {
constexpr std::size_t kBits = 64;
}

VertexSet::VertexSet(std::initializer_list<VertexId> members) {
  for (VertexId v : members) insert(v);
}

VertexSet VertexSet::singleton(VertexId v) {
  VertexSet s;
  s.insert(v);
  return s;
}

VertexSet VertexSet::first_n(std::size_t n) {
  VertexSet s;
  for (std::size_t i = 0; i < n; ++i) s.insert(VertexId{static_cast<std::uint32_t>(i)});
  return s;
}

void VertexSet::insert(VertexId v) {
  const std::size_t word = v.value / kBits;
  if (words_.size() <= word) words_.resize(word + 1, 0);
  words_[word] |= std::uint64_t{1} << (v.value % kBits);
}

void VertexSet::erase(VertexId v) {
  const std::size_t word = v.value / kBits;
  if (word >= words_.size()) return;
  words_[word] &= ~(std::uint64_t{1} << (v.value % kBits));
  trim();
}

bool VertexSet::contains(VertexId v) const {
  const std::size_t word = v.value / kBits;
  return word < words_.size() && ((words_[word] >> (v.value % kBits)) & 1U) != 0;
}

std::size_t VertexSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t VertexSet::extent() const {
  if (words_.empty()) return 0;
  const auto top = words_.back();
  return (words_.size() - 1) * kBits + (kBits - static_cast<std::size_t>(std::countl_zero(top)));
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(w));
      out.push_back(VertexId{static_cast<std::uint32_t>(i * kBits + bit)});
      w &= w - 1;
    }
  }
  return out;
}

VertexSet operator|(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.words_.resize(std::max(a.words_.size(), b.words_.size()), 0);
  for (std::size_t i = 0; i < out.words_.size(); ++i) {
    if (i < a.words_.size()) out.words_[i] |= a.words_[i];
    if (i < b.words_.size()) out.words_[i] |= b.words_[i];
  }
  return out;
}

VertexSet operator&(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.words_.resize(std::min(a.words_.size(), b.words_.size()), 0);
  for (std::size_t i = 0; i < out.words_.size(); ++i) {
    out.words_[i] = a.words_[i] & b.words_[i];
  }
  out.trim();
  return out;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  // Lexicographic comparison of the sorted member sequences. Let d be the
  // smallest element of the symmetric difference and X the side holding d.
  // Both sequences agree below d; X continues with d, the other side either
  // stops (it is a proper prefix, hence smaller) or continues with
  // something larger than d (X is smaller).
  const std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t wa = i < a.words_.size() ? a.words_[i] : 0;
    const std::uint64_t wb = i < b.words_.size() ? b.words_[i] : 0;
    const std::uint64_t diff = wa ^ wb;
    if (diff == 0) continue;
    const auto bit = static_cast<unsigned>(std::countr_zero(diff));
    const bool a_holds = ((wa >> bit) & 1U) != 0;
    const VertexSet& other = a_holds ? b : a;
    // Does `other` have any member above position (i, bit)?
    bool other_continues = false;
    const std::uint64_t wo = i < other.words_.size() ? other.words_[i] : 0;
    const std::uint64_t above = bit == 63 ? 0 : (wo >> (bit + 1));
    if (above != 0) {
      other_continues = true;
    } else {
      for (std::size_t j = i + 1; j < other.words_.size(); ++j) {
        if (other.words_[j] != 0) {
          other_continues = true;
          break;
        }
      }
    }
    const bool a_less = a_holds ? other_continues : !other_continues;
    return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t VertexSet::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void VertexSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

}  // namespace ultra

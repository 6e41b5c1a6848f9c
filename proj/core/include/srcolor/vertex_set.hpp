#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace srcolor {

using VertexIndex = std::uint32_t;

/// Fixed-width bit-set over interned vertex indices.
///
/// Ordering (operator<=>) is the canonical order used for facets and missing
/// faces: lexicographic comparison of the ascending index sequences, so
/// {0,1} < {0,1,2} < {0,2}.
class VertexSet {
 public:
  static constexpr std::size_t kWords = 8;
  static constexpr std::size_t kCapacity = kWords * 64;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<VertexIndex> indices);

  static VertexSet range(VertexIndex count);
  static VertexSet from_indices(const std::vector<VertexIndex>& indices);

  void insert(VertexIndex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(VertexIndex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(VertexIndex v) const {
    return (words_[v >> 6] >> (v & 63)) & 1U;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  VertexSet operator|(const VertexSet& o) const;
  VertexSet operator&(const VertexSet& o) const;
  VertexSet operator-(const VertexSet& o) const;
  VertexSet& operator|=(const VertexSet& o);

  /// Smallest / largest member; undefined on the empty set.
  VertexIndex min() const;
  VertexIndex max() const;

  /// Members in ascending order.
  std::vector<VertexIndex> indices() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        f(static_cast<VertexIndex>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  bool operator==(const VertexSet&) const = default;
  std::strong_ordering operator<=>(const VertexSet& other) const;

  std::size_t hash() const;

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// All subsets of `set` with exactly k elements, in canonical order.
std::vector<VertexSet> subsets_of_size(const VertexSet& set, std::size_t k);

}  // namespace srcolor

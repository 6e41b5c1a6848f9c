#include "srcolor/vertex_set.hpp"

#include <algorithm>

namespace srcolor {

VertexSet::VertexSet(std::initializer_list<VertexIndex> indices) {
  for (auto v : indices) insert(v);
}

VertexSet VertexSet::range(VertexIndex count) {
  VertexSet s;
  for (VertexIndex v = 0; v < count; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::from_indices(const std::vector<VertexIndex>& indices) {
  VertexSet s;
  for (auto v : indices) s.insert(v);
  return s;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  VertexSet r;
  for (std::size_t i = 0; i < kWords; ++i) r.words_[i] = words_[i] | o.words_[i];
  return r;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  VertexSet r;
  for (std::size_t i = 0; i < kWords; ++i) r.words_[i] = words_[i] & o.words_[i];
  return r;
}

VertexSet VertexSet::operator-(const VertexSet& o) const {
  VertexSet r;
  for (std::size_t i = 0; i < kWords; ++i) r.words_[i] = words_[i] & ~o.words_[i];
  return r;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexIndex VertexSet::min() const {
  for (std::size_t i = 0; i < kWords; ++i)
    if (words_[i] != 0)
      return static_cast<VertexIndex>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
  return 0;
}

VertexIndex VertexSet::max() const {
  for (std::size_t i = kWords; i-- > 0;)
    if (words_[i] != 0)
      return static_cast<VertexIndex>(i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[i])));
  return 0;
}

std::vector<VertexIndex> VertexSet::indices() const {
  std::vector<VertexIndex> out;
  out.reserve(size());
  for_each([&](VertexIndex v) { out.push_back(v); });
  return out;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& other) const {
  // Find the lowest index where membership differs. Below it the ascending
  // sequences agree; the set holding that index is smaller unless the other
  // set has nothing left beyond it (then the other is a proper prefix).
  for (std::size_t i = 0; i < kWords; ++i) {
    const std::uint64_t diff = words_[i] ^ other.words_[i];
    if (diff == 0) continue;
    const int bit = std::countr_zero(diff);
    const bool mine = (words_[i] >> bit) & 1U;
    const VertexSet& lacker = mine ? other : *this;
    // Does `lacker` have any element above the differing position?
    bool lacker_continues = false;
    const std::uint64_t above = bit == 63 ? 0 : (~std::uint64_t{0} << (bit + 1));
    if ((lacker.words_[i] & above) != 0) lacker_continues = true;
    for (std::size_t j = i + 1; j < kWords && !lacker_continues; ++j)
      if (lacker.words_[j] != 0) lacker_continues = true;
    const bool holder_is_less = lacker_continues;
    if (mine) return holder_is_less ? std::strong_ordering::less : std::strong_ordering::greater;
    return holder_is_less ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::size_t VertexSet::hash() const {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL;
  for (auto w : words_) {
    h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::vector<VertexSet> subsets_of_size(const VertexSet& set, std::size_t k) {
  std::vector<VertexSet> out;
  const auto members = set.indices();
  if (k > members.size()) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    VertexSet s;
    for (auto p : pick) s.insert(members[p]);
    out.push_back(s);
    // advance the combination
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == members.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace srcolor

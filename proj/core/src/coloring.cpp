#include "srcolor/coloring.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "srcolor/error.hpp"

namespace srcolor {

// ---------------------------------------------------------------------------
// Coloring

Coloring::Coloring(std::vector<ColorId> assignment, std::uint32_t palette_size)
    : assignment_(std::move(assignment)), palette_size_(palette_size) {
  for (auto c : assignment_)
    if (c >= palette_size_)
      throw InvalidArgumentError("color id " + std::to_string(c) + " outside palette of size " +
                                 std::to_string(palette_size_));
}

Coloring Coloring::from_assignment(std::vector<ColorId> assignment) {
  std::uint32_t palette = 0;
  for (auto c : assignment) palette = std::max(palette, c + 1);
  return Coloring(std::move(assignment), palette);
}

Coloring Coloring::from_labels(const std::vector<std::int64_t>& labels) {
  std::map<std::int64_t, ColorId> rank;
  for (auto l : labels) rank.emplace(l, 0);
  ColorId next = 0;
  for (auto& [label, id] : rank) id = next++;
  std::vector<ColorId> assignment;
  assignment.reserve(labels.size());
  for (auto l : labels) assignment.push_back(rank.at(l));
  return Coloring(std::move(assignment), next);
}

std::vector<VertexSet> Coloring::fibers() const {
  std::vector<VertexSet> out(palette_size_);
  for (std::size_t v = 0; v < assignment_.size(); ++v)
    out[assignment_[v]].insert(static_cast<VertexIndex>(v));
  return out;
}

std::size_t Coloring::max_fiber_size() const {
  std::vector<std::size_t> count(palette_size_, 0);
  std::size_t best = 0;
  for (auto c : assignment_) best = std::max(best, ++count[c]);
  return best;
}

std::string Coloring::to_string() const {
  std::string out;
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    if (v > 0) out += ',';
    out += std::to_string(assignment_[v] + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Checks

namespace {

void require_total(const SimplicialComplex& k, const Coloring& f) {
  if (f.size() != k.num_vertices())
    throw InvalidArgumentError("coloring assigns " + std::to_string(f.size()) +
                               " vertices but the complex has " +
                               std::to_string(k.num_vertices()));
}

}  // namespace

bool is_coloring(const SimplicialComplex& k, const Coloring& f, int s) {
  if (s < 1) throw InvalidArgumentError("s must be >= 1");
  require_total(k, f);
  std::vector<int> count(f.palette_size(), 0);
  for (const auto& facet : k.facets()) {
    std::fill(count.begin(), count.end(), 0);
    bool ok = true;
    facet.for_each([&](VertexIndex v) {
      if (++count[f[v]] > s) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::size_t ColorStats::total() const {
  std::size_t t = 0;
  for (auto d : max_monochrome) t += d;
  return t;
}

ColorStats color_stats(const SimplicialComplex& k, const Coloring& f) {
  require_total(k, f);
  ColorStats stats;
  stats.max_monochrome.assign(f.palette_size(), 0);
  std::vector<std::size_t> count(f.palette_size(), 0);
  for (const auto& facet : k.facets()) {
    std::fill(count.begin(), count.end(), 0);
    facet.for_each([&](VertexIndex v) { ++count[f[v]]; });
    for (std::size_t p = 0; p < count.size(); ++p)
      stats.max_monochrome[p] = std::max(stats.max_monochrome[p], count[p]);
  }
  return stats;
}

bool is_L_coloring(const SimplicialComplex& k, const SimplicialComplex& l, const Coloring& f,
                   int s) {
  if (f.palette_size() != l.num_vertices())
    throw InvalidArgumentError("palette size " + std::to_string(f.palette_size()) +
                               " does not match the " + std::to_string(l.num_vertices()) +
                               " vertices of the target complex");
  if (!is_coloring(k, f, s)) return false;
  for (const auto& facet : k.facets()) {
    VertexSet image;
    facet.for_each([&](VertexIndex v) { image.insert(f[v]); });
    if (!l.contains(image)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Closed-form count of s-to-1 surjections

BigInt count_s_to_1_surjections(std::uint32_t m, std::uint32_t r, std::uint32_t s) {
  if (r == 0) return m == 0 ? 1 : 0;
  if (s == 0 || m < r || static_cast<std::uint64_t>(m) > static_cast<std::uint64_t>(r) * s)
    return 0;

  std::vector<BigInt> factorial(std::max(m, r) + 1);
  factorial[0] = 1;
  for (std::size_t i = 1; i < factorial.size(); ++i) factorial[i] = factorial[i - 1] * i;

  BigInt total = 0;
  std::vector<std::uint32_t> parts;
  // Weakly decreasing fiber sizes s >= m_1 >= ... >= m_r >= 1 summing to m.
  std::function<void(std::uint32_t, std::uint32_t)> walk = [&](std::uint32_t remaining,
                                                                std::uint32_t cap) {
    const auto slots = r - static_cast<std::uint32_t>(parts.size());
    if (slots == 0) {
      if (remaining != 0) return;
      BigInt fibers = factorial[m];
      std::vector<std::uint32_t> multiplicity(s + 1, 0);
      for (auto p : parts) {
        fibers /= factorial[p];
        ++multiplicity[p];
      }
      BigInt colors = factorial[r];
      for (std::uint32_t j = 1; j <= s; ++j) colors /= factorial[multiplicity[j]];
      total += fibers * colors;
      return;
    }
    if (remaining < slots || static_cast<std::uint64_t>(remaining) >
                                 static_cast<std::uint64_t>(slots) * cap)
      return;
    for (std::uint32_t part = std::min(cap, remaining); part >= 1; --part) {
      parts.push_back(part);
      walk(remaining - part, part);
      parts.pop_back();
    }
  };
  walk(m, s);
  return total;
}

}  // namespace srcolor

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srcolor/vertex_set.hpp"

namespace srcolor {

using ColorId = std::uint32_t;

/// A total map from vertex indices to colors 0..palette_size-1.
class Coloring {
 public:
  Coloring() = default;
  /// Throws InvalidArgumentError if some color id is >= palette_size.
  Coloring(std::vector<ColorId> assignment, std::uint32_t palette_size);

  /// Palette inferred as max id + 1.
  static Coloring from_assignment(std::vector<ColorId> assignment);

  /// Arbitrary integer color labels, renumbered 0..k-1 by increasing label
  /// value; e.g. [1,2,1,2,3] becomes [0,1,0,1,2] with palette size 3.
  static Coloring from_labels(const std::vector<std::int64_t>& labels);

  std::size_t size() const { return assignment_.size(); }
  std::uint32_t palette_size() const { return palette_size_; }
  ColorId operator[](VertexIndex v) const { return assignment_[v]; }
  const std::vector<ColorId>& assignment() const { return assignment_; }

  /// fiber(p) = f^{-1}(p), one entry per palette color.
  std::vector<VertexSet> fibers() const;
  std::size_t max_fiber_size() const;

  /// Comma-separated, 1-based colors: "1,1,1,2,2,3".
  std::string to_string() const;

  bool operator==(const Coloring&) const = default;

 private:
  std::vector<ColorId> assignment_;
  std::uint32_t palette_size_ = 0;
};

}  // namespace srcolor

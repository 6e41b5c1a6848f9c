#pragma once

#include <cstdint>
#include <vector>

#include "srcolor/coloring.hpp"

namespace srcolor::detail {

// Facet incidence in search order, shared by the chromatic search and the
// coloring counter.
struct SearchProblem {
  SearchProblem(const SimplicialComplex& k, int s, VertexOrder order);

  std::size_t num_vertices;
  std::size_t num_facets;
  int multiplicity;
  std::vector<VertexIndex> order;
  std::vector<std::vector<std::uint32_t>> vertex_facets;
};

// Per-facet, per-color counters for a fixed palette size.
class ColorState {
 public:
  ColorState(const SearchProblem& problem, std::uint32_t palette);

  bool can_place(VertexIndex v, ColorId c) const;
  void place(VertexIndex v, ColorId c);
  void unplace(VertexIndex v, ColorId c);

  const std::vector<ColorId>& colors() const { return colors_; }

 private:
  const SearchProblem& problem_;
  std::uint32_t palette_;
  std::vector<int> counters_;
  std::vector<ColorId> colors_;  // by vertex index
};

}  // namespace srcolor::detail

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "srcolor/coloring_map.hpp"
#include "srcolor/complex.hpp"

namespace srcolor {

using BigInt = boost::multiprecision::cpp_int;

/// True iff every facet holds at most s vertices of each color. Checking
/// facets is enough because the condition is inherited by subfaces.
bool is_coloring(const SimplicialComplex& k, const Coloring& f, int s);

/// d_f(p) = max over faces sigma of |sigma ∩ f^{-1}(p)|.
struct ColorStats {
  std::vector<std::size_t> max_monochrome;  // indexed by color

  std::size_t total() const;
};

ColorStats color_stats(const SimplicialComplex& k, const Coloring& f);

enum class VertexOrder {
  kFacetDegree,  // most facets first, ties by canonical index
  kCanonical,
};

struct SearchConfig {
  VertexOrder vertex_order = VertexOrder::kFacetDegree;
  /// Maximum number of search nodes across all palette sizes and workers.
  std::optional<std::uint64_t> node_budget;
  /// Parallel workers; results are identical for every value.
  unsigned workers = 1;
};

struct ChromaticResult {
  std::uint32_t colors = 0;
  /// Lexicographically least optimal coloring along the search order, with
  /// colors numbered by first use.
  Coloring witness;
  std::uint64_t nodes = 0;
};

/// chi_s(K) by iterative deepening from ceil(n/s). Throws
/// BudgetExhaustedError (with the best bounds found) when the node budget
/// runs out.
ChromaticResult chromatic_number(const SimplicialComplex& k, int s,
                                 const SearchConfig& config = {});

/// The static vertex order used by the searches.
std::vector<VertexIndex> search_order(const SimplicialComplex& k, VertexOrder order);

struct CountConfig {
  std::uint64_t node_budget = 1'000'000'000;
};

/// Number of (P,s)-colorings into the labeled palette {1..r}; onto maps
/// only when `surjective`. Enumerates colorings up to palette permutation
/// and weights each by r!/(r-k)!, k the number of colors it uses.
BigInt count_colorings(const SimplicialComplex& k, std::uint32_t r, int s, bool surjective,
                       const CountConfig& config = {});

/// Number of maps from an m-set onto an r-set with all fibers of size <= s,
/// via the sum over fiber-size partitions of
///   multinomial(m; m_1..m_r) * multinomial(r; r_1..r_s).
/// Zero when m > r*s.
BigInt count_s_to_1_surjections(std::uint32_t m, std::uint32_t r, std::uint32_t s);

/// f is an (L,s)-coloring: an (P,s)-coloring whose image of every facet is a
/// face of L. Color i of f corresponds to vertex i of L.
bool is_L_coloring(const SimplicialComplex& k, const SimplicialComplex& l, const Coloring& f,
                   int s);

/// A uniform hypergraph: every edge has the same number of vertices (>= 2).
class Hypergraph {
 public:
  /// Throws MalformedInputError for non-uniform, empty or repeated-label edges.
  static Hypergraph from_edges(const std::vector<std::vector<std::string>>& edges);

  const std::shared_ptr<const VertexTable>& vertex_table() const { return vertices_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  std::size_t edge_size() const { return edge_size_; }

 private:
  std::shared_ptr<const VertexTable> vertices_;
  std::vector<VertexSet> edges_;
  std::size_t edge_size_ = 0;
};

/// The pure complex whose facets are the hyperedges.
SimplicialComplex from_hypergraph(const Hypergraph& h);

/// Red/blue colorable with no monochrome edge, decided as
/// chi_s(K(H)) <= 2 for s = edge size - 1.
bool has_property_B(const Hypergraph& h, const SearchConfig& config = {});

}  // namespace srcolor

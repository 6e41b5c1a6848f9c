#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "srcolor/vertex_set.hpp"

namespace srcolor {

/// Interned vertex labels. Position in `labels()` is the canonical vertex
/// order used by every deterministic algorithm in the library.
class VertexTable {
 public:
  VertexTable() = default;
  /// Throws MalformedInputError on duplicate or empty labels.
  explicit VertexTable(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(VertexIndex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<VertexIndex> find(std::string_view label) const;
  /// Throws UnknownVertexError.
  VertexIndex index_of(std::string_view label) const;

  bool operator==(const VertexTable& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexIndex> index_;
};

/// Face counts by dimension, starting with f_{-1} = 1 for the empty face.
struct FVector {
  std::vector<std::int64_t> counts;

  /// The same counts without the leading entry for the empty face.
  std::vector<std::int64_t> without_empty() const {
    return {counts.begin() + (counts.empty() ? 0 : 1), counts.end()};
  }
  /// Alternating sum f_0 - f_1 + f_2 - ...
  std::int64_t euler_characteristic() const;

  bool operator==(const FVector&) const = default;
};

/// A finite abstract simplicial complex stored by its facets.
///
/// Faces are implicit: sigma is a face iff it is contained in some facet.
/// Facets are kept as an antichain in canonical order, and every vertex of
/// the table lies in at least one facet. The complex {∅} has no vertices
/// and the single facet ∅. Instances are immutable.
class SimplicialComplex {
 public:
  /// The complex {∅}.
  SimplicialComplex();

  /// Normalizes `facets` (drops duplicates and dominated sets). Throws
  /// MalformedInputError when a table vertex lies in no facet or a facet
  /// refers to an index outside the table.
  SimplicialComplex(std::shared_ptr<const VertexTable> vertices,
                    std::vector<VertexSet> facets);

  /// Builds a complex from label lists, interning labels in first-appearance
  /// order. A label repeated inside one list is a MalformedInputError.
  /// An empty list of lists yields {∅}.
  static SimplicialComplex from_facets(
      const std::vector<std::vector<std::string>>& facet_lists);

  /// Same, but with a prescribed vertex order; every listed vertex must be
  /// used by some facet and every facet label must be listed.
  static SimplicialComplex from_facets(
      const std::vector<std::string>& vertex_order,
      const std::vector<std::vector<std::string>>& facet_lists);

  const VertexTable& vertices() const { return *vertices_; }
  const std::shared_ptr<const VertexTable>& vertex_table() const { return vertices_; }
  const std::vector<VertexSet>& facets() const { return facets_; }

  /// m(K): number of vertices.
  std::size_t num_vertices() const { return vertices_->size(); }
  /// n(K): size of a largest facet.
  std::size_t max_facet_size() const { return max_facet_size_; }
  /// dim K = n(K) - 1.
  std::int64_t dim() const { return static_cast<std::int64_t>(max_facet_size_) - 1; }
  /// codim K = m(K) - n(K).
  std::int64_t codim() const {
    return static_cast<std::int64_t>(num_vertices()) - static_cast<std::int64_t>(max_facet_size_);
  }

  bool is_void_of_vertices() const { return num_vertices() == 0; }

  bool contains(const VertexSet& sigma) const;
  /// Throws UnknownVertexError for labels outside the vertex table.
  bool contains(const std::vector<std::string>& labels) const;

  VertexSet to_vertex_set(const std::vector<std::string>& labels) const;
  std::vector<std::string> to_labels(const VertexSet& sigma) const;
  VertexSet all_vertices() const { return VertexSet::range(static_cast<VertexIndex>(num_vertices())); }

  /// Every face including ∅, in canonical order. Throws ResourceLimitError
  /// when a facet has more than 30 vertices.
  std::vector<VertexSet> faces() const;
  FVector f_vector() const;

  /// Label-level equality: same vertex labels and same facets as label sets,
  /// regardless of vertex order.
  bool operator==(const SimplicialComplex& other) const;

 private:
  std::shared_ptr<const VertexTable> vertices_;
  std::vector<VertexSet> facets_;
  std::size_t max_facet_size_ = 0;
};

/// Facets of the result are the maximal faces of K of dimension <= j.
/// Keeps K's vertex table for j >= 0; j = -1 yields {∅}.
SimplicialComplex skeleton(const SimplicialComplex& k, std::int64_t j);

/// K1 * K2 on the disjoint union of the vertex sets. Labels are prefixed
/// with "1:" and "2:" to keep them distinct.
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// Inclusion-minimal non-faces in canonical order.
std::vector<VertexSet> missing_faces(const SimplicialComplex& k);

/// The largest complex on V(K) whose s-skeleton equals that of K: the
/// maximal sigma all of whose subsets of size <= s+1 are faces of K.
/// Exponential in the worst case; intended for m(K) up to about 25.
SimplicialComplex flagification(const SimplicialComplex& k, int s);

/// True iff every missing face has at most s+1 vertices.
bool is_s_flag(const SimplicialComplex& k, int s);

std::int64_t euler_characteristic(const SimplicialComplex& k);
bool is_pure(const SimplicialComplex& k);
/// Pure, and every face with n(K)-1 vertices lies in exactly two facets.
bool is_pseudomanifold(const SimplicialComplex& k);

/// Same facets with vertices relabeled "1", "2", ... in canonical order.
SimplicialComplex relabel_sequential(const SimplicialComplex& k);

/// Space-separated labels, e.g. "1 2 4".
std::string format_face(const SimplicialComplex& k, const VertexSet& sigma);

}  // namespace srcolor

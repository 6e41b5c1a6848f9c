#include <unordered_set>

#include "srcolor/coloring.hpp"
#include "srcolor/error.hpp"

namespace srcolor {

Hypergraph Hypergraph::from_edges(const std::vector<std::vector<std::string>>& edges) {
  if (edges.empty()) throw MalformedInputError("hypergraph has no edges");
  const std::size_t size = edges.front().size();
  if (size < 2) throw MalformedInputError("hyperedges need at least two vertices");

  std::vector<std::string> order;
  std::unordered_set<std::string> seen;
  for (const auto& e : edges) {
    if (e.size() != size)
      throw MalformedInputError("hypergraph is not uniform: edges of size " +
                                std::to_string(size) + " and " + std::to_string(e.size()));
    for (const auto& label : e)
      if (seen.insert(label).second) order.push_back(label);
  }

  Hypergraph h;
  h.vertices_ = std::make_shared<const VertexTable>(std::move(order));
  h.edge_size_ = size;
  for (const auto& e : edges) {
    VertexSet edge;
    for (const auto& label : e) {
      const auto v = h.vertices_->index_of(label);
      if (edge.contains(v))
        throw MalformedInputError("label '" + label + "' repeated within a hyperedge");
      edge.insert(v);
    }
    h.edges_.push_back(edge);
  }
  return h;
}

SimplicialComplex from_hypergraph(const Hypergraph& h) {
  return SimplicialComplex(h.vertex_table(), h.edges());
}

bool has_property_B(const Hypergraph& h, const SearchConfig& config) {
  const int s = static_cast<int>(h.edge_size()) - 1;
  return chromatic_number(from_hypergraph(h), s, config).colors <= 2;
}

}  // namespace srcolor

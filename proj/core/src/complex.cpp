#include "srcolor/complex.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>
#include <utility>

#include "srcolor/error.hpp"

namespace srcolor {

namespace {

constexpr std::size_t kMaxEnumerableFacet = 30;

using FaceSet = std::unordered_set<VertexSet, VertexSetHash>;

std::vector<VertexSet> normalize_facets(std::vector<VertexSet> facets) {
  std::sort(facets.begin(), facets.end(), [](const VertexSet& a, const VertexSet& b) {
    const auto sa = a.size();
    const auto sb = b.size();
    if (sa != sb) return sa > sb;
    return a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<VertexSet> kept;
  kept.reserve(facets.size());
  for (const auto& f : facets) {
    bool dominated = false;
    for (const auto& g : kept) {
      if (f.is_subset_of(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

// Faces of size <= max_size, collected into a hash set.
FaceSet faces_up_to(const SimplicialComplex& k, std::size_t max_size) {
  FaceSet out;
  for (const auto& facet : k.facets()) {
    const auto members = facet.indices();
    const std::size_t limit = std::min(max_size, members.size());
    if (members.size() > kMaxEnumerableFacet && limit == members.size())
      throw ResourceLimitError("facet with " + std::to_string(members.size()) +
                               " vertices is too large to enumerate its faces");
    for (std::size_t size = 0; size <= limit; ++size)
      for (const auto& f : subsets_of_size(facet, size)) out.insert(f);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// VertexTable

VertexTable::VertexTable(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > VertexSet::kCapacity)
    throw MalformedInputError("too many vertices (limit " +
                              std::to_string(VertexSet::kCapacity) + ")");
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw MalformedInputError("empty vertex label");
    if (!index_.emplace(labels_[i], static_cast<VertexIndex>(i)).second)
      throw MalformedInputError("duplicate vertex label '" + labels_[i] + "'");
  }
}

std::optional<VertexIndex> VertexTable::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexIndex VertexTable::index_of(std::string_view label) const {
  auto idx = find(label);
  if (!idx) throw UnknownVertexError(std::string(label));
  return *idx;
}

std::int64_t FVector::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t i = 1; i < counts.size(); ++i)
    chi += (i % 2 == 1 ? 1 : -1) * counts[i];
  return chi;
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex::SimplicialComplex()
    : vertices_(std::make_shared<const VertexTable>()), facets_{VertexSet{}} {}

SimplicialComplex::SimplicialComplex(std::shared_ptr<const VertexTable> vertices,
                                     std::vector<VertexSet> facets)
    : vertices_(std::move(vertices)) {
  if (!vertices_) vertices_ = std::make_shared<const VertexTable>();
  const auto all = VertexSet::range(static_cast<VertexIndex>(vertices_->size()));
  VertexSet used;
  for (const auto& f : facets) {
    if (!f.is_subset_of(all))
      throw MalformedInputError("facet refers to a vertex outside the vertex table");
    used |= f;
  }
  if (used != all) {
    const auto ghost = (all - used).min();
    throw MalformedInputError("vertex '" + vertices_->label(ghost) + "' lies in no facet");
  }
  facets_ = normalize_facets(std::move(facets));
  if (facets_.empty()) facets_.push_back(VertexSet{});
  for (const auto& f : facets_) max_facet_size_ = std::max(max_facet_size_, f.size());
}

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facet_lists) {
  std::vector<std::string> order;
  std::unordered_set<std::string> seen;
  for (const auto& list : facet_lists)
    for (const auto& label : list)
      if (seen.insert(label).second) order.push_back(label);
  return from_facets(order, facet_lists);
}

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::string>& vertex_order,
    const std::vector<std::vector<std::string>>& facet_lists) {
  auto table = std::make_shared<const VertexTable>(vertex_order);
  std::vector<VertexSet> facets;
  facets.reserve(facet_lists.size());
  for (const auto& list : facet_lists) {
    VertexSet f;
    for (const auto& label : list) {
      const auto v = table->index_of(label);
      if (f.contains(v))
        throw MalformedInputError("label '" + label + "' repeated within a facet");
      f.insert(v);
    }
    facets.push_back(f);
  }
  return SimplicialComplex(std::move(table), std::move(facets));
}

bool SimplicialComplex::contains(const VertexSet& sigma) const {
  for (const auto& f : facets_)
    if (sigma.is_subset_of(f)) return true;
  return false;
}

bool SimplicialComplex::contains(const std::vector<std::string>& labels) const {
  return contains(to_vertex_set(labels));
}

VertexSet SimplicialComplex::to_vertex_set(const std::vector<std::string>& labels) const {
  VertexSet s;
  for (const auto& label : labels) s.insert(vertices_->index_of(label));
  return s;
}

std::vector<std::string> SimplicialComplex::to_labels(const VertexSet& sigma) const {
  std::vector<std::string> out;
  sigma.for_each([&](VertexIndex v) { out.push_back(vertices_->label(v)); });
  return out;
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  auto set = faces_up_to(*this, max_facet_size_);
  std::vector<VertexSet> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

FVector SimplicialComplex::f_vector() const {
  FVector fv;
  fv.counts.assign(max_facet_size_ + 1, 0);
  for (const auto& f : faces_up_to(*this, max_facet_size_)) ++fv.counts[f.size()];
  return fv;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  if (num_vertices() != other.num_vertices() || facets_.size() != other.facets_.size())
    return false;
  if (vertices_ == other.vertices_ || *vertices_ == *other.vertices_)
    return facets_ == other.facets_;
  std::vector<VertexIndex> map(other.num_vertices());
  for (std::size_t i = 0; i < other.num_vertices(); ++i) {
    auto idx = vertices_->find(other.vertices_->label(static_cast<VertexIndex>(i)));
    if (!idx) return false;
    map[i] = *idx;
  }
  std::vector<VertexSet> mapped;
  mapped.reserve(other.facets_.size());
  for (const auto& f : other.facets_) {
    VertexSet g;
    f.for_each([&](VertexIndex v) { g.insert(map[v]); });
    mapped.push_back(g);
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == facets_;
}

// ---------------------------------------------------------------------------
// Operations

SimplicialComplex skeleton(const SimplicialComplex& k, std::int64_t j) {
  if (j < -1) throw InvalidArgumentError("skeleton dimension must be >= -1");
  if (j == -1) return SimplicialComplex();
  if (j >= k.dim()) return k;
  const auto size = static_cast<std::size_t>(j + 1);
  std::vector<VertexSet> facets;
  for (const auto& f : k.facets()) {
    if (f.size() <= size) {
      facets.push_back(f);
    } else {
      auto subs = subsets_of_size(f, size);
      facets.insert(facets.end(), subs.begin(), subs.end());
    }
  }
  return SimplicialComplex(k.vertex_table(), std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  std::vector<std::string> labels;
  labels.reserve(k1.num_vertices() + k2.num_vertices());
  for (const auto& l : k1.vertices().labels()) labels.push_back("1:" + l);
  for (const auto& l : k2.vertices().labels()) labels.push_back("2:" + l);
  const auto offset = static_cast<VertexIndex>(k1.num_vertices());
  std::vector<VertexSet> facets;
  facets.reserve(k1.facets().size() * k2.facets().size());
  for (const auto& f1 : k1.facets()) {
    for (const auto& f2 : k2.facets()) {
      VertexSet f = f1;
      f2.for_each([&](VertexIndex v) { f.insert(v + offset); });
      facets.push_back(f);
    }
  }
  return SimplicialComplex(std::make_shared<const VertexTable>(std::move(labels)),
                           std::move(facets));
}

std::vector<VertexSet> missing_faces(const SimplicialComplex& k) {
  const auto faces = faces_up_to(k, k.max_facet_size());
  const auto m = static_cast<VertexIndex>(k.num_vertices());
  std::vector<VertexSet> missing;
  std::vector<VertexSet> level{VertexSet{}};
  // A k-set is a candidate only when all of its (k-1)-subsets are faces;
  // it is generated once, from the face obtained by dropping its maximum.
  for (std::size_t size = 1; size <= k.max_facet_size() + 1 && !level.empty(); ++size) {
    std::vector<VertexSet> next;
    for (const auto& sigma : level) {
      const VertexIndex start = sigma.empty() ? 0 : sigma.max() + 1;
      for (VertexIndex v = start; v < m; ++v) {
        VertexSet tau = sigma;
        tau.insert(v);
        bool boundary_present = true;
        tau.for_each([&](VertexIndex u) {
          if (!boundary_present || u == v) return;
          VertexSet face = tau;
          face.erase(u);
          if (!faces.contains(face)) boundary_present = false;
        });
        if (!boundary_present) continue;
        if (faces.contains(tau))
          next.push_back(tau);
        else
          missing.push_back(tau);
      }
    }
    level = std::move(next);
  }
  std::sort(missing.begin(), missing.end());
  return missing;
}

namespace {

// s = 1: maximal cliques of the 1-skeleton, Bron–Kerbosch with a pivot of
// largest candidate degree.
SimplicialComplex clique_complex(const SimplicialComplex& k) {
  const auto m = static_cast<VertexIndex>(k.num_vertices());
  std::vector<VertexSet> adj(m);
  for (const auto& f : k.facets())
    f.for_each([&](VertexIndex v) { adj[v] |= f - VertexSet{v}; });

  std::vector<VertexSet> maximal;
  std::function<void(const VertexSet&, VertexSet, VertexSet)> expand =
      [&](const VertexSet& r, VertexSet cand, VertexSet excl) {
        if (cand.empty()) {
          if (excl.empty()) maximal.push_back(r);
          return;
        }
        VertexIndex pivot = 0;
        std::size_t best = 0;
        bool first = true;
        (cand | excl).for_each([&](VertexIndex u) {
          const auto d = (cand & adj[u]).size();
          if (first || d > best) {
            pivot = u;
            best = d;
            first = false;
          }
        });
        for (auto v : (cand - adj[pivot]).indices()) {
          VertexSet r_next = r;
          r_next.insert(v);
          expand(r_next, cand & adj[v], excl & adj[v]);
          cand.erase(v);
          excl.insert(v);
        }
      };
  expand(VertexSet{}, k.all_vertices(), VertexSet{});
  return SimplicialComplex(k.vertex_table(), std::move(maximal));
}

}  // namespace

SimplicialComplex flagification(const SimplicialComplex& k, int s) {
  if (s < 1) throw InvalidArgumentError("flagification requires s >= 1");
  if (k.num_vertices() == 0) return k;
  const auto bound = static_cast<std::size_t>(s) + 1;
  if (s == 1) return clique_complex(k);
  const auto small_faces = faces_up_to(k, bound);

  // u and v can both join R iff T + {u, v} is a face for every T in R with
  // |T| = min(|R|, s - 1). R + u is known to satisfy the property already.
  auto compatible = [&](const VertexSet& r, VertexIndex u, VertexIndex v) {
    const std::size_t t = std::min(r.size(), bound - 2);
    for (auto t_set : subsets_of_size(r, t)) {
      t_set.insert(u);
      t_set.insert(v);
      if (!small_faces.contains(t_set)) return false;
    }
    return true;
  };

  std::vector<VertexSet> maximal;
  std::function<void(const VertexSet&, std::vector<VertexIndex>, std::vector<VertexIndex>)>
      expand = [&](const VertexSet& r, std::vector<VertexIndex> cand,
                   std::vector<VertexIndex> excl) {
        if (cand.empty()) {
          if (excl.empty()) maximal.push_back(r);
          return;
        }
        while (!cand.empty()) {
          const VertexIndex v = cand.front();
          VertexSet r_next = r;
          r_next.insert(v);
          std::vector<VertexIndex> cand_next;
          std::vector<VertexIndex> excl_next;
          for (std::size_t i = 1; i < cand.size(); ++i)
            if (compatible(r, cand[i], v)) cand_next.push_back(cand[i]);
          for (auto x : excl)
            if (compatible(r, x, v)) excl_next.push_back(x);
          expand(r_next, std::move(cand_next), std::move(excl_next));
          cand.erase(cand.begin());
          excl.push_back(v);
        }
      };

  std::vector<VertexIndex> all(k.num_vertices());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<VertexIndex>(i);
  expand(VertexSet{}, all, {});
  return SimplicialComplex(k.vertex_table(), std::move(maximal));
}

bool is_s_flag(const SimplicialComplex& k, int s) {
  if (s < 1) throw InvalidArgumentError("s-flag test requires s >= 1");
  for (const auto& mf : missing_faces(k))
    if (mf.size() > static_cast<std::size_t>(s) + 1) return false;
  return true;
}

std::int64_t euler_characteristic(const SimplicialComplex& k) {
  return k.f_vector().euler_characteristic();
}

bool is_pure(const SimplicialComplex& k) {
  for (const auto& f : k.facets())
    if (f.size() != k.max_facet_size()) return false;
  return true;
}

bool is_pseudomanifold(const SimplicialComplex& k) {
  if (k.max_facet_size() == 0 || !is_pure(k)) return false;
  std::unordered_map<VertexSet, int, VertexSetHash> ridge_count;
  for (const auto& f : k.facets())
    for (const auto& r : subsets_of_size(f, k.max_facet_size() - 1)) ++ridge_count[r];
  for (const auto& [ridge, count] : ridge_count)
    if (count != 2) return false;
  return true;
}

SimplicialComplex relabel_sequential(const SimplicialComplex& k) {
  std::vector<std::string> labels;
  labels.reserve(k.num_vertices());
  for (std::size_t i = 0; i < k.num_vertices(); ++i) labels.push_back(std::to_string(i + 1));
  return SimplicialComplex(std::make_shared<const VertexTable>(std::move(labels)), k.facets());
}

std::string format_face(const SimplicialComplex& k, const VertexSet& sigma) {
  std::string out;
  sigma.for_each([&](VertexIndex v) {
    if (!out.empty()) out += ' ';
    out += k.vertices().label(v);
  });
  return out;
}

}  // namespace srcolor

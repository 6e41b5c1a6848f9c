#pragma once

// Brute-force reference implementations used only by tests. Each one works
// from the raw definitions (subset enumeration, all maps, determinants) and
// shares no code with the library beyond the SimplicialComplex container.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "srcolor/srcolor.hpp"

namespace oracle {

using Mask = std::uint32_t;
using boost::multiprecision::cpp_int;

inline Mask to_mask(const srcolor::VertexSet& s) {
  Mask m = 0;
  for (auto v : s.indices()) m |= Mask{1} << v;
  return m;
}

inline srcolor::VertexSet from_mask(Mask m) {
  srcolor::VertexSet s;
  for (unsigned v = 0; v < 32; ++v)
    if (m >> v & 1U) s.insert(v);
  return s;
}

inline int popcount(Mask m) { return __builtin_popcount(m); }

// Every face as a bitmask, found by testing all 2^m subsets against facets.
inline std::vector<Mask> all_faces(const srcolor::SimplicialComplex& k) {
  std::vector<Mask> facets;
  for (const auto& f : k.facets()) facets.push_back(to_mask(f));
  std::vector<Mask> out;
  const Mask top = Mask{1} << k.num_vertices();
  for (Mask s = 0; s < top; ++s)
    for (Mask f : facets)
      if ((s & ~f) == 0) {
        out.push_back(s);
        break;
      }
  return out;
}

inline std::set<Mask> face_set(const srcolor::SimplicialComplex& k) {
  auto v = all_faces(k);
  return {v.begin(), v.end()};
}

inline std::vector<std::int64_t> f_vector(const srcolor::SimplicialComplex& k) {
  std::vector<std::int64_t> f;
  for (Mask s : all_faces(k)) {
    const auto d = static_cast<std::size_t>(popcount(s));
    if (f.size() <= d) f.resize(d + 1, 0);
    ++f[d];
  }
  return f;
}

// Non-faces all of whose codimension-one subsets are faces.
inline std::set<Mask> missing_faces(const srcolor::SimplicialComplex& k) {
  const auto faces = face_set(k);
  std::set<Mask> out;
  const Mask top = Mask{1} << k.num_vertices();
  for (Mask s = 1; s < top; ++s) {
    if (faces.contains(s)) continue;
    bool minimal = true;
    for (Mask t = s; t && minimal; t &= t - 1)
      if (!faces.contains(s & ~(t & -t))) minimal = false;
    if (minimal) out.insert(s);
  }
  return out;
}

// fla_s(K): all sets whose subsets of size <= s+1 are faces of K.
// Computed over all 2^m masks in increasing order: a set larger than s+1
// qualifies iff every one-smaller subset does.
inline std::set<Mask> flagification(const srcolor::SimplicialComplex& k, int s) {
  const auto faces = face_set(k);
  const Mask top = Mask{1} << k.num_vertices();
  std::vector<bool> in(top, false);
  std::set<Mask> out;
  for (Mask sigma = 0; sigma < top; ++sigma) {
    if (popcount(sigma) <= s + 1) {
      in[sigma] = faces.contains(sigma);
    } else {
      bool ok = true;
      for (Mask t = sigma; t && ok; t &= t - 1) ok = in[sigma & ~(t & -t)];
      in[sigma] = ok;
    }
    if (in[sigma]) out.insert(sigma);
  }
  return out;
}

inline bool is_coloring(const srcolor::SimplicialComplex& k, const std::vector<unsigned>& f,
                        int s) {
  for (Mask face : all_faces(k)) {
    std::map<unsigned, int> per_color;
    for (unsigned v = 0; v < f.size(); ++v)
      if (face >> v & 1U)
        if (++per_color[f[v]] > s) return false;
  }
  return true;
}

// Calls fn(assignment) for every map {0..m-1} -> {0..r-1}.
template <typename Fn>
void for_each_map(std::size_t m, unsigned r, Fn&& fn) {
  std::vector<unsigned> f(m, 0);
  if (r == 0) {
    if (m == 0) fn(f);
    return;
  }
  while (true) {
    fn(f);
    std::size_t i = 0;
    while (i < m && ++f[i] == r) f[i++] = 0;
    if (i == m) return;
  }
}

inline cpp_int count_colorings(const srcolor::SimplicialComplex& k, unsigned r, int s,
                               bool surjective) {
  const auto faces = all_faces(k);
  cpp_int n = 0;
  for_each_map(k.num_vertices(), r, [&](const std::vector<unsigned>& f) {
    if (surjective) {
      std::vector<bool> hit(r, false);
      for (auto c : f) hit[c] = true;
      if (std::find(hit.begin(), hit.end(), false) != hit.end()) return;
    }
    for (Mask face : faces) {
      std::vector<int> per(r, 0);
      for (unsigned v = 0; v < f.size(); ++v)
        if ((face >> v & 1U) && ++per[f[v]] > s) return;
    }
    ++n;
  });
  return n;
}

inline unsigned chromatic_number(const srcolor::SimplicialComplex& k, int s) {
  for (unsigned r = 1;; ++r)
    if (oracle::count_colorings(k, r, s, false) > 0) return r;
}

// Onto maps from an m-set to an r-set with every fiber of size <= s.
inline cpp_int count_surjections(unsigned m, unsigned r, unsigned s) {
  cpp_int n = 0;
  for_each_map(m, r, [&](const std::vector<unsigned>& f) {
    std::vector<unsigned> fiber(r, 0);
    for (auto c : f) ++fiber[c];
    for (auto x : fiber)
      if (x == 0 || x > s) return;
    ++n;
  });
  return n;
}

// Determinant by fraction-free Gaussian elimination (Bareiss).
inline cpp_int determinant(std::vector<std::vector<cpp_int>> a) {
  const std::size_t n = a.size();
  cpp_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Facets of the cyclic polytope with vertices (t, t^2, .., t^n), t = 1..m:
// an n-subset spans a facet iff every other point lies strictly on one
// side of its affine hull.
inline std::set<Mask> cyclic_polytope_facets(unsigned m, unsigned n) {
  auto row = [n](unsigned t) {
    std::vector<cpp_int> r{1};
    cpp_int p = 1;
    for (unsigned d = 1; d <= n; ++d) r.push_back(p *= t);
    return r;
  };
  std::set<Mask> out;
  for (Mask sub = 0; sub < (Mask{1} << m); ++sub) {
    if (popcount(sub) != static_cast<int>(n)) continue;
    std::vector<std::vector<cpp_int>> base;
    for (unsigned v = 0; v < m; ++v)
      if (sub >> v & 1U) base.push_back(row(v + 1));
    int side = 0;
    bool facet = true;
    for (unsigned v = 0; v < m && facet; ++v) {
      if (sub >> v & 1U) continue;
      auto mat = base;
      mat.push_back(row(v + 1));
      const auto d = determinant(mat);
      const int sgn = d > 0 ? 1 : (d < 0 ? -1 : 0);
      if (sgn == 0 || (side != 0 && sgn != side)) facet = false;
      side = sgn;
    }
    if (facet) out.insert(sub);
  }
  return out;
}

inline std::set<Mask> facet_masks(const srcolor::SimplicialComplex& k) {
  std::set<Mask> out;
  for (const auto& f : k.facets()) out.insert(to_mask(f));
  return out;
}

}  // namespace oracle

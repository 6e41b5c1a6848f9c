#pragma once

#include <cstddef>
#include <vector>

#include "srcolor/complex.hpp"
#include "srcolor/polynomial.hpp"

namespace srcolor {

/// A complex packaged with its missing faces, giving normal forms in the
/// Stanley–Reisner ring Z[V] / (prod tau : tau a non-face).
///
/// The ideal is generated by squarefree monomials, so a monomial lies in it
/// exactly when its support contains a missing face. Reduction therefore
/// deletes those monomials and keeps everything else; no Gröbner machinery
/// is needed.
class SRContext {
 public:
  explicit SRContext(SimplicialComplex complex);

  const SimplicialComplex& complex() const { return complex_; }
  const std::shared_ptr<const VertexTable>& table() const { return complex_.vertex_table(); }
  const std::vector<VertexSet>& missing_faces() const { return missing_; }

  /// True iff the support of m is a face of the complex.
  bool survives(const Monomial& m) const;

  Polynomial normal_form(const Polynomial& p) const;

  /// normal_form(p * q), dropping ideal monomials while accumulating so that
  /// intermediate results never exceed the face count.
  Polynomial multiply(const Polynomial& p, const Polynomial& q,
                      std::size_t max_terms = kDefaultTermLimit) const;

  bool equal(const Polynomial& p, const Polynomial& q) const;

 private:
  void require_context(const Polynomial& p) const;

  SimplicialComplex complex_;
  std::vector<VertexSet> missing_;
};

Polynomial normal_form(const Polynomial& p, const SRContext& ctx);
bool equal_in_sr(const Polynomial& p, const Polynomial& q, const SRContext& ctx);

}  // namespace srcolor

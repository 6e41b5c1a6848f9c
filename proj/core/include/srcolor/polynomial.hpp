#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "srcolor/complex.hpp"
#include "srcolor/coloring_map.hpp"
#include "srcolor/vertex_set.hpp"

namespace srcolor {

using Coefficient = std::int64_t;

/// Default cap on the number of terms any single operation may produce.
inline constexpr std::size_t kDefaultTermLimit = std::size_t{1} << 24;

struct VarPower {
  VertexIndex var;
  std::uint32_t exp;
  bool operator==(const VarPower&) const = default;
};

/// A monomial of Z[V]: variables with positive exponents, sorted by index.
///
/// Degree here is combinatorial (each variable counts 1). The grading that
/// puts every vertex in degree 2 is available as cohomological_degree().
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(VertexIndex v, std::uint32_t exp = 1);
  /// Product of the variables in `s`, each to the first power.
  static Monomial squarefree(const VertexSet& s);

  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t cohomological_degree() const { return 2 * degree(); }
  std::uint32_t exponent(VertexIndex v) const;
  VertexSet support() const;
  const auto& factors() const { return factors_; }

  /// Throws OverflowError if an exponent would exceed 32 bits.
  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;
  /// Graded lexicographic: lower degree first, then lexicographic on the
  /// ascending variable sequence with repetition (v1^2 < v1*v2 < v2^2).
  std::strong_ordering operator<=>(const Monomial& other) const;

  std::size_t hash() const;

 private:
  boost::container::small_vector<VarPower, 6> factors_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Coefficient coefficient;
  bool operator==(const Term&) const = default;
};

/// Sparse polynomial with exact integer coefficients over a vertex table.
///
/// Terms are kept in canonical monomial order with no zero coefficients, so
/// equality is structural. Coefficients are 64-bit; any overflow raises
/// OverflowError. Operands must share a vertex table (ContextMismatchError).
class Polynomial {
 public:
  explicit Polynomial(std::shared_ptr<const VertexTable> table);

  static Polynomial constant(std::shared_ptr<const VertexTable> table, Coefficient c);
  static Polynomial from_monomial(std::shared_ptr<const VertexTable> table,
                                  Monomial m, Coefficient c = 1);
  static Polynomial variable(std::shared_ptr<const VertexTable> table, VertexIndex v);
  /// Builds from arbitrary terms: merges duplicates, drops zeros, sorts.
  static Polynomial from_terms(std::shared_ptr<const VertexTable> table,
                               std::vector<Term> terms);

  const std::shared_ptr<const VertexTable>& table() const { return table_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coefficient coefficient(const Monomial& m) const;
  /// Combinatorial total degree; -1 for the zero polynomial.
  std::int64_t degree() const;

  /// Canonical rendering, e.g. "1 + v1 + v2 + v1*v2"; "0" when zero.
  std::string to_string() const;

  bool operator==(const Polynomial& other) const;

 private:
  friend Polynomial add(const Polynomial&, const Polynomial&);
  friend Polynomial neg(const Polynomial&);

  std::shared_ptr<const VertexTable> table_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial neg(const Polynomial& p);
/// Throws ResourceLimitError if the product would hold more than max_terms.
Polynomial mul(const Polynomial& p, const Polynomial& q,
               std::size_t max_terms = kDefaultTermLimit);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator-(const Polynomial& p) { return neg(p); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }

/// How a vertex label is written inside a polynomial: labels that start with
/// a digit get a "v" prefix ("3" -> "v3"); other labels are used verbatim.
std::string variable_name(const std::string& label);

/// e_i(U). Zero when i > |U|.
Polynomial elementary_symmetric(std::shared_ptr<const VertexTable> table,
                                const VertexSet& u, std::size_t i,
                                std::size_t max_terms = kDefaultTermLimit);

/// c_{<=s}(U) = e_0(U) + ... + e_s(U); equals prod_{u in U}(1+u) once s >= |U|.
Polynomial c_leq(std::shared_ptr<const VertexTable> table, const VertexSet& u,
                 std::size_t s, std::size_t max_terms = kDefaultTermLimit);

/// c(U) = prod_{u in U}(1 + u), expanded by repeated multiplication.
Polynomial total_chern(std::shared_ptr<const VertexTable> table, const VertexSet& u,
                       std::size_t max_terms = kDefaultTermLimit);

/// Decides whether c(V) = prod_p c_{<=s}(f^{-1}p) holds in the free ring Z[V].
/// This is the algebraic form of "f is at most s-to-1".
bool is_s_to_1_by_identity(std::shared_ptr<const VertexTable> table, const Coloring& f,
                           std::size_t s, std::size_t max_terms = kDefaultTermLimit);

}  // namespace srcolor

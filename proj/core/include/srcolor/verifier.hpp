#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "srcolor/coloring.hpp"
#include "srcolor/stanley_reisner.hpp"

namespace srcolor {

struct CertificateFactor {
  std::uint32_t color;  // 1-based
  std::string poly;     // normal form of c_{<=s}(f^{-1} color)
  bool operator==(const CertificateFactor&) const = default;
};

/// Witness for the identity c(V) = prod_p c_{<=s}(f^{-1}p) in SR(K;Z).
/// `lhs` and `rhs` are the canonical normal forms of both sides; `verdict`
/// is true exactly when they coincide.
struct Certificate {
  std::string complex_id;
  int s = 1;
  std::vector<std::uint32_t> coloring;  // 1-based colors in canonical vertex order
  bool verdict = false;
  std::string lhs;
  std::string rhs;
  std::vector<CertificateFactor> factors;

  bool operator==(const Certificate&) const = default;
};

/// Decides colorings purely in the Stanley–Reisner ring of one complex.
/// Holds the reduced total Chern class so repeated queries only expand the
/// right-hand side.
///
/// Everything here goes through ring arithmetic and the missing-face
/// reduction; none of it consults the facet-level coloring check, so the
/// two can serve as oracles for each other.
class AlgebraicVerifier {
 public:
  explicit AlgebraicVerifier(SimplicialComplex k, std::size_t max_terms = kDefaultTermLimit);

  const SRContext& context() const { return ctx_; }
  /// normal_form(prod_{v in V}(1 + v)).
  const Polynomial& reduced_total_chern() const { return lhs_; }

  /// normal_form(c_{<=s}(f^{-1}p)) for every color p of the palette.
  std::vector<Polynomial> factors(const Coloring& f, int s) const;
  /// normal_form of the product of the factors.
  Polynomial product(const std::vector<Polynomial>& factors) const;

  bool holds(const Coloring& f, int s) const;
  Certificate certify(const Coloring& f, int s, std::string complex_id = {}) const;

 private:
  SRContext ctx_;
  std::size_t max_terms_;
  Polynomial lhs_;
};

Certificate verify_coloring_algebraically(const SimplicialComplex& k, const Coloring& f, int s,
                                          std::string complex_id = {});

/// The s = 1 case: f is a proper coloring iff c(V) = prod_p (1 + sum f^{-1}p).
Certificate verify_coloring_s1(const SimplicialComplex& k, const Coloring& f,
                               std::string complex_id = {});

/// Factorization of c(V) into |P| factors of degree <= s. Requires f to be
/// a (P,s)-coloring (InvalidWitnessError otherwise) and re-checks both the
/// product identity and the degree bounds before returning.
Certificate factorization_certificate(const SimplicialComplex& k, const Coloring& f, int s,
                                      std::string complex_id = {});

/// Reads a coloring back off factors of the form normal_form(c_{<=s}(U_p)):
/// each vertex must occur as a linear term of exactly one factor. Throws
/// InvalidWitnessError otherwise, or when the factors do not multiply to
/// c(V) in SR(K;Z).
Coloring recover_coloring(const SimplicialComplex& k, const std::vector<Polynomial>& factors);

/// Recomputes the certificate from its coloring and s and compares every field.
bool reverify(const SimplicialComplex& k, const Certificate& certificate);

struct CrossCheckReport {
  std::uint64_t trials = 0;
  std::uint64_t colorings = 0;  // maps accepted by both verifiers
  std::uint64_t disagreements = 0;
};

/// Samples `trials` random maps into a palette of `palette` colors (trial i
/// seeded from (seed, i), so results do not depend on `workers`) and
/// compares the algebraic verdict with is_coloring. Any disagreement throws
/// InvariantViolationError with reproduction data.
CrossCheckReport cross_check(const SimplicialComplex& k, int s, std::uint64_t trials,
                             std::uint64_t seed, std::uint32_t palette = 3,
                             unsigned workers = 1);

/// Same comparison over every map into palettes of size 1..max_palette.
CrossCheckReport cross_check_exhaustive(const SimplicialComplex& k, int s,
                                        std::uint32_t max_palette);

std::string certificate_to_json(const Certificate& certificate, int indent = 2);
/// Throws MalformedInputError on schema violations.
Certificate certificate_from_json(std::string_view text);

}  // namespace srcolor

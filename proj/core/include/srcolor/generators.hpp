#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srcolor/complex.hpp"

namespace srcolor {

/// D[V] on vertices "1".."m".
SimplicialComplex full_simplex(std::uint32_t m);

/// The boundary of D[V], |V| = m: facets are the m subsets of size m-1.
/// For m = 1 the only proper subset is ∅, so the result is {∅}.
SimplicialComplex boundary_simplex(std::uint32_t m);

/// Boundary complex of the cyclic n-polytope on vertices "1".."m": the
/// n-subsets sigma for which any two elements of V - sigma have an even
/// number of elements of sigma between them. Requires m > n >= 2.
SimplicialComplex cyclic_polytope(std::uint32_t m, std::uint32_t n);

namespace gale {

/// Literal form: between consecutive non-members the member count is even.
bool evenness_literal(const std::vector<bool>& member);
/// Run form: every maximal run of members that avoids both ends is even.
bool evenness_runs(const std::vector<bool>& member);

}  // namespace gale

/// Seeded random complex on vertices "1".."m". Draws m candidate facets
/// that include each vertex with probability `density`, then covers any
/// unused vertex by a singleton. Identical output for identical arguments.
SimplicialComplex random_complex(std::uint32_t m, double density, std::uint64_t seed);

struct KnownChromatic {
  int s;
  std::uint32_t value;
};

struct KnownCount {
  std::uint32_t colors;
  int s;
  std::uint64_t value;
};

struct CorpusEntry {
  std::string name;
  std::string description;
  SimplicialComplex complex;
  FVector f_vector;
  std::vector<KnownChromatic> chromatic;
  std::vector<KnownCount> counts;
  /// Exact missing faces as label lists, when documented.
  std::vector<std::vector<std::string>> missing_faces;
  std::optional<std::int64_t> euler_characteristic;
  bool pseudomanifold = false;
  /// 1-skeleton is the complete graph on all vertices.
  bool complete_one_skeleton = false;
  /// (s, is s-flag) pairs.
  std::vector<std::pair<int, bool>> flagness;
};

/// C5, MB5, P2, T2 and DISC4. Every entry is re-validated the first time
/// the corpus is built; a failed fact throws InvariantViolationError.
const std::vector<CorpusEntry>& corpus();

/// Throws InvalidArgumentError for unknown names.
const CorpusEntry& corpus_entry(std::string_view name);

/// Checks every documented fact of `entry` and returns one message per
/// failure (empty when all hold).
std::vector<std::string> validate_corpus_entry(const CorpusEntry& entry);

}  // namespace srcolor

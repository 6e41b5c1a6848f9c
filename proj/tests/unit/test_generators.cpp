#include <gtest/gtest.h>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace srcolor;

TEST(Generators, Simplices) {
  EXPECT_EQ(full_simplex(3).f_vector().counts, (std::vector<std::int64_t>{1, 3, 3, 1}));
  EXPECT_EQ(boundary_simplex(3).f_vector().counts, (std::vector<std::int64_t>{1, 3, 3}));
  EXPECT_EQ(full_simplex(4).vertices().labels(), (std::vector<std::string>{"1", "2", "3", "4"}));
  for (std::uint32_t m = 2; m <= 8; ++m) {
    const auto bd = boundary_simplex(m);
    EXPECT_EQ(bd.facets().size(), m);
    EXPECT_EQ(bd.dim(), static_cast<std::int64_t>(m) - 2);
    EXPECT_TRUE(is_pseudomanifold(bd) || m == 2);
  }
}

TEST(Generators, CyclicPolytopeFacetsMatchGeometry) {
  for (std::uint32_t n = 2; n <= 5; ++n)
    for (std::uint32_t m = n + 1; m <= 10; ++m) {
      const auto cp = cyclic_polytope(m, n);
      EXPECT_EQ(oracle::facet_masks(cp), oracle::cyclic_polytope_facets(m, n)) << m << ' ' << n;
      EXPECT_TRUE(is_pseudomanifold(cp));
      // Boundary of a simplicial n-polytope is a sphere of dimension n-1.
      EXPECT_EQ(euler_characteristic(cp), n % 2 == 0 ? 0 : 2);
    }
}

TEST(Generators, CyclicPolytopeSmallCases) {
  const auto cp = cyclic_polytope(6, 3);
  EXPECT_EQ(cp.f_vector().counts, (std::vector<std::int64_t>{1, 6, 12, 8}));
  EXPECT_EQ(3 * cp.f_vector().counts[3], 2 * cp.f_vector().counts[2]);
  for (std::uint32_t n = 2; n <= 7; ++n) EXPECT_EQ(cyclic_polytope(n + 1, n), boundary_simplex(n + 1));
  EXPECT_THROW(cyclic_polytope(4, 4), InvalidArgumentError);
  EXPECT_THROW(cyclic_polytope(5, 1), InvalidArgumentError);
}

TEST(Generators, EvennessFormsAgree) {
  for (unsigned m = 1; m <= 14; ++m)
    for (oracle::Mask s = 0; s < (oracle::Mask{1} << m); ++s) {
      std::vector<bool> member(m);
      for (unsigned i = 0; i < m; ++i) member[i] = s >> i & 1U;
      ASSERT_EQ(gale::evenness_literal(member), gale::evenness_runs(member)) << m << ' ' << s;
    }
  EXPECT_TRUE(gale::evenness_literal({true, false, true, true, false}));
  EXPECT_FALSE(gale::evenness_literal({false, true, false, true, true}));
}

TEST(Generators, RandomComplexIsDeterministic) {
  EXPECT_EQ(random_complex(8, 0.3, 42), random_complex(8, 0.3, 42));
  EXPECT_EQ(random_complex(9, 0.5, 7).num_vertices(), 9u);
  EXPECT_EQ(random_complex(5, 1.0, 3), full_simplex(5));
  EXPECT_THROW(random_complex(5, 1.5, 3), InvalidArgumentError);
}

TEST(Generators, CorpusMatchesHandTranscription) {
  EXPECT_EQ(corpus_entry("C5").complex, fixture::c5());
  EXPECT_EQ(corpus_entry("P2").complex, fixture::p2());
  EXPECT_EQ(corpus_entry("MB5").complex, fixture::mb5());
  EXPECT_EQ(corpus_entry("T2").complex, fixture::t2());
  EXPECT_EQ(corpus_entry("DISC4").complex, fixture::disc4());
  EXPECT_EQ(corpus_entry("P2").f_vector.counts, (std::vector<std::int64_t>{1, 6, 15, 10}));
  EXPECT_EQ(corpus_entry("T2").f_vector.counts, (std::vector<std::int64_t>{1, 7, 21, 14}));
  EXPECT_EQ(corpus_entry("P2").missing_faces, fixture::p2_missing());
  EXPECT_THROW(corpus_entry("nope"), InvalidArgumentError);
}

TEST(Generators, CorpusEntriesValidate) {
  for (const auto& e : corpus()) EXPECT_TRUE(validate_corpus_entry(e).empty()) << e.name;
}

TEST(Generators, ValidationCatchesWrongFacts) {
  auto e = corpus_entry("T2");
  e.f_vector.counts[2] = 20;
  EXPECT_FALSE(validate_corpus_entry(e).empty());
  e = corpus_entry("MB5");
  e.chromatic.push_back({1, 4});
  EXPECT_FALSE(validate_corpus_entry(e).empty());
  e = corpus_entry("P2");
  e.missing_faces.pop_back();
  EXPECT_FALSE(validate_corpus_entry(e).empty());
}

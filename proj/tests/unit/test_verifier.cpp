#include <gtest/gtest.h>

#include <random>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace srcolor;
using fixture::colors;

namespace {

std::vector<std::string> factor_texts(const Certificate& c) {
  std::vector<std::string> out;
  for (const auto& f : c.factors) out.push_back(f.poly);
  return out;
}

}  // namespace

TEST(Verifier, PentagonIdentity) {
  const auto cert = verify_coloring_algebraically(fixture::c5(), colors({1, 2, 1, 2, 3}), 1, "C5");
  EXPECT_TRUE(cert.verdict);
  EXPECT_EQ(cert.lhs, cert.rhs);
  EXPECT_EQ(factor_texts(cert), (std::vector<std::string>{"1 + v1 + v3", "1 + v2 + v4", "1 + v5"}));
  EXPECT_EQ(cert.lhs, "1 + v1 + v2 + v3 + v4 + v5 + v1*v2 + v1*v5 + v2*v3 + v3*v4 + v4*v5");
  EXPECT_EQ(cert.coloring, (std::vector<std::uint32_t>{1, 2, 1, 2, 3}));
}

TEST(Verifier, ProjectivePlaneIdentity) {
  const auto cert = verify_coloring_algebraically(fixture::p2(), colors({1, 1, 1, 2, 2, 3}), 2);
  EXPECT_TRUE(cert.verdict);
  EXPECT_EQ(factor_texts(cert),
            (std::vector<std::string>{"1 + v1 + v2 + v3 + v1*v2 + v1*v3 + v2*v3",
                                      "1 + v4 + v5 + v4*v5", "1 + v6"}));
  EXPECT_FALSE(verify_coloring_algebraically(fixture::p2(), colors({1, 1, 1, 2, 2, 3}), 1).verdict);
}

TEST(Verifier, MonochromeEdgeFails) {
  const auto edge = full_simplex(2);
  const auto cert = verify_coloring_algebraically(edge, colors({1, 1}), 1);
  EXPECT_FALSE(cert.verdict);
  EXPECT_NE(cert.lhs, cert.rhs);
}

TEST(Verifier, ProperColoringCase) {
  EXPECT_TRUE(verify_coloring_s1(fixture::c5(), colors({1, 2, 1, 2, 3})).verdict);
  EXPECT_FALSE(verify_coloring_s1(fixture::c5(), colors({1, 1, 2, 3, 2})).verdict);
  const auto point = full_simplex(1);
  for (std::int64_t c : {1, 5, -2}) EXPECT_TRUE(verify_coloring_s1(point, colors({c})).verdict);
}

TEST(Verifier, FactorizationCertificates) {
  const auto c5 = factorization_certificate(fixture::c5(), colors({1, 2, 1, 2, 3}), 1);
  EXPECT_EQ(factor_texts(c5), (std::vector<std::string>{"1 + v1 + v3", "1 + v2 + v4", "1 + v5"}));
  const auto d = factorization_certificate(full_simplex(4), colors({1, 2, 3, 4}), 1);
  EXPECT_EQ(factor_texts(d), (std::vector<std::string>{"1 + v1", "1 + v2", "1 + v3", "1 + v4"}));
  EXPECT_THROW(factorization_certificate(fixture::c5(), colors({1, 1, 2, 1, 2}), 1),
               InvalidWitnessError);
}

TEST(Verifier, RecoversColoringFromFactors) {
  const auto p2 = fixture::p2();
  const AlgebraicVerifier v(p2);
  const auto f = colors({1, 1, 1, 2, 2, 3});
  EXPECT_EQ(recover_coloring(p2, v.factors(f, 2)), f);
  // Swapping the fibers' order permutes colors but keeps the partition.
  auto factors = v.factors(f, 2);
  std::swap(factors[0], factors[2]);
  EXPECT_EQ(recover_coloring(p2, factors).fibers().size(), 3u);
  // Factors of a non-coloring do not multiply to c(V).
  EXPECT_THROW(recover_coloring(p2, v.factors(colors({1, 1, 1, 1, 2, 3}), 1)),
               InvalidWitnessError);
}

TEST(Verifier, CertificateJsonRoundTrip) {
  const auto cert = verify_coloring_algebraically(fixture::p2(), colors({1, 1, 1, 2, 2, 3}), 2, "P2");
  const auto text = certificate_to_json(cert);
  EXPECT_EQ(certificate_from_json(text), cert);
  EXPECT_TRUE(reverify(fixture::p2(), certificate_from_json(text)));
  EXPECT_EQ(text.find("\"complex\""), text.find('"'));  // first field

  auto tampered = cert;
  tampered.factors[1].poly = "1 + v4";
  EXPECT_FALSE(reverify(fixture::p2(), tampered));
  tampered = cert;
  tampered.verdict = false;
  EXPECT_FALSE(reverify(fixture::p2(), tampered));
  tampered = cert;
  tampered.coloring = {1, 2, 1, 2, 3, 3};
  EXPECT_FALSE(reverify(fixture::p2(), tampered));

  EXPECT_THROW(certificate_from_json("{\"complex\": 3}"), MalformedInputError);
  EXPECT_THROW(certificate_from_json("not json"), MalformedInputError);
}

TEST(Verifier, RandomCrossCheck) {
  EXPECT_EQ(cross_check(fixture::c5(), 1, 1000, 99).disagreements, 0u);
  EXPECT_EQ(cross_check(fixture::p2(), 2, 1000, 99).disagreements, 0u);
  const auto seq = cross_check(fixture::t2(), 2, 300, 5);
  const auto par = cross_check(fixture::t2(), 2, 300, 5, 3, 3);
  EXPECT_EQ(seq.trials, 300u);
  EXPECT_EQ(seq.colorings, par.colorings);
}

TEST(Verifier, ExhaustiveCrossCheckOnSmallComplexes) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 25; ++i) {
    const auto k = random_complex(static_cast<std::uint32_t>(1 + rng() % 7), 0.45, rng());
    for (int s = 1; s <= 3; ++s) {
      const auto report = cross_check_exhaustive(k, s, 3);
      EXPECT_EQ(report.disagreements, 0u);
      // Accepted maps agree with the brute-force count.
      oracle::cpp_int expected = 0;
      for (unsigned r = 1; r <= 3; ++r) expected += oracle::count_colorings(k, r, s, false);
      EXPECT_EQ(oracle::cpp_int(report.colorings), expected);
    }
  }
}

TEST(Verifier, AlgebraicVerdictMatchesBruteForce) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 15; ++i) {
    const auto k = random_complex(static_cast<std::uint32_t>(2 + rng() % 5), 0.5, rng());
    const AlgebraicVerifier v(k);
    oracle::for_each_map(k.num_vertices(), 3, [&](const std::vector<unsigned>& f) {
      const Coloring col(std::vector<ColorId>(f.begin(), f.end()), 3);
      for (int s = 1; s <= 2; ++s) EXPECT_EQ(v.holds(col, s), oracle::is_coloring(k, f, s));
    });
  }
}

TEST(Verifier, TermLimitRaisesResourceError) {
  EXPECT_THROW(AlgebraicVerifier(full_simplex(12), 1000), ResourceLimitError);
}

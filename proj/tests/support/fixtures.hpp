#pragma once

// Worked examples transcribed by hand, kept separate from the library's
// corpus so the two can be compared.

#include <string>
#include <vector>

#include "srcolor/srcolor.hpp"

namespace fixture {

using Lists = std::vector<std::vector<std::string>>;

inline std::vector<std::string> numbered(int m) {
  std::vector<std::string> v;
  for (int i = 1; i <= m; ++i) v.push_back(std::to_string(i));
  return v;
}

inline srcolor::SimplicialComplex c5() {
  return srcolor::SimplicialComplex::from_facets(
      numbered(5), {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "1"}});
}

inline Lists p2_missing() {
  return {{"1", "2", "3"}, {"1", "2", "5"}, {"1", "3", "6"}, {"1", "4", "5"}, {"1", "4", "6"},
          {"2", "3", "4"}, {"2", "4", "6"}, {"2", "5", "6"}, {"3", "4", "5"}, {"3", "5", "6"}};
}

// Every triple of 1..6 that is not a generator of the ideal.
inline srcolor::SimplicialComplex p2() {
  const auto missing = p2_missing();
  Lists facets;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = b + 1; c <= 6; ++c) {
        std::vector<std::string> t{std::to_string(a), std::to_string(b), std::to_string(c)};
        if (std::find(missing.begin(), missing.end(), t) == missing.end()) facets.push_back(t);
      }
  return srcolor::SimplicialComplex::from_facets(numbered(6), facets);
}

inline srcolor::SimplicialComplex mb5() {
  return srcolor::SimplicialComplex::from_facets(
      numbered(5), {{"1", "2", "4"}, {"2", "4", "5"}, {"2", "3", "5"}, {"1", "3", "5"},
                    {"1", "3", "4"}});
}

// Seven-vertex torus: triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7.
inline srcolor::SimplicialComplex t2() {
  Lists facets;
  auto l = [](int i) { return std::to_string(i % 7 + 1); };
  for (int i = 0; i < 7; ++i) {
    facets.push_back({l(i), l(i + 1), l(i + 3)});
    facets.push_back({l(i), l(i + 2), l(i + 3)});
  }
  return srcolor::SimplicialComplex::from_facets(numbered(7), facets);
}

// Cone over a triangle boundary: {124, 134, 123} after naming the apex 1.
inline srcolor::SimplicialComplex disc4() {
  return srcolor::SimplicialComplex::from_facets(
      numbered(4), {{"1", "2", "4"}, {"1", "3", "4"}, {"1", "2", "3"}});
}

inline srcolor::Coloring colors(std::vector<std::int64_t> labels) {
  return srcolor::Coloring::from_labels(labels);
}

}  // namespace fixture

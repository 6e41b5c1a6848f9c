#include <algorithm>

#include "srcolor/coloring.hpp"
#include "srcolor/error.hpp"
#include "srcolor/generators.hpp"

namespace srcolor {

namespace {

using Lists = std::vector<std::vector<std::string>>;

std::vector<std::string> numbered(std::uint32_t m) {
  std::vector<std::string> labels;
  for (std::uint32_t i = 1; i <= m; ++i) labels.push_back(std::to_string(i));
  return labels;
}

Lists triples(std::initializer_list<const char*> words) {
  Lists out;
  for (const char* w : words) {
    std::vector<std::string> t;
    for (const char* c = w; *c; ++c) t.emplace_back(1, *c);
    out.push_back(std::move(t));
  }
  return out;
}

CorpusEntry make_c5() {
  CorpusEntry e;
  e.name = "C5";
  e.description = "cyclic graph on five vertices";
  e.complex = SimplicialComplex::from_facets(
      numbered(5), {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "1"}});
  e.f_vector = {{1, 5, 5}};
  e.chromatic = {{1, 3}};
  e.counts = {{3, 1, 30}};
  e.missing_faces = triples({"13", "14", "24", "25", "35"});
  e.euler_characteristic = 0;
  e.pseudomanifold = true;
  e.flagness = {{1, true}};
  return e;
}

CorpusEntry make_mb5() {
  CorpusEntry e;
  e.name = "MB5";
  e.description = "five-vertex Moebius band";
  e.complex = SimplicialComplex::from_facets(numbered(5), triples({"124", "245", "235", "135", "134"}));
  e.f_vector = {{1, 5, 10, 5}};
  e.chromatic = {{1, 5}, {2, 2}};
  e.euler_characteristic = 0;
  e.complete_one_skeleton = true;
  e.flagness = {{1, false}, {2, true}};
  return e;
}

// The ten non-faces generating the Stanley–Reisner ideal of the six-vertex
// projective plane; its facets are the remaining ten triples.
const char* const kP2Missing[] = {"123", "125", "136", "145", "146",
                                  "234", "246", "256", "345", "356"};

CorpusEntry make_p2() {
  CorpusEntry e;
  e.name = "P2";
  e.description = "six-vertex real projective plane";
  Lists missing;
  for (const char* w : kP2Missing) missing.push_back(triples({w}).front());
  Lists facets;
  for (const auto& t : subsets_of_size(VertexSet::range(6), 3)) {
    std::vector<std::string> labels;
    t.for_each([&](VertexIndex v) { labels.push_back(std::to_string(v + 1)); });
    if (std::find(missing.begin(), missing.end(), labels) == missing.end())
      facets.push_back(std::move(labels));
  }
  e.complex = SimplicialComplex::from_facets(numbered(6), facets);
  e.f_vector = {{1, 6, 15, 10}};
  e.chromatic = {{1, 6}, {2, 3}};
  e.counts = {{6, 1, 720}, {3, 2, 270}};
  e.missing_faces = std::move(missing);
  e.euler_characteristic = 1;
  e.pseudomanifold = true;
  e.complete_one_skeleton = true;
  e.flagness = {{1, false}, {2, true}};
  return e;
}

CorpusEntry make_t2() {
  CorpusEntry e;
  e.name = "T2";
  e.description = "seven-vertex torus";
  Lists facets;
  for (int i = 0; i < 7; ++i) {
    auto label = [](int v) { return std::to_string(v % 7 + 1); };
    facets.push_back({label(i), label(i + 1), label(i + 3)});
    facets.push_back({label(i), label(i + 2), label(i + 3)});
  }
  e.complex = SimplicialComplex::from_facets(numbered(7), facets);
  e.f_vector = {{1, 7, 21, 14}};
  e.chromatic = {{1, 7}, {2, 3}};
  e.counts = {{7, 1, 5040}, {3, 2, 504}};
  e.euler_characteristic = 0;
  e.pseudomanifold = true;
  e.complete_one_skeleton = true;
  return e;
}

CorpusEntry make_disc4() {
  CorpusEntry e;
  e.name = "DISC4";
  e.description = "cone over a triangle boundary, a 4-chromatic disc";
  e.complex = relabel_sequential(join(full_simplex(1), boundary_simplex(3)));
  e.f_vector = {{1, 4, 6, 3}};
  e.chromatic = {{1, 4}};
  e.missing_faces = triples({"234"});
  e.euler_characteristic = 1;
  e.complete_one_skeleton = true;
  return e;
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> entries{make_c5(), make_mb5(), make_p2(), make_t2(), make_disc4()};
  std::string problems;
  for (const auto& e : entries)
    for (const auto& msg : validate_corpus_entry(e)) problems += "\n  " + e.name + ": " + msg;
  if (!problems.empty()) throw InvariantViolationError("corpus validation failed:" + problems);
  return entries;
}

}  // namespace

std::vector<std::string> validate_corpus_entry(const CorpusEntry& entry) {
  std::vector<std::string> failures;
  const auto& k = entry.complex;
  auto fail = [&](std::string msg) { failures.push_back(std::move(msg)); };

  if (k.f_vector() != entry.f_vector) fail("f-vector mismatch");
  if (entry.euler_characteristic && euler_characteristic(k) != *entry.euler_characteristic)
    fail("Euler characteristic mismatch");
  if (entry.pseudomanifold && !is_pseudomanifold(k)) fail("not a pseudomanifold");
  if (entry.complete_one_skeleton &&
      skeleton(k, 1).facets().size() * 2 != k.num_vertices() * (k.num_vertices() - 1))
    fail("1-skeleton is not complete");
  if (!entry.missing_faces.empty()) {
    std::vector<VertexSet> expected;
    for (const auto& labels : entry.missing_faces) expected.push_back(k.to_vertex_set(labels));
    std::sort(expected.begin(), expected.end());
    if (missing_faces(k) != expected) fail("missing faces differ from the documented list");
  }
  for (const auto& [s, flag] : entry.flagness)
    if (is_s_flag(k, s) != flag) fail(std::to_string(s) + "-flag property mismatch");
  for (const auto& known : entry.chromatic) {
    const auto result = chromatic_number(k, known.s);
    if (result.colors != known.value)
      fail("chi_" + std::to_string(known.s) + " = " + std::to_string(result.colors) +
           ", expected " + std::to_string(known.value));
    if (!is_coloring(k, result.witness, known.s)) fail("chromatic witness is not a coloring");
  }
  for (const auto& known : entry.counts) {
    const auto count = count_colorings(k, known.colors, known.s, false);
    if (count != known.value)
      fail("count(" + std::to_string(known.colors) + "," + std::to_string(known.s) +
           ") = " + count.str() + ", expected " + std::to_string(known.value));
  }
  return failures;
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw InvalidArgumentError("unknown corpus complex '" + std::string(name) +
                             "' (known: C5, MB5, P2, T2, DISC4)");
}

}  // namespace srcolor

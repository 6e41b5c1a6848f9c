#include "srcolor/generators.hpp"

#include <random>

#include "srcolor/error.hpp"

namespace srcolor {

namespace {

std::shared_ptr<const VertexTable> numbered_table(std::uint32_t m) {
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::uint32_t i = 1; i <= m; ++i) labels.push_back(std::to_string(i));
  return std::make_shared<const VertexTable>(std::move(labels));
}

}  // namespace

SimplicialComplex full_simplex(std::uint32_t m) {
  if (m < 1) throw InvalidArgumentError("full simplex needs at least one vertex");
  return SimplicialComplex(numbered_table(m), {VertexSet::range(m)});
}

SimplicialComplex boundary_simplex(std::uint32_t m) {
  if (m < 1) throw InvalidArgumentError("simplex boundary needs at least one vertex");
  if (m == 1) return SimplicialComplex();
  const auto all = VertexSet::range(m);
  std::vector<VertexSet> facets;
  for (VertexIndex v = 0; v < m; ++v) {
    auto f = all;
    f.erase(v);
    facets.push_back(f);
  }
  return SimplicialComplex(numbered_table(m), std::move(facets));
}

namespace gale {

bool evenness_literal(const std::vector<bool>& member) {
  std::optional<std::size_t> previous_gap;
  for (std::size_t i = 0; i < member.size(); ++i) {
    if (member[i]) continue;
    if (previous_gap) {
      std::size_t between = 0;
      for (std::size_t j = *previous_gap + 1; j < i; ++j)
        if (member[j]) ++between;
      if (between % 2 != 0) return false;
    }
    previous_gap = i;
  }
  return true;
}

bool evenness_runs(const std::vector<bool>& member) {
  std::size_t i = 0;
  while (i < member.size()) {
    if (!member[i]) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < member.size() && member[i]) ++i;
    const bool touches_end = start == 0 || i == member.size();
    if (!touches_end && (i - start) % 2 != 0) return false;
  }
  return true;
}

}  // namespace gale

SimplicialComplex cyclic_polytope(std::uint32_t m, std::uint32_t n) {
  if (n < 2 || m <= n)
    throw InvalidArgumentError("cyclic polytope CP(m,n) requires m > n >= 2, got m=" +
                               std::to_string(m) + ", n=" + std::to_string(n));
  if (m > VertexSet::kCapacity) throw InvalidArgumentError("too many vertices");
  std::vector<VertexSet> facets;
  for (const auto& sigma : subsets_of_size(VertexSet::range(m), n)) {
    std::vector<bool> member(m, false);
    sigma.for_each([&](VertexIndex v) { member[v] = true; });
    const bool literal = gale::evenness_literal(member);
    if (literal != gale::evenness_runs(member))
      throw InvariantViolationError("Gale evenness implementations disagree");
    if (literal) facets.push_back(sigma);
  }
  return SimplicialComplex(numbered_table(m), std::move(facets));
}

SimplicialComplex random_complex(std::uint32_t m, double density, std::uint64_t seed) {
  if (m < 1) throw InvalidArgumentError("random complex needs at least one vertex");
  if (!(density > 0.0 && density <= 1.0))
    throw InvalidArgumentError("density must lie in (0, 1]");
  std::mt19937_64 rng(seed);
  // Compare 53 random bits against the threshold instead of going through
  // uniform_real_distribution, whose output is implementation-defined.
  auto coin = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < density; };
  std::vector<VertexSet> facets;
  VertexSet used;
  for (std::uint32_t c = 0; c < m; ++c) {
    VertexSet f;
    for (VertexIndex v = 0; v < m; ++v)
      if (coin()) f.insert(v);
    if (f.empty()) continue;
    used |= f;
    facets.push_back(f);
  }
  for (VertexIndex v = 0; v < m; ++v)
    if (!used.contains(v)) facets.push_back(VertexSet{v});
  return SimplicialComplex(numbered_table(m), std::move(facets));
}

}  // namespace srcolor

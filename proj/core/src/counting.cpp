#include <algorithm>

#include "search_problem.hpp"
#include "srcolor/coloring.hpp"
#include "srcolor/error.hpp"

namespace srcolor {

namespace {

using detail::ColorState;
using detail::SearchProblem;

// Enumerates colorings with colors numbered by first use along the search
// order, tallying complete colorings by the number of colors they use.
class CanonicalCounter {
 public:
  CanonicalCounter(const SearchProblem& problem, std::uint32_t palette, bool surjective,
                   std::uint64_t budget)
      : problem_(problem),
        state_(problem, palette),
        palette_(palette),
        surjective_(surjective),
        budget_(budget),
        leaves_(palette + 1, 0) {}

  void run(std::size_t pos, std::uint32_t used) {
    if (pos == problem_.num_vertices) {
      ++leaves_[used];
      return;
    }
    if (surjective_ && problem_.num_vertices - pos < palette_ - used) return;
    const VertexIndex v = problem_.order[pos];
    const std::uint32_t limit = std::min(used + 1, palette_);
    for (ColorId c = 0; c < limit; ++c) {
      if (++nodes_ > budget_)
        throw BudgetExhaustedError("node budget exhausted while counting colorings", -1, -1);
      if (!state_.can_place(v, c)) continue;
      state_.place(v, c);
      run(pos + 1, std::max(used, c + 1));
      state_.unplace(v, c);
    }
  }

  const std::vector<std::uint64_t>& leaves() const { return leaves_; }

 private:
  const SearchProblem& problem_;
  ColorState state_;
  std::uint32_t palette_;
  bool surjective_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> leaves_;
};

}  // namespace

BigInt count_colorings(const SimplicialComplex& k, std::uint32_t r, int s, bool surjective,
                       const CountConfig& config) {
  if (s < 1) throw InvalidArgumentError("s must be >= 1");
  if (r < 1) throw InvalidArgumentError("palette size must be >= 1");
  const SearchProblem problem(k, s, VertexOrder::kFacetDegree);
  CanonicalCounter counter(problem, r, surjective, config.node_budget);
  counter.run(0, 0);

  BigInt total = 0;
  BigInt falling = 1;  // r (r-1) ... (r-used+1)
  for (std::uint32_t used = 0; used <= r; ++used) {
    if (used > 0) falling *= (r - used + 1);
    if (surjective && used != r) continue;
    total += falling * counter.leaves()[used];
  }
  return total;
}

}  // namespace srcolor

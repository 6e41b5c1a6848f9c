#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <thread>

#include "search_problem.hpp"
#include "srcolor/coloring.hpp"
#include "srcolor/error.hpp"

namespace srcolor {

std::vector<VertexIndex> search_order(const SimplicialComplex& k, VertexOrder order) {
  std::vector<VertexIndex> out(k.num_vertices());
  std::iota(out.begin(), out.end(), VertexIndex{0});
  if (order == VertexOrder::kCanonical) return out;
  std::vector<std::size_t> degree(k.num_vertices(), 0);
  for (const auto& f : k.facets()) f.for_each([&](VertexIndex v) { ++degree[v]; });
  std::stable_sort(out.begin(), out.end(),
                   [&](VertexIndex a, VertexIndex b) { return degree[a] > degree[b]; });
  return out;
}

namespace detail {

SearchProblem::SearchProblem(const SimplicialComplex& k, int s, VertexOrder order)
    : num_vertices(k.num_vertices()),
      num_facets(k.facets().size()),
      multiplicity(s),
      order(search_order(k, order)),
      vertex_facets(k.num_vertices()) {
  for (std::size_t f = 0; f < k.facets().size(); ++f)
    k.facets()[f].for_each([&](VertexIndex v) { vertex_facets[v].push_back(static_cast<std::uint32_t>(f)); });
}

ColorState::ColorState(const SearchProblem& problem, std::uint32_t palette)
    : problem_(problem),
      palette_(palette),
      counters_(problem.num_facets * palette, 0),
      colors_(problem.num_vertices, 0) {}

bool ColorState::can_place(VertexIndex v, ColorId c) const {
  for (auto f : problem_.vertex_facets[v])
    if (counters_[f * palette_ + c] >= problem_.multiplicity) return false;
  return true;
}

void ColorState::place(VertexIndex v, ColorId c) {
  for (auto f : problem_.vertex_facets[v]) ++counters_[f * palette_ + c];
  colors_[v] = c;
}

void ColorState::unplace(VertexIndex v, ColorId c) {
  for (auto f : problem_.vertex_facets[v]) --counters_[f * palette_ + c];
}

}  // namespace detail

namespace {

using detail::ColorState;
using detail::SearchProblem;

struct SharedBudget {
  std::optional<std::uint64_t> limit;
  std::atomic<std::uint64_t> used{0};
  std::atomic<bool> exhausted{false};
};

struct Prefix {
  std::vector<ColorId> colors;  // by search position
  std::uint32_t used = 0;
};

constexpr std::size_t kNoTask = static_cast<std::size_t>(-1);

// Depth-first search for the lexicographically least completion, trying
// colors in increasing order and opening at most one new color per vertex.
class Searcher {
 public:
  Searcher(const SearchProblem& problem, std::uint32_t palette, SharedBudget& budget,
           const std::atomic<std::size_t>* best_task, std::size_t my_task)
      : problem_(problem),
        state_(problem, palette),
        palette_(palette),
        budget_(budget),
        best_task_(best_task),
        my_task_(my_task) {}

  void apply(const Prefix& prefix) {
    for (std::size_t pos = 0; pos < prefix.colors.size(); ++pos)
      state_.place(problem_.order[pos], prefix.colors[pos]);
  }

  // True when a solution is found; `aborted()` distinguishes a refutation
  // from an early stop.
  bool run(std::size_t pos, std::uint32_t used) {
    if (pos == problem_.num_vertices) return true;
    const VertexIndex v = problem_.order[pos];
    const std::uint32_t limit = std::min(used + 1, palette_);
    for (ColorId c = 0; c < limit; ++c) {
      if (!tick()) return false;
      if (!state_.can_place(v, c)) continue;
      state_.place(v, c);
      if (run(pos + 1, std::max(used, c + 1))) return true;
      state_.unplace(v, c);
      if (aborted_) return false;
    }
    return false;
  }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }
  const ColorState& state() const { return state_; }

 private:
  bool tick() {
    ++nodes_;
    const auto total = budget_.used.fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget_.limit && total > *budget_.limit) {
      budget_.exhausted.store(true, std::memory_order_relaxed);
      aborted_ = true;
      return false;
    }
    if (budget_.exhausted.load(std::memory_order_relaxed)) {
      aborted_ = true;
      return false;
    }
    if (best_task_ && (nodes_ & 0xff) == 0 &&
        best_task_->load(std::memory_order_relaxed) < my_task_) {
      aborted_ = true;
      return false;
    }
    return true;
  }

  const SearchProblem& problem_;
  ColorState state_;
  std::uint32_t palette_;
  SharedBudget& budget_;
  const std::atomic<std::size_t>* best_task_;
  std::size_t my_task_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

// Splits the search at palette r into prefixes listed in lexicographic
// order, so the first prefix (by index) with a solution holds the canonical
// witness.
std::vector<Prefix> split(const SearchProblem& problem, std::uint32_t palette,
                          std::size_t target, SharedBudget& budget) {
  std::vector<Prefix> level{Prefix{}};
  ColorState state(problem, palette);
  for (std::size_t depth = 0; depth < problem.num_vertices && level.size() < target; ++depth) {
    std::vector<Prefix> next;
    const VertexIndex v = problem.order[depth];
    for (const auto& prefix : level) {
      for (std::size_t pos = 0; pos < depth; ++pos)
        state.place(problem.order[pos], prefix.colors[pos]);
      const std::uint32_t limit = std::min(prefix.used + 1, palette);
      for (ColorId c = 0; c < limit; ++c) {
        const auto total = budget.used.fetch_add(1) + 1;
        if (budget.limit && total > *budget.limit) {
          budget.exhausted = true;
          return {};
        }
        if (!state.can_place(v, c)) continue;
        Prefix child = prefix;
        child.colors.push_back(c);
        child.used = std::max(prefix.used, c + 1);
        next.push_back(std::move(child));
      }
      for (std::size_t pos = depth; pos-- > 0;)
        state.unplace(problem.order[pos], prefix.colors[pos]);
    }
    level = std::move(next);
  }
  return level;
}

std::optional<std::vector<ColorId>> solve_sequential(const SearchProblem& problem,
                                                     std::uint32_t palette,
                                                     SharedBudget& budget) {
  Searcher searcher(problem, palette, budget, nullptr, 0);
  if (searcher.run(0, 0)) return searcher.state().colors();
  return std::nullopt;
}

std::optional<std::vector<ColorId>> solve_parallel(const SearchProblem& problem,
                                                   std::uint32_t palette, unsigned workers,
                                                   SharedBudget& budget) {
  auto tasks = split(problem, palette, std::size_t{8} * workers, budget);
  if (budget.exhausted) return std::nullopt;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{kNoTask};
  std::vector<std::optional<std::vector<ColorId>>> found(tasks.size());

  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size() || i > best.load() || budget.exhausted.load()) return;
      Searcher searcher(problem, palette, budget, &best, i);
      searcher.apply(tasks[i]);
      if (searcher.run(tasks[i].colors.size(), tasks[i].used)) {
        found[i] = searcher.state().colors();
        std::size_t current = best.load();
        while (i < current && !best.compare_exchange_weak(current, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  if (budget.exhausted) return std::nullopt;
  const auto b = best.load();
  if (b == kNoTask) return std::nullopt;
  return found[b];
}

std::uint32_t ceil_div(std::size_t a, std::size_t b) {
  return static_cast<std::uint32_t>((a + b - 1) / b);
}

// First-fit along the search order with an unbounded palette.
std::uint32_t greedy_colors(const SearchProblem& problem) {
  ColorState state(problem, static_cast<std::uint32_t>(std::max<std::size_t>(problem.num_vertices, 1)));
  std::uint32_t used = 0;
  for (auto v : problem.order) {
    ColorId c = 0;
    while (!state.can_place(v, c)) ++c;
    state.place(v, c);
    used = std::max(used, c + 1);
  }
  return used;
}

}  // namespace

ChromaticResult chromatic_number(const SimplicialComplex& k, int s, const SearchConfig& config) {
  if (s < 1) throw InvalidArgumentError("s must be >= 1");
  ChromaticResult result;
  const std::size_t m = k.num_vertices();
  if (m == 0) return result;

  const SearchProblem problem(k, s, config.vertex_order);
  const auto lower = ceil_div(k.max_facet_size(), static_cast<std::size_t>(s));
  const auto upper = std::min(ceil_div(m, static_cast<std::size_t>(s)), greedy_colors(problem));

  SharedBudget budget;
  budget.limit = config.node_budget;
  const unsigned workers = std::max(1U, config.workers);
  for (std::uint32_t r = lower; r <= upper; ++r) {
    auto solution = workers == 1 ? solve_sequential(problem, r, budget)
                                 : solve_parallel(problem, r, workers, budget);
    if (budget.exhausted)
      throw BudgetExhaustedError("node budget exhausted while testing " + std::to_string(r) +
                                     " colors",
                                 r, upper);
    if (solution) {
      result.colors = r;
      result.witness = Coloring(std::move(*solution), r);
      result.nodes = budget.used.load();
      return result;
    }
  }
  throw InvariantViolationError("no coloring found within the proven upper bound");
}

}  // namespace srcolor

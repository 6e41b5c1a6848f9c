#include "srcolor/verifier.hpp"

#include <random>
#include <thread>

#include "srcolor/error.hpp"

namespace srcolor {

AlgebraicVerifier::AlgebraicVerifier(SimplicialComplex k, std::size_t max_terms)
    : ctx_(std::move(k)), max_terms_(max_terms), lhs_(ctx_.table()) {
  const auto& table = ctx_.table();
  lhs_ = Polynomial::constant(table, 1);
  for (VertexIndex v = 0; v < table->size(); ++v) {
    const auto one_plus_v = Polynomial::constant(table, 1) + Polynomial::variable(table, v);
    lhs_ = ctx_.multiply(lhs_, one_plus_v, max_terms_);
  }
}

std::vector<Polynomial> AlgebraicVerifier::factors(const Coloring& f, int s) const {
  if (s < 1) throw InvalidArgumentError("s must be >= 1");
  if (f.size() != ctx_.complex().num_vertices())
    throw InvalidArgumentError("coloring size does not match the complex");
  std::vector<Polynomial> out;
  for (const auto& fiber : f.fibers())
    out.push_back(ctx_.normal_form(
        c_leq(ctx_.table(), fiber, static_cast<std::size_t>(s), max_terms_)));
  return out;
}

Polynomial AlgebraicVerifier::product(const std::vector<Polynomial>& factors) const {
  auto rhs = Polynomial::constant(ctx_.table(), 1);
  for (const auto& p : factors) rhs = ctx_.multiply(rhs, p, max_terms_);
  return rhs;
}

bool AlgebraicVerifier::holds(const Coloring& f, int s) const {
  return product(factors(f, s)) == lhs_;
}

Certificate AlgebraicVerifier::certify(const Coloring& f, int s, std::string complex_id) const {
  const auto fs = factors(f, s);
  const auto rhs = product(fs);
  Certificate cert;
  cert.complex_id = std::move(complex_id);
  cert.s = s;
  for (auto c : f.assignment()) cert.coloring.push_back(c + 1);
  cert.verdict = rhs == lhs_;
  cert.lhs = lhs_.to_string();
  cert.rhs = rhs.to_string();
  for (std::size_t p = 0; p < fs.size(); ++p)
    cert.factors.push_back({static_cast<std::uint32_t>(p + 1), fs[p].to_string()});
  return cert;
}

Certificate verify_coloring_algebraically(const SimplicialComplex& k, const Coloring& f, int s,
                                          std::string complex_id) {
  return AlgebraicVerifier(k).certify(f, s, std::move(complex_id));
}

Certificate verify_coloring_s1(const SimplicialComplex& k, const Coloring& f,
                               std::string complex_id) {
  return verify_coloring_algebraically(k, f, 1, std::move(complex_id));
}

Certificate factorization_certificate(const SimplicialComplex& k, const Coloring& f, int s,
                                      std::string complex_id) {
  if (!is_coloring(k, f, s))
    throw InvalidWitnessError("map is not a (P," + std::to_string(s) + ")-coloring");
  const AlgebraicVerifier verifier(k);
  const auto fs = verifier.factors(f, s);
  const auto fibers = f.fibers();
  for (std::size_t p = 0; p < fs.size(); ++p) {
    if (fs[p].degree() > s)
      throw InvariantViolationError("factor for color " + std::to_string(p + 1) +
                                    " exceeds degree " + std::to_string(s));
    if (!fibers[p].empty() && fs[p].degree() < 1)
      throw InvariantViolationError("factor for a nonempty color class is constant");
  }
  auto cert = verifier.certify(f, s, std::move(complex_id));
  if (!cert.verdict)
    throw InvariantViolationError(
        "combinatorial coloring fails the ring identity; the verifiers disagree");
  return cert;
}

Coloring recover_coloring(const SimplicialComplex& k, const std::vector<Polynomial>& factors) {
  const auto m = k.num_vertices();
  std::vector<ColorId> assignment(m, 0);
  std::vector<bool> seen(m, false);
  for (std::size_t p = 0; p < factors.size(); ++p) {
    for (const auto& t : factors[p].terms()) {
      if (t.monomial.degree() != 1) continue;
      const auto v = t.monomial.factors().front().var;
      if (t.coefficient != 1)
        throw InvalidWitnessError("linear term of a factor has coefficient " +
                                  std::to_string(t.coefficient));
      if (seen[v])
        throw InvalidWitnessError("vertex '" + k.vertices().label(v) +
                                  "' occurs linearly in two factors");
      seen[v] = true;
      assignment[v] = static_cast<ColorId>(p);
    }
  }
  for (std::size_t v = 0; v < m; ++v)
    if (!seen[v])
      throw InvalidWitnessError("vertex '" + k.vertices().label(static_cast<VertexIndex>(v)) +
                                "' occurs in no factor");
  Coloring f(std::move(assignment), static_cast<std::uint32_t>(factors.size()));
  const AlgebraicVerifier verifier(k);
  if (verifier.product(factors) != verifier.reduced_total_chern())
    throw InvalidWitnessError("factors do not multiply to c(V) in SR(K;Z)");
  return f;
}

bool reverify(const SimplicialComplex& k, const Certificate& certificate) {
  if (certificate.coloring.size() != k.num_vertices()) return false;
  std::vector<ColorId> assignment;
  std::uint32_t palette = static_cast<std::uint32_t>(certificate.factors.size());
  for (auto c : certificate.coloring) {
    if (c < 1 || c > palette) return false;
    assignment.push_back(c - 1);
  }
  const Coloring f(std::move(assignment), palette);
  return AlgebraicVerifier(k).certify(f, certificate.s, certificate.complex_id) == certificate;
}

// ---------------------------------------------------------------------------
// Oracle-equivalence harness

namespace {

[[noreturn]] void report_disagreement(const SimplicialComplex& k, int s, const Coloring& f,
                                      bool algebraic, const std::string& where) {
  std::string facets;
  for (const auto& facet : k.facets()) facets += "[" + format_face(k, facet) + "]";
  throw InvariantViolationError("verifiers disagree (" + where + "): s=" + std::to_string(s) +
                                " coloring=" + f.to_string() + " algebraic=" +
                                (algebraic ? "true" : "false") + " facets=" + facets);
}

}  // namespace

CrossCheckReport cross_check(const SimplicialComplex& k, int s, std::uint64_t trials,
                             std::uint64_t seed, std::uint32_t palette, unsigned workers) {
  if (palette < 1) throw InvalidArgumentError("palette must be >= 1");
  const AlgebraicVerifier verifier(k);
  const auto m = k.num_vertices();
  workers = std::max(1U, workers);

  std::vector<std::uint64_t> accepted(workers, 0);
  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::uint64_t i = w; i < trials; i += workers) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
        std::mt19937_64 rng(seq);
        std::vector<ColorId> assignment(m);
        for (auto& c : assignment) c = static_cast<ColorId>(rng() % palette);
        const Coloring f(std::move(assignment), palette);
        const bool algebraic = verifier.holds(f, s);
        if (algebraic != is_coloring(k, f, s))
          report_disagreement(k, s, f, algebraic,
                              "seed " + std::to_string(seed) + ", trial " + std::to_string(i));
        if (algebraic) ++accepted[w];
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : failures)
    if (e) std::rethrow_exception(e);

  CrossCheckReport report;
  report.trials = trials;
  for (auto a : accepted) report.colorings += a;
  return report;
}

CrossCheckReport cross_check_exhaustive(const SimplicialComplex& k, int s,
                                        std::uint32_t max_palette) {
  const AlgebraicVerifier verifier(k);
  const auto m = k.num_vertices();
  CrossCheckReport report;
  for (std::uint32_t palette = 1; palette <= max_palette; ++palette) {
    std::vector<ColorId> assignment(m, 0);
    while (true) {
      const Coloring f(assignment, palette);
      const bool algebraic = verifier.holds(f, s);
      if (algebraic != is_coloring(k, f, s))
        report_disagreement(k, s, f, algebraic, "exhaustive, palette " + std::to_string(palette));
      ++report.trials;
      if (algebraic) ++report.colorings;
      // odometer increment
      std::size_t i = 0;
      while (i < m && ++assignment[i] == palette) assignment[i++] = 0;
      if (i == m) break;
    }
  }
  return report;
}

}  // namespace srcolor

#include "srcolor/stanley_reisner.hpp"

#include <unordered_map>
#include <utility>

#include "srcolor/error.hpp"

namespace srcolor {

SRContext::SRContext(SimplicialComplex complex)
    : complex_(std::move(complex)), missing_(srcolor::missing_faces(complex_)) {}

bool SRContext::survives(const Monomial& m) const {
  const auto support = m.support();
  for (const auto& mf : missing_)
    if (mf.is_subset_of(support)) return false;
  return true;
}

void SRContext::require_context(const Polynomial& p) const {
  if (p.table() == table()) return;
  if (p.table() && *p.table() == *table()) return;
  throw ContextMismatchError("polynomial is not over the complex's vertex table");
}

Polynomial SRContext::normal_form(const Polynomial& p) const {
  require_context(p);
  std::vector<Term> kept;
  kept.reserve(p.num_terms());
  for (const auto& t : p.terms())
    if (survives(t.monomial)) kept.push_back(t);
  return Polynomial::from_terms(table(), std::move(kept));
}

Polynomial SRContext::multiply(const Polynomial& p, const Polynomial& q,
                               std::size_t max_terms) const {
  require_context(p);
  require_context(q);
  std::unordered_map<Monomial, Coefficient, MonomialHash> acc;
  for (const auto& a : p.terms()) {
    if (!survives(a.monomial)) continue;
    for (const auto& b : q.terms()) {
      auto m = a.monomial * b.monomial;
      if (!survives(m)) continue;
      Coefficient prod;
      if (__builtin_mul_overflow(a.coefficient, b.coefficient, &prod))
        throw OverflowError("coefficient overflow in multiplication");
      auto& slot = acc[std::move(m)];
      if (__builtin_add_overflow(slot, prod, &slot))
        throw OverflowError("coefficient overflow in addition");
      if (acc.size() > max_terms)
        throw ResourceLimitError("reduced product exceeds " + std::to_string(max_terms) +
                                 " terms");
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, c});
  return Polynomial::from_terms(table(), std::move(terms));
}

bool SRContext::equal(const Polynomial& p, const Polynomial& q) const {
  return normal_form(p) == normal_form(q);
}

Polynomial normal_form(const Polynomial& p, const SRContext& ctx) { return ctx.normal_form(p); }

bool equal_in_sr(const Polynomial& p, const Polynomial& q, const SRContext& ctx) {
  return ctx.equal(p, q);
}

}  // namespace srcolor

#include "srcolor/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <utility>

#include "srcolor/error.hpp"

namespace srcolor {

namespace {

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("coefficient overflow in multiplication");
  return r;
}

void require_same_table(const Polynomial& p, const Polynomial& q) {
  if (p.table() == q.table()) return;
  if (p.table() && q.table() && *p.table() == *q.table()) return;
  throw ContextMismatchError("polynomials are defined over different vertex tables");
}

// Binomial coefficient saturated at `cap`.
std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (r > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(r + 0.5L);
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(VertexIndex v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.factors_.push_back({v, exp});
  return m;
}

Monomial Monomial::squarefree(const VertexSet& s) {
  Monomial m;
  s.for_each([&](VertexIndex v) { m.factors_.push_back({v, 1}); });
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.exp;
  return d;
}

std::uint32_t Monomial::exponent(VertexIndex v) const {
  for (const auto& f : factors_)
    if (f.var == v) return f.exp;
  return 0;
}

VertexSet Monomial::support() const {
  VertexSet s;
  for (const auto& f : factors_) s.insert(f.var);
  return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->var < b->var)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->var < a->var) {
      r.factors_.push_back(*b++);
    } else {
      std::uint32_t e;
      if (__builtin_add_overflow(a->exp, b->exp, &e)) throw OverflowError("exponent overflow");
      r.factors_.push_back({a->var, e});
      ++a;
      ++b;
    }
  }
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  const std::size_t n = std::min(factors_.size(), other.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = factors_[i];
    const auto& b = other.factors_[i];
    if (a.var != b.var) return a.var <=> b.var;
    // More copies of the same variable means the sequence stays smaller
    // for longer.
    if (a.exp != b.exp) return b.exp <=> a.exp;
  }
  return factors_.size() <=> other.factors_.size();
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& f : factors_) {
    h ^= (static_cast<std::uint64_t>(f.var) << 32) | f.exp;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::shared_ptr<const VertexTable> table) : table_(std::move(table)) {}

Polynomial Polynomial::constant(std::shared_ptr<const VertexTable> table, Coefficient c) {
  return from_monomial(std::move(table), Monomial{}, c);
}

Polynomial Polynomial::from_monomial(std::shared_ptr<const VertexTable> table, Monomial m,
                                     Coefficient c) {
  Polynomial p(std::move(table));
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::variable(std::shared_ptr<const VertexTable> table, VertexIndex v) {
  if (!table || v >= table->size())
    throw ContextMismatchError("variable index outside the vertex table");
  return from_monomial(std::move(table), Monomial::variable(v), 1);
}

Polynomial Polynomial::from_terms(std::shared_ptr<const VertexTable> table,
                                  std::vector<Term> terms) {
  Polynomial p(std::move(table));
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient = checked_add(p.terms_.back().coefficient, t.coefficient);
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coefficient == 0; });
  return p;
}

Coefficient Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.monomial < x; });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

std::int64_t Polynomial::degree() const {
  // Graded order puts the highest degree last.
  if (terms_.empty()) return -1;
  return terms_.back().monomial.degree();
}

bool Polynomial::operator==(const Polynomial& other) const {
  require_same_table(*this, other);
  return terms_ == other.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient < 0;
    // |INT64_MIN| is not representable; render via unsigned arithmetic.
    const auto magnitude = negative ? 0 - static_cast<std::uint64_t>(t.coefficient)
                                    : static_cast<std::uint64_t>(t.coefficient);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += std::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) {
      out += std::to_string(magnitude);
      out += '*';
    }
    bool first_factor = true;
    for (const auto& f : t.monomial.factors()) {
      if (!first_factor) out += '*';
      first_factor = false;
      out += variable_name(table_->label(f.var));
      if (f.exp != 1) {
        out += '^';
        out += std::to_string(f.exp);
      }
    }
  }
  return out;
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
  require_same_table(p, q);
  Polynomial r(p.table());
  r.terms_.reserve(p.terms_.size() + q.terms_.size());
  auto a = p.terms_.begin();
  auto b = q.terms_.begin();
  while (a != p.terms_.end() || b != q.terms_.end()) {
    if (b == q.terms_.end() || (a != p.terms_.end() && a->monomial < b->monomial)) {
      r.terms_.push_back(*a++);
    } else if (a == p.terms_.end() || b->monomial < a->monomial) {
      r.terms_.push_back(*b++);
    } else {
      const auto c = checked_add(a->coefficient, b->coefficient);
      if (c != 0) r.terms_.push_back({a->monomial, c});
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial neg(const Polynomial& p) {
  Polynomial r(p.table());
  r.terms_.reserve(p.terms_.size());
  for (const auto& t : p.terms_) r.terms_.push_back({t.monomial, checked_mul(t.coefficient, -1)});
  return r;
}

Polynomial sub(const Polynomial& p, const Polynomial& q) { return add(p, neg(q)); }

Polynomial mul(const Polynomial& p, const Polynomial& q, std::size_t max_terms) {
  require_same_table(p, q);
  std::unordered_map<Monomial, Coefficient, MonomialHash> acc;
  acc.reserve(std::min(p.num_terms() * q.num_terms(), max_terms) + 1);
  for (const auto& a : p.terms()) {
    for (const auto& b : q.terms()) {
      auto& slot = acc[a.monomial * b.monomial];
      slot = checked_add(slot, checked_mul(a.coefficient, b.coefficient));
      if (acc.size() > max_terms)
        throw ResourceLimitError("polynomial product exceeds " + std::to_string(max_terms) +
                                 " terms");
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, c});
  return Polynomial::from_terms(p.table(), std::move(terms));
}

std::string variable_name(const std::string& label) {
  if (!label.empty() && std::isdigit(static_cast<unsigned char>(label.front())))
    return "v" + label;
  return label;
}

// ---------------------------------------------------------------------------
// Symmetric functions

Polynomial elementary_symmetric(std::shared_ptr<const VertexTable> table, const VertexSet& u,
                                std::size_t i, std::size_t max_terms) {
  if (binomial_capped(u.size(), i, max_terms) > max_terms)
    throw ResourceLimitError("e_" + std::to_string(i) + " on " + std::to_string(u.size()) +
                             " variables exceeds the term limit");
  std::vector<Term> terms;
  for (const auto& s : subsets_of_size(u, i)) terms.push_back({Monomial::squarefree(s), 1});
  return Polynomial::from_terms(std::move(table), std::move(terms));
}

Polynomial c_leq(std::shared_ptr<const VertexTable> table, const VertexSet& u, std::size_t s,
                 std::size_t max_terms) {
  std::size_t total = 0;
  for (std::size_t i = 0; i <= std::min(s, u.size()); ++i) {
    total += binomial_capped(u.size(), i, max_terms);
    if (total > max_terms)
      throw ResourceLimitError("c_<=" + std::to_string(s) + " on " + std::to_string(u.size()) +
                               " variables exceeds the term limit");
  }
  std::vector<Term> terms;
  terms.reserve(total);
  for (std::size_t i = 0; i <= std::min(s, u.size()); ++i)
    for (const auto& sub : subsets_of_size(u, i)) terms.push_back({Monomial::squarefree(sub), 1});
  return Polynomial::from_terms(std::move(table), std::move(terms));
}

Polynomial total_chern(std::shared_ptr<const VertexTable> table, const VertexSet& u,
                       std::size_t max_terms) {
  auto result = Polynomial::constant(table, 1);
  u.for_each([&](VertexIndex v) {
    result = mul(result, Polynomial::constant(table, 1) + Polynomial::variable(table, v),
                 max_terms);
  });
  return result;
}

bool is_s_to_1_by_identity(std::shared_ptr<const VertexTable> table, const Coloring& f,
                           std::size_t s, std::size_t max_terms) {
  if (f.size() != table->size())
    throw InvalidArgumentError("coloring size does not match the vertex table");
  const auto all = VertexSet::range(static_cast<VertexIndex>(table->size()));
  const auto lhs = total_chern(table, all, max_terms);
  auto rhs = Polynomial::constant(table, 1);
  for (const auto& fiber : f.fibers()) rhs = mul(rhs, c_leq(table, fiber, s, max_terms), max_terms);
  return lhs == rhs;
}

}  // namespace srcolor

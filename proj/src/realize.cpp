#include "ringsum/realize.hpp"

#include <map>

#include "ringsum/errors.hpp"
#include "ringsum/numtheory.hpp"

namespace ringsum {

namespace {

std::string power_label(const std::string& symbol, std::size_t e) {
  if (e == 0) return "1";
  if (e == 1) return symbol;
  return symbol + "^" + std::to_string(e);
}

FiniteAlgebra multivariate_quotient(const spec::MultivarQuot& q, const RealizeOptions& options) {
  check_rules(q.rules, q.vars.size());
  const auto basis = normal_monomials(q.rules, q.vars.size());
  const std::size_t m = basis.size();
  if (m > options.max_dimension) throw ResourceError("monomial basis is too large");
  std::map<Monomial, std::size_t> position;
  for (std::size_t i = 0; i < m; ++i) position[basis[i]] = i;

  std::vector<std::string> labels;
  for (const auto& mono : basis) labels.push_back(monomial_label(mono, q.vars));
  std::vector<std::uint64_t> table(m * m * m, 0);
  std::map<Monomial, MPoly> cache;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Monomial prod(q.vars.size());
      for (std::size_t v = 0; v < prod.size(); ++v) prod[v] = basis[i][v] + basis[j][v];
      auto it = cache.find(prod);
      if (it == cache.end()) {
        it = cache.emplace(prod, poly_normal_form(mpoly_monomial(q.p, prod), q.rules, options.rewrite_budget)).first;
      }
      for (const auto& [mono, c] : it->second.terms) table[(i * m + j) * m + position.at(mono)] = c;
    }
  }
  Element unit{std::vector<std::uint64_t>(m, 0)};
  unit.coords[position.at(Monomial(q.vars.size(), 0))] = 1;
  FiniteAlgebra a(std::move(labels), std::vector<std::uint64_t>(m, q.p), std::move(table), std::move(unit), true);
  for (const auto& v : validate(a)) {
    if (v.kind == "associativity" || v.kind == "commutativity") {
      throw UnsupportedError("rewrite rules are not confluent: " + v.detail);
    }
  }
  return a;
}

FiniteAlgebra noncomm_p3(std::uint64_t p) {
  // Basis 1, x = E12, y = E22 of the upper-triangular 2x2 matrices.
  const std::size_t m = 3;
  std::vector<std::uint64_t> table(m * m * m, 0);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) { table[(i * m + j) * m + k] = 1; };
  for (std::size_t j = 0; j < m; ++j) {
    set(0, j, j);
    set(j, 0, j);
  }
  set(2, 2, 2);  // y^2 = y
  set(1, 2, 1);  // xy = x
  return FiniteAlgebra({"1", "x", "y"}, {p, p, p}, std::move(table), Element{{1, 0, 0}}, false);
}

}  // namespace

FiniteAlgebra polynomial_quotient(const Polynomial& f, const std::string& symbol) {
  if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("quotient polynomial must be monic, degree >= 1");
  const std::uint64_t n = f.modulus;
  const std::size_t d = static_cast<std::size_t>(f.degree());
  // reduced[e] = x^e mod f for e < 2d - 1
  std::vector<std::vector<std::uint64_t>> reduced;
  std::vector<std::uint64_t> cur(d, 0);
  cur[0] = 1 % n;
  for (std::size_t e = 0; e + 1 < 2 * d; ++e) {
    reduced.push_back(cur);
    // multiply by x, then substitute x^d = -(c_0 + ... + c_{d-1} x^{d-1})
    std::uint64_t top = cur[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < d; ++i) cur[i] = (cur[i] + n - mulmod(top, f.coeffs[i], n)) % n;
  }
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < d; ++e) labels.push_back(power_label(symbol, e));
  std::vector<std::uint64_t> table(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) table[(i * d + j) * d + k] = reduced[i + j][k];
  Element unit{std::vector<std::uint64_t>(d, 0)};
  unit.coords[0] = 1 % n;
  return FiniteAlgebra(std::move(labels), std::vector<std::uint64_t>(d, n), std::move(table), std::move(unit), true);
}

FiniteAlgebra realize(const RingSpec& s, const RealizeOptions& options) {
  FiniteAlgebra a = [&]() -> FiniteAlgebra {
    if (auto z = s.as<spec::ZMod>()) {
      return FiniteAlgebra({"1"}, {z->n}, {1 % z->n}, Element{{1 % z->n}}, true);
    }
    if (s.as<spec::Gaussian>()) return polynomial_quotient(defining_polynomial(s), "i");
    if (auto q = s.as<spec::SqrtD>()) {
      return polynomial_quotient(defining_polynomial(s), "sqrt(" + std::to_string(q->d) + ")");
    }
    if (s.as<spec::GaloisField>() || s.as<spec::PolyQuot>() || s.as<spec::Quadratic>()) {
      const Polynomial f = defining_polynomial(s);
      if (static_cast<std::size_t>(f.degree()) > options.max_dimension) throw ResourceError("basis is too large");
      return polynomial_quotient(f);
    }
    if (auto p = s.as<spec::Product>()) {
      if (p->factors.empty()) return zero_ring();
      if (p->factors.size() == 1) return realize(p->factors.front(), options);
      std::vector<FiniteAlgebra> parts;
      for (const auto& f : p->factors) parts.push_back(realize(f, options));
      FiniteAlgebra acc = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_product(acc, parts[i]);
      if (acc.dimension() > options.max_dimension) throw ResourceError("basis is too large");
      // Flat labels R<i>.<label> instead of the nested ones from the fold.
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        for (const auto& l : parts[i].labels()) labels.push_back("R" + std::to_string(i + 1) + "." + l);
      }
      const std::size_t m = acc.dimension();
      std::vector<std::uint64_t> table;
      table.reserve(m * m * m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          for (std::size_t k = 0; k < m; ++k) table.push_back(acc.structure_constant(i, j, k));
      return FiniteAlgebra(std::move(labels), {acc.orders().begin(), acc.orders().end()}, std::move(table),
                           acc.unit(), acc.commutative());
    }
    if (auto m = s.as<spec::Matrix>()) {
      FiniteAlgebra inner = realize(*m->inner, options);
      if (std::size_t{m->d} * m->d * inner.dimension() > options.max_dimension) {
        throw ResourceError("basis is too large");
      }
      return matrix_algebra(m->d, inner, options.max_elements);
    }
    if (auto q = s.as<spec::MultivarQuot>()) return multivariate_quotient(*q, options);
    if (auto q = s.as<spec::NonCommP3>()) return noncomm_p3(q->p);
    throw std::logic_error("realize: unhandled spec kind");
  }();
  if (options.max_elements != std::numeric_limits<std::uint64_t>::max()) require_enumerable(a, options.max_elements);
  return a;
}

}  // namespace ringsum

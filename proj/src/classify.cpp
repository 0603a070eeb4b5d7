#include "ringsum/classify.hpp"

#include <stdexcept>

#include "ringsum/errors.hpp"
#include "ringsum/numtheory.hpp"
#include "ringsum/oracle.hpp"

namespace ringsum {

namespace {

PrimePower prime_power_order(const FiniteAlgebra& a) {
  const auto pp = as_prime_power(a.order());
  if (!pp) throw std::invalid_argument("order " + std::to_string(a.order()) + " is not a prime power");
  return *pp;
}

void require_commutative(const FiniteAlgebra& a) {
  if (!a.commutative()) throw UnsupportedError("classification needs a commutative algebra");
}

}  // namespace

ComponentClass classify_prime_power_algebra(const FiniteAlgebra& a, std::uint64_t max_elements) {
  require_commutative(a);
  const auto [p, m] = prime_power_order(a);
  require_enumerable(a, max_elements);
  const std::uint64_t order = a.order();
  const std::uint64_t ch = characteristic(a);
  const unsigned t = valuation(ch, p);
  const Element one = a.unit();

  bool field = true;
  std::size_t square_zero = 0;
  for_each_element(a, 1, order, [&](const Element& x) {
    if (field && a.pow(x, order - 1) != one) field = false;
    if (a.mul(x, x).is_zero()) ++square_zero;
  });
  if (field) return ComponentClass::field(p, m);
  if (ch == order) return ComponentClass::zmod_prime_power(p, m);
  if (order == 4 && ch == 2 && square_zero == 1) return ComponentClass::f2x2();
  return ComponentClass::other(p, m, t, false);
}

bool is_field_via_powersum(const FiniteAlgebra& a, std::uint64_t max_elements) {
  require_commutative(a);
  prime_power_order(a);
  return brute_power_sum(a, a.order() - 1, {max_elements, 1}) == embed_integer(a, -1);
}

bool poly_irreducible_mod_p(std::uint64_t p, const Polynomial& f, std::uint64_t max_elements) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const Polynomial g = reduce_modulus(f, p);
  if (g.degree() < 1 || !g.is_monic()) throw std::invalid_argument("polynomial must be monic of degree >= 1");
  const FiniteAlgebra a = polynomial_quotient(g);
  require_enumerable(a, max_elements);
  return is_field_via_powersum(a, max_elements);
}

MaximalityReport ideal_maximality(std::uint64_t p, const std::vector<std::string>& vars,
                                  const std::vector<RewriteRule>& rules, std::uint64_t max_elements,
                                  std::uint64_t rewrite_budget) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const RingSpec spec{spec::MultivarQuot{p, vars, rules}};
  const FiniteAlgebra a = realize(spec, {max_elements, 128, rewrite_budget});
  MaximalityReport report;
  report.k = a.order() - 1;
  report.basis = a.labels();
  const Element s = brute_power_sum(a, report.k, {max_elements, 1});
  report.coords = s.coords;
  report.maximal = s == embed_integer(a, -1);
  return report;
}

bool unit_criterion(const RingSpec& spec, std::uint64_t k, const LeafClassifier& classifier) {
  if (k == 0) throw std::invalid_argument("power sums are defined for k >= 1");
  // Components come out one per characteristic prime, so distinct
  // characteristics reduce to every component being a field.
  for (const auto& c : decompose_spec(spec, classifier)) {
    if (c.cls.kind != ComponentClass::Kind::Field) return false;
    if (k % (c.order() - 1) != 0) return false;
  }
  return true;
}

LeafClassifier make_leaf_classifier(std::uint64_t max_elements) {
  return [max_elements](const RingSpec& leaf) {
    const FiniteAlgebra a = realize(leaf, {max_elements});
    return classify_prime_power_algebra(a, max_elements);
  };
}

}  // namespace ringsum

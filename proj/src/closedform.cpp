#include "ringsum/closedform.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ringsum/errors.hpp"
#include "ringsum/numtheory.hpp"
#include "ringsum/oracle.hpp"

namespace ringsum {

namespace {

void require_k(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("power sums are defined for k >= 1");
}

bool divides(std::uint64_t d, std::uint64_t n) { return d != 0 && n % d == 0; }

std::int64_t as_signed(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(INT64_MAX)) throw ResourceError("closed-form value exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ResourceError("closed-form value exceeds 64 bits");
  return out;
}

std::int64_t checked_mul_signed(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceError("closed-form value exceeds 64 bits");
  return out;
}

bool odd_above_one(std::uint64_t k) { return k > 1 && k % 2 == 1; }

void add_prime_power_leaf(std::uint64_t p, unsigned e, std::vector<Component>& out) {
  out.push_back({p, e, ComponentClass::zmod_prime_power(p, e)});
}

void add_leaf(const RingSpec& leaf, const LeafClassifier& classifier, std::vector<Component>& out) {
  if (auto z = leaf.as<spec::ZMod>()) {
    for (auto [p, e] : factorize(z->n).factors) add_prime_power_leaf(p, e, out);
    return;
  }
  if (auto g = leaf.as<spec::GaloisField>()) {
    out.push_back({g->p, g->s, ComponentClass::field(g->p, g->s)});
    return;
  }
  if (leaf.as<spec::PolyQuot>() || leaf.as<spec::Quadratic>() || leaf.as<spec::SqrtD>() ||
      leaf.as<spec::Gaussian>()) {
    const Polynomial f = defining_polynomial(leaf);
    const unsigned d = static_cast<unsigned>(f.degree());
    for (auto [p, e] : factorize(f.modulus).factors) {
      if (d == 1) {
        add_prime_power_leaf(p, e, out);
      } else if (e >= 2) {
        out.push_back({p, e * d, ComponentClass::other(p, e * d, e, false)});
      } else {
        const Polynomial g = reduce_modulus(f, p);
        if (is_irreducible_by_trial_division(g)) {
          out.push_back({p, d, ComponentClass::field(p, d)});
        } else if (p == 2 && d == 2 && g.coeffs[1] == 0) {
          // x² or x²+1 = (x+1)² over F_2
          out.push_back({2, 2, ComponentClass::f2x2()});
        } else {
          out.push_back({p, d, ComponentClass::other(p, d, 1, false)});
        }
      }
    }
    return;
  }
  if (auto prod = leaf.as<spec::Product>()) {
    for (const auto& f : prod->factors) add_leaf(f, classifier, out);
    return;
  }
  if (auto m = leaf.as<spec::Matrix>()) {
    if (m->d == 1) {
      add_leaf(*m->inner, classifier, out);
      return;
    }
    throw UnsupportedError("closed forms need a commutative ring; " + to_string(leaf) + " is not");
  }
  if (leaf.as<spec::NonCommP3>()) {
    throw UnsupportedError("closed forms need a commutative ring; " + to_string(leaf) + " is not");
  }
  if (leaf.as<spec::MultivarQuot>()) {
    if (!classifier) throw UnsupportedError("multivariate quotients are classified by realization");
    ComponentClass c = classifier(leaf);
    out.push_back({c.p, c.s, c});
    return;
  }
  throw std::logic_error("decompose_spec: unhandled spec kind");
}

std::uint64_t ring_order(std::span<const Component> comps) {
  std::uint64_t n = 1;
  for (const auto& c : comps) n = checked_mul(n, c.order());
  return n;
}

std::uint64_t ring_characteristic(std::span<const Component> comps) {
  std::uint64_t n = 1;
  for (const auto& c : comps) n = checked_mul(n, c.cls.characteristic());
  return n;
}

// Equality inside R without realizing it.
bool symbolic_equal(const SymbolicValue& a, const SymbolicValue& b, std::uint64_t characteristic) {
  if (characteristic == 1) return true;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case SymbolicValue::Kind::IntMultiple:
      return reduce(a.multiple, characteristic) == reduce(b.multiple, characteristic);
    case SymbolicValue::Kind::NilpotentU:
      return true;
    case SymbolicValue::Kind::Coords:
      return a.coords == b.coords;
  }
  return false;
}

struct TableResult {
  std::string branch;
  SymbolicValue value;
};

TableResult general_table(std::span<const Component> comps, std::uint64_t k) {
  const auto [pk, pkbar] = contributing_sets(comps, k);
  const std::uint64_t order = ring_order(comps);
  if (k % 2 == 0) {
    std::int64_t sum = 0;
    for (const auto& e : pk.entries) sum = checked_add(sum, as_signed(order / checked_pow(e.p, e.s)));
    for (const auto& e : pkbar.entries) sum = checked_add(sum, as_signed(order / e.p));
    return {"i", SymbolicValue::int_multiple(-sum, "i")};
  }
  if (k > 1 && pk.contains(2)) {
    return {"ii", SymbolicValue::int_multiple(-as_signed(order >> valuation(order, 2)), "ii")};
  }
  if (k > 1 && pkbar.contains(2)) return {"iii", SymbolicValue::int_multiple(-as_signed(order / 2), "iii")};
  if (k > 1) {
    for (const auto& c : comps) {
      if (c.cls.kind == ComponentClass::Kind::F2X2) return {"iv", SymbolicValue::nilpotent_u("iv")};
    }
  }
  if (k == 1) {
    for (const auto& c : comps) {
      if (c.cls.kind == ComponentClass::Kind::Field && c.p == 2 && c.s == 1) {
        return {"v", SymbolicValue::int_multiple(-as_signed(order / 2), "v")};
      }
    }
  }
  return {"vi", SymbolicValue::int_multiple(0, "vi")};
}

SymbolicValue compose(std::span<const Component> comps, std::uint64_t k) {
  std::vector<std::pair<std::uint64_t, SymbolicValue>> values;
  for (const auto& c : comps) values.emplace_back(c.order(), powersum_component(c.cls, k));
  return combine_product(values);
}

}  // namespace

std::uint64_t ComponentClass::order() const { return checked_pow(p, s); }

std::uint64_t ComponentClass::characteristic() const { return checked_pow(p, t); }

std::string ComponentClass::to_string() const {
  switch (kind) {
    case Kind::Field:
      return "Field(" + std::to_string(order()) + ")";
    case Kind::ZModPrimePower:
      return "ZModPrimePower(" + std::to_string(p) + "," + std::to_string(s) + ")";
    case Kind::F2X2:
      return "F2X2";
    case Kind::OtherPrimePower:
      return "OtherPrimePower(" + std::to_string(p) + "," + std::to_string(t) + "," +
             (cyclic ? "cyclic" : "non-cyclic") + ")";
  }
  return "?";
}

std::string SymbolicValue::describe() const {
  switch (kind) {
    case Kind::IntMultiple:
      return "IntMultiple(" + std::to_string(multiple) + ")";
    case Kind::NilpotentU:
      return "NilpotentU";
    case Kind::Coords: {
      std::string out = "Coords(";
      for (std::size_t i = 0; i < coords.size(); ++i) out += (i ? "," : "") + std::to_string(coords[i]);
      return out + ")";
    }
  }
  return "?";
}

bool PrimeSet::contains(std::uint64_t p) const {
  return std::any_of(entries.begin(), entries.end(), [&](const auto& e) { return e.p == p; });
}

std::vector<std::uint64_t> PrimeSet::primes() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : entries) out.push_back(e.p);
  return out;
}

SymbolicValue powersum_field(std::uint64_t q, std::uint64_t k) {
  require_k(k);
  if (!as_prime_power(q)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return divides(q - 1, k) ? SymbolicValue::int_multiple(-1, "field:(q-1)|k")
                           : SymbolicValue::int_multiple(0, "field:otherwise");
}

SymbolicValue powersum_zmod(std::uint64_t n, std::uint64_t k) {
  require_k(k);
  if (n == 0) throw std::invalid_argument("powersum_zmod: n must be positive");
  if (!(k % 2 == 0 || k == 1 || n % 4 != 0)) return SymbolicValue::int_multiple(0, "zmod:4|n,k odd>1");
  std::int64_t sum = 0;
  for (auto [p, e] : factorize(n).factors) {
    if (divides(p - 1, k)) sum = checked_add(sum, as_signed(n / p));
  }
  return SymbolicValue::int_multiple(-sum, "zmod:sum n/p");
}

PrimeSet gaussian_prime_set(std::uint64_t n, std::uint64_t k) {
  PrimeSet set{PrimeSet::Kind::GaussP, {}};
  for (auto [p, e] : factorize(n).factors) {
    if (e == 1 && p % 4 == 3 && divides(checked_mul(p, p) - 1, k)) {
      set.entries.push_back({p, 1, std::to_string(p) + "||n, p^2-1|k, p=3 mod 4"});
    }
  }
  return set;
}

SymbolicValue powersum_gaussian(std::uint64_t n, std::uint64_t k) {
  require_k(k);
  if (n == 0) throw std::invalid_argument("powersum_gaussian: n must be positive");
  if (odd_above_one(k) && n % 4 == 2) return SymbolicValue::from_coords({n / 2, n / 2}, "gaussian:n/2(1+i)");
  const std::uint64_t n2 = checked_mul(n, n);
  std::int64_t sum = 0;
  for (const auto& e : gaussian_prime_set(n, k).entries) sum = checked_add(sum, as_signed(n2 / (e.p * e.p)));
  return SymbolicValue::int_multiple(-sum, "gaussian:sum n^2/p^2");
}

SymbolicValue powersum_component(const ComponentClass& c, std::uint64_t k) {
  require_k(k);
  switch (c.kind) {
    case ComponentClass::Kind::Field:
      return powersum_field(c.order(), k);
    case ComponentClass::Kind::ZModPrimePower:
      return powersum_zmod(c.order(), k);
    case ComponentClass::Kind::F2X2:
      return odd_above_one(k) ? SymbolicValue::nilpotent_u("F2X2:k>1 odd")
                              : SymbolicValue::int_multiple(0, "F2X2:otherwise");
    case ComponentClass::Kind::OtherPrimePower:
      return SymbolicValue::int_multiple(0, "vanishing component");
  }
  throw std::logic_error("powersum_component: bad kind");
}

std::vector<Component> decompose_spec(const RingSpec& spec, const LeafClassifier& classifier) {
  std::vector<Component> leaves;
  add_leaf(spec, classifier, leaves);
  std::map<std::uint64_t, std::vector<Component>> by_prime;
  for (auto& c : leaves) by_prime[c.p].push_back(c);
  std::vector<Component> out;
  for (auto& [p, group] : by_prime) {
    if (group.size() == 1) {
      out.push_back(group.front());
      continue;
    }
    // A product of two or more nonzero rings is never local, hence never a
    // field, Z/p^s or F_2[x]/(x²).
    unsigned s = 0, t = 0;
    for (const auto& c : group) {
      s += c.s;
      t = std::max(t, c.cls.t);
    }
    out.push_back({p, s, ComponentClass::other(p, s, t, false)});
  }
  return out;
}

std::pair<PrimeSet, PrimeSet> contributing_sets(std::span<const Component> components, std::uint64_t k) {
  require_k(k);
  PrimeSet pk{PrimeSet::Kind::Pk, {}}, pkbar{PrimeSet::Kind::PkBar, {}};
  for (const auto& c : components) {
    if (c.cls.kind == ComponentClass::Kind::Field && divides(c.order() - 1, k)) {
      pk.entries.push_back({c.p, c.s, "field of order " + std::to_string(c.order()) + ", q-1 | k"});
    }
    if (c.cls.kind == ComponentClass::Kind::ZModPrimePower && c.s > 1 && divides(c.p - 1, k)) {
      pkbar.entries.push_back({c.p, c.s, "Z/" + std::to_string(c.order()) + "Z, p-1 | k"});
    }
  }
  return {pk, pkbar};
}

std::pair<PrimeSet, PrimeSet> contributing_sets(const RingSpec& spec, std::uint64_t k,
                                                const LeafClassifier& classifier) {
  const auto comps = decompose_spec(spec, classifier);
  return contributing_sets(comps, k);
}

SymbolicValue combine_product(std::span<const std::pair<std::uint64_t, SymbolicValue>> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (gcd(values[i].first, values[j].first) != 1) {
        throw std::invalid_argument("combine_product: component orders must be pairwise coprime");
      }
    }
  }
  if (values.size() == 1) return values.front().second;
  std::uint64_t total = 1;
  for (const auto& [o, v] : values) total = checked_mul(total, o);

  std::int64_t multiple = 0;
  bool nilpotent = false, integer_part = false;
  for (const auto& [o, v] : values) {
    const std::uint64_t cofactor = total / o;
    switch (v.kind) {
      case SymbolicValue::Kind::IntMultiple: {
        const std::int64_t scaled = checked_mul_signed(as_signed(cofactor), v.multiple);
        if (reduce(scaled, o) != 0) integer_part = true;
        multiple = checked_add(multiple, scaled);
        break;
      }
      case SymbolicValue::Kind::NilpotentU:
        // 2u = 0, so an even cofactor kills u.
        if (cofactor % 2 == 1) nilpotent = true;
        break;
      case SymbolicValue::Kind::Coords:
        throw std::invalid_argument("combine_product: coordinate values have no component meaning");
    }
  }
  if (nilpotent) {
    if (integer_part) throw std::logic_error("combine_product: nilpotent and integer parts both nonzero");
    return SymbolicValue::nilpotent_u();
  }
  return SymbolicValue::int_multiple(multiple);
}

SymbolicValue powersum_general(const RingSpec& spec, std::uint64_t k, const LeafClassifier& classifier) {
  require_k(k);
  const auto comps = decompose_spec(spec, classifier);
  SymbolicValue v = comps.empty() ? SymbolicValue::int_multiple(0) : compose(comps, k);
  const TableResult table = general_table(comps, k);
  v.case_label = symbolic_equal(v, table.value, ring_characteristic(comps)) ? table.branch
                                                                            : "erratum:" + table.branch;
  return v;
}

SymbolicValue powersum_general_paper_table(const RingSpec& spec, std::uint64_t k, const LeafClassifier& classifier) {
  require_k(k);
  const auto comps = decompose_spec(spec, classifier);
  return general_table(comps, k).value;
}

PrimeSet quadratic_prime_set(std::uint64_t n, std::int64_t b, std::int64_t c, std::uint64_t k) {
  PrimeSet set{PrimeSet::Kind::QuadP, {}};
  for (auto [p, e] : factorize(n).factors) {
    // Every residue mod 2 is a square, so p = 2 never qualifies.
    if (e != 1 || p == 2 || !divides(checked_mul(p, p) - 1, k)) continue;
    const std::int64_t bm = static_cast<std::int64_t>(reduce(b, p)), cm = static_cast<std::int64_t>(reduce(c, p));
    const std::int64_t disc = static_cast<std::int64_t>(
        (mulmod(static_cast<std::uint64_t>(bm), static_cast<std::uint64_t>(bm), p) + p -
         mulmod(4 % p, static_cast<std::uint64_t>(cm), p)) % p);
    if (!is_quadratic_residue(disc, p)) {
      set.entries.push_back({p, 1, "b^2-4c = " + std::to_string(disc) + " is a non-residue mod " + std::to_string(p)});
    }
  }
  return set;
}

SymbolicValue powersum_quadratic(std::uint64_t n, std::int64_t b, std::int64_t c, std::uint64_t k) {
  require_k(k);
  if (n == 0) throw std::invalid_argument("powersum_quadratic: n must be positive");
  const std::uint64_t n2 = checked_mul(n, n);
  std::int64_t multiple = 0;
  std::string label = "P^{b,c}";
  if (exactly_divides(2, n)) {
    const bool b_odd = reduce(b, 2) == 1, c_odd = reduce(c, 2) == 1;
    const std::uint64_t half = n / 2;
    if (b_odd && c_odd) {
      // F_4 component: S_k = 1 when 3 | k, scaled by (n/2)².
      if (k % 3 == 0) {
        multiple = as_signed(half * half);
        label = "2-part F4 + P^{b,c}";
      }
    } else if (!b_odd && odd_above_one(k)) {
      // F_2[x]/(x²): u = 1+x when c is odd, u = x when c is even.
      return SymbolicValue::from_coords({c_odd ? half : 0, half}, c_odd ? "2-part (n/2)(1+x)" : "2-part (n/2)x");
    }
  }
  for (const auto& e : quadratic_prime_set(n, b, c, k).entries) {
    multiple = checked_add(multiple, -as_signed(n2 / (e.p * e.p)));
  }
  return SymbolicValue::int_multiple(multiple, label);
}

SymbolicValue powersum_quadratic_paper_table(std::uint64_t n, std::int64_t b, std::int64_t c, std::uint64_t k) {
  require_k(k);
  if (n == 0) throw std::invalid_argument("powersum_quadratic: n must be positive");
  const bool b_odd = reduce(b, 2) == 1, c_odd = reduce(c, 2) == 1;
  const bool two_exact = exactly_divides(2, n);
  const std::uint64_t half = n / 2;
  if (b_odd && c_odd && k % 3 == 0 && two_exact) return SymbolicValue::int_multiple(as_signed(half), "table:n/2");
  if (!b_odd && c_odd && odd_above_one(k) && two_exact) {
    return SymbolicValue::from_coords({half, half}, "table:(n/2)(1+x)");
  }
  if (!b_odd && !c_odd && odd_above_one(k) && two_exact) return SymbolicValue::from_coords({0, half}, "table:(n/2)x");
  const std::uint64_t n2 = checked_mul(n, n);
  std::int64_t sum = 0;
  for (const auto& e : quadratic_prime_set(n, b, c, k).entries) sum = checked_add(sum, as_signed(n2 / (e.p * e.p)));
  return SymbolicValue::int_multiple(-sum, "table:sum n^2/p^2");
}

SymbolicValue powersum_sqrtD(std::uint64_t n, std::int64_t d, std::uint64_t k) {
  if (!is_square_free(d)) throw std::invalid_argument(std::to_string(d) + " is not square-free");
  if (d == INT64_MIN) throw std::invalid_argument("D out of range");
  return powersum_quadratic(n, 0, -d, k);
}

SymbolicValue powersum_sqrtD_paper_table(std::uint64_t n, std::int64_t d, std::uint64_t k) {
  require_k(k);
  if (!is_square_free(d)) throw std::invalid_argument(std::to_string(d) + " is not square-free");
  if (odd_above_one(k) && exactly_divides(2, n)) return SymbolicValue::from_coords({n / 2, n / 2}, "table:(n/2)(1+sqrtD)");
  const std::uint64_t n2 = checked_mul(n, n);
  std::int64_t sum = 0;
  for (auto [p, e] : factorize(n).factors) {
    if (e == 1 && p != 2 && divides(checked_mul(p, p) - 1, k) && !is_quadratic_residue(d, p)) {
      sum = checked_add(sum, as_signed(n2 / (p * p)));
    }
  }
  return SymbolicValue::int_multiple(-sum, "table:sum n^2/p^2");
}

PrimeSet polyquot_prime_set(const Polynomial& f, std::uint64_t k) {
  PrimeSet set{PrimeSet::Kind::PolyP, {}};
  const unsigned d = static_cast<unsigned>(f.degree());
  for (auto [p, e] : factorize(f.modulus).factors) {
    if (e != 1 || !divides(checked_pow(p, d) - 1, k)) continue;
    if (is_irreducible_by_trial_division(reduce_modulus(f, p))) {
      set.entries.push_back({p, d, "f irreducible mod " + std::to_string(p) + ", p^deg-1 | k"});
    }
  }
  return set;
}

SymbolicValue powersum_polyquot(const Polynomial& f, std::uint64_t k) {
  require_k(k);
  if (f.degree() < 1 || !f.is_monic()) throw std::invalid_argument("powersum_polyquot: f must be monic");
  if (f.degree() == 1) return powersum_zmod(f.modulus, k);
  if (f.degree() == 2) {
    return powersum_quadratic(f.modulus, static_cast<std::int64_t>(f.coeffs[1]), static_cast<std::int64_t>(f.coeffs[0]), k);
  }
  const unsigned d = static_cast<unsigned>(f.degree());
  const std::uint64_t nd = checked_pow(f.modulus, d);
  std::int64_t sum = 0;
  for (const auto& e : polyquot_prime_set(f, k).entries) sum = checked_add(sum, as_signed(nd / checked_pow(e.p, d)));
  return SymbolicValue::int_multiple(-sum, "polyquot:sum n^d/p^d");
}

SymbolicValue powersum_matrix_field(std::uint64_t q, unsigned d, std::uint64_t k) {
  require_k(k);
  if (d == 0) throw std::invalid_argument("matrix size must be positive");
  if (d == 1) return powersum_field(q, k);
  if (!as_prime_power(q)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  const std::uint64_t r = k % 6;
  if (q == 2 && d == 2 && k > 1 && (r == 0 || r == 1 || r == 5)) return SymbolicValue::int_multiple(1, "matrix:I2");
  return SymbolicValue::int_multiple(0, "matrix:0");
}

namespace {

// Z/pZ is a field too.
std::uint64_t field_order_of(const RingSpec& inner) {
  if (auto g = inner.as<spec::GaloisField>()) return checked_pow(g->p, g->s);
  if (auto z = inner.as<spec::ZMod>()) {
    if (is_prime(z->n)) return z->n;
  }
  return 0;
}

}  // namespace

SymbolicValue composed_value(const RingSpec& spec, std::uint64_t k, const LeafClassifier& classifier) {
  if (auto m = spec.as<spec::Matrix>(); m && m->d >= 2) {
    const std::uint64_t q = field_order_of(*m->inner);
    if (q == 0) throw UnsupportedError("no closed form for matrices over " + to_string(*m->inner));
    return powersum_matrix_field(q, m->d, k);
  }
  return powersum_general(spec, k, classifier);
}

SymbolicValue paper_value(const RingSpec& spec, std::uint64_t k, const LeafClassifier& classifier) {
  if (auto q = spec.as<spec::Quadratic>()) {
    return powersum_quadratic_paper_table(q->n, static_cast<std::int64_t>(q->b), static_cast<std::int64_t>(q->c), k);
  }
  if (auto g = spec.as<spec::Gaussian>()) return powersum_gaussian(g->n, k);
  if (auto s = spec.as<spec::SqrtD>()) return powersum_sqrtD_paper_table(s->n, s->d, k);
  if (auto p = spec.as<spec::PolyQuot>()) {
    if (p->f.degree() == 2) {
      return powersum_quadratic_paper_table(p->f.modulus, static_cast<std::int64_t>(p->f.coeffs[1]),
                                            static_cast<std::int64_t>(p->f.coeffs[0]), k);
    }
    if (p->f.degree() >= 3) return powersum_polyquot(p->f, k);
  }
  if (auto m = spec.as<spec::Matrix>(); m && m->d >= 2) return composed_value(spec, k, classifier);
  return powersum_general_paper_table(spec, k, classifier);
}

Element evaluate(const SymbolicValue& v, const FiniteAlgebra& a) {
  switch (v.kind) {
    case SymbolicValue::Kind::IntMultiple:
      return embed_integer(a, v.multiple);
    case SymbolicValue::Kind::NilpotentU: {
      auto u = locate_special_nilpotent(a);
      if (!u) throw UnsupportedError("the ring has no distinguished nilpotent u");
      return *u;
    }
    case SymbolicValue::Kind::Coords: {
      if (v.coords.size() != a.dimension()) throw std::invalid_argument("coordinate value has the wrong dimension");
      Element e{v.coords};
      for (std::size_t j = 0; j < a.dimension(); ++j) e.coords[j] %= a.orders()[j];
      return e;
    }
  }
  throw std::logic_error("evaluate: bad kind");
}

}  // namespace ringsum

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ringsum/algebra.hpp"
#include "ringsum/ring_spec.hpp"

namespace ringsum {

/// Isomorphism type of a prime-power-characteristic component, as far as
/// power sums can tell them apart.
struct ComponentClass {
  enum class Kind { Field, ZModPrimePower, F2X2, OtherPrimePower };

  Kind kind = Kind::OtherPrimePower;
  std::uint64_t p = 0;
  unsigned s = 0;  // |component| = p^s
  unsigned t = 0;  // char(component) = p^t
  bool cyclic = false;

  static ComponentClass field(std::uint64_t p, unsigned s) { return {Kind::Field, p, s, 1, s == 1}; }
  static ComponentClass zmod_prime_power(std::uint64_t p, unsigned s) {
    return s == 1 ? field(p, 1) : ComponentClass{Kind::ZModPrimePower, p, s, s, true};
  }
  static ComponentClass f2x2() { return {Kind::F2X2, 2, 2, 1, false}; }
  static ComponentClass other(std::uint64_t p, unsigned s, unsigned t, bool cyclic) {
    return {Kind::OtherPrimePower, p, s, t, cyclic};
  }

  std::uint64_t order() const;
  std::uint64_t characteristic() const;
  std::string to_string() const;

  friend bool operator==(const ComponentClass&, const ComponentClass&) = default;
};

/// Closed-form value of S_k(R) plus the formula branch that produced it.
struct SymbolicValue {
  enum class Kind { IntMultiple, NilpotentU, Coords };

  Kind kind = Kind::IntMultiple;
  std::int64_t multiple = 0;           // IntMultiple: multiple · 1_R
  std::vector<std::uint64_t> coords;   // Coords: canonical basis of realize(spec)
  std::string case_label;

  static SymbolicValue int_multiple(std::int64_t c, std::string label = {}) {
    return {Kind::IntMultiple, c, {}, std::move(label)};
  }
  static SymbolicValue nilpotent_u(std::string label = {}) { return {Kind::NilpotentU, 0, {}, std::move(label)}; }
  static SymbolicValue from_coords(std::vector<std::uint64_t> c, std::string label = {}) {
    return {Kind::Coords, 0, std::move(c), std::move(label)};
  }

  /// "IntMultiple(-5)", "NilpotentU", "Coords(5,5)".
  std::string describe() const;
};

struct PrimeSetEntry {
  std::uint64_t p = 0;
  unsigned s = 0;
  std::string witness;
};

/// One of P_k, P̄_k, P(k,n), P^{b,c}(k,n), P^f(k,n).
struct PrimeSet {
  enum class Kind { Pk, PkBar, GaussP, QuadP, PolyP };

  Kind kind;
  std::vector<PrimeSetEntry> entries;

  bool contains(std::uint64_t p) const;
  std::vector<std::uint64_t> primes() const;
};

/// One factor R_i = R / p^t R of the characteristic decomposition.
struct Component {
  std::uint64_t p = 0;
  unsigned s = 0;  // |R_i| = p^s
  ComponentClass cls;

  std::uint64_t order() const { return cls.order(); }
};

/// Classifies a leaf the symbolic decomposition cannot (multivariate quotients).
using LeafClassifier = std::function<ComponentClass(const RingSpec&)>;

SymbolicValue powersum_field(std::uint64_t q, std::uint64_t k);
SymbolicValue powersum_zmod(std::uint64_t n, std::uint64_t k);
SymbolicValue powersum_gaussian(std::uint64_t n, std::uint64_t k);
SymbolicValue powersum_component(const ComponentClass& c, std::uint64_t k);

/// One entry per prime dividing |R|, ascending. Throws UnsupportedError for
/// non-commutative specs and for leaves without a classifier.
std::vector<Component> decompose_spec(const RingSpec& spec, const LeafClassifier& classifier = {});

std::pair<PrimeSet, PrimeSet> contributing_sets(std::span<const Component> components, std::uint64_t k);
std::pair<PrimeSet, PrimeSet> contributing_sets(const RingSpec& spec, std::uint64_t k,
                                                const LeafClassifier& classifier = {});

/// Product rule over components of pairwise coprime order: each value is
/// scaled by the product of the other orders.
SymbolicValue combine_product(std::span<const std::pair<std::uint64_t, SymbolicValue>> values);

/// decompose_spec → powersum_component → combine_product. case_label is the
/// matching branch "i".."vi" of the general case table, or "erratum:<branch>"
/// where the literal table disagrees.
SymbolicValue powersum_general(const RingSpec& spec, std::uint64_t k, const LeafClassifier& classifier = {});

/// The general case table i)–vi) taken literally, misprints included.
SymbolicValue powersum_general_paper_table(const RingSpec& spec, std::uint64_t k,
                                           const LeafClassifier& classifier = {});

PrimeSet gaussian_prime_set(std::uint64_t n, std::uint64_t k);
PrimeSet quadratic_prime_set(std::uint64_t n, std::int64_t b, std::int64_t c, std::uint64_t k);
PrimeSet polyquot_prime_set(const Polynomial& f, std::uint64_t k);

/// Z/nZ[x]/(x²+bx+c): 2-part by the parities of b and c, odd primes from P^{b,c}.
SymbolicValue powersum_quadratic(std::uint64_t n, std::int64_t b, std::int64_t c, std::uint64_t k);
/// The literal four-branch table.
SymbolicValue powersum_quadratic_paper_table(std::uint64_t n, std::int64_t b, std::int64_t c, std::uint64_t k);

/// Throws std::invalid_argument unless D is square-free.
SymbolicValue powersum_sqrtD(std::uint64_t n, std::int64_t d, std::uint64_t k);
SymbolicValue powersum_sqrtD_paper_table(std::uint64_t n, std::int64_t d, std::uint64_t k);

/// -Σ_{p ∈ P^f(k,n)} n^deg / p^deg for deg f ≥ 3; lower degrees delegate.
SymbolicValue powersum_polyquot(const Polynomial& f, std::uint64_t k);

/// Identity iff q = d = 2 and 1 < k ≡ -1, 0, 1 (mod 6); zero otherwise.
SymbolicValue powersum_matrix_field(std::uint64_t q, unsigned d, std::uint64_t k);

/// Best closed form for a spec: powersum_general, or the matrix formula for
/// M_d(F_q).
SymbolicValue composed_value(const RingSpec& spec, std::uint64_t k, const LeafClassifier& classifier = {});

/// The literal table that applies to the spec's family.
SymbolicValue paper_value(const RingSpec& spec, std::uint64_t k, const LeafClassifier& classifier = {});

/// The concrete element of `a` a symbolic value denotes.
Element evaluate(const SymbolicValue& v, const FiniteAlgebra& a);

}  // namespace ringsum

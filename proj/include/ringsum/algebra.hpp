#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ringsum {

inline constexpr std::uint64_t kDefaultMaxElements = std::uint64_t{1} << 24;

/// Member of a FiniteAlgebra: coordinates in its basis, coords[j] < orders[j].
struct Element {
  std::vector<std::uint64_t> coords;

  bool is_zero() const;
  friend bool operator==(const Element&, const Element&) = default;
};

/// A finite Z/nZ-algebra given by a basis with per-generator additive orders
/// and structure constants. Immutable after construction.
///
/// table(i, j) holds the coordinates of b_i * b_j. Different generators may
/// have different additive orders, so a direct product of rings with coprime
/// characteristics is a single algebra.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::vector<std::string> labels, std::vector<std::uint64_t> orders,
                std::vector<std::uint64_t> table, Element unit, bool commutative);

  std::size_t dimension() const { return orders_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::span<const std::uint64_t> orders() const { return orders_; }
  const Element& unit() const { return unit_; }
  bool commutative() const { return commutative_; }

  /// Coordinate k of b_i * b_j.
  std::uint64_t structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dimension() + j) * dimension() + k];
  }
  std::span<const std::uint64_t> product_of_basis(std::size_t i, std::size_t j) const {
    return {table_.data() + (i * dimension() + j) * dimension(), dimension()};
  }

  /// |A| = ∏ orders. Throws ResourceError beyond 64 bits.
  std::uint64_t order() const;

  Element zero() const;
  Element basis_element(std::size_t j) const;
  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(const Element& a, std::int64_t c) const;
  /// Square-and-multiply; pow(a, 0) is the unit.
  Element pow(const Element& a, std::uint64_t k) const;

  /// Mixed-radix index order, coordinate 0 fastest.
  Element element_at(std::uint64_t index) const;

  /// "3+5*x", "1+i", "0".
  std::string pretty(const Element& a) const;

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  void check(const Element& a) const;

  struct Term {
    std::uint32_t i, j, k;
    std::uint64_t c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  std::vector<std::string> labels_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint64_t> table_;
  Element unit_;
  bool commutative_;
  std::vector<Term> terms_;  // nonzero structure constants
  bool small_moduli_ = false;
};

struct Violation {
  std::string kind;  // "order", "bilinearity", "unit", "associativity", "commutativity"
  std::string detail;
};

/// Every violated FiniteAlgebra invariant; empty for a well-formed algebra.
std::vector<Violation> validate(const FiniteAlgebra& a);

/// c · 1 reduced coordinatewise.
Element embed_integer(const FiniteAlgebra& a, std::int64_t c);

/// Additive order of the unit.
std::uint64_t characteristic(const FiniteAlgebra& a);

/// Throws ResourceError when |A| exceeds max_elements.
void require_enumerable(const FiniteAlgebra& a, std::uint64_t max_elements);

/// Visits elements with index in [first, last) in mixed-radix order.
void for_each_element(const FiniteAlgebra& a, std::uint64_t first, std::uint64_t last,
                      const std::function<void(const Element&)>& visit);

/// Every element exactly once; bounded by max_elements.
std::vector<Element> enumerate(const FiniteAlgebra& a,
                               std::uint64_t max_elements = kDefaultMaxElements);

/// A × B with concatenated bases; cross products vanish.
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// M_d(A) on the basis E_uv · b_j (u, v, j nested in that order).
FiniteAlgebra matrix_algebra(unsigned d, const FiniteAlgebra& a,
                             std::uint64_t max_elements = kDefaultMaxElements);

/// The order-1 ring (empty basis).
FiniteAlgebra zero_ring();

}  // namespace ringsum

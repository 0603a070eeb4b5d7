#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringsum/algebra.hpp"
#include "ringsum/closedform.hpp"
#include "ringsum/multivariate.hpp"
#include "ringsum/polynomial.hpp"
#include "ringsum/realize.hpp"
#include "ringsum/ring_spec.hpp"

namespace ringsum {

/// Exhaustive classification of a commutative algebra of prime-power order.
/// Throws std::invalid_argument for other orders, UnsupportedError when
/// non-commutative.
ComponentClass classify_prime_power_algebra(const FiniteAlgebra& a,
                                            std::uint64_t max_elements = kDefaultMaxElements);

/// S_{|A|-1}(A) == -1.
bool is_field_via_powersum(const FiniteAlgebra& a, std::uint64_t max_elements = kDefaultMaxElements);

/// Field test of Z/pZ[x]/(f).
bool poly_irreducible_mod_p(std::uint64_t p, const Polynomial& f,
                            std::uint64_t max_elements = kDefaultMaxElements);

struct MaximalityReport {
  bool maximal = false;
  std::uint64_t k = 0;                   // |A| - 1
  std::vector<std::uint64_t> coords;     // S_k in the monomial basis
  std::vector<std::string> basis;
};

/// Whether (rules) is a maximal ideal of Z/pZ[vars], decided by S_{p^m - 1}
/// of the quotient.
MaximalityReport ideal_maximality(std::uint64_t p, const std::vector<std::string>& vars,
                                  const std::vector<RewriteRule>& rules,
                                  std::uint64_t max_elements = kDefaultMaxElements,
                                  std::uint64_t rewrite_budget = kDefaultRewriteBudget);

/// Symbolic test for S_k(R) being a unit: all components fields with
/// distinct characteristics and (|F_i| - 1) | k.
bool unit_criterion(const RingSpec& spec, std::uint64_t k, const LeafClassifier& classifier = {});

/// Classifies multivariate quotients by realizing and enumerating them.
LeafClassifier make_leaf_classifier(std::uint64_t max_elements = kDefaultMaxElements);

}  // namespace ringsum

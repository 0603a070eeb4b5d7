#pragma once

#include <cstdint>
#include <optional>

#include "ringsum/algebra.hpp"

namespace ringsum {

struct OracleOptions {
  std::uint64_t max_elements = kDefaultMaxElements;
  unsigned jobs = 1;
};

/// S_k(A) = Σ_{r ∈ A} r^k by enumeration. Works for non-commutative
/// algebras too. The result does not depend on `jobs`.
Element brute_power_sum(const FiniteAlgebra& a, std::uint64_t k, const OracleOptions& options = {});

/// Partial sum over element indices [first, last).
Element brute_power_sum_range(const FiniteAlgebra& a, std::uint64_t k, std::uint64_t first, std::uint64_t last);

/// The unique u ≠ 0 with 2u = 0 and u² = 0, or nullopt when there are none
/// or several. Only the 2-torsion subgroup is searched, so the bound applies
/// to its size rather than to |A|.
std::optional<Element> locate_special_nilpotent(const FiniteAlgebra& a,
                                                std::uint64_t max_elements = kDefaultMaxElements);

}  // namespace ringsum

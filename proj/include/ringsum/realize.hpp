#pragma once

#include <cstdint>
#include <limits>

#include "ringsum/algebra.hpp"
#include "ringsum/ring_spec.hpp"

namespace ringsum {

struct RealizeOptions {
  /// Bound on |A|; realization itself is cheap, so by default only the
  /// basis dimension is capped and enumeration is bounded later.
  std::uint64_t max_elements = std::numeric_limits<std::uint64_t>::max();
  std::size_t max_dimension = 128;
  std::uint64_t rewrite_budget = kDefaultRewriteBudget;
};

/// Canonical algebra for a spec:
///  - ZMod(n): basis {1}
///  - polynomial quotients: {1, x, ..., x^(d-1)} with all orders n
///    ({1, i} for Gaussian, {1, sqrt(D)} for SqrtD)
///  - GaloisField(p, s): PolyQuot(p, find_irreducible(p, s))
///  - Product: direct_product fold, Matrix: matrix_algebra
///  - MultivarQuot: normal monomials in graded order
///  - NonCommP3(p): {1, x, y} with x^2 = 0, y^2 = y, xy = x, yx = 0
FiniteAlgebra realize(const RingSpec& spec, const RealizeOptions& options = {});

/// Z/nZ[x]/(f) for monic f with the given basis symbol.
FiniteAlgebra polynomial_quotient(const Polynomial& f, const std::string& symbol = "x");

}  // namespace ringsum

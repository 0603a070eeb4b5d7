#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ringsum {

/// Univariate polynomial over Z/nZ, coefficients c_0..c_d reduced mod n.
/// The zero polynomial has no stored coefficients.
struct Polynomial {
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> coeffs;

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1 % modulus; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Reduces and trims trailing zeros.
Polynomial make_polynomial(std::uint64_t modulus, const std::vector<std::int64_t>& coeffs);

/// Terms `c*x^e`, `x^e`, `x`, `c` joined by `+`/`-`. `base_offset` shifts
/// byte offsets reported in ParseError.
Polynomial parse_polynomial(std::string_view text, std::uint64_t modulus, std::size_t base_offset = 0);

/// Descending degree: "x^3+2*x+1".
std::string to_string(const Polynomial& f);

/// Reduces the coefficients modulo a divisor of the modulus.
Polynomial reduce_modulus(const Polynomial& f, std::uint64_t divisor);

/// Remainder of a by a monic b (any modulus).
Polynomial poly_rem(const Polynomial& a, const Polynomial& monic_b);

/// Over Z/pZ, p prime: trial division by every monic polynomial of
/// degree 1..deg/2.
bool is_irreducible_by_trial_division(const Polynomial& f);

/// Smallest monic irreducible of degree s over Z/pZ, ordering candidates by
/// the integer Σ c_i p^i (c_0 least significant).
Polynomial find_irreducible(std::uint64_t p, unsigned s);

}  // namespace ringsum

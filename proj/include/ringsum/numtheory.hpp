#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ringsum {

struct PrimePower {
  std::uint64_t p = 0;
  unsigned e = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = ∏ p^e over `factors`, primes strictly ascending, exponents ≥ 1.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Reduces a signed value into [0, m).
std::uint64_t reduce(std::int64_t a, std::uint64_t m);

/// Deterministic for the whole 64-bit range.
bool is_prime(std::uint64_t n);

/// Trial division to 10^6, then Miller–Rabin / Pollard rho on what is left.
/// Throws std::invalid_argument for n = 0.
Factorization factorize(std::uint64_t n);

/// p ∣∣ n: p divides n but p² does not.
bool exactly_divides(std::uint64_t p, std::uint64_t n);

/// Largest e with p^e | n (n ≥ 1).
unsigned valuation(std::uint64_t n, std::uint64_t p);

/// Zero counts as a residue. Throws std::invalid_argument for p = 2.
bool is_quadratic_residue(std::int64_t a, std::uint64_t p);

/// (p, s) with q = p^s, or nullopt.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

bool is_square_free(std::int64_t d);

/// Throws ResourceError on 64-bit overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// Smallest-prime-factor table for [0, limit]; entry 0 and 1 are 0.
std::vector<std::uint32_t> smallest_prime_factor_sieve(std::uint32_t limit);

/// Factorization read off a sieve built with limit ≥ n.
Factorization factorize_with_sieve(std::uint32_t n, const std::vector<std::uint32_t>& spf);

}  // namespace ringsum

#include "ringsum/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ringsum/errors.hpp"

namespace ringsum {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;
constexpr std::uint64_t kTableResidueLimit = 50;

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned r) {
  std::uint64_t x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant; n must be an odd composite.
std::uint64_t pollard_rho(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t m = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_large(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = pollard_rho(n);
  split_large(d, out);
  split_large(n / d, out);
}

}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce(std::int64_t a, std::uint64_t m) {
  if (a >= 0) return static_cast<std::uint64_t>(a) % m;
  // -(a+1) avoids overflow at INT64_MIN.
  std::uint64_t neg = (static_cast<std::uint64_t>(-(a + 1)) + 1) % m;
  return neg == 0 ? 0 : m - neg;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This witness set is deterministic below 3.3 * 10^24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization result;
  result.n = n;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p <= kTrialLimit && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    result.factors.push_back({p, e});
  }
  if (rest > 1) {
    std::map<std::uint64_t, unsigned> large;
    split_large(rest, large);
    for (auto [p, e] : large) result.factors.push_back({p, e});
  }
  return result;
}

bool exactly_divides(std::uint64_t p, std::uint64_t n) {
  return n % p == 0 && (n / p) % p != 0;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("valuation: n must be positive");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

bool is_quadratic_residue(std::int64_t a, std::uint64_t p) {
  if (p == 2) throw std::invalid_argument("is_quadratic_residue: p must be odd");
  std::uint64_t r = reduce(a, p);
  if (r == 0) return true;
  if (p <= kTableResidueLimit) {
    std::vector<bool> square(p, false);
    for (std::uint64_t t = 0; t < p; ++t) square[t * t % p] = true;
    return square[r];
  }
  return powmod(r, (p - 1) / 2, p) == 1;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.factors.size() != 1) return std::nullopt;
  return f.factors.front();
}

bool is_square_free(std::int64_t d) {
  if (d == 0) return false;
  std::uint64_t mag = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1 : static_cast<std::uint64_t>(d);
  for (const auto& pe : factorize(mag).factors) {
    if (pe.e > 1) return false;
  }
  return true;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceError("integer overflow beyond 64 bits");
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

std::vector<std::uint32_t> smallest_prime_factor_sieve(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = i;
      primes.push_back(i);
    }
    for (std::uint32_t p : primes) {
      std::uint64_t composite = static_cast<std::uint64_t>(p) * i;
      if (p > spf[i] || composite > limit) break;
      spf[composite] = p;
    }
  }
  return spf;
}

Factorization factorize_with_sieve(std::uint32_t n, const std::vector<std::uint32_t>& spf) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization result;
  result.n = n;
  while (n > 1) {
    std::uint32_t p = spf[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    result.factors.push_back({p, e});
  }
  return result;
}

}  // namespace ringsum

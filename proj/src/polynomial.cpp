#include "ringsum/polynomial.hpp"

#include <stdexcept>

#include "ringsum/errors.hpp"
#include "ringsum/multivariate.hpp"
#include "ringsum/numtheory.hpp"

namespace ringsum {

namespace {

void trim(Polynomial& f) {
  while (!f.coeffs.empty() && f.coeffs.back() == 0) f.coeffs.pop_back();
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits of `code`.
Polynomial monic_from_code(std::uint64_t p, unsigned d, std::uint64_t code) {
  Polynomial f{p, std::vector<std::uint64_t>(d + 1, 0)};
  for (unsigned i = 0; i < d; ++i) {
    f.coeffs[i] = code % p;
    code /= p;
  }
  f.coeffs[d] = 1;
  return f;
}

}  // namespace

Polynomial make_polynomial(std::uint64_t modulus, const std::vector<std::int64_t>& coeffs) {
  if (modulus == 0) throw std::invalid_argument("polynomial modulus must be positive");
  Polynomial f{modulus, {}};
  for (auto c : coeffs) f.coeffs.push_back(reduce(c, modulus));
  trim(f);
  return f;
}

Polynomial parse_polynomial(std::string_view text, std::uint64_t modulus, std::size_t base_offset) {
  const MPoly q = parse_mpoly(text, {"x"}, modulus, base_offset);
  Polynomial f{modulus, {}};
  for (const auto& [m, c] : q.terms) {
    if (f.coeffs.size() <= m[0]) f.coeffs.resize(m[0] + 1, 0);
    f.coeffs[m[0]] = c;
  }
  trim(f);
  return f;
}

std::string to_string(const Polynomial& f) {
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const std::uint64_t c = f.coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (mono.empty()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += std::to_string(c) + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

Polynomial reduce_modulus(const Polynomial& f, std::uint64_t divisor) {
  if (divisor == 0 || f.modulus % divisor != 0) throw std::invalid_argument("reduce_modulus: not a divisor");
  Polynomial g{divisor, {}};
  for (auto c : f.coeffs) g.coeffs.push_back(c % divisor);
  trim(g);
  return g;
}

Polynomial poly_rem(const Polynomial& a, const Polynomial& monic_b) {
  if (a.modulus != monic_b.modulus) throw std::invalid_argument("poly_rem: modulus mismatch");
  if (!monic_b.is_monic()) throw std::invalid_argument("poly_rem: divisor must be monic");
  const std::uint64_t n = a.modulus;
  Polynomial r = a;
  const int db = monic_b.degree();
  for (int i = r.degree(); i >= db; --i) {
    const std::uint64_t lead = r.coeffs[static_cast<std::size_t>(i)];
    if (lead == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& c = r.coeffs[static_cast<std::size_t>(i - db + j)];
      c = (c + n - mulmod(lead, monic_b.coeffs[static_cast<std::size_t>(j)], n)) % n;
    }
  }
  trim(r);
  return r;
}

bool is_irreducible_by_trial_division(const Polynomial& f) {
  if (!is_prime(f.modulus)) throw std::invalid_argument("irreducibility needs a prime modulus");
  const int d = f.degree();
  if (d < 1) return false;
  // Make f monic before dividing.
  Polynomial g = f;
  const std::uint64_t inv = powmod(g.coeffs.back(), g.modulus - 2, g.modulus);
  for (auto& c : g.coeffs) c = mulmod(c, inv, g.modulus);
  const std::uint64_t p = f.modulus;
  for (unsigned k = 1; k <= static_cast<unsigned>(d) / 2; ++k) {
    const std::uint64_t count = checked_pow(p, k);
    for (std::uint64_t code = 0; code < count; ++code) {
      if (poly_rem(g, monic_from_code(p, k, code)).coeffs.empty()) return false;
    }
  }
  return true;
}

Polynomial find_irreducible(std::uint64_t p, unsigned s) {
  if (!is_prime(p)) throw std::invalid_argument("find_irreducible: p must be prime");
  if (s == 0) throw std::invalid_argument("find_irreducible: degree must be positive");
  const std::uint64_t count = checked_pow(p, s);
  for (std::uint64_t code = 0; code < count; ++code) {
    Polynomial f = monic_from_code(p, s, code);
    if (is_irreducible_by_trial_division(f)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace ringsum

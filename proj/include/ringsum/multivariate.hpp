#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ringsum {

using Monomial = std::vector<unsigned>;

/// Sparse multivariate polynomial over Z/nZ; zero coefficients are never stored.
struct MPoly {
  std::uint64_t modulus = 0;
  std::size_t nvars = 0;
  std::map<Monomial, std::uint64_t> terms;

  friend bool operator==(const MPoly&, const MPoly&) = default;
};

/// x_var^exponent -> replacement.
struct RewriteRule {
  std::size_t var = 0;
  unsigned exponent = 0;
  MPoly replacement;

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

inline constexpr std::uint64_t kDefaultRewriteBudget = 1'000'000;

MPoly mpoly_constant(std::uint64_t modulus, std::size_t nvars, std::int64_t c);
MPoly mpoly_monomial(std::uint64_t modulus, const Monomial& m, std::uint64_t c = 1);
MPoly mpoly_add(const MPoly& a, const MPoly& b);
MPoly mpoly_mul(const MPoly& a, const MPoly& b);

/// Graded order used for printing and for quotient bases: total degree
/// ascending, then exponent vectors descending (x before y).
bool graded_less(const Monomial& a, const Monomial& b);

MPoly parse_mpoly(std::string_view text, const std::vector<std::string>& vars, std::uint64_t modulus,
                  std::size_t base_offset = 0);
std::string to_string(const MPoly& q, const std::vector<std::string>& vars);

/// `<var>^<e>=<poly>`.
RewriteRule parse_rule(std::string_view text, const std::vector<std::string>& vars, std::uint64_t modulus,
                       std::size_t base_offset = 0);
std::string to_string(const RewriteRule& r, const std::vector<std::string>& vars);

/// Checks one rule per variable, exponent ≥ 2, and that no replacement
/// contains its own variable at or above the rule exponent.
void check_rules(std::span<const RewriteRule> rules, std::size_t nvars);

/// Rewrites until no variable reaches its rule exponent. Throws
/// ResourceError after `budget` rule applications.
MPoly poly_normal_form(const MPoly& q, std::span<const RewriteRule> rules,
                       std::uint64_t budget = kDefaultRewriteBudget);

/// Monomials with every exponent below its rule exponent, in graded order.
std::vector<Monomial> normal_monomials(std::span<const RewriteRule> rules, std::size_t nvars);

std::string monomial_label(const Monomial& m, const std::vector<std::string>& vars);

}  // namespace ringsum

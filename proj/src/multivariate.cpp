#include "ringsum/multivariate.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "ringsum/errors.hpp"
#include "ringsum/numtheory.hpp"

namespace ringsum {

namespace {

void accumulate(std::map<Monomial, std::uint64_t>& terms, const Monomial& m, std::uint64_t c,
                std::uint64_t modulus) {
  c %= modulus;
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second = (it->second + c) % modulus;
    if (it->second == 0) terms.erase(it);
  }
}

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::uint64_t number() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a number");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, text_[pos_] - '0', &v)) {
        fail("number does not fit in 64 bits");
      }
      ++pos_;
    }
    return v;
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a variable");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t offset() const { return base_ + pos_; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, offset()); }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

// term := factor ('*' factor)*, factor := number | var ['^' number]
std::pair<std::uint64_t, Monomial> parse_term(Cursor& cur, const std::vector<std::string>& vars,
                                              std::uint64_t modulus) {
  std::uint64_t coef = 1 % modulus;
  Monomial mono(vars.size(), 0);
  do {
    char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coef = mulmod(coef, cur.number() % modulus, modulus);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = cur.offset();
      std::string name = cur.identifier();
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) throw ParseError("unknown variable '" + name + "'", at);
      unsigned e = 1;
      if (cur.accept('^')) {
        std::uint64_t v = cur.number();
        if (v > 1'000'000) cur.fail("exponent too large");
        e = static_cast<unsigned>(v);
      }
      mono[static_cast<std::size_t>(it - vars.begin())] += e;
    } else {
      cur.fail("expected a term");
    }
  } while (cur.accept('*'));
  return {coef, mono};
}

std::string format_term(std::uint64_t c, const Monomial& m, const std::vector<std::string>& vars) {
  std::string mono = monomial_label(m, vars);
  if (mono == "1") return std::to_string(c);
  if (c == 1) return mono;
  return std::to_string(c) + "*" + mono;
}

}  // namespace

MPoly mpoly_constant(std::uint64_t modulus, std::size_t nvars, std::int64_t c) {
  MPoly q{modulus, nvars, {}};
  accumulate(q.terms, Monomial(nvars, 0), reduce(c, modulus), modulus);
  return q;
}

MPoly mpoly_monomial(std::uint64_t modulus, const Monomial& m, std::uint64_t c) {
  MPoly q{modulus, m.size(), {}};
  accumulate(q.terms, m, c, modulus);
  return q;
}

MPoly mpoly_add(const MPoly& a, const MPoly& b) {
  if (a.modulus != b.modulus || a.nvars != b.nvars) throw std::invalid_argument("mpoly_add: ring mismatch");
  MPoly r = a;
  for (const auto& [m, c] : b.terms) accumulate(r.terms, m, c, r.modulus);
  return r;
}

MPoly mpoly_mul(const MPoly& a, const MPoly& b) {
  if (a.modulus != b.modulus || a.nvars != b.nvars) throw std::invalid_argument("mpoly_mul: ring mismatch");
  MPoly r{a.modulus, a.nvars, {}};
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      Monomial m(a.nvars);
      for (std::size_t v = 0; v < a.nvars; ++v) m[v] = ma[v] + mb[v];
      accumulate(r.terms, m, mulmod(ca, cb, a.modulus), a.modulus);
    }
  }
  return r;
}

bool graded_less(const Monomial& a, const Monomial& b) {
  unsigned da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db;
  return a > b;
}

MPoly parse_mpoly(std::string_view text, const std::vector<std::string>& vars, std::uint64_t modulus,
                  std::size_t base_offset) {
  if (modulus == 0) throw std::invalid_argument("parse_mpoly: modulus must be positive");
  Cursor cur(text, base_offset);
  if (cur.done()) cur.fail("empty polynomial");
  MPoly q{modulus, vars.size(), {}};
  bool negative = false;
  if (cur.accept('-')) {
    negative = true;
  } else {
    cur.accept('+');
  }
  while (true) {
    auto [coef, mono] = parse_term(cur, vars, modulus);
    accumulate(q.terms, mono, negative ? (modulus - coef) % modulus : coef, modulus);
    if (cur.done()) break;
    if (cur.accept('+')) {
      negative = false;
    } else if (cur.accept('-')) {
      negative = true;
    } else {
      cur.fail("expected '+' or '-'");
    }
  }
  return q;
}

std::string to_string(const MPoly& q, const std::vector<std::string>& vars) {
  std::vector<std::pair<Monomial, std::uint64_t>> terms(q.terms.begin(), q.terms.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return graded_less(a.first, b.first); });
  std::string out;
  for (const auto& [m, c] : terms) {
    if (!out.empty()) out += "+";
    out += format_term(c, m, vars);
  }
  return out.empty() ? "0" : out;
}

RewriteRule parse_rule(std::string_view text, const std::vector<std::string>& vars, std::uint64_t modulus,
                       std::size_t base_offset) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("rule must have the form <var>^<e>=<poly>", base_offset);
  Cursor lhs(text.substr(0, eq), base_offset);
  std::size_t at = lhs.offset();
  std::string name = lhs.identifier();
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw ParseError("unknown variable '" + name + "'", at);
  if (!lhs.accept('^')) lhs.fail("expected '^' in rule head");
  std::uint64_t e = lhs.number();
  if (!lhs.done()) lhs.fail("unexpected text in rule head");
  if (e < 2 || e > 64) throw ParseError("rule exponent must be between 2 and 64", at);
  RewriteRule rule;
  rule.var = static_cast<std::size_t>(it - vars.begin());
  rule.exponent = static_cast<unsigned>(e);
  rule.replacement = parse_mpoly(text.substr(eq + 1), vars, modulus, base_offset + eq + 1);
  return rule;
}

std::string to_string(const RewriteRule& r, const std::vector<std::string>& vars) {
  return vars.at(r.var) + "^" + std::to_string(r.exponent) + "=" + to_string(r.replacement, vars);
}

void check_rules(std::span<const RewriteRule> rules, std::size_t nvars) {
  if (nvars == 0) throw UnsupportedError("a multivariate quotient needs at least one variable");
  std::vector<int> seen(nvars, 0);
  for (const auto& r : rules) {
    if (r.var >= nvars) throw UnsupportedError("rule refers to an unknown variable");
    if (r.exponent < 2) throw UnsupportedError("rule exponent must be at least 2");
    if (++seen[r.var] > 1) throw UnsupportedError("more than one rule for a variable");
    for (const auto& [m, c] : r.replacement.terms) {
      if (m[r.var] >= r.exponent) throw UnsupportedError("rule replacement is not reduced in its own variable");
    }
  }
  for (std::size_t v = 0; v < nvars; ++v) {
    if (seen[v] == 0) throw UnsupportedError("every variable needs a rule (finite monomial basis)");
  }
}

MPoly poly_normal_form(const MPoly& q, std::span<const RewriteRule> rules, std::uint64_t budget) {
  std::vector<const RewriteRule*> by_var(q.nvars, nullptr);
  for (const auto& r : rules) {
    if (r.var < q.nvars) by_var[r.var] = &r;
  }
  MPoly result{q.modulus, q.nvars, {}};
  std::map<Monomial, std::uint64_t> pending = q.terms;
  std::uint64_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    Monomial mono = std::move(node.key());
    const std::uint64_t c = node.mapped();
    const RewriteRule* rule = nullptr;
    for (std::size_t v = 0; v < q.nvars && !rule; ++v) {
      if (by_var[v] && mono[v] >= by_var[v]->exponent) rule = by_var[v];
    }
    if (!rule) {
      accumulate(result.terms, mono, c, q.modulus);
      continue;
    }
    if (++steps > budget) {
      throw ResourceError("rewrite budget of " + std::to_string(budget) + " applications exhausted");
    }
    mono[rule->var] -= rule->exponent;
    for (const auto& [rm, rc] : rule->replacement.terms) {
      Monomial m(q.nvars);
      for (std::size_t v = 0; v < q.nvars; ++v) m[v] = mono[v] + rm[v];
      accumulate(pending, m, mulmod(c, rc, q.modulus), q.modulus);
    }
  }
  return result;
}

std::vector<Monomial> normal_monomials(std::span<const RewriteRule> rules, std::size_t nvars) {
  std::vector<unsigned> bound(nvars, 1);
  for (const auto& r : rules) bound.at(r.var) = r.exponent;
  std::vector<Monomial> out;
  Monomial m(nvars, 0);
  while (true) {
    out.push_back(m);
    std::size_t v = 0;
    for (; v < nvars; ++v) {
      if (++m[v] < bound[v]) break;
      m[v] = 0;
    }
    if (v == nvars) break;
  }
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

std::string monomial_label(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.at(v);
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace ringsum

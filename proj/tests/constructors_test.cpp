#include <gtest/gtest.h>

#include "ringsum/errors.hpp"
#include "ringsum/multivariate.hpp"
#include "ringsum/numtheory.hpp"
#include "ringsum/polynomial.hpp"
#include "ringsum/realize.hpp"
#include "ringsum/ring_spec.hpp"

namespace ringsum {
namespace {

const char* const kCorpus[] = {
    "zmod:2",          "zmod:6",           "zmod:97",
    "gf:2^1",          "gf:4",             "gf:3^4",
    "gaussian:2",      "gaussian:6",       "quad:10:1:1",
    "quad:2:0:0",      "sqrt:6:-5",        "sqrt:2:5",
    "polyquot:6:x^3+x+1",                  "polyquot:4:x^2",
    "product:(gf:4)x(zmod:9)",             "product:(quad:2:0:0)x(zmod:3)",
    "product:",        "matrix:1:(gf:4)",  "matrix:2:(gf:2)",
    "matrix:2:(zmod:6)",                   "noncommp3:3",
    "mvq:3:x,y:x^2=2+2*y^2;y^2=1+x",      "mvq:2:x:x^3=x+1",
};

TEST(ParseSpec, Examples) {
  EXPECT_EQ(parse_spec("zmod:6"), RingSpec{spec::ZMod{6}});
  EXPECT_EQ(parse_spec("quad:10:1:1"), (RingSpec{spec::Quadratic{10, 1, 1}}));
  EXPECT_EQ(parse_spec("product:(gf:4)x(zmod:9)"),
            (RingSpec{spec::Product{{RingSpec{spec::GaloisField{2, 2}}, RingSpec{spec::ZMod{9}}}}}));
  EXPECT_EQ(parse_spec("gf:2^3"), (RingSpec{spec::GaloisField{2, 3}}));
  EXPECT_EQ(parse_spec("sqrt:10:-1"), (RingSpec{spec::SqrtD{10, -1}}));
}

TEST(ParseSpec, RoundTripsThroughCanonicalPrinter) {
  for (const char* text : kCorpus) {
    const RingSpec s = parse_spec(text);
    EXPECT_EQ(parse_spec(to_string(s)), s) << text << " -> " << to_string(s);
  }
}

TEST(ParseSpec, ErrorsCarryOffsets) {
  try {
    parse_spec("zmod:x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
  EXPECT_THROW(parse_spec("gf:6"), ParseError);
  EXPECT_THROW(parse_spec("gf:2^0"), ParseError);
  EXPECT_THROW(parse_spec("polyquot:6:2*x^2+1"), ParseError);
  EXPECT_THROW(parse_spec("mvq:4:x:x^2=1"), ParseError);
  EXPECT_THROW(parse_spec("zmod:1x"), ParseError);
  EXPECT_THROW(parse_spec("ring:5"), ParseError);
  EXPECT_THROW(parse_spec("product:(zmod:2"), ParseError);
  EXPECT_THROW(parse_spec("matrix:0:(zmod:2)"), ParseError);
  EXPECT_THROW(parse_spec("quad:1:0:0"), ParseError);
}

TEST(Realize, Examples) {
  const auto z4 = realize(parse_spec("zmod:4"));
  EXPECT_EQ(z4.order(), 4u);
  EXPECT_EQ(characteristic(z4), 4u);
  const auto g3 = realize(parse_spec("gaussian:3"));
  EXPECT_EQ(g3.order(), 9u);
  EXPECT_EQ(g3.mul(g3.basis_element(1), g3.basis_element(1)), (Element{{2, 0}}));
  const auto nc = realize(parse_spec("noncommp3:3"));
  EXPECT_EQ(nc.order(), 27u);
  EXPECT_FALSE(nc.commutative());
}

TEST(Realize, NonCommP3Relations) {
  const auto a = realize(parse_spec("noncommp3:5"));
  const Element x = a.basis_element(1), y = a.basis_element(2);
  EXPECT_TRUE(a.mul(x, x).is_zero());
  EXPECT_EQ(a.mul(y, y), y);
  EXPECT_EQ(a.mul(x, y), x);
  EXPECT_TRUE(a.mul(y, x).is_zero());
}

TEST(Realize, ValidForWholeCorpus) {
  for (const char* text : kCorpus) {
    const auto a = realize(parse_spec(text));
    const auto v = validate(a);
    EXPECT_TRUE(v.empty()) << text << ": " << (v.empty() ? "" : v[0].detail);
    EXPECT_EQ(a.commutative(), is_commutative(parse_spec(text))) << text;
  }
}

TEST(Realize, ZModOrderAndCharacteristic) {
  for (std::uint64_t n = 2; n <= 200; ++n) {
    const auto a = realize(RingSpec{spec::ZMod{n}});
    ASSERT_EQ(a.order(), n);
    ASSERT_EQ(characteristic(a), n);
  }
}

TEST(Realize, QuadraticRelation) {
  for (std::uint64_t n = 2; n <= 30; ++n) {
    for (std::uint64_t b = 0; b < n; ++b) {
      for (std::uint64_t c = 0; c < n; ++c) {
        const auto a = realize(RingSpec{spec::Quadratic{n, b, c}});
        const Element x = a.basis_element(1);
        const Element rhs{{(n - c) % n, (n - b) % n}};
        ASSERT_EQ(a.mul(x, x), rhs) << n << ":" << b << ":" << c;
      }
    }
  }
}

TEST(Realize, ProductMatchesDirectProduct) {
  const auto p = realize(parse_spec("product:(gf:4)x(zmod:9)"));
  const auto d = direct_product(realize(parse_spec("gf:4")), realize(parse_spec("zmod:9")));
  EXPECT_EQ(p.orders().size(), d.orders().size());
  EXPECT_TRUE(std::equal(p.orders().begin(), p.orders().end(), d.orders().begin()));
  EXPECT_EQ(p.unit(), d.unit());
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    for (std::size_t j = 0; j < p.dimension(); ++j) {
      EXPECT_TRUE(std::ranges::equal(p.product_of_basis(i, j), d.product_of_basis(i, j)));
    }
  }
}

TEST(Realize, GaloisFieldsAreFields) {
  for (std::uint64_t q = 2; q <= 81; ++q) {
    const auto pp = as_prime_power(q);
    if (!pp) continue;
    const auto a = realize(RingSpec{spec::GaloisField{pp->p, pp->e}});
    ASSERT_EQ(a.order(), q);
    for (std::uint64_t i = 1; i < q; ++i) {
      const Element x = a.element_at(i);
      bool invertible = false;
      for (std::uint64_t j = 1; j < q && !invertible; ++j) invertible = a.mul(x, a.element_at(j)) == a.unit();
      ASSERT_TRUE(invertible) << "gf:" << q << " element " << a.pretty(x);
    }
  }
}

TEST(FindIrreducible, Examples) {
  EXPECT_EQ(to_string(find_irreducible(2, 2)), "x^2+x+1");
  EXPECT_EQ(to_string(find_irreducible(3, 2)), "x^2+1");
  EXPECT_EQ(to_string(find_irreducible(2, 3)), "x^3+x+1");
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (unsigned s = 1; s <= 4; ++s) EXPECT_TRUE(is_irreducible_by_trial_division(find_irreducible(p, s)));
  }
}

TEST(Polynomial, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_polynomial("x^3+2*x+1", 3)), "x^3+2*x+1");
  EXPECT_EQ(to_string(parse_polynomial("x^2-1", 5)), "x^2+4");
  EXPECT_EQ(to_string(parse_polynomial("7*x+x^2+3", 5)), "x^2+2*x+3");
  EXPECT_THROW(parse_polynomial("x^^2", 5), ParseError);
  EXPECT_EQ(poly_rem(parse_polynomial("x^3", 2), parse_polynomial("x^2+x+1", 2)).coeffs,
            (std::vector<std::uint64_t>{1}));
}

TEST(Polynomial, TrialDivisionSmallCases) {
  EXPECT_TRUE(is_irreducible_by_trial_division(parse_polynomial("x^2+x+1", 2)));
  EXPECT_TRUE(is_irreducible_by_trial_division(parse_polynomial("x^2+1", 3)));
  EXPECT_FALSE(is_irreducible_by_trial_division(parse_polynomial("x^2+2", 3)));
  EXPECT_FALSE(is_irreducible_by_trial_division(parse_polynomial("x^3+x^2+x+1", 2)));
  EXPECT_TRUE(is_irreducible_by_trial_division(parse_polynomial("x+4", 5)));
}

const std::vector<std::string> kXY = {"x", "y"};

std::vector<RewriteRule> remark_rules() {
  return {parse_rule("x^2=2+2*y^2", kXY, 3), parse_rule("y^2=1+x", kXY, 3)};
}

TEST(NormalForm, Examples) {
  const auto rules = remark_rules();
  const MPoly x2 = parse_mpoly("x^2", kXY, 3);
  const MPoly one_rule = poly_normal_form(x2, std::span(rules).first(1));
  EXPECT_EQ(to_string(one_rule, kXY), "2+2*y^2");

  const MPoly x2y2 = poly_normal_form(parse_mpoly("x^2*y^2", kXY, 3), rules);
  for (const auto& [m, c] : x2y2.terms) {
    EXPECT_LT(m[0], 2u);
    EXPECT_LT(m[1], 2u);
  }
  const MPoly normal = parse_mpoly("1+2*x+x*y", kXY, 3);
  EXPECT_EQ(poly_normal_form(normal, rules), normal);
}

TEST(NormalForm, BudgetExceeded) {
  const std::vector<std::string> v = {"x"};
  const std::vector<RewriteRule> rules = {parse_rule("x^2=x+1", v, 2)};
  EXPECT_THROW(poly_normal_form(parse_mpoly("x^4000", v, 2), rules, 100), ResourceError);
}

TEST(Rules, Checks) {
  EXPECT_NO_THROW(check_rules(remark_rules(), 2));
  const std::vector<RewriteRule> missing = {parse_rule("x^2=1", kXY, 3)};
  EXPECT_THROW(check_rules(missing, 2), UnsupportedError);
  const std::vector<RewriteRule> twice = {parse_rule("x^2=1", kXY, 3), parse_rule("x^3=1", kXY, 3)};
  EXPECT_THROW(check_rules(twice, 2), UnsupportedError);
  const std::vector<RewriteRule> unreduced = {parse_rule("x^2=x^2+1", kXY, 3), parse_rule("y^2=1", kXY, 3)};
  EXPECT_THROW(check_rules(unreduced, 2), UnsupportedError);
  EXPECT_THROW(parse_rule("x^1=0", kXY, 3), ParseError);
  EXPECT_THROW(parse_rule("z^2=0", kXY, 3), ParseError);
}

TEST(Rules, BasisOrder) {
  const auto a = realize(parse_spec("mvq:3:x,y:x^2=2+2*y^2;y^2=1+x"));
  EXPECT_EQ(a.labels(), (std::vector<std::string>{"1", "x", "y", "x*y"}));
  EXPECT_EQ(a.order(), 81u);
}

TEST(Rules, DivergentSystemHitsBudget) {
  // x^2 -> y^3 -> y*x^3 -> ... never reaches a normal form.
  EXPECT_THROW(realize(parse_spec("mvq:2:x,y:x^2=y^3;y^2=x^3"), {UINT64_MAX, 128, 10000}), ResourceError);
}

}  // namespace
}  // namespace ringsum

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ringsum/classify.hpp"
#include "ringsum/closedform.hpp"
#include "ringsum/numtheory.hpp"
#include "ringsum/oracle.hpp"
#include "ringsum/realize.hpp"
#include "ringsum/search.hpp"

using namespace ringsum;

namespace {

// Collects the first few failure messages of one criterion.
struct Check {
  std::vector<std::string> failures;
  std::size_t count = 0;

  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
  bool ok() const { return failures.empty(); }
};

struct Criterion {
  int id;
  std::string title;
  double seconds_limit;
  std::function<void(Check&)> body;
};

std::string k_str(std::uint64_t k) { return " k=" + std::to_string(k); }

void expect_oracle(Check& c, const RingSpec& spec, const FiniteAlgebra& a, const SymbolicValue& v, const Element& oracle,
                   std::uint64_t k, const std::string& route) {
  c.expect(evaluate(v, a) == oracle, route + " " + to_string(spec) + k_str(k) + ": " + v.describe() + " vs " +
                                         a.pretty(oracle));
}

std::vector<std::uint64_t> hit_orders(const std::vector<SelfPowerHit>& hits) {
  std::vector<std::uint64_t> out;
  for (const auto& h : hits) out.push_back(h.order);
  return out;
}

void zmod_family(Check& c) {
  for (std::uint64_t n = 1; n <= 100; ++n) {
    const RingSpec spec = n == 1 ? RingSpec{spec::Product{}} : RingSpec{spec::ZMod{n}};
    const auto a = realize(spec);
    for (std::uint64_t k = 1; k <= 40; ++k) {
      const Element oracle = brute_power_sum(a, k);
      expect_oracle(c, spec, a, powersum_zmod(n, k), oracle, k, "powersum_zmod");
      expect_oracle(c, spec, a, composed_value(spec, k), oracle, k, "composed");
    }
  }
}

void gaussian_family(Check& c) {
  for (std::uint64_t n = 2; n <= 30; ++n) {
    const RingSpec g{spec::Gaussian{n}}, s{spec::SqrtD{n, -1}};
    const auto ag = realize(g), as = realize(s);
    for (std::uint64_t k = 1; k <= 40; ++k) {
      const Element og = brute_power_sum(ag, k), os = brute_power_sum(as, k);
      c.expect(og.coords == os.coords, "realizations differ " + to_string(g) + k_str(k));
      expect_oracle(c, g, ag, powersum_gaussian(n, k), og, k, "powersum_gaussian");
      expect_oracle(c, s, as, powersum_sqrtD(n, -1, k), os, k, "powersum_sqrtD");
      expect_oracle(c, g, ag, composed_value(g, k), og, k, "composed");
    }
  }
}

void quadratic_family(Check& c) {
  std::vector<std::uint64_t> ks;
  for (std::uint64_t k = 1; k <= 12; ++k) ks.push_back(k);
  ks.insert(ks.end(), {24, 80});
  for (std::uint64_t n = 2; n <= 12; ++n) {
    for (std::uint64_t b = 0; b < n; ++b) {
      for (std::uint64_t cc = 0; cc < n; ++cc) {
        const RingSpec spec{spec::Quadratic{n, b, cc}};
        const auto a = realize(spec);
        for (auto k : ks) {
          const Element oracle = brute_power_sum(a, k);
          expect_oracle(c, spec, a, powersum_quadratic(n, b, cc, k), oracle, k, "powersum_quadratic");
          expect_oracle(c, spec, a, composed_value(spec, k), oracle, k, "composed");
        }
      }
    }
  }
  const RingSpec q{spec::Quadratic{10, 1, 1}};
  const auto a = realize(q);
  const Element oracle = brute_power_sum(a, 24);
  c.expect(oracle == a.unit(), "quad:10:1:1 k=24 oracle is not 1");
  c.expect(evaluate(composed_value(q, 24), a) == a.unit(), "quad:10:1:1 k=24 composed is not 1");
  c.expect(evaluate(paper_value(q, 24), a) != oracle, "quad:10:1:1 k=24 table unexpectedly matches");
}

void polyquot_family(Check& c) {
  const std::vector<std::uint64_t> ks = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 26};
  for (std::uint64_t n = 2; n <= 6; ++n) {
    for (std::uint64_t code = 0; code < n * n * n; ++code) {
      const std::int64_t c0 = static_cast<std::int64_t>(code % n), c1 = static_cast<std::int64_t>(code / n % n),
                         c2 = static_cast<std::int64_t>(code / n / n);
      const Polynomial f = make_polynomial(n, {c0, c1, c2, 1});
      const RingSpec spec{spec::PolyQuot{f}};
      const auto a = realize(spec);
      for (auto k : ks) {
        const Element oracle = brute_power_sum(a, k);
        expect_oracle(c, spec, a, powersum_polyquot(f, k), oracle, k, "powersum_polyquot");
        expect_oracle(c, spec, a, composed_value(spec, k), oracle, k, "composed");
      }
    }
  }
}

void remark(Check& c) {
  const std::vector<std::string> vars = {"x", "y"};
  const std::vector<RewriteRule> rules = {parse_rule("x^2=2+2*y^2", vars, 3), parse_rule("y^2=1+x", vars, 3)};
  const auto r = ideal_maximality(3, vars, rules);
  c.expect(r.k == 80, "exponent " + std::to_string(r.k));
  c.expect(r.coords == std::vector<std::uint64_t>{2, 0, 0, 0}, "coefficients (A,B,C,D) wrong");
  c.expect(r.basis == std::vector<std::string>{"1", "x", "y", "x*y"}, "basis order");
  c.expect(r.maximal, "verdict not maximal");
}

void selfpower_plus(Check& c) {
  const std::vector<std::uint64_t> expected = {1, 2, 6, 42, 720, 1806};
  const auto t0 = std::chrono::steady_clock::now();
  c.expect(hit_orders(search_self_power(1, 10000)) == expected, "orders up to 10^4");
  const double short_mode = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(short_mode <= 1.0, "short mode took " + std::to_string(short_mode) + " s");
  c.expect(hit_orders(search_self_power(1, 10'000'000)) == expected, "further hits below 10^7");
}

void selfpower_minus(Check& c) {
  const auto hits = search_self_power(-1, 100000);
  c.expect(hit_orders(hits) == std::vector<std::uint64_t>{1, 2, 12, 32400, 71280}, "orders up to 10^5");
  for (const auto& h : hits) c.expect(revalidate(h), "hit " + std::to_string(h.order) + " does not revalidate");
}

void small_hits(Check& c) {
  auto check = [&](const std::string& text, std::uint64_t k, std::int64_t target) {
    const auto a = realize(parse_spec(text));
    c.expect(brute_power_sum(a, k) == embed_integer(a, target), text + k_str(k));
  };
  check("zmod:6", 6, 1);
  check("product:(zmod:2)x(zmod:3)x(zmod:7)", 42, 1);
  check("product:(gf:4)x(zmod:3)", 12, -1);
  for (int target : {1, -1}) {
    for (const auto& h : search_self_power(target, 2000)) {
      if (h.degenerate) continue;
      const auto a = realize(h.ring());
      c.expect(brute_power_sum(a, h.order) == embed_integer(a, target), "hit " + std::to_string(h.order));
    }
  }
}

void matrices_over_fields(Check& c) {
  const auto m2 = realize(parse_spec("matrix:2:(gf:2)"));
  for (std::uint64_t k = 1; k <= 30; ++k) {
    const Element s = brute_power_sum(m2, k);
    const bool identity = k > 1 && (k % 6 == 0 || k % 6 == 1 || k % 6 == 5);
    c.expect(s == (identity ? m2.unit() : m2.zero()), "M2(F2)" + k_str(k));
    c.expect(evaluate(powersum_matrix_field(2, 2, k), m2) == s, "closed form M2(F2)" + k_str(k));
  }
  const auto m3 = realize(parse_spec("matrix:2:(gf:3)"));
  for (std::uint64_t k = 1; k <= 20; ++k) {
    c.expect(brute_power_sum(m3, k).is_zero(), "M2(F3)" + k_str(k));
    c.expect(evaluate(powersum_matrix_field(3, 2, k), m3).is_zero(), "closed form M2(F3)" + k_str(k));
  }
}

void matrices_over_z6(Check& c) {
  const auto a = realize(parse_spec("matrix:2:(zmod:6)"));
  c.expect(a.order() == 1296, "order " + std::to_string(a.order()));
  for (std::uint64_t k = 1; k <= 20; ++k) {
    const bool nonzero = k > 1 && (k % 6 == 0 || k % 6 == 1 || k % 6 == 5);
    c.expect(brute_power_sum(a, k) == (nonzero ? embed_integer(a, 3) : a.zero()), "M2(Z/6Z)" + k_str(k));
  }
}

void noncomm_p3(Check& c) {
  const auto a = realize(parse_spec("noncommp3:3"));
  c.expect(a.order() == 27 && !a.commutative(), "not a 27-element non-commutative ring");
  c.expect(validate(a).empty(), "ring axioms");
  for (std::uint64_t k = 1; k <= 30; ++k) c.expect(brute_power_sum(a, k).is_zero(), "S_k != 0" + k_str(k));
}

void giuga(Check& c) {
  c.expect(search_giuga(1'000'000).empty(), "candidate found below 10^6");
  for (auto [m, p, residue] : {std::tuple{1729ULL, 7ULL, "1729 mod 49 = 14"}, {561ULL, 11ULL, "561 mod 121 = 77"}}) {
    const auto r = check_giuga_order(m);
    c.expect(r.verdict == GiugaReport::Verdict::NonCandidate, std::to_string(m) + " not rejected");
    c.expect(r.failing_condition == "iii" && r.failing_prime == p, std::to_string(m) + " wrong witness");
    c.expect(r.witness.find(residue) != std::string::npos, std::to_string(m) + " witness: " + r.witness);
  }
}

void errata(Check& c) {
  std::ostringstream out, err;
  const int code = cli::run({"verify", "all"}, out, err);
  c.expect(code == 0, "verify all exited " + std::to_string(code) + ": " + err.str());
  struct Row {
    std::string spec;
    std::uint64_t k;
    std::string paper, composed;
    bool seen = false;
  };
  std::vector<Row> rows = {{"zmod:8", 3, "4", "0"}, {"zmod:4", 1, "0", "2"}, {"quad:10:1:1", 24, "5", "1"}};
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) {
    const auto j = nlohmann::json::parse(line);
    c.expect(j["composed"]["coords"] == j["oracle"]["coords"], "composed != oracle in " + line);
    for (auto& r : rows) {
      if (j["spec"] != r.spec || j["k"] != r.k) continue;
      r.seen = true;
      c.expect(j["paper"]["pretty"] == r.paper, r.spec + k_str(r.k) + " paper " + j["paper"]["pretty"].dump());
      c.expect(j["composed"]["pretty"] == r.composed, r.spec + k_str(r.k) + " composed");
      c.expect(j["oracle"]["pretty"] == r.composed, r.spec + k_str(r.k) + " oracle");
    }
  }
  for (const auto& r : rows) c.expect(r.seen, r.spec + k_str(r.k) + " missing from verify all");
}

void properties(Check& c) {
  for (const char* s : {"zmod:6", "gf:4", "gf:3^4", "gaussian:6", "quad:10:1:1", "quad:2:0:0", "sqrt:6:-5",
                        "polyquot:6:x^3+x+1", "product:(gf:4)x(zmod:9)", "product:", "matrix:2:(gf:2)",
                        "matrix:2:(zmod:6)", "matrix:3:(gf:2)", "noncommp3:3", "noncommp3:5",
                        "mvq:3:x,y:x^2=2+2*y^2;y^2=1+x"}) {
    c.expect(validate(realize(parse_spec(s))).empty(), std::string("axioms ") + s);
  }

  const char* pool[] = {"zmod:4", "gf:9", "quad:2:0:0", "zmod:5", "gf:8", "gaussian:3", "polyquot:2:x^3+x+1",
                        "zmod:7", "quad:2:1:1", "zmod:9", "gf:25", "zmod:11"};
  std::mt19937_64 rng(14);
  for (int pairs = 0; pairs < 10;) {
    const auto a = realize(parse_spec(pool[rng() % std::size(pool)]));
    const auto b = realize(parse_spec(pool[rng() % std::size(pool)]));
    if (gcd(a.order(), b.order()) != 1) continue;
    ++pairs;
    const auto ab = direct_product(a, b);
    for (std::uint64_t k = 1; k <= 12; ++k) {
      Element expected = a.scale(brute_power_sum(a, k), static_cast<std::int64_t>(b.order()));
      const Element sb = b.scale(brute_power_sum(b, k), static_cast<std::int64_t>(a.order()));
      expected.coords.insert(expected.coords.end(), sb.coords.begin(), sb.coords.end());
      c.expect(brute_power_sum(ab, k) == expected, "product identity" + k_str(k));
    }
  }

  auto vanishes = [&](const char* s, const char* property) {
    const auto a = realize(parse_spec(s));
    for (std::uint64_t k = 1; k <= 12; ++k) c.expect(brute_power_sum(a, k).is_zero(), std::string(property) + " " + s + k_str(k));
  };
  for (const char* s : {"polyquot:3:x^2", "polyquot:5:x^2", "polyquot:3:x^3", "mvq:3:x,y:x^2=0;y^2=0", "mvq:5:x,y:x^2=y;y^2=0"}) {
    vanishes(s, "nilpotent");
  }
  for (const char* s : {"polyquot:3:x^2+2*x", "polyquot:2:x^2+x"}) vanishes(s, "free pair");
  for (const char* s : {"polyquot:4:x^2", "polyquot:8:x^2", "polyquot:9:x^2"}) vanishes(s, "non-cyclic");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Z/nZ family, n <= 100, k <= 40: closed form equals enumeration", 60, zmod_family},
      {2, "Gaussian family, n <= 30, k <= 40: direct and sqrt(-1) routes equal enumeration", 60, gaussian_family},
      {3, "quadratic family, n <= 12, all b, c: composed equals enumeration; (10,1,1,24) table row differs", 120,
       quadratic_family},
      {4, "cubic quotients over n in 2..6, every monic f: closed form equals enumeration", 120, polyquot_family},
      {5, "maximality of (1+x^2+y^2, -1-x+y^2) over Z/3Z at k = 80", 1, remark},
      {6, "S_|R| = 1 search: {1, 2, 6, 42, 720, 1806} to 10^4, nothing new to 10^7", 60, selfpower_plus},
      {7, "S_|R| = -1 search: {1, 2, 12, 32400, 71280} to 10^5", 1, selfpower_minus},
      {8, "enumeration on small self-power hits gives exactly +-1", 10, small_hits},
      {9, "M2(F2) for k <= 30 and M2(F3) for k <= 20 match the matrix closed form", 10, matrices_over_fields},
      {10, "M2(Z/6Z), k <= 20: S_k = 3*I exactly for k > 1 with k mod 6 in {0,1,5}", 30, matrices_over_z6},
      {11, "non-commutative ring of order 27: S_k = 0 for k <= 30", 1, noncomm_p3},
      {12, "generalized Giuga conditions: no candidate to 10^6; 1729 and 561 fail condition iii", 30, giuga},
      {13, "erratum rows zmod:8 k=3, zmod:4 k=1, quad:10:1:1 k=24 appear in verify all", 60, errata},
      {14, "ring axioms, product identity on 10 pairs, vanishing properties", 60, properties},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.seconds_limit) {
      c.failures.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(cr.seconds_limit) + " s");
    }
    std::printf("%s criterion %2d: %s (%zu checks, %.2f s)\n", c.ok() ? "PASS" : "FAIL", cr.id, cr.title.c_str(),
                c.count, secs);
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    failed += !c.ok();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

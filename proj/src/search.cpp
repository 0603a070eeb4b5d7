#include "ringsum/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "ringsum/errors.hpp"
#include "ringsum/numtheory.hpp"
#include "ringsum/oracle.hpp"
#include "ringsum/realize.hpp"

namespace ringsum {

namespace {

constexpr std::uint64_t kMaxSieve = 1'000'000'000;

// Runs fn(first, last) over [lo, hi] in chunks; results are ordered by the
// caller, so chunk completion order does not matter.
template <typename Fn>
void for_chunks(std::uint64_t lo, std::uint64_t hi, const SearchOptions& options, Fn fn) {
  if (lo > hi) return;
  const std::uint64_t chunk = std::max<std::uint64_t>(options.chunk, 1);
  const std::uint64_t count = (hi - lo) / chunk + 1;
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::min<std::uint64_t>(count, 256))));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < count;) {
      const std::uint64_t first = lo + c * chunk;
      fn(first, std::min(hi, first + chunk - 1));
    }
  };
  if (jobs == 1) {
    worker();
    return;
  }
  std::vector<std::thread> threads;
  for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
}

std::vector<std::uint32_t> sieve_for(std::uint64_t max_order) {
  if (max_order > kMaxSieve) throw ResourceError("search bound exceeds " + std::to_string(kMaxSieve));
  return smallest_prime_factor_sieve(static_cast<std::uint32_t>(std::max<std::uint64_t>(max_order, 2)));
}

std::optional<SelfPowerHit> self_power_from(const Factorization& f, int target) {
  const std::uint64_t m = f.n;
  SelfPowerHit hit;
  hit.order = m;
  hit.target = target;
  if (m == 1) {
    hit.degenerate = true;
    hit.facts.push_back("order 1: the zero ring");
    return hit;
  }
  for (auto [p, e] : f.factors) {
    const std::uint64_t q = checked_pow(p, e);
    const std::uint64_t q1 = checked_mul(q, p);
    if (m % (q - 1) != 0) return std::nullopt;
    const std::uint64_t want = target == 1 ? q1 - q : q;
    if (m % q1 != want) return std::nullopt;
    hit.field_sizes.push_back(q);
    hit.facts.push_back(std::to_string(q - 1) + " | " + std::to_string(m));
    hit.facts.push_back(std::to_string(m) + " = " + (target == 1 ? "-" : "") + std::to_string(q) + " mod " +
                        std::to_string(q1));
  }
  std::sort(hit.field_sizes.rbegin(), hit.field_sizes.rend());
  return hit;
}

GiugaReport giuga_from(const Factorization& f) {
  GiugaReport r;
  r.order = f.n;
  for (auto [p, e] : f.factors) r.prime_powers.push_back(checked_pow(p, e));
  if (f.factors.size() == 1) {
    r.verdict = GiugaReport::Verdict::FieldTrivial;
    r.witness = std::to_string(f.n) + " is a prime power";
    return r;
  }
  const std::uint64_t m = f.n;
  for (auto [p, e] : f.factors) {
    const std::uint64_t q = checked_pow(p, e);
    const std::uint64_t q1 = checked_mul(q, p);
    if ((m - 1) % (q - 1) != 0) {
      r.failing_prime = p;
      r.failing_condition = "ii";
      r.witness = std::to_string(q - 1) + " does not divide " + std::to_string(m - 1);
      return r;
    }
    if (m % q1 != q) {
      r.failing_prime = p;
      r.failing_condition = "iii";
      r.witness = std::to_string(m) + " mod " + std::to_string(q1) + " = " + std::to_string(m % q1) + " != " +
                  std::to_string(q);
      return r;
    }
  }
  r.verdict = GiugaReport::Verdict::Candidate;
  r.witness = "every condition holds";
  return r;
}

}  // namespace

RingSpec SelfPowerHit::ring() const {
  if (order == 1) return RingSpec{spec::Product{}};
  std::vector<RingSpec> factors;
  for (auto q : field_sizes) {
    const auto pp = as_prime_power(q);
    factors.push_back(pp->e == 1 ? RingSpec{spec::ZMod{q}} : RingSpec{spec::GaloisField{pp->p, pp->e}});
  }
  if (factors.size() == 1) return factors.front();
  return RingSpec{spec::Product{std::move(factors)}};
}

bool revalidate(const SelfPowerHit& hit) {
  if (hit.order == 0 || (hit.target != 1 && hit.target != -1)) return false;
  const auto fresh = check_self_power(hit.order, hit.target);
  return fresh && fresh->field_sizes == hit.field_sizes && fresh->degenerate == hit.degenerate;
}

std::optional<SelfPowerHit> check_self_power(std::uint64_t m, int target) {
  if (target != 1 && target != -1) throw std::invalid_argument("target must be +1 or -1");
  if (m == 0) throw std::invalid_argument("order must be positive");
  return self_power_from(factorize(m), target);
}

std::vector<SelfPowerHit> search_self_power(int target, std::uint64_t max_order, const SearchOptions& options) {
  if (target != 1 && target != -1) throw std::invalid_argument("target must be +1 or -1");
  const auto spf = sieve_for(max_order);
  std::mutex mu;
  std::map<std::uint64_t, SelfPowerHit> hits;
  for_chunks(1, max_order, options, [&](std::uint64_t first, std::uint64_t last) {
    std::vector<SelfPowerHit> local;
    for (std::uint64_t m = first; m <= last; ++m) {
      // Odd m > 1 fails at once: p^e - 1 is even for every odd prime.
      if (m > 1 && m % 2 == 1) continue;
      if (auto h = self_power_from(factorize_with_sieve(static_cast<std::uint32_t>(m), spf), target)) {
        local.push_back(std::move(*h));
      }
    }
    std::lock_guard lock(mu);
    for (auto& h : local) hits.emplace(h.order, std::move(h));
  });
  std::vector<SelfPowerHit> out;
  for (auto& [m, h] : hits) out.push_back(std::move(h));
  return out;
}

std::string GiugaReport::to_string(Verdict v) {
  switch (v) {
    case Verdict::FieldTrivial:
      return "field-trivial";
    case Verdict::Candidate:
      return "counterexample-candidate";
    case Verdict::NonCandidate:
      return "non-candidate";
  }
  return "?";
}

GiugaReport check_giuga_order(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("order must be at least 2");
  return giuga_from(factorize(m));
}

std::vector<GiugaReport> search_giuga(std::uint64_t max_order, const SearchOptions& options) {
  const auto spf = sieve_for(max_order);
  std::mutex mu;
  std::map<std::uint64_t, GiugaReport> found;
  for_chunks(2, max_order, options, [&](std::uint64_t first, std::uint64_t last) {
    std::vector<GiugaReport> local;
    for (std::uint64_t m = first; m <= last; ++m) {
      auto r = giuga_from(factorize_with_sieve(static_cast<std::uint32_t>(m), spf));
      if (r.verdict == GiugaReport::Verdict::Candidate) local.push_back(std::move(r));
    }
    std::lock_guard lock(mu);
    for (auto& r : local) found.emplace(r.order, std::move(r));
  });
  std::vector<GiugaReport> out;
  for (auto& [m, r] : found) out.push_back(std::move(r));
  return out;
}

std::optional<Family> parse_family(const std::string& name) {
  static const std::map<std::string, Family> names = {
      {"zmod", Family::ZMod},         {"gaussian", Family::Gaussian}, {"quadratic", Family::Quadratic},
      {"polyquot", Family::PolyQuot}, {"matrix", Family::Matrix},     {"gf", Family::GaloisField}};
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::ZMod:
      return "zmod";
    case Family::Gaussian:
      return "gaussian";
    case Family::Quadratic:
      return "quadratic";
    case Family::PolyQuot:
      return "polyquot";
    case Family::Matrix:
      return "matrix";
    case Family::GaloisField:
      return "gf";
  }
  return "?";
}

namespace {

struct Case {
  RingSpec spec;
  std::vector<std::uint64_t> ks;
};

std::vector<std::uint64_t> k_range(std::uint64_t max_k) {
  std::vector<std::uint64_t> ks;
  for (std::uint64_t k = 1; k <= max_k; ++k) ks.push_back(k);
  return ks;
}

std::vector<Case> family_cases(Family family, const ScanBounds& b) {
  auto pick = [](std::uint64_t v, std::uint64_t dflt) { return v ? v : dflt; };
  std::vector<Case> cases;
  switch (family) {
    case Family::ZMod: {
      const auto ks = k_range(pick(b.max_k, 40));
      for (std::uint64_t n = 2; n <= pick(b.max_n, 100); ++n) cases.push_back({RingSpec{spec::ZMod{n}}, ks});
      break;
    }
    case Family::Gaussian: {
      const auto ks = k_range(pick(b.max_k, 40));
      for (std::uint64_t n = 2; n <= pick(b.max_n, 30); ++n) cases.push_back({RingSpec{spec::Gaussian{n}}, ks});
      break;
    }
    case Family::Quadratic: {
      auto ks = k_range(pick(b.max_k, 12));
      if (!b.max_k) ks.insert(ks.end(), {24, 80});
      for (std::uint64_t n = 2; n <= pick(b.max_n, 12); ++n) {
        for (std::uint64_t bb = 0; bb < n; ++bb) {
          for (std::uint64_t c = 0; c < n; ++c) cases.push_back({RingSpec{spec::Quadratic{n, bb, c}}, ks});
        }
      }
      break;
    }
    case Family::PolyQuot: {
      auto ks = k_range(pick(b.max_k, 12));
      if (!b.max_k) ks.push_back(26);
      for (std::uint64_t n = 2; n <= pick(b.max_n, 6); ++n) {
        for (std::uint64_t code = 0; code < n * n * n; ++code) {
          const std::int64_t c0 = static_cast<std::int64_t>(code % n), c1 = static_cast<std::int64_t>(code / n % n),
                             c2 = static_cast<std::int64_t>(code / n / n);
          cases.push_back({RingSpec{spec::PolyQuot{make_polynomial(n, {c0, c1, c2, 1})}}, ks});
        }
      }
      break;
    }
    case Family::Matrix: {
      const auto ks = k_range(pick(b.max_k, 30));
      const std::uint64_t max_q = pick(b.max_n, 4);
      for (std::uint64_t q = 2; q <= max_q; ++q) {
        const auto pp = as_prime_power(q);
        if (!pp) continue;
        auto inner = std::make_shared<const RingSpec>(pp->e == 1 ? RingSpec{spec::ZMod{q}}
                                                                 : RingSpec{spec::GaloisField{pp->p, pp->e}});
        cases.push_back({RingSpec{spec::Matrix{2, inner}}, ks});
        if (q == 2) cases.push_back({RingSpec{spec::Matrix{3, inner}}, ks});
      }
      break;
    }
    case Family::GaloisField: {
      const std::uint64_t max_q = pick(b.max_n, 64);
      for (std::uint64_t q = 2; q <= max_q; ++q) {
        const auto pp = as_prime_power(q);
        if (!pp) continue;
        cases.push_back({RingSpec{spec::GaloisField{pp->p, pp->e}}, k_range(pick(b.max_k, 2 * q))});
      }
      break;
    }
  }
  return cases;
}

}  // namespace

std::vector<DiscrepancyRow> discrepancy_scan(Family family, const ScanBounds& bounds,
                                             const std::function<void(const DiscrepancyRow&)>& visit) {
  std::vector<DiscrepancyRow> rows;
  for (const auto& c : family_cases(family, bounds)) {
    const FiniteAlgebra a = realize(c.spec);
    if (a.order() > bounds.max_elements) continue;
    for (auto k : c.ks) {
      DiscrepancyRow row;
      row.spec = to_string(c.spec);
      row.k = k;
      row.labels = a.labels();
      row.paper = paper_value(c.spec, k);
      row.composed = composed_value(c.spec, k);
      const Element pe = evaluate(row.paper, a), ce = evaluate(row.composed, a);
      const Element oe = brute_power_sum(a, k, {bounds.max_elements, bounds.jobs});
      row.paper_coords = pe.coords;
      row.composed_coords = ce.coords;
      row.oracle_coords = oe.coords;
      row.paper_pretty = a.pretty(pe);
      row.composed_pretty = a.pretty(ce);
      row.oracle_pretty = a.pretty(oe);
      if (visit) visit(row);
      if (ce != oe) {
        throw MismatchError(row.spec + " k=" + std::to_string(k) + ": closed form " + row.composed_pretty +
                            " but enumeration gives " + row.oracle_pretty);
      }
      if (pe != ce) rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace ringsum

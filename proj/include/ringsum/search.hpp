#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ringsum/closedform.hpp"
#include "ringsum/ring_spec.hpp"

namespace ringsum {

/// A ring order m for which S_m of F_{q_1} x ... x F_{q_l} is ±1, with
/// q_i the prime-power parts of m.
struct SelfPowerHit {
  std::uint64_t order = 0;
  int target = 1;
  std::vector<std::uint64_t> field_sizes;  // descending
  std::vector<std::string> facts;
  bool degenerate = false;                 // m = 1, the zero ring

  /// The product-of-fields spec; the empty product for the zero ring.
  RingSpec ring() const;
};

/// Rechecks every condition from the order alone.
bool revalidate(const SelfPowerHit& hit);

std::optional<SelfPowerHit> check_self_power(std::uint64_t m, int target);

struct SearchOptions {
  unsigned jobs = 1;
  std::uint64_t chunk = 1 << 16;
};

/// All hits with order ≤ max_order, ascending.
std::vector<SelfPowerHit> search_self_power(int target, std::uint64_t max_order, const SearchOptions& options = {});

struct GiugaReport {
  enum class Verdict { FieldTrivial, Candidate, NonCandidate };

  std::uint64_t order = 0;
  Verdict verdict = Verdict::NonCandidate;
  std::vector<std::uint64_t> prime_powers;
  std::uint64_t failing_prime = 0;  // NonCandidate only
  std::string failing_condition;    // "ii" or "iii"
  std::string witness;

  static std::string to_string(Verdict v);
};

/// For every p^e || m: (p^e - 1) | (m - 1) and m ≡ p^e (mod p^{e+1}).
GiugaReport check_giuga_order(std::uint64_t m);

/// Orders in [2, max_order] with two or more prime-power parts that pass
/// every condition.
std::vector<GiugaReport> search_giuga(std::uint64_t max_order, const SearchOptions& options = {});

struct DiscrepancyRow {
  std::string spec;
  std::uint64_t k = 0;
  std::vector<std::string> labels;  // basis of realize(spec)
  SymbolicValue paper;
  SymbolicValue composed;
  std::vector<std::uint64_t> paper_coords, composed_coords, oracle_coords;
  std::string paper_pretty, composed_pretty, oracle_pretty;
};

enum class Family { ZMod, Gaussian, Quadratic, PolyQuot, Matrix, GaloisField };

std::optional<Family> parse_family(const std::string& name);
std::string to_string(Family f);

struct ScanBounds {
  std::uint64_t max_n = 0;  // 0 picks the family default
  std::uint64_t max_k = 0;
  std::uint64_t max_elements = 1 << 16;
  unsigned jobs = 1;
};

/// Every (spec, k) of the family within bounds where the literal table
/// disagrees with the composed engine. Throws MismatchError if the composed
/// engine ever disagrees with enumeration. `visit`, when set, sees every
/// compared case.
std::vector<DiscrepancyRow> discrepancy_scan(Family family, const ScanBounds& bounds = {},
                                             const std::function<void(const DiscrepancyRow&)>& visit = {});

}  // namespace ringsum

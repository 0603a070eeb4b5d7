#include "ringsum/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ringsum/errors.hpp"

namespace ringsum {

Element brute_power_sum_range(const FiniteAlgebra& a, std::uint64_t k, std::uint64_t first, std::uint64_t last) {
  if (k == 0) throw std::invalid_argument("power sums are defined for k >= 1");
  Element sum = a.zero();
  for_each_element(a, first, last, [&](const Element& r) { sum = a.add(sum, a.pow(r, k)); });
  return sum;
}

Element brute_power_sum(const FiniteAlgebra& a, std::uint64_t k, const OracleOptions& options) {
  if (k == 0) throw std::invalid_argument("power sums are defined for k >= 1");
  require_enumerable(a, options.max_elements);
  const std::uint64_t n = a.order();
  const std::uint64_t jobs = std::clamp<std::uint64_t>(options.jobs, 1, std::max<std::uint64_t>(n, 1));
  if (jobs == 1) return brute_power_sum_range(a, k, 0, n);

  std::vector<Element> partial(jobs);
  std::vector<std::thread> workers;
  for (std::uint64_t w = 0; w < jobs; ++w) {
    const std::uint64_t first = n * w / jobs, last = n * (w + 1) / jobs;
    workers.emplace_back([&, w, first, last] { partial[w] = brute_power_sum_range(a, k, first, last); });
  }
  for (auto& t : workers) t.join();
  Element sum = a.zero();
  for (const auto& p : partial) sum = a.add(sum, p);
  return sum;
}

std::optional<Element> locate_special_nilpotent(const FiniteAlgebra& a, std::uint64_t max_elements) {
  if (!a.commutative()) throw UnsupportedError("locate_special_nilpotent needs a commutative algebra");
  std::vector<std::size_t> even;
  const auto orders = a.orders();
  for (std::size_t j = 0; j < a.dimension(); ++j) {
    if (orders[j] % 2 == 0) even.push_back(j);
  }
  if (even.size() >= 63 || (std::uint64_t{1} << even.size()) > max_elements) {
    throw ResourceError("2-torsion subgroup exceeds the enumeration bound");
  }
  std::optional<Element> found;
  const std::uint64_t count = std::uint64_t{1} << even.size();
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    Element u = a.zero();
    for (std::size_t b = 0; b < even.size(); ++b) {
      if (mask >> b & 1) u.coords[even[b]] = orders[even[b]] / 2;
    }
    if (!a.mul(u, u).is_zero()) continue;
    if (found) return std::nullopt;
    found = std::move(u);
  }
  return found;
}

}  // namespace ringsum

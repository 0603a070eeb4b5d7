#include "ringsum/algebra.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "ringsum/errors.hpp"
#include "ringsum/numtheory.hpp"

namespace ringsum {

namespace {

constexpr std::uint64_t kSmallModulus = std::uint64_t{1} << 21;

std::string coordinate_list(const std::vector<std::size_t>& idx, const std::vector<std::string>& labels) {
  std::string out = "(";
  for (std::size_t n = 0; n < idx.size(); ++n) {
    if (n) out += ",";
    out += labels[idx[n]];
  }
  return out + ")";
}

}  // namespace

bool Element::is_zero() const {
  for (auto c : coords) {
    if (c != 0) return false;
  }
  return true;
}

FiniteAlgebra::FiniteAlgebra(std::vector<std::string> labels, std::vector<std::uint64_t> orders,
                             std::vector<std::uint64_t> table, Element unit, bool commutative)
    : labels_(std::move(labels)),
      orders_(std::move(orders)),
      table_(std::move(table)),
      unit_(std::move(unit)),
      commutative_(commutative) {
  const std::size_t m = orders_.size();
  if (labels_.size() != m) throw std::invalid_argument("FiniteAlgebra: label count != dimension");
  if (table_.size() != m * m * m) throw std::invalid_argument("FiniteAlgebra: table must be m*m*m");
  if (unit_.coords.size() != m) throw std::invalid_argument("FiniteAlgebra: unit dimension mismatch");
  small_moduli_ = true;
  for (auto d : orders_) {
    if (d == 0) throw std::invalid_argument("FiniteAlgebra: additive orders must be positive");
    if (d >= kSmallModulus) small_moduli_ = false;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        auto& c = table_[(i * m + j) * m + k];
        c %= orders_[k];
        if (c != 0) {
          terms_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                            static_cast<std::uint32_t>(k), c});
        }
      }
    }
  }
  for (std::size_t k = 0; k < m; ++k) unit_.coords[k] %= orders_[k];
}

std::uint64_t FiniteAlgebra::order() const {
  std::uint64_t n = 1;
  for (auto d : orders_) n = checked_mul(n, d);
  return n;
}

Element FiniteAlgebra::zero() const { return Element{std::vector<std::uint64_t>(dimension(), 0)}; }

Element FiniteAlgebra::basis_element(std::size_t j) const {
  Element e = zero();
  e.coords.at(j) = 1 % orders_[j];
  return e;
}

void FiniteAlgebra::check(const Element& a) const {
  if (a.coords.size() != dimension()) {
    throw std::invalid_argument("element dimension " + std::to_string(a.coords.size()) +
                                " does not match algebra dimension " + std::to_string(dimension()));
  }
}

Element FiniteAlgebra::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element r = zero();
  for (std::size_t j = 0; j < dimension(); ++j) {
    std::uint64_t s = a.coords[j] + b.coords[j];
    r.coords[j] = s >= orders_[j] ? s - orders_[j] : s;
  }
  return r;
}

Element FiniteAlgebra::neg(const Element& a) const {
  check(a);
  Element r = zero();
  for (std::size_t j = 0; j < dimension(); ++j) {
    r.coords[j] = a.coords[j] == 0 ? 0 : orders_[j] - a.coords[j];
  }
  return r;
}

Element FiniteAlgebra::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element FiniteAlgebra::scale(const Element& a, std::int64_t c) const {
  check(a);
  Element r = zero();
  for (std::size_t j = 0; j < dimension(); ++j) {
    r.coords[j] = mulmod(a.coords[j], reduce(c, orders_[j]), orders_[j]);
  }
  return r;
}

Element FiniteAlgebra::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element r = zero();
  auto& out = r.coords;
  if (small_moduli_) {
    for (const auto& t : terms_) {
      std::uint64_t x = a.coords[t.i];
      if (x == 0) continue;
      std::uint64_t y = b.coords[t.j];
      if (y == 0) continue;
      const std::uint64_t d = orders_[t.k];
      std::uint64_t s = out[t.k] + (x * y % d) * t.c % d;
      out[t.k] = s >= d ? s - d : s;
    }
  } else {
    for (const auto& t : terms_) {
      std::uint64_t x = a.coords[t.i];
      if (x == 0) continue;
      std::uint64_t y = b.coords[t.j];
      if (y == 0) continue;
      const std::uint64_t d = orders_[t.k];
      out[t.k] = (out[t.k] + mulmod(mulmod(x, y, d), t.c, d)) % d;
    }
  }
  return r;
}

Element FiniteAlgebra::pow(const Element& a, std::uint64_t k) const {
  check(a);
  Element result = unit_;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Element FiniteAlgebra::element_at(std::uint64_t index) const {
  Element e = zero();
  for (std::size_t j = 0; j < dimension(); ++j) {
    e.coords[j] = index % orders_[j];
    index /= orders_[j];
  }
  return e;
}

std::string FiniteAlgebra::pretty(const Element& a) const {
  check(a);
  std::string out;
  for (std::size_t j = 0; j < dimension(); ++j) {
    const std::uint64_t c = a.coords[j];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (labels_[j] == "1") {
      out += std::to_string(c);
    } else if (c == 1) {
      out += labels_[j];
    } else {
      out += std::to_string(c) + "*" + labels_[j];
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<Violation> validate(const FiniteAlgebra& a) {
  std::vector<Violation> out;
  const std::size_t m = a.dimension();
  const auto& labels = a.labels();
  const auto orders = a.orders();

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const std::uint64_t c = a.structure_constant(i, j, k);
        if (mulmod(orders[i] % orders[k], c, orders[k]) != 0 ||
            mulmod(orders[j] % orders[k], c, orders[k]) != 0) {
          out.push_back({"bilinearity", "order of " + labels[k] + " does not divide d_i*c or d_j*c for " +
                                            coordinate_list({i, j, k}, labels)});
        }
      }
    }
  }

  for (std::size_t j = 0; j < m; ++j) {
    const Element b = a.basis_element(j);
    if (a.mul(a.unit(), b) != b) out.push_back({"unit", "1*" + labels[j] + " != " + labels[j]});
    if (a.mul(b, a.unit()) != b) out.push_back({"unit", labels[j] + "*1 != " + labels[j]});
  }

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Element bi = a.basis_element(i), bj = a.basis_element(j);
      const Element bij = a.mul(bi, bj);
      for (std::size_t k = 0; k < m; ++k) {
        const Element bk = a.basis_element(k);
        if (a.mul(bij, bk) != a.mul(bi, a.mul(bj, bk))) {
          out.push_back({"associativity", "(b_i*b_j)*b_k != b_i*(b_j*b_k) for " + coordinate_list({i, j, k}, labels)});
        }
      }
      if (a.commutative() && j > i && bij != a.mul(bj, bi)) {
        out.push_back({"commutativity", "b_i*b_j != b_j*b_i for " + coordinate_list({i, j}, labels)});
      }
    }
  }
  return out;
}

Element embed_integer(const FiniteAlgebra& a, std::int64_t c) { return a.scale(a.unit(), c); }

std::uint64_t characteristic(const FiniteAlgebra& a) {
  std::uint64_t n = 1;
  const auto orders = a.orders();
  for (std::size_t j = 0; j < a.dimension(); ++j) {
    n = lcm(n, orders[j] / gcd(a.unit().coords[j], orders[j]));
  }
  return n;
}

void require_enumerable(const FiniteAlgebra& a, std::uint64_t max_elements) {
  std::uint64_t n = 1;
  for (auto d : a.orders()) {
    if (__builtin_mul_overflow(n, d, &n) || n > max_elements) {
      throw ResourceError("algebra order exceeds the enumeration bound of " + std::to_string(max_elements) +
                          " elements");
    }
  }
}

void for_each_element(const FiniteAlgebra& a, std::uint64_t first, std::uint64_t last,
                      const std::function<void(const Element&)>& visit) {
  if (first >= last) return;
  Element e = a.element_at(first);
  const auto orders = a.orders();
  for (std::uint64_t idx = first; idx < last; ++idx) {
    visit(e);
    for (std::size_t j = 0; j < e.coords.size(); ++j) {
      if (++e.coords[j] < orders[j]) break;
      e.coords[j] = 0;
    }
  }
}

std::vector<Element> enumerate(const FiniteAlgebra& a, std::uint64_t max_elements) {
  require_enumerable(a, max_elements);
  std::vector<Element> out;
  out.reserve(a.order());
  for_each_element(a, 0, a.order(), [&](const Element& e) { out.push_back(e); });
  return out;
}

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const std::size_t ma = a.dimension(), mb = b.dimension(), m = ma + mb;
  std::vector<std::string> labels;
  std::vector<std::uint64_t> orders;
  for (std::size_t j = 0; j < ma; ++j) {
    labels.push_back("R1." + a.labels()[j]);
    orders.push_back(a.orders()[j]);
  }
  for (std::size_t j = 0; j < mb; ++j) {
    labels.push_back("R2." + b.labels()[j]);
    orders.push_back(b.orders()[j]);
  }
  std::vector<std::uint64_t> table(m * m * m, 0);
  for (std::size_t i = 0; i < ma; ++i)
    for (std::size_t j = 0; j < ma; ++j)
      for (std::size_t k = 0; k < ma; ++k) table[(i * m + j) * m + k] = a.structure_constant(i, j, k);
  for (std::size_t i = 0; i < mb; ++i)
    for (std::size_t j = 0; j < mb; ++j)
      for (std::size_t k = 0; k < mb; ++k)
        table[((ma + i) * m + ma + j) * m + ma + k] = b.structure_constant(i, j, k);
  Element unit{a.unit().coords};
  unit.coords.insert(unit.coords.end(), b.unit().coords.begin(), b.unit().coords.end());
  return FiniteAlgebra(std::move(labels), std::move(orders), std::move(table), std::move(unit),
                       a.commutative() && b.commutative());
}

FiniteAlgebra matrix_algebra(unsigned d, const FiniteAlgebra& a, std::uint64_t max_elements) {
  if (d == 0) throw std::invalid_argument("matrix_algebra: d must be at least 1");
  if (d == 1) return a;
  const std::size_t ma = a.dimension();
  const std::size_t m = static_cast<std::size_t>(d) * d * ma;
  {
    std::uint64_t n = 1;
    const std::uint64_t base = a.order();
    for (std::size_t r = 0; r < std::size_t{d} * d; ++r) {
      if (__builtin_mul_overflow(n, base, &n) || n > max_elements) {
        throw ResourceError("matrix algebra exceeds the enumeration bound of " + std::to_string(max_elements) +
                            " elements");
      }
    }
  }
  auto index = [&](std::size_t u, std::size_t v, std::size_t j) { return (u * d + v) * ma + j; };
  std::vector<std::string> labels(m);
  std::vector<std::uint64_t> orders(m);
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v)
      for (std::size_t j = 0; j < ma; ++j) {
        labels[index(u, v, j)] = "E" + std::to_string(u + 1) + std::to_string(v + 1) + "*" + a.labels()[j];
        orders[index(u, v, j)] = a.orders()[j];
      }
  std::vector<std::uint64_t> table(m * m * m, 0);
  // (E_uv b_i)(E_vz b_j) = E_uz (b_i b_j); other index pairs vanish.
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v)
      for (std::size_t z = 0; z < d; ++z)
        for (std::size_t i = 0; i < ma; ++i)
          for (std::size_t j = 0; j < ma; ++j)
            for (std::size_t k = 0; k < ma; ++k)
              table[(index(u, v, i) * m + index(v, z, j)) * m + index(u, z, k)] = a.structure_constant(i, j, k);
  Element unit{std::vector<std::uint64_t>(m, 0)};
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t j = 0; j < ma; ++j) unit.coords[index(u, u, j)] = a.unit().coords[j];
  return FiniteAlgebra(std::move(labels), std::move(orders), std::move(table), std::move(unit),
                       d == 1 && a.commutative());
}

FiniteAlgebra zero_ring() { return FiniteAlgebra({}, {}, {}, Element{}, true); }

}  // namespace ringsum

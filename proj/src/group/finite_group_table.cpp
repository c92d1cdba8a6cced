#include "wreath/finite_group_table.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "wreath/errors.hpp"

namespace wreath {

namespace {

std::string triple(std::size_t x, std::size_t y, std::size_t z) {
  std::ostringstream os;
  os << "(" << x << ", " << y << ", " << z << ")";
  return os.str();
}

}  // namespace

FiniteGroupTable FiniteGroupTable::from_products(std::size_t order, std::vector<Index> products) {
  if (order == 0) throw InputError("group table: order must be positive");
  if (products.size() != order * order) {
    throw InputError("group table: expected " + std::to_string(order * order) + " entries, got " +
                     std::to_string(products.size()));
  }
  FiniteGroupTable t;
  t.order_ = order;
  t.products_ = std::move(products);

  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      if (t.products_[x * order + y] >= order) {
        throw TableAxiomError("closure", "entry " + std::to_string(x) + "*" + std::to_string(y) +
                                             " = " + std::to_string(t.products_[x * order + y]) +
                                             " is outside [0, " + std::to_string(order) + ")");
      }
    }
  }
  for (Index x = 0; x < order; ++x) {
    if (t.product(0, x) != x || t.product(x, 0) != x) {
      throw TableAxiomError("identity", "index 0 is not a two-sided identity at x = " + std::to_string(x));
    }
  }
  t.inverses_.assign(order, 0);
  for (Index x = 0; x < order; ++x) {
    Index found = static_cast<Index>(order);
    for (Index y = 0; y < order; ++y) {
      if (t.product(x, y) == 0 && t.product(y, x) == 0) {
        found = y;
        break;
      }
    }
    if (found == order) {
      throw TableAxiomError("inverse", "element " + std::to_string(x) + " has no two-sided inverse");
    }
    t.inverses_[x] = found;
  }
  for (Index x = 0; x < order; ++x) {
    for (Index y = 0; y < order; ++y) {
      const Index xy = t.product(x, y);
      for (Index z = 0; z < order; ++z) {
        if (t.product(xy, z) != t.product(x, t.product(y, z))) {
          throw TableAxiomError("associativity", "(xy)z != x(yz) at (x, y, z) = " + triple(x, y, z));
        }
      }
      if (xy != t.product(y, x)) t.abelian_ = false;
    }
  }
  return t;
}

FiniteGroupTable FiniteGroupTable::parse(std::istream& in) {
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
  if (tokens.empty()) throw InputError("group table: empty input");

  auto number = [&](std::size_t i) -> std::uint64_t {
    std::uint64_t v = 0;
    const auto& s = tokens[i];
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
      throw InputError("group table: token " + std::to_string(i + 1) + " ('" + s +
                       "') is not a non-negative integer");
    }
    return v;
  };

  const std::uint64_t order = number(0);
  if (order == 0 || order > 4096) {
    throw InputError("group table: order " + std::to_string(order) + " outside supported range [1, 4096]");
  }
  if (tokens.size() != 1 + order * order) {
    throw InputError("group table: order " + std::to_string(order) + " needs " +
                     std::to_string(order * order) + " entries, found " + std::to_string(tokens.size() - 1));
  }
  std::vector<Index> products(order * order);
  for (std::size_t i = 0; i < products.size(); ++i) {
    const auto v = number(i + 1);
    if (v >= order) {
      throw TableAxiomError("closure", "token " + std::to_string(i + 2) + " (row " + std::to_string(i / order) +
                                           ", column " + std::to_string(i % order) + ") = " + std::to_string(v) +
                                           " is outside [0, " + std::to_string(order) + ")");
    }
    products[i] = static_cast<Index>(v);
  }
  return from_products(order, std::move(products));
}

FiniteGroupTable FiniteGroupTable::parse(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

FiniteGroupTable FiniteGroupTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("group table: cannot open '" + path.string() + "'");
  return parse(in);
}

std::uint64_t FiniteGroupTable::element_order(Index x) const {
  std::uint64_t k = 1;
  for (Index y = x; y != 0; y = product(y, x)) ++k;
  return k;
}

std::string FiniteGroupTable::serialize() const {
  std::ostringstream os;
  os << order_ << '\n';
  for (std::size_t x = 0; x < order_; ++x) {
    for (std::size_t y = 0; y < order_; ++y) {
      if (y != 0) os << ' ';
      os << products_[x * order_ + y];
    }
    os << '\n';
  }
  return os.str();
}

namespace tables {

FiniteGroupTable cyclic(std::size_t q) {
  std::vector<FiniteGroupTable::Index> p(q * q);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y) p[x * q + y] = static_cast<FiniteGroupTable::Index>((x + y) % q);
  return FiniteGroupTable::from_products(q, std::move(p));
}

// Pair (x, y) has index x * |b| + y, so (0, 0) stays at index 0.
FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<FiniteGroupTable::Index> p(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const auto x = a.product(static_cast<FiniteGroupTable::Index>(u / nb), static_cast<FiniteGroupTable::Index>(v / nb));
      const auto y = b.product(static_cast<FiniteGroupTable::Index>(u % nb), static_cast<FiniteGroupTable::Index>(v % nb));
      p[u * n + v] = static_cast<FiniteGroupTable::Index>(x * nb + y);
    }
  }
  return FiniteGroupTable::from_products(n, std::move(p));
}

FiniteGroupTable klein_four() { return direct_product(cyclic(2), cyclic(2)); }

FiniteGroupTable symmetric3() {
  // Permutations of {0,1,2} in lexicographic order; the first is the identity.
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  std::vector<FiniteGroupTable::Index> prod(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[x][perms[y][i]];  // (xy)(i) = x(y(i))
      prod[x * n + y] = static_cast<FiniteGroupTable::Index>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroupTable::from_products(n, std::move(prod));
}

FiniteGroupTable dihedral(std::size_t n) {
  // r^i s^j has index i + n*j, with s r s = r^-1.
  const std::size_t order = 2 * n;
  std::vector<FiniteGroupTable::Index> p(order * order);
  for (std::size_t u = 0; u < order; ++u) {
    for (std::size_t v = 0; v < order; ++v) {
      const std::size_t i = u % n, j = u / n, k = v % n, l = v / n;
      const std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
      p[u * order + v] = static_cast<FiniteGroupTable::Index>(rot + n * ((j + l) % 2));
    }
  }
  return FiniteGroupTable::from_products(order, std::move(p));
}

FiniteGroupTable quaternion8() {
  // Index 2*u + s encodes (-1)^s * unit[u], units 1, i, j, k.
  // unit_mul[u][v] = (sign, unit) of unit[u] * unit[v].
  constexpr std::array<std::array<std::pair<int, int>, 4>, 4> unit_mul{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  std::vector<FiniteGroupTable::Index> p(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const auto [s, u] = unit_mul[x / 2][y / 2];
      const int sign = (s + x % 2 + y % 2) % 2;
      p[x * 8 + y] = static_cast<FiniteGroupTable::Index>(2 * u + sign);
    }
  }
  return FiniteGroupTable::from_products(8, std::move(p));
}

}  // namespace tables

}  // namespace wreath

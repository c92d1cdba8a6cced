#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace wreath {

/// A finite group given by its Cayley table. Elements are the indices
/// 0..order-1 with the identity at index 0. Instances are always valid:
/// every constructor checks closure, identity, inverses and associativity.
class FiniteGroupTable {
 public:
  using Index = std::uint32_t;

  /// `products` is row-major: products[x * order + y] = x * y.
  static FiniteGroupTable from_products(std::size_t order, std::vector<Index> products);

  /// Plain-text format: the order m, then m*m whitespace-separated indices
  /// in row-major order.
  static FiniteGroupTable parse(std::istream& in);
  static FiniteGroupTable parse(const std::string& text);
  static FiniteGroupTable load(const std::filesystem::path& path);

  std::size_t order() const { return order_; }
  Index product(Index x, Index y) const { return products_[x * order_ + y]; }
  Index inverse(Index x) const { return inverses_[x]; }
  bool is_abelian() const { return abelian_; }
  std::uint64_t element_order(Index x) const;

  /// Same text format `parse` accepts.
  std::string serialize() const;

  friend bool operator==(const FiniteGroupTable& a, const FiniteGroupTable& b) {
    return a.order_ == b.order_ && a.products_ == b.products_;
  }

 private:
  FiniteGroupTable() = default;

  std::size_t order_ = 0;
  std::vector<Index> products_;
  std::vector<Index> inverses_;
  bool abelian_ = true;
};

// Bundled small groups, identity at index 0.
namespace tables {
FiniteGroupTable cyclic(std::size_t q);
FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);
FiniteGroupTable klein_four();
FiniteGroupTable symmetric3();
FiniteGroupTable dihedral(std::size_t n);  // order 2n
FiniteGroupTable quaternion8();
}  // namespace tables

}  // namespace wreath

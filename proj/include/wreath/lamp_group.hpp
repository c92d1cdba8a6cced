#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "wreath/finite_group_table.hpp"

namespace wreath {

/// A lamp value. Cyclic lamps hold residues in [0, q), integer lamps hold
/// the integer itself, table lamps hold the element index. The identity is
/// 0 in every backend.
using LampValue = std::int64_t;

/// The lamp group L of L wr Z: C_q, Z, or a finite group given by table.
class LampGroup {
 public:
  enum class Kind { cyclic, integers, table };

  static LampGroup cyclic(std::int64_t q);
  static LampGroup integers();
  static LampGroup table(FiniteGroupTable table);

  Kind kind() const { return kind_; }
  /// q for cyclic lamps, the table order for table lamps, nullopt for Z.
  std::optional<std::uint64_t> order() const;
  bool is_finite() const { return kind_ != Kind::integers; }
  bool is_abelian() const;
  const FiniteGroupTable* table_ptr() const { return table_.get(); }

  /// Short display name: "C2", "Z", "T6#1a2b3c4d".
  const std::string& name() const { return name_; }
  /// Interned identifier; two LampGroups describing the same group share it.
  std::uint32_t id() const { return id_; }

  LampValue multiply(LampValue x, LampValue y) const {
    switch (kind_) {
      case Kind::cyclic: {
        const LampValue s = x + y;
        return s >= q_ ? s - q_ : s;
      }
      case Kind::integers:
        return add_integers(x, y);
      case Kind::table:
        break;
    }
    return table_->product(static_cast<FiniteGroupTable::Index>(x), static_cast<FiniteGroupTable::Index>(y));
  }

  LampValue inverse(LampValue x) const {
    switch (kind_) {
      case Kind::cyclic:
        return x == 0 ? 0 : q_ - x;
      case Kind::integers:
        return negate_integer(x);
      case Kind::table:
        break;
    }
    return table_->inverse(static_cast<FiniteGroupTable::Index>(x));
  }

  static bool is_identity(LampValue x) { return x == 0; }
  bool is_valid(LampValue x) const;
  /// Reduces an arbitrary integer to the canonical representative
  /// (residue mod q for cyclic lamps); rejects out-of-range table indices.
  LampValue normalize(LampValue x) const;

  /// Order of x as a group element; nullopt for non-zero integer lamps.
  std::optional<std::uint64_t> element_order(LampValue x) const;

  /// Word length of x over the standard lamp generators: min(c, q - c) for
  /// C_q, |c| for Z, and 1 for every non-identity table element (all
  /// non-trivial elements are generators).
  std::uint64_t cost(LampValue x) const;

  friend bool operator==(const LampGroup& a, const LampGroup& b) { return a.id_ == b.id_; }

 private:
  LampGroup() = default;
  static LampValue add_integers(LampValue x, LampValue y);
  static LampValue negate_integer(LampValue x);
  void intern();

  Kind kind_ = Kind::integers;
  LampValue q_ = 0;
  std::shared_ptr<const FiniteGroupTable> table_;
  std::string name_;
  std::string identity_key_;
  std::uint32_t id_ = 0;
};

}  // namespace wreath

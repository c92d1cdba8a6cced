#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wreath/lamp_group.hpp"

namespace wreath {

struct Lamp {
  std::int64_t position = 0;
  LampValue value = 0;

  friend bool operator==(const Lamp&, const Lamp&) = default;
  friend auto operator<=>(const Lamp&, const Lamp&) = default;
};

/// An element  w t^k  of L wr Z: a finite-support lamp configuration w and
/// the lamplighter shift k. Immutable once built; lamps are sorted by
/// position and never carry the identity, so equality is structural.
class WreathElement {
 public:
  std::uint32_t group_id() const { return group_id_; }
  std::int64_t shift() const { return shift_; }
  std::span<const Lamp> lamps() const { return lamps_; }
  bool in_base() const { return shift_ == 0; }
  bool is_identity() const { return shift_ == 0 && lamps_.empty(); }
  /// Value at `position`, the identity 0 outside the support.
  LampValue at(std::int64_t position) const;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;

 private:
  friend class WreathGroup;
  WreathElement(std::uint32_t group_id, std::vector<Lamp> lamps, std::int64_t shift)
      : group_id_(group_id), shift_(shift), lamps_(std::move(lamps)) {}

  std::uint32_t group_id_ = 0;
  std::int64_t shift_ = 0;
  std::vector<Lamp> lamps_;
};

struct SupportExtrema {
  std::optional<std::int64_t> min;
  std::optional<std::int64_t> max;
};

/// g_min and g_max of the lamp support; both empty for an empty support.
SupportExtrema support_extrema(const WreathElement& g);

/// Arithmetic in L wr Z under the convention  t a_i t^-1 = a_{i+1}:
///   (f, k) * (f', k') = (f * shift_k(f'), k + k'),  shift_k(f)(i) = f(i - k).
/// All operations reject operands built over a different lamp group.
class WreathGroup {
 public:
  explicit WreathGroup(LampGroup lamps) : lamps_(std::move(lamps)) {}

  const LampGroup& lamps() const { return lamps_; }
  std::uint32_t id() const { return lamps_.id(); }
  const std::string& name() const { return lamps_.name(); }

  WreathElement identity() const { return WreathElement(id(), {}, 0); }
  /// t^k.
  WreathElement t(std::int64_t k = 1) const { return WreathElement(id(), {}, k); }
  /// The single lamp `value` at `position` (a_position^value for cyclic lamps).
  WreathElement lamp(std::int64_t position, LampValue value = 1) const;
  /// Canonicalizes: values are normalized, identity values dropped, entries
  /// sorted. Repeated positions are an InputError.
  WreathElement element(std::vector<Lamp> lamps, std::int64_t shift) const;

  WreathElement multiply(const WreathElement& a, const WreathElement& b) const;
  WreathElement inverse(const WreathElement& a) const;
  /// h^-1 g h.
  WreathElement conjugate(const WreathElement& g, const WreathElement& h) const;
  bool commutes(const WreathElement& a, const WreathElement& b) const;
  /// g^n by repeated squaring; negative n allowed.
  WreathElement power(const WreathElement& g, std::int64_t n) const;
  /// nullopt when g has infinite order.
  std::optional<std::uint64_t> order(const WreathElement& g) const;

  /// Injective byte encoding of (group id, shift, sorted entries).
  std::string canonical_key(const WreathElement& g) const;
  void append_key(const WreathElement& g, std::string& out) const;
  WreathElement decode_key(std::string_view key) const;

  /// Readable form, e.g. "e", "t^-1", "{0:1, 1:1} t^2".
  std::string to_string(const WreathElement& g) const;

 private:
  void check(const WreathElement& g) const;
  void check(const WreathElement& a, const WreathElement& b) const;
  // Lamps of a*b written into `out` (cleared first).
  void multiply_lamps(const WreathElement& a, const WreathElement& b, std::vector<Lamp>& out) const;

  LampGroup lamps_;
};

}  // namespace wreath

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wreath/wreath_group.hpp"

namespace wreath {

struct Generator {
  std::string label;
  WreathElement element;
};

/// A finite generating set S together with its symmetric alphabet
/// S ∪ S^-1 (generators first, then the inverses not already present).
class GeneratorSet {
 public:
  GeneratorSet(const WreathGroup& group, std::vector<Generator> generators);

  std::span<const Generator> generators() const { return generators_; }
  std::span<const Generator> alphabet() const { return alphabet_; }

  /// Set when this is the standard set {a_i, t} (cyclic / integer lamps) or
  /// {all non-trivial elements of F_i, t} (table lamps) with lamp index i.
  std::optional<std::int64_t> standard_lamp_index() const { return standard_index_; }
  bool is_standard() const { return standard_index_.has_value(); }

  /// Comma-separated generator labels, e.g. "a0,t".
  std::string describe() const;

 private:
  friend GeneratorSet standard_genset(const WreathGroup&, std::int64_t);

  std::vector<Generator> generators_;
  std::vector<Generator> alphabet_;
  std::optional<std::int64_t> standard_index_;
};

/// {a_i, t} for cyclic and integer lamps; the m-1 non-trivial elements of
/// F_i plus t for table lamps.
GeneratorSet standard_genset(const WreathGroup& group, std::int64_t lamp_index = 0);

}  // namespace wreath

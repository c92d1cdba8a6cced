#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wreath/errors.hpp"
#include "wreath/generator_set.hpp"
#include "wreath/wreath_group.hpp"

namespace wreath {

struct BallOptions {
  std::size_t element_budget = 5'000'000;
  unsigned workers = 1;
};

/// The Cayley ball B_S(n), stored as canonical keys in breadth-first order.
/// Elements of word length r occupy the contiguous index range
/// [shell_begin(r), shell_end(r)); index 0 is the identity.
class Ball {
 public:
  Ball(WreathGroup group, GeneratorSet gens);

  const WreathGroup& group() const { return group_; }
  const GeneratorSet& generators() const { return gens_; }

  std::size_t radius() const { return shell_starts_.size() - 2; }
  std::size_t size() const { return offsets_.size() - 1; }
  std::size_t shell_begin(std::size_t r) const { return shell_starts_.at(r); }
  std::size_t shell_end(std::size_t r) const { return shell_starts_.at(r + 1); }
  std::size_t shell_size(std::size_t r) const { return shell_end(r) - shell_begin(r); }
  /// |B(r)| for r <= radius().
  std::size_t size_upto(std::size_t r) const { return shell_end(r); }

  std::string_view key(std::size_t i) const {
    return std::string_view(arena_).substr(offsets_[i], offsets_[i + 1] - offsets_[i]);
  }
  WreathElement element(std::size_t i) const { return group_.decode_key(key(i)); }
  std::vector<WreathElement> elements() const;
  /// Word length (BFS distance) of element i.
  std::uint32_t length(std::size_t i) const;

  std::optional<std::size_t> find(std::string_view key) const;
  std::optional<std::size_t> find(const WreathElement& g) const;
  std::optional<std::uint32_t> distance(const WreathElement& g) const;
  bool contains(const WreathElement& g) const { return find(g).has_value(); }

  /// Binary cache format with a version header; `load` checks that the
  /// group and generating set match.
  void save(std::ostream& out) const;
  static Ball load(std::istream& in, const WreathGroup& group, const GeneratorSet& gens);

 private:
  friend Ball build_ball(const WreathGroup&, const GeneratorSet&, std::size_t, const BallOptions&);

  std::size_t insert(std::string_view key);  // caller ensures the key is new
  void close_shell() { shell_starts_.push_back(size()); }
  void truncate(std::size_t count);
  void rehash(std::size_t capacity);
  std::size_t slot_for(std::string_view key) const;

  WreathGroup group_;
  GeneratorSet gens_;
  std::string arena_;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<std::size_t> shell_starts_{0};
  std::vector<std::uint32_t> slots_;
};

/// Thrown when the element budget would be exceeded. Holds the ball up to
/// the last radius that was completed.
class BallBudgetExceeded : public ResourceError {
 public:
  BallBudgetExceeded(const std::string& what, std::shared_ptr<const Ball> partial)
      : ResourceError(what, partial->radius()), partial_(std::move(partial)) {}
  const std::shared_ptr<const Ball>& partial() const { return partial_; }

 private:
  std::shared_ptr<const Ball> partial_;
};

/// Breadth-first closure: shell r+1 is shell r times the symmetric alphabet,
/// minus everything already seen. Candidates are generated in parallel and
/// merged in a fixed order, so the result does not depend on `workers`.
Ball build_ball(const WreathGroup& group, const GeneratorSet& gens, std::size_t radius,
                const BallOptions& options = {});

}  // namespace wreath

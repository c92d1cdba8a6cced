#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wreath/ball.hpp"
#include "wreath/numeric.hpp"

namespace wreath {

/// Base counts of a ball, split by the A_s filtration
/// A_s = { g in A : g_min >= s } (the identity lies in every A_s).
struct BaseStratification {
  struct Shell {
    std::uint64_t in_base = 0;       // |(B(r) \ B(r-1)) ∩ A|
    std::uint64_t in_base_nonneg = 0;  // |(B(r) \ B(r-1)) ∩ A_0|
  };

  std::size_t radius = 0;
  std::uint64_t in_base = 0;         // |B(n) ∩ A|
  std::uint64_t in_base_nonneg = 0;  // |B(n) ∩ A_0|
  /// s -> |B(n) ∩ (A_s \ A_{s+1})| for every s in [-n, n].
  std::map<std::int64_t, std::uint64_t> layer;
  std::vector<Shell> shells;  // index r = 0..n

  std::uint64_t layer_count(std::int64_t s) const;
  /// |B(r) ∩ A| and |B(r) ∩ A_0| for r <= radius, from the shell table.
  std::uint64_t in_base_upto(std::size_t r) const;
  std::uint64_t in_base_nonneg_upto(std::size_t r) const;
};

BaseStratification base_stratification(const Ball& ball);

struct ElementPredicate {
  std::string name;
  std::function<bool(const WreathElement&)> test;
};

namespace predicates {
ElementPredicate always();
ElementPredicate identity_only();
ElementPredicate in_base();
/// Base elements of finite order: every base element for finite lamps,
/// only the identity for integer lamps.
ElementPredicate torsion_in_base(const WreathGroup& group);
}  // namespace predicates

struct DensityRow {
  std::size_t radius = 0;
  Integer count;
  Integer ball_size;
  Rational density;
};

struct DensityReport {
  std::string group;
  std::string generators;
  std::string predicate;
  std::vector<DensityRow> rows;
  bool truncated = false;
};

/// |N ∩ B(r)| / |B(r)| for r = 0..radius of the ball.
DensityReport density_sequence(const Ball& ball, const ElementPredicate& predicate);
/// Builds B(n_max) first; on budget exhaustion reports the completed radii
/// with `truncated` set.
DensityReport density_sequence(const WreathGroup& group, const GeneratorSet& gens, std::size_t n_max,
                               const ElementPredicate& predicate, const BallOptions& options = {});

struct GrowthRow {
  std::size_t radius = 0;
  Integer cumulative;
  Integer shell;
  std::optional<Rational> ratio;  // |B(r)| / |B(r-1)|, r >= 1
  std::optional<double> root;     // |B(r)|^(1/r), r >= 1
};

struct GrowthReport {
  std::string group;
  std::string generators;
  std::vector<GrowthRow> rows;
};

/// Requires ball.radius() >= 2.
GrowthReport growth_report(const Ball& ball);

}  // namespace wreath

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wreath/ball.hpp"
#include "wreath/dc.hpp"
#include "wreath/numeric.hpp"

namespace wreath {

/// A partition of a ball's elements. `cell[i]` is the least ball index in
/// the cell of element i, so equal partitions compare equal.
struct ConjugacyPartition {
  std::vector<std::uint32_t> cell;
  std::size_t class_count = 0;
  /// Saturation cells may still merge under longer conjugators, so their
  /// count only bounds the true number of classes from above.
  bool upper_bound = false;

  /// Number of distinct cells among the elements of B(r).
  std::size_t classes_meeting(const Ball& ball, std::size_t r) const;
};

/// Complete conjugacy invariant for abelian (cyclic or integer) lamps.
///  k = 0: the lamp configuration translated to g_min = 0.
///  k != 0: residue sums sigma_j = sum of f(i) over i ≡ j (mod |k|),
///          rotated to the lexicographically least cyclic rotation.
/// Throws UnsupportedError for table lamps.
std::string conjugacy_invariant_key(const WreathGroup& group, const WreathElement& g);

ConjugacyPartition conjugacy_classes_invariant(const Ball& ball);

/// Union-find over the ball: g is merged with h^-1 g h for every h in
/// `conjugators` whenever the result lies in the ball. Merges are applied
/// in ball order, then conjugator order.
ConjugacyPartition conjugacy_classes_saturation(const Ball& ball, const Ball& conjugators, unsigned workers = 1);

struct PartitionComparison {
  /// Every saturation cell lies inside one invariant cell.
  bool saturation_refines_invariant = true;
  std::optional<std::pair<std::size_t, std::size_t>> bad_merge;  // merged, keys differ
  /// Every pair with equal keys was merged.
  bool invariant_pairs_merged = true;
  std::optional<std::pair<std::size_t, std::size_t>> unmerged;  // equal keys, not merged
  bool identical() const { return saturation_refines_invariant && invariant_pairs_merged; }
};

/// Compares the two partitions on B(r) (r defaults to the ball radius).
PartitionComparison compare_partitions(const Ball& ball, const ConjugacyPartition& invariant,
                                       const ConjugacyPartition& saturation,
                                       std::optional<std::size_t> r = std::nullopt);

struct ConjugacyRow {
  std::size_t radius = 0;
  Integer ball_size;
  Integer class_count;
  Rational ratio;
  std::string method;  // "invariant" or "saturation"
  bool exact = false;
};

struct ConjugacyOptions {
  std::size_t conjugator_radius = 8;
  BallOptions ball;
  PairCountOptions pairs;
};

struct ConjugacyReport {
  std::string group;
  std::string generators;
  std::size_t conjugator_radius = 0;
  std::vector<ConjugacyRow> rows;  // grouped by method, radius ascending
  /// Per radius, whether both partitions agree on B(r); empty when only
  /// saturation ran.
  std::vector<bool> agreement;
  /// Comparison on the whole ball, with witnesses; empty when only
  /// saturation ran.
  std::optional<PartitionComparison> comparison;
  /// Witness elements for any disagreement, rendered for reports.
  std::vector<std::string> findings;
  /// dc(r) for the side-by-side comparison.
  DcReport dc;
  bool truncated = false;
};

ConjugacyReport conjugacy_dc_sequence(const WreathGroup& group, const GeneratorSet& gens, std::size_t n_max,
                                      const ConjugacyOptions& options = {});

}  // namespace wreath

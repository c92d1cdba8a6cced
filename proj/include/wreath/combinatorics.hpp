#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wreath/ball.hpp"
#include "wreath/numeric.hpp"

namespace wreath {

using Composition = std::vector<std::uint32_t>;

/// Number of compositions of n, 2^(n-1). Throws InputError for n < 1.
Integer count_compositions(std::int64_t n);

inline constexpr std::int64_t kMaxEnumeratedComposition = 20;

/// All compositions of n, read off the n-1 gaps between n unit boxes: bit j
/// of the mask set means gap j is a comma, clear means a plus. Ordered by
/// mask. Throws ResourceError above kMaxEnumeratedComposition.
std::vector<Composition> enumerate_compositions(std::int64_t n);

/// Weak compositions of n into exactly k parts: C(n+k-1, k-1).
/// Requires n >= 0 and k >= 1.
Integer count_weak_compositions(std::int64_t n, std::int64_t k);

/// Lexicographic enumeration of weak compositions of n into k parts.
std::vector<Composition> enumerate_weak_compositions(std::int64_t n, std::int64_t k);

/// [m_1, ..., m_k] -> [m_1 - 1, ..., m_k - 1]; requires every part >= 1.
Composition composition_to_weak(const Composition& c);
Composition weak_to_composition(const Composition& w);

/// Checks that composition_to_weak maps the compositions of n + k with k
/// parts one-to-one onto the weak compositions of n into k parts.
bool verify_weak_composition_bijection(std::int64_t n, std::int64_t k);

enum class BoundDirection { upper, lower };

/// Rational enclosure lo <= x <= hi of an irrational comparison value.
struct Enclosure {
  std::string label;
  Rational lo;
  Rational hi;
};

struct NamedValue {
  std::string label;
  Integer value;
};

struct BoundProfile {
  std::string name;
  std::size_t n = 0;
  std::optional<std::uint64_t> parameter;  // m for F wr Z, q for C_q wr Z
  BoundDirection direction = BoundDirection::upper;
  std::string quantity;  // the ball count being bounded
  Integer value;         // the value used against ball data
  std::vector<NamedValue> alternates;
  std::vector<Enclosure> comparisons;
  /// The profile's internal inequality chain, decided exactly.
  bool chain_holds = true;
};

/// sum_{j=0}^{floor(n/2)} 2^(j+1) >= |B(n) ∩ A_0| in C_2 wr Z, with the chain
/// sum <= 4 sqrt(2)^n <= 4 phi^n.
BoundProfile bound_base_C2(std::size_t n);

/// sum_{k=0}^{floor(n/2)} C(n+1, 2k+1) >= |(B(n) \ B(n-1)) ∩ A_0| for C_q, q > 2,
/// or Z lamps. Alternates: the full binomial sum 2^(n+1), the value 2^n, the
/// shell bound (n+1) 2^n for all of A, and its cumulative form
/// sum_{j<=n} (j+1) 2^j for |B(n) ∩ A|.
BoundProfile bound_base_Cq_shell(std::size_t n);

/// Lower profile m^ceil(n/2) <= |B(n)|, and upper profile (m-1)^2 m^floor(n/3)
/// for |(B(n) \ B(n-1)) ∩ A_0| with the binomial sum
/// sum_{k=floor((n-1)/3)}^{n-1} C(k+1, n-2k) (m-1)^(n-2k) as an alternate.
/// Requires n >= 1 and m >= 2.
std::pair<BoundProfile, BoundProfile> bound_FwrZ(std::size_t n, std::uint64_t m);

struct BoundCheckRow {
  std::string bound_name;
  std::size_t n = 0;
  std::string exact_value;
  std::string bound_value;
  bool pass = false;
};

struct BoundCheckTable {
  std::string group;
  std::string generators;
  std::vector<BoundCheckRow> rows;
  bool truncated = false;

  bool all_pass() const;
  const BoundCheckRow* first_failure() const;
};

/// Every applicable bound evaluated against exact counts from B(n_max):
/// the A_s stratification rows for all groups, the C_2 rows for q = 2, the
/// C_q rows for q > 2 and Z, the F wr Z rows for table lamps.
BoundCheckTable check_bounds_against_balls(const WreathGroup& group, const GeneratorSet& gens, std::size_t n_max,
                                           const BallOptions& options = {});

/// The symbolic inequality chains of the profiles applicable to `lamps`,
/// one row per n = 0..n_max (n >= 1 for table lamps).
std::vector<BoundCheckRow> bound_chain_rows(const LampGroup& lamps, std::size_t n_max);

}  // namespace wreath

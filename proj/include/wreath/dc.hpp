#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wreath/ball.hpp"
#include "wreath/finite_group_table.hpp"
#include "wreath/numeric.hpp"

namespace wreath {

enum class PairMethod { naive, structured };

std::string to_string(PairMethod m);
PairMethod parse_pair_method(const std::string& text);

struct PairCountOptions {
  /// Upper limit on commutes() evaluations for the naive method.
  std::uint64_t pair_budget = 1'000'000'000;
  unsigned workers = 1;
  /// Count only inside B(max_radius) when it is below the ball radius.
  std::size_t max_radius = static_cast<std::size_t>(-1);
};

/// Largest r whose unordered pair count |B(r)|(|B(r)|+1)/2 fits `budget`;
/// nullopt when even B(0) does not.
std::optional<std::size_t> naive_feasible_radius(const Ball& ball, std::uint64_t budget);

/// Ordered commuting pairs P(r) = |{(a, b) in B(r)^2 : ab = ba}| for every
/// r = 0..ball.radius(), by testing every unordered pair once.
/// Throws ResourceError naming the largest radius that fits the budget.
std::vector<Integer> commuting_pairs_naive(const Ball& ball, const PairCountOptions& options = {});

/// Same numbers as the naive method, assembled blockwise:
///  - the identity commutes with everything: 2|B(r)| - 1 pairs;
///  - non-trivial base x non-trivial base: (|B(r) ∩ A| - 1)^2 for abelian
///    lamps, a lampwise check otherwise;
///  - non-trivial base x non-base: no pairs (a non-trivial base element
///    never commutes with w t^k, k != 0);
///  - non-base a x non-base b: for each candidate shift s there is at most
///    one b, obtained by solving  f_a(i) f_b(i - k_a) = f_b(i) f_a(i - s)
///    for f_b; it is counted when it lies in the ball.
std::vector<Integer> commuting_pairs_structured(const Ball& ball, const PairCountOptions& options = {});

std::vector<Integer> commuting_pairs(const Ball& ball, PairMethod method, const PairCountOptions& options = {});

struct DcRow {
  std::size_t radius = 0;
  Integer ball_size;
  Integer commuting_pairs;
  Rational dc;
  std::optional<Rational> decay;  // dc(r) / dc(r-1)
};

struct DcReport {
  std::string group;
  std::string generators;
  PairMethod method = PairMethod::structured;
  std::vector<DcRow> rows;
  bool truncated = false;
  std::string truncation_reason;
};

DcReport dc_report(const Ball& ball, PairMethod method, const PairCountOptions& options = {});

/// Builds B(n_max) and reports dc(r) for r = 0..n_max. Budget exhaustion
/// (elements or pair checks) truncates the report instead of throwing.
DcReport dc_sequence(const WreathGroup& group, const GeneratorSet& gens, std::size_t n_max, PairMethod method,
                     const BallOptions& ball_options = {}, const PairCountOptions& pair_options = {});

struct FiniteDc {
  Rational by_pairs;    // |{(a,b) : ab = ba}| / |F|^2
  Rational by_classes;  // #conjugacy classes / |F|
  std::size_t class_count = 0;
};

/// Degree of commutativity of a finite group, computed both ways; throws
/// InvariantViolation if they differ.
FiniteDc dc_finite_group(const FiniteGroupTable& table);

}  // namespace wreath

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wreath/ball.hpp"
#include "wreath/numeric.hpp"

namespace wreath {

/// C_G(g) ∩ B(n), with members sorted by canonical key.
struct CentralizerReport {
  WreathElement target;
  std::size_t radius = 0;
  std::vector<WreathElement> members;
  /// shift -> indices into `members` with that shift.
  std::map<std::int64_t, std::vector<std::size_t>> by_shift;
  bool contained_in_base = false;
  bool unique_per_shift = false;
  bool pairwise_commuting = false;
};

/// Recomputes `by_shift` and the three flags from `members`.
void refresh_flags(const WreathGroup& group, CentralizerReport& report);

CentralizerReport centralizer_in_ball(const WreathElement& g, const Ball& ball, unsigned workers = 1);

struct CyclicCheck {
  bool ok = false;
  std::string reason;  // empty when ok
  std::optional<std::pair<WreathElement, WreathElement>> witness;
};

/// Finite-ball certificate for "C_G(g) is cyclic" when g is outside the
/// base. Checks, from the members alone:
///  (a) at most one member per shift;
///  (b) members commute pairwise;
///  (c) every shift is a multiple of d = gcd of the observed shifts, and
///      if x is the member of least positive shift s, each member y whose
///      shift b is a multiple of s equals x^(b/s).
/// Throws PreconditionError when the target lies in the base.
CyclicCheck verify_cyclic_structure(const WreathGroup& group, const CentralizerReport& report);

/// |C_G(g) ∩ B(n)| <= 2 * lambda * n + 1. Requires g outside the base and
/// lambda >= 1.
bool centralizer_linear_bound_check(const CentralizerReport& report, const Rational& lambda);

struct TranslationSample {
  std::int64_t exponent = 0;
  std::uint64_t length = 0;  // |g^n|
  Rational ratio;            // |g^n| / n
};

struct TranslationEstimate {
  WreathElement target;
  std::vector<TranslationSample> samples;
  /// 0 for elements of finite order (|g^n| is bounded, so the limsup
  /// vanishes); otherwise the ratio at the largest exponent.
  Rational estimate;
  std::uint64_t shift_bound = 0;  // |k|, a lower bound for every ratio
  bool torsion = false;
  /// (|g^b| - |g^a|) / (b - a) over the last two samples.
  Rational slope;
  /// The last two ratios agree exactly.
  bool stable = false;
};

inline constexpr std::int64_t kDefaultTranslationExponents[] = {8, 16, 32, 64};

/// Samples |g^n|/n with the closed-form word length, so exponents can be
/// large. Needs a standard generating set; exponents must be positive and
/// strictly increasing.
TranslationEstimate translation_estimate(const WreathGroup& group, const GeneratorSet& gens, const WreathElement& g,
                                         std::span<const std::int64_t> exponents = kDefaultTranslationExponents);

}  // namespace wreath

#pragma once

#include <cstdint>

#include "wreath/generator_set.hpp"
#include "wreath/wreath_group.hpp"

namespace wreath {

/// Geodesic length over the standard generators {a_0, t}:
///   sum of lamp costs + 2(M* - m*) - |k|,
/// with m* = min(0, k, g_min) and M* = max(0, k, g_max). The travel term is
/// the cheapest walk from 0 that visits both support extremes and stops at k.
std::uint64_t standard_word_length(const LampGroup& lamps, const WreathElement& g);

/// Word length over `gens`. Only standard generating sets have a closed
/// form; anything else throws UnsupportedError (use a Ball lookup instead).
/// Lamp index i is handled by conjugating with t^i onto index 0.
std::uint64_t word_length(const WreathGroup& group, const GeneratorSet& gens, const WreathElement& g);

}  // namespace wreath

#include "wreath/word_length.hpp"

#include <algorithm>
#include <stdexcept>

#include "wreath/errors.hpp"

namespace wreath {

namespace {

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("word length overflow");
  return r;
}

}  // namespace

std::uint64_t standard_word_length(const LampGroup& lamps, const WreathElement& g) {
  std::uint64_t total = 0;
  for (const auto& l : g.lamps()) total = add(total, lamps.cost(l.value));
  const std::int64_t k = g.shift();
  std::int64_t lo = std::min<std::int64_t>(0, k);
  std::int64_t hi = std::max<std::int64_t>(0, k);
  if (const auto ext = support_extrema(g); ext.min) {
    lo = std::min(lo, *ext.min);
    hi = std::max(hi, *ext.max);
  }
  const auto span = static_cast<std::uint64_t>(hi - lo);
  const auto abs_k = k < 0 ? 0 - static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
  return add(total, add(span, span) - abs_k);
}

std::uint64_t word_length(const WreathGroup& group, const GeneratorSet& gens, const WreathElement& g) {
  const auto index = gens.standard_lamp_index();
  if (!index) throw UnsupportedError("closed-form word length needs the standard generating set");
  if (*index == 0) return standard_word_length(group.lamps(), g);
  // a_i = t^i a_0 t^-i, so x -> t^-i x t^i maps {a_i, t} onto {a_0, t}.
  return standard_word_length(group.lamps(), group.conjugate(g, group.t(*index)));
}

}  // namespace wreath

#include "wreath/centralizer.hpp"

#include <algorithm>
#include <numeric>

#include "wreath/parallel.hpp"
#include "wreath/word_length.hpp"

namespace wreath {

void refresh_flags(const WreathGroup& group, CentralizerReport& report) {
  report.by_shift.clear();
  for (std::size_t i = 0; i < report.members.size(); ++i) report.by_shift[report.members[i].shift()].push_back(i);
  report.contained_in_base = std::all_of(report.members.begin(), report.members.end(),
                                         [](const WreathElement& m) { return m.in_base(); });
  report.unique_per_shift = std::all_of(report.by_shift.begin(), report.by_shift.end(),
                                        [](const auto& kv) { return kv.second.size() == 1; });
  report.pairwise_commuting = true;
  for (std::size_t i = 0; i < report.members.size() && report.pairwise_commuting; ++i) {
    for (std::size_t j = i + 1; j < report.members.size(); ++j) {
      if (!group.commutes(report.members[i], report.members[j])) {
        report.pairwise_commuting = false;
        break;
      }
    }
  }
}

CentralizerReport centralizer_in_ball(const WreathElement& g, const Ball& ball, unsigned workers) {
  const WreathGroup& group = ball.group();
  const std::size_t n = ball.size();
  const std::size_t chunks = default_chunks(n);
  std::vector<std::vector<std::size_t>> hits(chunks);
  parallel_chunks(n, chunks, workers, [&](std::size_t c, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      if (group.commutes(g, ball.element(i))) hits[c].push_back(i);
    }
  });
  std::vector<std::size_t> indices;
  for (const auto& h : hits) indices.insert(indices.end(), h.begin(), h.end());
  std::sort(indices.begin(), indices.end(), [&](std::size_t a, std::size_t b) { return ball.key(a) < ball.key(b); });

  CentralizerReport report{g, ball.radius(), {}, {}};
  report.members.reserve(indices.size());
  for (const auto i : indices) report.members.push_back(ball.element(i));
  refresh_flags(group, report);
  return report;
}

CyclicCheck verify_cyclic_structure(const WreathGroup& group, const CentralizerReport& report) {
  if (report.target.in_base()) throw PreconditionError("cyclic-structure check needs a target outside the base");
  CentralizerReport fresh = report;
  refresh_flags(group, fresh);
  const auto& members = fresh.members;

  for (const auto& [shift, idx] : fresh.by_shift) {
    if (idx.size() > 1) {
      return {false, "two members share shift " + std::to_string(shift),
              std::pair{members[idx[0]], members[idx[1]]}};
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!group.commutes(members[i], members[j])) {
        return {false, "members do not commute", std::pair{members[i], members[j]}};
      }
    }
  }

  std::int64_t d = 0;
  for (const auto& [shift, idx] : fresh.by_shift) d = std::gcd(d, shift);
  if (d == 0) return {true, "", std::nullopt};
  for (const auto& [shift, idx] : fresh.by_shift) {
    if (shift % d != 0) {
      return {false, "shift " + std::to_string(shift) + " is not a multiple of " + std::to_string(d),
              std::pair{members[idx[0]], members[idx[0]]}};
    }
  }
  const auto first_positive = fresh.by_shift.upper_bound(0);
  if (first_positive == fresh.by_shift.end()) return {true, "", std::nullopt};
  const std::int64_t s = first_positive->first;
  const WreathElement& x = members[first_positive->second.front()];
  for (const auto& [shift, idx] : fresh.by_shift) {
    if (shift % s != 0) continue;
    const WreathElement& y = members[idx.front()];
    if (group.power(x, shift / s) != y) {
      return {false, "member with shift " + std::to_string(shift) + " is not a power of the least positive member",
              std::pair{x, y}};
    }
  }
  return {true, "", std::nullopt};
}

bool centralizer_linear_bound_check(const CentralizerReport& report, const Rational& lambda) {
  if (report.target.in_base()) throw PreconditionError("linear centralizer bound needs a target outside the base");
  if (lambda < 1) throw PreconditionError("lambda must be >= 1");
  const Rational bound = 2 * lambda * Integer(report.radius) + 1;
  return Rational(Integer(report.members.size())) <= bound;
}

TranslationEstimate translation_estimate(const WreathGroup& group, const GeneratorSet& gens, const WreathElement& g,
                                         std::span<const std::int64_t> exponents) {
  if (exponents.empty()) throw PreconditionError("translation estimate needs at least one exponent");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] <= 0 || (i > 0 && exponents[i] <= exponents[i - 1])) {
      throw PreconditionError("translation exponents must be positive and strictly increasing");
    }
  }
  TranslationEstimate est{g, {}, {}, 0, false, {}};
  const std::int64_t k = g.shift();
  est.shift_bound = k < 0 ? 0 - static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
  for (const auto n : exponents) {
    const std::uint64_t len = word_length(group, gens, group.power(g, n));
    est.samples.push_back({n, len, Rational(Integer(len), Integer(n))});
  }
  est.torsion = group.order(g).has_value();
  const auto& last = est.samples.back();
  est.estimate = est.torsion ? Rational(0) : last.ratio;
  if (est.samples.size() >= 2) {
    const auto& prev = est.samples[est.samples.size() - 2];
    est.slope = Rational(Integer(last.length) - Integer(prev.length), Integer(last.exponent - prev.exponent));
    est.stable = prev.ratio == last.ratio;
  } else {
    est.slope = last.ratio;
  }
  return est;
}

}  // namespace wreath

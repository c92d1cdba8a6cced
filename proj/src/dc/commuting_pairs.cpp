#include <algorithm>
#include <vector>

#include "wreath/dc.hpp"
#include "wreath/parallel.hpp"

namespace wreath {

namespace {

using Profile = std::vector<std::uint64_t>;  // pairs whose larger length is exactly r

std::vector<Integer> cumulative(const Profile& p) {
  std::vector<Integer> out(p.size());
  Integer running = 0;
  for (std::size_t r = 0; r < p.size(); ++r) {
    running += p[r];
    out[r] = running;
  }
  return out;
}

std::size_t effective_radius(const Ball& ball, const PairCountOptions& options) {
  return std::min(ball.radius(), options.max_radius);
}

void add_profiles(Profile& into, const std::vector<Profile>& parts) {
  for (const auto& p : parts)
    for (std::size_t r = 0; r < into.size(); ++r) into[r] += p[r];
}

// Solves for the unique b = (f_b, s) commuting with a = (f_a, k), k > 0, and
// appends its canonical key to `key`; false when no finite-support solution
// exists.
class PartnerSolver {
 public:
  explicit PartnerSolver(const WreathGroup& group) : group_(group), lamps_(group.lamps()) {}

  bool solve(const WreathElement& a, std::int64_t s, std::string& key) {
    const auto fa = a.lamps();
    const std::int64_t k = a.shift();
    if (fa.empty()) {
      group_.append_key(group_.t(s), key);
      return true;
    }
    const std::int64_t lo = std::min(fa.front().position, fa.front().position + s);
    const std::int64_t hi = std::max(fa.back().position, fa.back().position + s);
    const auto width = static_cast<std::size_t>(hi - lo + 1);
    left_.assign(width, 0);
    right_.assign(width, 0);
    fb_.assign(width, 0);
    for (const auto& l : fa) {
      left_[static_cast<std::size_t>(l.position - lo)] = l.value;                     // f_a(i)
      right_[static_cast<std::size_t>(l.position + s - lo)] = lamps_.inverse(l.value);  // f_a(i - s)^-1
    }
    const auto step = static_cast<std::size_t>(k);
    for (std::size_t i = 0; i < width; ++i) {
      const LampValue prev = i >= step ? fb_[i - step] : 0;
      fb_[i] = lamps_.multiply(lamps_.multiply(left_[i], prev), right_[i]);
    }
    // Above hi the recurrence is f_b(i) = f_b(i - k): the top k values must vanish.
    for (std::size_t i = width > step ? width - step : 0; i < width; ++i) {
      if (fb_[i] != 0) return false;
    }
    lamps_out_.clear();
    for (std::size_t i = 0; i < width; ++i) {
      if (fb_[i] != 0) lamps_out_.push_back({lo + static_cast<std::int64_t>(i), fb_[i]});
    }
    group_.append_key(group_.element(lamps_out_, s), key);
    return true;
  }

 private:
  const WreathGroup& group_;
  const LampGroup& lamps_;
  std::vector<LampValue> left_, right_, fb_;
  std::vector<Lamp> lamps_out_;
};

}  // namespace

std::string to_string(PairMethod m) { return m == PairMethod::naive ? "naive" : "structured"; }

PairMethod parse_pair_method(const std::string& text) {
  if (text == "naive") return PairMethod::naive;
  if (text == "structured") return PairMethod::structured;
  throw InputError("unknown method '" + text + "' (expected naive or structured)");
}

std::optional<std::size_t> naive_feasible_radius(const Ball& ball, std::uint64_t budget) {
  std::optional<std::size_t> best;
  for (std::size_t r = 0; r <= ball.radius(); ++r) {
    const Integer n = ball.size_upto(r);
    if (n * (n + 1) / 2 > budget) break;
    best = r;
  }
  return best;
}

std::vector<Integer> commuting_pairs_naive(const Ball& ball, const PairCountOptions& options) {
  const std::size_t radius = effective_radius(ball, options);
  const auto feasible = naive_feasible_radius(ball, options.pair_budget);
  if (!feasible || *feasible < radius) {
    const std::size_t last = feasible.value_or(0);
    throw ResourceError("pair budget " + std::to_string(options.pair_budget) + " too small for radius " +
                            std::to_string(radius) + "; largest feasible radius is " +
                            (feasible ? std::to_string(last) : std::string("none")),
                        last);
  }
  const WreathGroup& group = ball.group();
  const std::size_t n = ball.size_upto(radius);
  std::vector<WreathElement> elems;
  std::vector<std::uint32_t> lens;
  elems.reserve(n);
  lens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    elems.push_back(ball.element(i));
    lens.push_back(ball.length(i));
  }
  const std::size_t chunks = default_chunks(n);
  std::vector<Profile> parts(chunks, Profile(radius + 1, 0));
  // Later rows are shorter; interleave rows across chunks to balance work.
  parallel_chunks(chunks, chunks, options.workers, [&](std::size_t c, std::size_t, std::size_t) {
    for (std::size_t i = c; i < n; i += chunks) {
      parts[c][lens[i]] += 1;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (group.commutes(elems[i], elems[j])) parts[c][std::max(lens[i], lens[j])] += 2;
      }
    }
  });
  Profile total(radius + 1, 0);
  add_profiles(total, parts);
  return cumulative(total);
}

std::vector<Integer> commuting_pairs_structured(const Ball& ball, const PairCountOptions& options) {
  const std::size_t radius = effective_radius(ball, options);
  const WreathGroup& group = ball.group();
  const std::size_t n = ball.size_upto(radius);

  Profile total(radius + 1, 0);
  // Identity row and column.
  total[0] += 1;
  for (std::size_t r = 1; r <= radius; ++r) total[r] += 2 * ball.shell_size(r);

  std::vector<std::size_t> base, moving;
  for (std::size_t i = 1; i < n; ++i) (ball.element(i).in_base() ? base : moving).push_back(i);

  // Non-trivial base block.
  if (group.lamps().is_abelian()) {
    std::vector<std::uint64_t> per_len(radius + 1, 0);
    for (auto i : base) ++per_len[ball.length(i)];
    std::uint64_t below = 0;
    for (std::size_t r = 0; r <= radius; ++r) {
      total[r] += per_len[r] * per_len[r] + 2 * per_len[r] * below;
      below += per_len[r];
    }
  } else {
    std::vector<WreathElement> elems;
    for (auto i : base) elems.push_back(ball.element(i));
    for (std::size_t x = 0; x < elems.size(); ++x) {
      total[ball.length(base[x])] += 1;
      for (std::size_t y = x + 1; y < elems.size(); ++y) {
        if (group.commutes(elems[x], elems[y])) total[std::max(ball.length(base[x]), ball.length(base[y]))] += 2;
      }
    }
  }

  // Non-base block, one partner solve per candidate shift.
  const auto max_shift = static_cast<std::int64_t>(radius);
  const std::size_t chunks = default_chunks(moving.size());
  std::vector<Profile> parts(chunks, Profile(radius + 1, 0));
  parallel_chunks(moving.size(), chunks, options.workers, [&](std::size_t c, std::size_t b, std::size_t e) {
    PartnerSolver solver(group);
    std::string key;
    for (std::size_t m = b; m < e; ++m) {
      const std::size_t i = moving[m];
      const WreathElement g = ball.element(i);
      // a and a^-1 have the same centralizer; solve with a positive shift.
      const WreathElement a = g.shift() > 0 ? g : group.inverse(g);
      const std::uint32_t len_a = ball.length(i);
      for (std::int64_t s = -max_shift; s <= max_shift; ++s) {
        if (s == 0) continue;
        key.clear();
        if (!solver.solve(a, s, key)) continue;
        const auto j = ball.find(key);
        if (!j || *j >= n) continue;
        parts[c][std::max(len_a, ball.length(*j))] += 1;
      }
    }
  });
  add_profiles(total, parts);
  return cumulative(total);
}

std::vector<Integer> commuting_pairs(const Ball& ball, PairMethod method, const PairCountOptions& options) {
  return method == PairMethod::naive ? commuting_pairs_naive(ball, options)
                                     : commuting_pairs_structured(ball, options);
}

}  // namespace wreath

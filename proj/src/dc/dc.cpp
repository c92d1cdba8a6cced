
#include "wreath/dc.hpp"

namespace wreath {

DcReport dc_report(const Ball& ball, PairMethod method, const PairCountOptions& options) {
  DcReport report;
  report.group = ball.group().name();
  report.generators = ball.generators().describe();
  report.method = method;
  const auto pairs = commuting_pairs(ball, method, options);
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    DcRow row;
    row.radius = r;
    row.ball_size = ball.size_upto(r);
    row.commuting_pairs = pairs[r];
    row.dc = Rational(pairs[r], row.ball_size * row.ball_size);
    if (r > 0) row.decay = row.dc / report.rows.back().dc;
    report.rows.push_back(std::move(row));
  }
  return report;
}

DcReport dc_sequence(const WreathGroup& group, const GeneratorSet& gens, std::size_t n_max, PairMethod method,
                     const BallOptions& ball_options, const PairCountOptions& pair_options) {
  std::shared_ptr<const Ball> ball;
  std::string reason;
  try {
    ball = std::make_shared<const Ball>(build_ball(group, gens, n_max, ball_options));
  } catch (const BallBudgetExceeded& e) {
    ball = e.partial();
    reason = e.what();
  }
  PairCountOptions opts = pair_options;
  if (method == PairMethod::naive) {
    const auto feasible = naive_feasible_radius(*ball, opts.pair_budget);
    if (!feasible) throw ResourceError("pair budget too small for any radius", 0);
    if (*feasible < std::min(ball->radius(), opts.max_radius)) {
      opts.max_radius = *feasible;
      reason = "pair budget " + std::to_string(opts.pair_budget) + " allows naive counting up to radius " +
               std::to_string(*feasible);
    }
  }
  DcReport report = dc_report(*ball, method, opts);
  report.truncated = !reason.empty();
  report.truncation_reason = reason;
  return report;
}

FiniteDc dc_finite_group(const FiniteGroupTable& table) {
  using Index = FiniteGroupTable::Index;
  const auto m = static_cast<Index>(table.order());
  Integer pairs = 0;
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      if (table.product(a, b) == table.product(b, a)) ++pairs;

  std::vector<bool> seen(m, false);
  std::size_t classes = 0;
  for (Index x = 0; x < m; ++x) {
    if (seen[x]) continue;
    ++classes;
    for (Index g = 0; g < m; ++g) seen[table.product(table.product(g, x), table.inverse(g))] = true;
  }
  FiniteDc out{Rational(pairs, Integer(m) * m), Rational(Integer(classes), Integer(m)), classes};
  if (out.by_pairs != out.by_classes) {
    throw InvariantViolation("finite dc: pair ratio " + out.by_pairs.str() + " differs from class ratio " +
                             out.by_classes.str());
  }
  return out;
}

}  // namespace wreath

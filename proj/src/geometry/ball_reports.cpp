#include "wreath/ball_reports.hpp"

#include <cmath>

namespace wreath {

std::uint64_t BaseStratification::layer_count(std::int64_t s) const {
  auto it = layer.find(s);
  return it == layer.end() ? 0 : it->second;
}

std::uint64_t BaseStratification::in_base_upto(std::size_t r) const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i <= r && i < shells.size(); ++i) total += shells[i].in_base;
  return total;
}

std::uint64_t BaseStratification::in_base_nonneg_upto(std::size_t r) const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i <= r && i < shells.size(); ++i) total += shells[i].in_base_nonneg;
  return total;
}

BaseStratification base_stratification(const Ball& ball) {
  BaseStratification out;
  out.radius = ball.radius();
  out.shells.resize(out.radius + 1);
  const auto n = static_cast<std::int64_t>(out.radius);
  for (std::int64_t s = -n; s <= n; ++s) out.layer[s] = 0;
  for (std::size_t r = 0; r <= out.radius; ++r) {
    for (std::size_t i = ball.shell_begin(r); i < ball.shell_end(r); ++i) {
      const WreathElement g = ball.element(i);
      if (!g.in_base()) continue;
      ++out.shells[r].in_base;
      const auto ext = support_extrema(g);
      if (!ext.min || *ext.min >= 0) ++out.shells[r].in_base_nonneg;
      if (ext.min) ++out.layer[*ext.min];
    }
    out.in_base += out.shells[r].in_base;
    out.in_base_nonneg += out.shells[r].in_base_nonneg;
  }
  return out;
}

namespace predicates {

ElementPredicate always() {
  return {"always", [](const WreathElement&) { return true; }};
}

ElementPredicate identity_only() {
  return {"identity", [](const WreathElement& g) { return g.is_identity(); }};
}

ElementPredicate in_base() {
  return {"in-base", [](const WreathElement& g) { return g.in_base(); }};
}

ElementPredicate torsion_in_base(const WreathGroup& group) {
  const bool finite = group.lamps().is_finite();
  return {"torsion-in-base", [finite](const WreathElement& g) {
            return g.in_base() && (finite || g.lamps().empty());
          }};
}

}  // namespace predicates

DensityReport density_sequence(const Ball& ball, const ElementPredicate& predicate) {
  DensityReport report;
  report.group = ball.group().name();
  report.generators = ball.generators().describe();
  report.predicate = predicate.name;
  std::uint64_t hits = 0;
  for (std::size_t r = 0; r <= ball.radius(); ++r) {
    for (std::size_t i = ball.shell_begin(r); i < ball.shell_end(r); ++i) {
      if (predicate.test(ball.element(i))) ++hits;
    }
    const Integer size = ball.size_upto(r);
    report.rows.push_back({r, Integer(hits), size, Rational(Integer(hits), size)});
  }
  return report;
}

DensityReport density_sequence(const WreathGroup& group, const GeneratorSet& gens, std::size_t n_max,
                               const ElementPredicate& predicate, const BallOptions& options) {
  try {
    return density_sequence(build_ball(group, gens, n_max, options), predicate);
  } catch (const BallBudgetExceeded& e) {
    auto report = density_sequence(*e.partial(), predicate);
    report.truncated = true;
    return report;
  }
}

GrowthReport growth_report(const Ball& ball) {
  if (ball.radius() < 2) throw PreconditionError("growth report needs a ball of radius >= 2");
  GrowthReport report;
  report.group = ball.group().name();
  report.generators = ball.generators().describe();
  for (std::size_t r = 0; r <= ball.radius(); ++r) {
    GrowthRow row;
    row.radius = r;
    row.cumulative = ball.size_upto(r);
    row.shell = ball.shell_size(r);
    if (r >= 1) {
      row.ratio = Rational(row.cumulative, Integer(ball.size_upto(r - 1)));
      row.root = std::pow(static_cast<double>(ball.size_upto(r)), 1.0 / static_cast<double>(r));
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace wreath

#include <cstdio>
#include <stdexcept>

#include "wreath/ball_reports.hpp"
#include "wreath/centralizer.hpp"
#include "wreath/cli.hpp"
#include "wreath/combinatorics.hpp"
#include "wreath/conjugacy.hpp"
#include "wreath/dc.hpp"

namespace wreath::cli {

namespace {

std::string str(const Integer& x) { return to_decimal(x); }
std::string str(std::uint64_t x) { return std::to_string(x); }
std::string str(bool b) { return b ? "true" : "false"; }

void push_rational(std::vector<std::string>& row, const Rational& q) {
  row.push_back(str(Integer(numerator(q))));
  row.push_back(str(Integer(denominator(q))));
  row.push_back(to_decimal(q));
}

void push_optional_rational(std::vector<std::string>& row, const std::optional<Rational>& q) {
  if (q) {
    push_rational(row, *q);
  } else {
    row.insert(row.end(), 3, "");
  }
}

struct Context {
  const RunConfig& config;
  WreathGroup group;
  GeneratorSet gens;
  std::size_t radius;
  BallOptions ball;
  PairCountOptions pairs;
};

Context make_context(const RunConfig& config) {
  if (config.group.empty()) throw InputError("--group is required for '" + config.command + "'");
  WreathGroup group(parse_group_spec(config.group));
  GeneratorSet gens = standard_genset(group, config.lamp_index);
  const std::size_t radius = config.radius.value_or(default_radius(group.lamps()));
  BallOptions ball{static_cast<std::size_t>(effective_element_budget(config)), config.workers};
  PairCountOptions pairs;
  pairs.pair_budget = config.pair_budget;
  pairs.workers = config.workers;
  return {config, std::move(group), std::move(gens), radius, ball, pairs};
}

struct Outcome {
  Table table;
  bool truncated = false;
  std::string truncation_reason;
  bool failed = false;  // an invariant or bound check failed
  std::string failure;
};

void base_metadata(Table& t, const RunConfig& config) {
  t.metadata = {{"tool", kToolName}, {"version", kToolVersion}, {"command", config.command}};
}

void group_metadata(Table& t, const Context& ctx) {
  const RunConfig& c = ctx.config;
  base_metadata(t, c);
  t.metadata.insert(t.metadata.end(), {{"group", c.group},
                                       {"lamp_group", ctx.group.name()},
                                       {"genset", ctx.gens.describe()},
                                       {"lamp_index", std::to_string(c.lamp_index)},
                                       {"radius", std::to_string(ctx.radius)},
                                       {"element_budget", std::to_string(ctx.ball.element_budget)},
                                       {"pair_budget", std::to_string(ctx.pairs.pair_budget)}});
}

std::shared_ptr<const Ball> build_or_partial(const Context& ctx, std::size_t radius, Outcome& out) {
  try {
    return std::make_shared<const Ball>(build_ball(ctx.group, ctx.gens, radius, ctx.ball));
  } catch (const BallBudgetExceeded& e) {
    out.truncated = true;
    out.truncation_reason = e.what();
    return e.partial();
  }
}

Outcome cmd_ball(const Context& ctx) {
  Outcome out;
  auto& t = out.table;
  group_metadata(t, ctx);
  const auto ball = build_or_partial(ctx, ctx.radius, out);
  if (ctx.config.list) {
    t.columns = {"index", "length", "element"};
    for (std::size_t i = 0; i < ball->size(); ++i) {
      t.rows.push_back({std::to_string(i), std::to_string(ball->length(i)), ctx.group.to_string(ball->element(i))});
    }
    return out;
  }
  t.columns = {"radius", "shell_size", "ball_size", "shell_in_base", "shell_in_base_nonneg"};
  const BaseStratification strat = base_stratification(*ball);
  for (std::size_t r = 0; r <= ball->radius(); ++r) {
    t.rows.push_back({std::to_string(r), std::to_string(ball->shell_size(r)), std::to_string(ball->size_upto(r)),
                      str(strat.shells[r].in_base), str(strat.shells[r].in_base_nonneg)});
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", x);
  return buf;
}

Outcome cmd_growth(const Context& ctx) {
  Outcome out;
  auto& t = out.table;
  group_metadata(t, ctx);
  if (ctx.radius < 2) throw InputError("growth needs --radius >= 2");
  const auto ball = build_or_partial(ctx, ctx.radius, out);
  if (ball->radius() < 2) throw ResourceError("element budget too small for radius 2", ball->radius());
  t.columns = {"radius", "ball_size", "shell_size", "ratio_num", "ratio_den", "ratio_decimal", "root_decimal"};
  for (const auto& row : growth_report(*ball).rows) {
    std::vector<std::string> cells{std::to_string(row.radius), str(row.cumulative), str(row.shell)};
    push_optional_rational(cells, row.ratio);
    cells.push_back(row.root ? format_double(*row.root) : "");
    t.rows.push_back(std::move(cells));
  }
  return out;
}

Outcome cmd_dc(const Context& ctx) {
  Outcome out;
  auto& t = out.table;
  const PairMethod method = parse_pair_method(ctx.config.method.value_or("structured"));
  group_metadata(t, ctx);
  t.metadata.emplace_back("method", to_string(method));
  const DcReport report = dc_sequence(ctx.group, ctx.gens, ctx.radius, method, ctx.ball, ctx.pairs);
  out.truncated = report.truncated;
  out.truncation_reason = report.truncation_reason;
  t.columns = {"radius", "ball_size", "commuting_pairs", "dc_num", "dc_den", "dc_decimal", "method",
               "decay_num", "decay_den", "decay_decimal"};
  for (const auto& row : report.rows) {
    std::vector<std::string> cells{std::to_string(row.radius), str(row.ball_size), str(row.commuting_pairs)};
    push_rational(cells, row.dc);
    cells.push_back(to_string(method));
    push_optional_rational(cells, row.decay);
    t.rows.push_back(std::move(cells));
  }
  return out;
}

Outcome cmd_conj_dc(const Context& ctx) {
  Outcome out;
  auto& t = out.table;
  const std::string which = ctx.config.method.value_or("both");
  if (which != "both" && which != "invariant" && which != "saturation") {
    throw InputError("conj-dc method must be both, invariant or saturation, got '" + which + "'");
  }
  if (which == "invariant" && ctx.group.lamps().kind() == LampGroup::Kind::table) {
    throw UnsupportedError("the conjugacy invariant needs cyclic or integer lamps");
  }
  group_metadata(t, ctx);
  t.metadata.emplace_back("method", which);
  t.metadata.emplace_back("conjugator_radius", std::to_string(ctx.config.conjugator_radius));
  ConjugacyOptions options;
  options.conjugator_radius = ctx.config.conjugator_radius;
  options.ball = ctx.ball;
  options.pairs = ctx.pairs;
  const ConjugacyReport report = conjugacy_dc_sequence(ctx.group, ctx.gens, ctx.radius, options);
  if (report.truncated) {
    out.truncated = true;
    out.truncation_reason = "element budget " + std::to_string(ctx.ball.element_budget) + " reached";
  }
  t.columns = {"radius",    "ball_size", "class_count", "ratio_decimal", "method", "exactness_flag",
               "ratio_num", "ratio_den", "dc_num",      "dc_den",        "dc_decimal", "partitions_agree"};
  for (const auto& row : report.rows) {
    if (which != "both" && row.method != which) continue;
    std::vector<std::string> cells{std::to_string(row.radius), str(row.ball_size), str(row.class_count),
                                   to_decimal(row.ratio),      row.method,         row.exact ? "exact" : "upper_bound",
                                   str(Integer(numerator(row.ratio))), str(Integer(denominator(row.ratio)))};
    const auto& dc = report.dc.rows.at(row.radius).dc;
    cells.push_back(str(Integer(numerator(dc))));
    cells.push_back(str(Integer(denominator(dc))));
    cells.push_back(to_decimal(dc));
    cells.push_back(report.agreement.empty() ? "" : str(bool(report.agreement.at(row.radius))));
    t.rows.push_back(std::move(cells));
  }
  t.notes = report.findings;
  if (report.comparison && !report.comparison->saturation_refines_invariant) {
    out.failed = true;
    out.failure = report.findings.front();
  }
  return out;
}

Outcome centralizer_single(const Context& ctx, const std::string& text) {
  Outcome out;
  auto& t = out.table;
  group_metadata(t, ctx);
  const WreathElement g = parse_element(ctx.group, ctx.gens, text);
  t.metadata.emplace_back("element", ctx.group.to_string(g));
  const auto ball = build_or_partial(ctx, ctx.radius, out);
  const CentralizerReport report = centralizer_in_ball(g, *ball, ctx.config.workers);
  t.columns = {"index", "shift", "length", "member"};
  for (std::size_t i = 0; i < report.members.size(); ++i) {
    const auto& m = report.members[i];
    t.rows.push_back({std::to_string(i), std::to_string(m.shift()), std::to_string(*ball->distance(m)),
                      ctx.group.to_string(m)});
  }
  t.notes = {"members: " + std::to_string(report.members.size()),
             "contained_in_base: " + str(report.contained_in_base),
             "unique_per_shift: " + str(report.unique_per_shift),
             "pairwise_commuting: " + str(report.pairwise_commuting)};
  if (g.in_base()) {
    if (!g.is_identity() && !report.contained_in_base) {
      out.failed = true;
      out.failure = "centralizer of a non-trivial base element leaves the base";
    }
    return out;
  }
  const CyclicCheck cyclic = verify_cyclic_structure(ctx.group, report);
  const bool linear = centralizer_linear_bound_check(report, 1);
  t.notes.push_back("cyclic_structure: " + (cyclic.ok ? std::string("true") : "false (" + cyclic.reason + ")"));
  t.notes.push_back("linear_bound_lambda_1: " + str(linear));
  if (!cyclic.ok || !linear) {
    out.failed = true;
    out.failure = !cyclic.ok ? cyclic.reason : "centralizer exceeds 2n+1 members";
  }
  return out;
}

// Every non-trivial element of the ball, one row each.
Outcome centralizer_sweep(const Context& ctx) {
  Outcome out;
  auto& t = out.table;
  group_metadata(t, ctx);
  const auto ball = build_or_partial(ctx, ctx.radius, out);
  t.columns = {"element",          "shift",        "members",   "contained_in_base", "unique_per_shift",
               "pairwise_commuting", "cyclic_structure", "linear_bound_lambda_1"};
  std::size_t failures = 0;
  for (std::size_t i = 1; i < ball->size(); ++i) {
    const WreathElement g = ball->element(i);
    const CentralizerReport report = centralizer_in_ball(g, *ball, ctx.config.workers);
    std::vector<std::string> cells{ctx.group.to_string(g), std::to_string(g.shift()),
                                   std::to_string(report.members.size()), str(report.contained_in_base),
                                   str(report.unique_per_shift), str(report.pairwise_commuting)};
    bool ok = true;
    if (g.in_base()) {
      ok = report.contained_in_base;
      cells.insert(cells.end(), {"", ""});
    } else {
      const bool cyclic = verify_cyclic_structure(ctx.group, report).ok;
      const bool linear = centralizer_linear_bound_check(report, 1);
      ok = cyclic && linear;
      cells.push_back(str(cyclic));
      cells.push_back(str(linear));
    }
    if (!ok && failures++ == 0) out.failure = "centralizer check failed for " + ctx.group.to_string(g);
    t.rows.push_back(std::move(cells));
  }
  out.failed = failures > 0;
  t.notes.push_back("failures: " + std::to_string(failures));
  return out;
}

Outcome cmd_tau(const Context& ctx) {
  Outcome out;
  auto& t = out.table;
  base_metadata(t, ctx.config);
  t.metadata.insert(t.metadata.end(), {{"group", ctx.config.group},
                                       {"lamp_group", ctx.group.name()},
                                       {"genset", ctx.gens.describe()},
                                       {"lamp_index", std::to_string(ctx.config.lamp_index)}});
  const WreathElement g = parse_element(ctx.group, ctx.gens, ctx.config.element.value_or("t"));
  t.metadata.emplace_back("element", ctx.group.to_string(g));
  const auto est = ctx.config.exponents.empty()
                       ? translation_estimate(ctx.group, ctx.gens, g)
                       : translation_estimate(ctx.group, ctx.gens, g, ctx.config.exponents);
  t.columns = {"exponent", "length", "ratio_num", "ratio_den", "ratio_decimal"};
  for (const auto& s : est.samples) {
    std::vector<std::string> cells{std::to_string(s.exponent), std::to_string(s.length)};
    push_rational(cells, s.ratio);
    t.rows.push_back(std::move(cells));
  }
  t.notes = {"estimate: " + est.estimate.str() + " (" + to_decimal(est.estimate) + ")",
             "torsion: " + str(est.torsion), "shift_bound: " + std::to_string(est.shift_bound),
             "slope: " + est.slope.str(), "stable: " + str(est.stable)};
  if (est.estimate < Rational(Integer(est.shift_bound))) {
    out.failed = true;
    out.failure = "translation estimate below |shift|";
  }
  return out;
}

Outcome cmd_bounds(const Context& ctx) {
  Outcome out;
  auto& t = out.table;
  group_metadata(t, ctx);
  const BoundCheckTable table = check_bounds_against_balls(ctx.group, ctx.gens, ctx.radius, ctx.ball);
  if (table.truncated) {
    out.truncated = true;
    out.truncation_reason = "element budget " + std::to_string(ctx.ball.element_budget) + " reached";
  }
  std::vector<BoundCheckRow> rows = table.rows;
  const auto chains = bound_chain_rows(ctx.group.lamps(), ctx.radius);
  rows.insert(rows.end(), chains.begin(), chains.end());
  t.columns = {"bound_name", "n", "exact_value", "bound_value", "pass"};
  for (const auto& r : rows) {
    t.rows.push_back({r.bound_name, std::to_string(r.n), r.exact_value, r.bound_value, str(r.pass)});
    if (!r.pass && !out.failed) {
      out.failed = true;
      out.failure = r.bound_name + " fails at n=" + std::to_string(r.n) + ": " + r.exact_value + " vs " +
                    r.bound_value;
      t.notes.push_back("first failure: " + out.failure);
    }
  }
  return out;
}

Outcome cmd_comb(const RunConfig& config) {
  Outcome out;
  auto& t = out.table;
  base_metadata(t, config);
  const std::size_t n_max = config.radius.value_or(16);
  t.metadata.emplace_back("radius", std::to_string(n_max));
  t.columns = {"kind", "n", "k", "formula", "enumerated", "pass"};
  auto add = [&](const std::string& kind, std::int64_t n, std::string k, const Integer& formula,
                 const std::string& enumerated, bool pass) {
    t.rows.push_back({kind, std::to_string(n), std::move(k), str(formula), enumerated, str(pass)});
    if (!pass && !out.failed) {
      out.failed = true;
      out.failure = kind + " mismatch at n=" + std::to_string(n);
    }
  };
  const auto n_cap = static_cast<std::int64_t>(n_max);
  for (std::int64_t n = 1; n <= std::min<std::int64_t>(n_cap, kMaxEnumeratedComposition); ++n) {
    const auto all = enumerate_compositions(n);
    bool valid = true;
    for (const auto& c : all) {
      std::int64_t sum = 0;
      for (const auto p : c) {
        valid = valid && p > 0;
        sum += p;
      }
      valid = valid && sum == n;
    }
    const Integer formula = count_compositions(n);
    add("compositions", n, "", formula, std::to_string(all.size()), valid && formula == all.size());
  }
  for (std::int64_t n = 0; n <= std::min<std::int64_t>(n_cap, 12); ++n) {
    for (std::int64_t k = 1; k <= 6; ++k) {
      const Integer formula = count_weak_compositions(n, k);
      const auto size = enumerate_weak_compositions(n, k).size();
      add("weak_compositions", n, std::to_string(k), formula, std::to_string(size), formula == size);
    }
  }
  for (std::int64_t n = 0; n <= std::min<std::int64_t>(n_cap, 10); ++n) {
    for (std::int64_t k = 1; k <= 5; ++k) {
      add("bijection", n, std::to_string(k), count_weak_compositions(n, k), "",
          verify_weak_composition_bijection(n, k));
    }
  }
  return out;
}

Outcome cmd_density(const Context& ctx) {
  Outcome out;
  auto& t = out.table;
  group_metadata(t, ctx);
  const std::string& name = ctx.config.predicate;
  ElementPredicate predicate;
  if (name == "always") {
    predicate = predicates::always();
  } else if (name == "identity") {
    predicate = predicates::identity_only();
  } else if (name == "in_base") {
    predicate = predicates::in_base();
  } else if (name == "torsion_in_base") {
    predicate = predicates::torsion_in_base(ctx.group);
  } else {
    throw InputError("unknown predicate '" + name + "' (expected always, identity, in_base or torsion_in_base)");
  }
  t.metadata.emplace_back("predicate", name);
  const DensityReport report = density_sequence(ctx.group, ctx.gens, ctx.radius, predicate, ctx.ball);
  if (report.truncated) {
    out.truncated = true;
    out.truncation_reason = "element budget " + std::to_string(ctx.ball.element_budget) + " reached";
  }
  t.columns = {"radius", "count", "ball_size", "density_num", "density_den", "density_decimal"};
  for (const auto& row : report.rows) {
    std::vector<std::string> cells{std::to_string(row.radius), str(row.count), str(row.ball_size)};
    push_rational(cells, row.density);
    t.rows.push_back(std::move(cells));
  }
  return out;
}

Outcome dispatch(const RunConfig& config) {
  if (config.command == "comb") return cmd_comb(config);
  const Context ctx = make_context(config);
  if (config.command == "ball") return cmd_ball(ctx);
  if (config.command == "growth") return cmd_growth(ctx);
  if (config.command == "dc") return cmd_dc(ctx);
  if (config.command == "conj-dc") return cmd_conj_dc(ctx);
  if (config.command == "centralizer") {
    return config.element ? centralizer_single(ctx, *config.element) : centralizer_sweep(ctx);
  }
  if (config.command == "tau") return cmd_tau(ctx);
  if (config.command == "bounds") return cmd_bounds(ctx);
  return cmd_density(ctx);
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    config.validate();
    Outcome out = dispatch(config);
    out.table.metadata.emplace_back("truncated", str(out.truncated));
    if (out.truncated) {
      out.table.metadata.emplace_back("truncation_reason", out.truncation_reason);
      out.table.notes.push_back("truncated: " + out.truncation_reason);
    }
    result.output = config.format == Format::csv ? to_csv(out.table) : to_json(out.table);
    if (out.failed) {
      result.exit_code = kInvariantFailure;
      result.error = out.failure;
    } else if (out.truncated) {
      result.exit_code = kTruncated;
      result.error = "truncated: " + out.truncation_reason;
    }
  } catch (const InvariantViolation& e) {
    result = {kInvariantFailure, "", e.what()};
  } catch (const ResourceError& e) {
    result = {kTruncated, "", e.what()};
  } catch (const std::overflow_error& e) {
    result = {kTruncated, "", e.what()};
  } catch (const Error& e) {
    result = {kInputError, "", e.what()};
  }
  return result;
}

}  // namespace wreath::cli

#include "wreath/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wreath/parallel.hpp"

namespace wreath {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller index becomes the root, so roots are cell minima.
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::size_t ConjugacyPartition::classes_meeting(const Ball& ball, std::size_t r) const {
  const std::size_t n = ball.size_upto(r);
  std::size_t count = 0;
  // Each cell is labeled by its least index, which is inside B(r) whenever
  // the cell meets B(r).
  for (std::size_t i = 0; i < n; ++i)
    if (cell[i] == i) ++count;
  return count;
}

std::string conjugacy_invariant_key(const WreathGroup& group, const WreathElement& g) {
  const LampGroup& lamps = group.lamps();
  if (!lamps.is_abelian() || lamps.kind() == LampGroup::Kind::table) {
    throw UnsupportedError("conjugacy invariant is only implemented for cyclic and integer lamps");
  }
  if (g.is_identity()) return "E";
  std::string key;
  const std::int64_t k = g.shift();
  if (k == 0) {
    const std::int64_t origin = g.lamps().front().position;
    key = "B";
    for (const auto& l : g.lamps()) key += ' ' + std::to_string(l.position - origin) + ':' + std::to_string(l.value);
    return key;
  }
  const std::int64_t period = k < 0 ? -k : k;
  std::vector<LampValue> sigma(static_cast<std::size_t>(period), 0);
  for (const auto& l : g.lamps()) {
    auto& s = sigma[static_cast<std::size_t>(floor_mod(l.position, period))];
    s = lamps.multiply(s, l.value);
  }
  std::vector<LampValue> best = sigma;
  for (std::int64_t r = 1; r < period; ++r) {
    std::rotate(sigma.begin(), sigma.begin() + 1, sigma.end());
    if (sigma < best) best = sigma;
  }
  key = "S" + std::to_string(k) + ":";
  for (const auto v : best) key += ' ' + std::to_string(v);
  return key;
}

ConjugacyPartition conjugacy_classes_invariant(const Ball& ball) {
  ConjugacyPartition p;
  p.cell.resize(ball.size());
  std::map<std::string, std::uint32_t> first;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    auto [it, inserted] = first.try_emplace(conjugacy_invariant_key(ball.group(), ball.element(i)),
                                            static_cast<std::uint32_t>(i));
    p.cell[i] = it->second;
  }
  p.class_count = first.size();
  return p;
}

ConjugacyPartition conjugacy_classes_saturation(const Ball& ball, const Ball& conjugators, unsigned workers) {
  const WreathGroup& group = ball.group();
  if (conjugators.group().id() != group.id()) throw SpecMismatchError("conjugator ball is over another group");
  std::vector<WreathElement> hs, hs_inv;
  for (std::size_t j = 0; j < conjugators.size(); ++j) {
    hs.push_back(conjugators.element(j));
    hs_inv.push_back(group.inverse(hs.back()));
  }
  const std::size_t n = ball.size();
  const std::size_t chunks = default_chunks(n);
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> merges(chunks);
  parallel_chunks(n, chunks, workers, [&](std::size_t c, std::size_t b, std::size_t e) {
    std::string key;
    for (std::size_t i = b; i < e; ++i) {
      const WreathElement g = ball.element(i);
      for (std::size_t j = 0; j < hs.size(); ++j) {
        key.clear();
        group.append_key(group.multiply(group.multiply(hs_inv[j], g), hs[j]), key);
        const auto x = ball.find(key);
        if (x && *x != i) merges[c].emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(*x));
      }
    }
  });
  UnionFind uf(n);
  for (const auto& m : merges)
    for (const auto& [a, b] : m) uf.unite(a, b);
  ConjugacyPartition p;
  p.upper_bound = true;
  p.cell.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.cell[i] = uf.find(static_cast<std::uint32_t>(i));
    if (p.cell[i] == i) ++p.class_count;
  }
  return p;
}

PartitionComparison compare_partitions(const Ball& ball, const ConjugacyPartition& invariant,
                                       const ConjugacyPartition& saturation, std::optional<std::size_t> r) {
  PartitionComparison out;
  const std::size_t n = ball.size_upto(r.value_or(ball.radius()));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t sat_rep = saturation.cell[i];
    if (out.saturation_refines_invariant && invariant.cell[sat_rep] != invariant.cell[i]) {
      out.saturation_refines_invariant = false;
      out.bad_merge = {sat_rep, i};
    }
    const std::size_t inv_rep = invariant.cell[i];
    if (out.invariant_pairs_merged && saturation.cell[inv_rep] != saturation.cell[i]) {
      out.invariant_pairs_merged = false;
      out.unmerged = {inv_rep, i};
    }
  }
  return out;
}

ConjugacyReport conjugacy_dc_sequence(const WreathGroup& group, const GeneratorSet& gens, std::size_t n_max,
                                      const ConjugacyOptions& options) {
  ConjugacyReport report;
  report.group = group.name();
  report.generators = gens.describe();
  report.conjugator_radius = options.conjugator_radius;

  auto build = [&](std::size_t radius) -> std::shared_ptr<const Ball> {
    try {
      return std::make_shared<const Ball>(build_ball(group, gens, radius, options.ball));
    } catch (const BallBudgetExceeded& e) {
      report.truncated = true;
      return e.partial();
    }
  };
  const auto ball = build(n_max);
  const auto conjugators = options.conjugator_radius == n_max ? ball : build(options.conjugator_radius);

  const ConjugacyPartition saturation = conjugacy_classes_saturation(*ball, *conjugators, options.ball.workers);
  std::optional<ConjugacyPartition> invariant;
  const LampGroup& lamps = group.lamps();
  if (lamps.kind() != LampGroup::Kind::table) invariant = conjugacy_classes_invariant(*ball);

  auto add_rows = [&](const ConjugacyPartition& p, const std::string& method, bool exact) {
    for (std::size_t r = 0; r <= ball->radius(); ++r) {
      ConjugacyRow row;
      row.radius = r;
      row.ball_size = ball->size_upto(r);
      row.class_count = p.classes_meeting(*ball, r);
      row.ratio = Rational(row.class_count, row.ball_size);
      row.method = method;
      row.exact = exact;
      report.rows.push_back(std::move(row));
    }
  };
  if (invariant) add_rows(*invariant, "invariant", true);
  add_rows(saturation, "saturation", false);
  if (invariant) {
    for (std::size_t r = 0; r <= ball->radius(); ++r)
      report.agreement.push_back(compare_partitions(*ball, *invariant, saturation, r).identical());
    report.comparison = compare_partitions(*ball, *invariant, saturation);
    auto show = [&](std::size_t i) { return group.to_string(ball->element(i)); };
    if (const auto& w = report.comparison->bad_merge) {
      report.findings.push_back("saturation merged " + show(w->first) + " and " + show(w->second) +
                                " whose invariants differ");
    }
    if (const auto& w = report.comparison->unmerged) {
      report.findings.push_back("equal invariants but not merged: " + show(w->first) + " and " + show(w->second));
    }
  }
  report.dc = dc_report(*ball, PairMethod::structured, options.pairs);
  report.dc.truncated = report.truncated;
  return report;
}

}  // namespace wreath

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wreath/ball.hpp"
#include "wreath/ball_reports.hpp"
#include "wreath/centralizer.hpp"
#include "wreath/cli.hpp"
#include "wreath/combinatorics.hpp"
#include "wreath/conjugacy.hpp"
#include "wreath/dc.hpp"
#include "wreath/finite_group_table.hpp"
#include "wreath/word_length.hpp"

using namespace wreath;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failures; later ones are only counted.
class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 3) text_ += (text_.empty() ? "" : "; ") + what;
  }
  bool any() const { return count_ > 0; }
  Outcome outcome(const std::string& ok_detail) const {
    if (!any()) return {true, ok_detail};
    return {false, std::to_string(count_) + " failure(s): " + text_};
  }

 private:
  std::size_t count_ = 0;
  std::string text_;
};

WreathGroup group_of(const LampGroup& lamps) { return WreathGroup(lamps); }

LampGroup bundled(const std::string& name) {
  return LampGroup::table(FiniteGroupTable::load(std::string(WREATH_TABLE_DIR) + "/" + name + ".txt"));
}

std::string str(const Rational& x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

// ---------------------------------------------------------------------------

Outcome compositions() {
  Failures f;
  const auto start = std::chrono::steady_clock::now();
  for (std::int64_t n = 1; n <= 16; ++n) {
    const Integer expected = Integer(1) << (n - 1);
    if (count_compositions(n) != expected) f.add("count n=" + std::to_string(n));
    if (enumerate_compositions(n).size() != expected) f.add("enumerate n=" + std::to_string(n));
  }
  // Brute force: every vector in [0, n]^k, keep those summing to n.
  for (std::uint32_t n = 0; n <= 12; ++n) {
    for (std::size_t k = 1; k <= 6; ++k) {
      std::uint64_t brute = 0;
      std::vector<std::uint32_t> v(k, 0);
      while (true) {
        std::uint32_t sum = 0;
        for (auto x : v) sum += x;
        brute += sum == n;
        std::size_t i = 0;
        while (i < k && v[i] == n) v[i++] = 0;
        if (i == k) break;
        ++v[i];
      }
      const auto kk = static_cast<std::int64_t>(k);
      if (count_weak_compositions(n, kk) != brute || enumerate_weak_compositions(n, kk).size() != brute) {
        f.add("weak n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  for (std::int64_t n = 0; n <= 10; ++n) {
    for (std::int64_t k = 1; k <= 5; ++k) {
      if (!verify_weak_composition_bijection(n, k)) f.add("bijection n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 10) f.add("took " + std::to_string(secs) + "s");
  return f.outcome("compositions n<=16, weak n<=12 k<=6, bijection n<=10 k<=5");
}

Outcome geodesic_formula() {
  Failures f;
  struct Case {
    LampGroup lamps;
    std::size_t n;
  };
  std::size_t checked = 0;
  for (const auto& c : {Case{LampGroup::cyclic(2), 12}, Case{LampGroup::cyclic(3), 10},
                        Case{LampGroup::integers(), 9}, Case{bundled("S3"), 6}}) {
    const WreathGroup G = group_of(c.lamps);
    const auto S = standard_genset(G);
    const Ball b = build_ball(G, S, c.n);
    for (std::size_t i = 0; i < b.size(); ++i) {
      const auto g = b.element(i);
      if (word_length(G, S, g) != b.length(i)) f.add(G.name() + " " + G.to_string(g));
    }
    checked += b.size();
  }
  return f.outcome(std::to_string(checked) + " elements");
}

// b + c sqrt(d) <= a, exactly.
bool plus_sqrt_leq(const Integer& b, const Integer& c, const Integer& d, const Integer& a) {
  if (a < b) return false;
  return c * c * d <= (a - b) * (a - b);
}

Outcome growth() {
  Failures f;
  const WreathGroup g2 = group_of(LampGroup::cyclic(2));
  BallOptions opt;
  opt.element_budget = 40'000'000;
  const std::size_t n = 30;
  const Ball b2 = build_ball(g2, standard_genset(g2), n, opt);
  // phi^n = (L_n + F_n sqrt5) / 2. Within 10%:
  //   9^n (L_n + F_n sqrt5) <= 2 * 10^n |B|  and  2 * 10^n |B| <= 11^n (L_n + F_n sqrt5).
  Integer fib = 0, fib1 = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer next = fib + fib1;
    fib = fib1;
    fib1 = next;
  }
  const Integer lucas = 2 * fib1 - fib;  // L_n = F_{n-1} + F_{n+1} = 2 F_{n+1} - F_n
  const Integer size = b2.size();
  const Integer lhs = 2 * ipow(10, n) * size;
  if (!plus_sqrt_leq(ipow(9, n) * lucas, ipow(9, n) * fib, 5, lhs)) f.add("C2 root below 0.9 phi");
  if (!leq_plus_sqrt(lhs, ipow(11, n) * lucas, ipow(11, n) * fib, 5)) f.add("C2 root above 1.1 phi");

  const WreathGroup g3 = group_of(LampGroup::cyclic(3));
  const auto rep = growth_report(build_ball(g3, standard_genset(g3), 10));
  std::string ratios;
  for (std::size_t r = 8; r <= 10; ++r) {
    const Rational ratio = *rep.rows[r].ratio;
    ratios += (ratios.empty() ? "" : ",") + to_decimal(ratio, 5);
    if (ratio <= 2) f.add("C3 ratio at r=" + std::to_string(r));
  }
  const auto root = growth_report(b2).rows[n].root.value_or(0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "C2 |B(%zu)|^(1/n) = %.6f (phi 1.618034); C3 ratios r=8..10: ", n, root);
  return f.outcome(buf + ratios);
}

Outcome base_bounds() {
  Failures f;
  std::size_t rows = 0;
  for (const auto& [lamps, n] : {std::pair{LampGroup::cyclic(2), std::size_t{12}},
                                  std::pair{LampGroup::cyclic(3), std::size_t{10}}}) {
    const WreathGroup G = group_of(lamps);
    const auto table = check_bounds_against_balls(G, standard_genset(G), n);
    if (table.truncated) f.add(G.name() + " truncated");
    for (const auto& r : table.rows) {
      if (!r.pass) f.add(G.name() + " " + r.bound_name + " n=" + std::to_string(r.n));
    }
    rows += table.rows.size();
    for (const auto& r : bound_chain_rows(lamps, 40)) {
      if (!r.pass) f.add(r.bound_name + " n=" + std::to_string(r.n));
      ++rows;
    }
  }
  return f.outcome(std::to_string(rows) + " rows, chains to n=40");
}

Outcome finite_lamp_bounds() {
  Failures f;
  std::size_t rows = 0;
  for (const char* name : {"S3", "C2xC2"}) {
    const LampGroup lamps = bundled(name);
    const std::uint64_t m = *lamps.order();
    const WreathGroup G = group_of(lamps);
    const Ball b = build_ball(G, standard_genset(G), 6);
    for (std::size_t n = 0; n <= 6; ++n) {
      if (Integer(b.size_upto(n)) < ipow(m, (n + 1) / 2)) f.add(std::string(name) + " lower n=" + std::to_string(n));
    }
    const auto table = check_bounds_against_balls(G, standard_genset(G), 6);
    for (const auto& r : table.rows) {
      if (!r.pass) f.add(std::string(name) + " " + r.bound_name + " n=" + std::to_string(r.n));
    }
    rows += table.rows.size();
  }
  return f.outcome("S3 (m=6), C2xC2 (m=4), n<=6, " + std::to_string(rows) + " rows");
}

Outcome base_density() {
  Failures f;
  auto check = [&](LampGroup lamps, std::size_t a, std::size_t b, std::size_t c) {
    const WreathGroup G = group_of(lamps);
    const auto rep = density_sequence(G, standard_genset(G), c, predicates::in_base());
    const auto& d = rep.rows;
    if (rep.truncated || !(d[c].density < d[b].density && d[b].density < d[a].density)) {
      f.add(G.name() + " not decreasing");
    }
    return G.name() + " " + to_decimal(d[a].density, 4) + " > " + to_decimal(d[b].density, 4) + " > " +
           to_decimal(d[c].density, 4);
  };
  const auto s2 = check(LampGroup::cyclic(2), 4, 8, 16);
  const auto s3 = check(LampGroup::cyclic(3), 3, 6, 10);
  return f.outcome(s2 + "; " + s3);
}

Outcome centralizers() {
  Failures f;
  std::size_t non_base = 0, base = 0;
  for (const auto& lamps : {LampGroup::cyclic(2), LampGroup::cyclic(3)}) {
    const WreathGroup G = group_of(lamps);
    const Ball b = build_ball(G, standard_genset(G), 6);
    for (std::size_t i = 1; i < b.size(); ++i) {
      const auto g = b.element(i);
      const auto rep = centralizer_in_ball(g, b);
      if (g.in_base()) {
        ++base;
        for (const auto& m : rep.members) {
          if (!m.in_base()) f.add(G.to_string(g) + " has non-base centralizer member");
        }
      } else {
        ++non_base;
        const auto check = verify_cyclic_structure(G, rep);
        if (!check.ok) f.add(G.to_string(g) + ": " + check.reason);
        if (!centralizer_linear_bound_check(rep, 1)) f.add(G.to_string(g) + " exceeds 2n+1");
        if (rep.members.size() > 13) f.add(G.to_string(g) + " more than 13 members");
      }
    }
  }
  return f.outcome(std::to_string(non_base) + " non-base, " + std::to_string(base) + " base elements in B(6)");
}

Outcome translation_lengths() {
  Failures f;
  const WreathGroup g2 = group_of(LampGroup::cyclic(2));
  const auto tt = translation_estimate(g2, standard_genset(g2), g2.t());
  if (tt.estimate != 1 || tt.samples.back().exponent != 64) f.add("tau(t) = " + str(tt.estimate));

  std::mt19937_64 rng(20261016);
  const LampGroup pool[] = {LampGroup::cyclic(2), LampGroup::cyclic(3), LampGroup::integers(), bundled("S3")};
  for (int i = 0; i < 200; ++i) {
    const LampGroup& lamps = pool[i % 4];
    const WreathGroup G = group_of(lamps);
    std::uniform_int_distribution<int> count(0, 4), pos(-5, 5), shift(-4, 4);
    std::vector<Lamp> ls;
    const int c = count(rng);
    for (int j = 0; j < c; ++j) {
      const std::int64_t v = lamps.order() ? static_cast<std::int64_t>(rng() % *lamps.order())
                                           : static_cast<std::int64_t>(rng() % 7) - 3;
      const std::int64_t p = pos(rng);
      bool dup = false;
      for (const auto& l : ls) dup = dup || l.position == p;
      if (v != 0 && !dup) ls.push_back({p, v});
    }
    std::sort(ls.begin(), ls.end());
    const auto g = G.element(ls, shift(rng));
    const auto est = translation_estimate(G, standard_genset(G), g);
    if (est.estimate < Integer(est.shift_bound)) f.add(G.to_string(g));
  }

  std::size_t base_checked = 0, raw_nonzero = 0;
  for (const auto& lamps : {LampGroup::cyclic(2), LampGroup::cyclic(3), bundled("S3"), bundled("Q8")}) {
    const WreathGroup G = group_of(lamps);
    const auto S = standard_genset(G);
    const Ball b = build_ball(G, S, lamps.kind() == LampGroup::Kind::table ? 4 : 6);
    for (std::size_t i = 0; i < b.size(); ++i) {
      const auto g = b.element(i);
      if (!g.in_base()) continue;
      const auto est = translation_estimate(G, S, g);
      ++base_checked;
      raw_nonzero += est.samples.back().ratio != 0;
      if (!est.torsion || est.estimate != 0) f.add(G.to_string(g) + " tau " + str(est.estimate));
    }
  }
  return f.outcome("tau(t) = 1; 200 random; " + std::to_string(base_checked) + " base elements torsion with tau 0 (" +
                   std::to_string(raw_nonzero) + " with |g^64| > 0)");
}

Outcome dc_engine() {
  Failures f;
  struct Case {
    LampGroup lamps;
    std::size_t n;
  };
  for (const auto& c : {Case{LampGroup::cyclic(2), 12}, Case{LampGroup::cyclic(3), 10},
                        Case{LampGroup::integers(), 9}, Case{bundled("S3"), 6}}) {
    const WreathGroup G = group_of(c.lamps);
    const Ball b = build_ball(G, standard_genset(G), c.n);
    const auto naive = commuting_pairs_naive(b);
    const auto structured = commuting_pairs_structured(b);
    for (std::size_t r = 0; r <= c.n; ++r) {
      if (naive[r] != structured[r]) f.add(G.name() + " r=" + std::to_string(r));
    }
  }

  const WreathGroup g2 = group_of(LampGroup::cyclic(2));
  const Ball b = build_ball(g2, standard_genset(g2), 12);
  const auto rep = dc_report(b, PairMethod::structured);
  if (rep.rows[0].dc != 1) f.add("dc(0) = " + str(rep.rows[0].dc));
  if (rep.rows[1].dc != Rational(3, 4)) f.add("dc(1) = " + str(rep.rows[1].dc));
  if (!(rep.rows[12].dc < rep.rows[6].dc)) f.add("dc(12) >= dc(6)");

  using clock = std::chrono::steady_clock;
  auto time_it = [&](PairMethod m) {
    const auto start = clock::now();
    commuting_pairs(b, m);
    return std::chrono::duration<double>(clock::now() - start).count();
  };
  double naive_s = 1e300, structured_s = 1e300;
  for (int rep_i = 0; rep_i < 3; ++rep_i) {
    naive_s = std::min(naive_s, time_it(PairMethod::naive));
    structured_s = std::min(structured_s, time_it(PairMethod::structured));
  }
  const double speedup = naive_s / structured_s;
  if (!(speedup >= 5)) f.add("speedup only " + std::to_string(speedup));
  char buf[160];
  std::snprintf(buf, sizeof buf, "four backends agree; dc(12) = %s < dc(6) = %s; C2 n=12 naive %.3fs, structured %.4fs (%.0fx)",
                to_decimal(rep.rows[12].dc, 6).c_str(), to_decimal(rep.rows[6].dc, 6).c_str(), naive_s, structured_s,
                speedup);
  return f.outcome(buf);
}

Outcome finite_dc() {
  Failures f;
  std::string summary;
  const std::pair<const char*, Rational> expected[] = {
      {"C2", 1}, {"C2xC2", 1}, {"S3", Rational(1, 2)}, {"D4", Rational(5, 8)}, {"Q8", Rational(5, 8)}};
  for (const auto& [name, want] : expected) {
    const auto t = FiniteGroupTable::load(std::string(WREATH_TABLE_DIR) + "/" + name + ".txt");
    const auto d = dc_finite_group(t);
    if (d.by_pairs != d.by_classes) f.add(std::string(name) + " pairs != classes");
    if (d.by_pairs != want) f.add(std::string(name) + " dc " + str(d.by_pairs));
    summary += (summary.empty() ? "" : ", ") + std::string(name) + " " + str(d.by_pairs);
  }
  return f.outcome(summary);
}

Outcome conjugacy() {
  Failures f;
  std::string summary;
  for (const auto& [lamps, n] : {std::pair{LampGroup::cyclic(2), std::size_t{8}},
                                  std::pair{LampGroup::cyclic(3), std::size_t{6}}}) {
    const WreathGroup G = group_of(lamps);
    ConjugacyOptions opt;
    opt.conjugator_radius = 8;
    const auto rep = conjugacy_dc_sequence(G, standard_genset(G), n, opt);
    if (rep.truncated) f.add(G.name() + " truncated");
    if (!rep.comparison || !rep.comparison->saturation_refines_invariant) f.add(G.name() + " saturation merged distinct keys");
    if (!rep.comparison || !rep.comparison->invariant_pairs_merged) f.add(G.name() + " equal keys left unmerged");
    for (const auto& w : rep.findings) f.add(w);
    if (rep.dc.rows.size() != n + 1) f.add(G.name() + " dc sequence missing");
    const auto& last = rep.rows[n];
    summary += (summary.empty() ? "" : "; ") + G.name() + " B(" + std::to_string(n) + "): classes/|B| " +
               to_decimal(last.ratio, 5) + ", dc " + to_decimal(rep.dc.rows[n].dc, 5);
  }
  return f.outcome(summary);
}

Outcome determinism() {
  Failures f;
  struct Cmd {
    std::string command, group;
    std::size_t radius;
    std::optional<std::string> element, method;
  };
  const Cmd cmds[] = {{"ball", "C3wrZ", 7, {}, {}},
                      {"growth", "C2wrZ", 12, {}, {}},
                      {"dc", "C2wrZ", 10, {}, {}},
                      {"dc", "table:S3wrZ", 4, {}, "naive"},
                      {"conj-dc", "C3wrZ", 5, {}, {}},
                      {"centralizer", "C2wrZ", 6, "a0*t", {}},
                      {"centralizer", "ZwrZ", 4, {}, {}},
                      {"tau", "C3wrZ", 0, "a0*t^2", {}},
                      {"bounds", "C2wrZ", 9, {}, {}},
                      {"comb", "", 10, {}, {}},
                      {"density", "C2wrZ", 10, {}, {}}};
  std::size_t outputs = 0;
  for (const auto& c : cmds) {
    for (const auto fmt : {cli::Format::csv, cli::Format::json}) {
      cli::RunConfig cfg;
      cfg.command = c.command;
      cfg.group = c.group;
      if (c.radius) cfg.radius = c.radius;
      cfg.element = c.element;
      cfg.method = c.method;
      cfg.format = fmt;
      cfg.conjugator_radius = 5;
      cfg.workers = 1;
      const auto one = cli::run(cfg);
      cfg.workers = 4;
      const auto four = cli::run(cfg);
      if (one.exit_code != 0 || four.exit_code != 0) f.add(c.command + " exit " + std::to_string(one.exit_code));
      if (one.output != four.output || one.output.empty()) f.add(c.command + " output differs");
      ++outputs;
    }
  }
  return f.outcome(std::to_string(outputs) + " outputs byte-identical for 1 and 4 workers");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"compositions", compositions},
      {"geodesic formula", geodesic_formula},
      {"growth rate", growth},
      {"base bounds", base_bounds},
      {"finite-lamp bounds", finite_lamp_bounds},
      {"base density", base_density},
      {"centralizers", centralizers},
      {"translation lengths", translation_lengths},
      {"dc engine", dc_engine},
      {"finite-group dc", finite_dc},
      {"conjugacy partitions", conjugacy},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("criterion %2zu %-22s %s  [%.1fs] %s\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL",
                secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}

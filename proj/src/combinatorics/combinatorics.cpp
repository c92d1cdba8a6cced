#include "wreath/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/multiprecision/integer.hpp>

namespace wreath {

namespace {

Integer pow2(std::size_t e) { return Integer(1) << e; }

// 10^40 fixed point is far finer than any printed digit.
const Integer kScale = ipow(10, 40);

Enclosure sqrt_enclosure(std::uint64_t d, const std::string& label) {
  const Integer root = boost::multiprecision::sqrt(Integer(d) * kScale * kScale);
  return {label, Rational(root, kScale), Rational(root + 1, kScale)};
}

Enclosure power_enclosure(const Enclosure& x, std::size_t n, const Integer& factor, const std::string& label) {
  Rational lo = factor, hi = factor;
  for (std::size_t i = 0; i < n; ++i) {
    lo *= x.lo;
    hi *= x.hi;
  }
  return {label, lo, hi};
}

// phi^k = (L_k + F_k sqrt 5) / 2.
std::pair<Integer, Integer> lucas_fibonacci(std::size_t k) {
  Integer l0 = 2, l1 = 1, f0 = 0, f1 = 1;
  for (std::size_t i = 0; i < k; ++i) {
    Integer l2 = l0 + l1, f2 = f0 + f1;
    l0 = l1;
    l1 = l2;
    f0 = f1;
    f1 = f2;
  }
  return {l0, f0};
}

bool sum_le_4sqrt2_pow(const Integer& sum, std::size_t n) {
  if (n % 2 == 0) return sum <= 4 * pow2(n / 2);
  return leq_plus_sqrt(sum, 0, 4 * pow2((n - 1) / 2), 2);
}

// sqrt(2)^n <= phi^n  <=>  2^(n+1) <= L_2n + F_2n sqrt 5.
bool sqrt2_pow_le_phi_pow(std::size_t n) {
  const auto [l, f] = lucas_fibonacci(2 * n);
  return leq_plus_sqrt(pow2(n + 1), l, f, 5);
}

std::string render(const Integer& x) { return to_decimal(x); }
std::string render(const Enclosure& e) { return e.label + "~" + to_decimal(e.hi, 12); }

const NamedValue& alternate(const BoundProfile& p, const std::string& label) {
  for (const auto& a : p.alternates)
    if (a.label == label) return a;
  throw InvariantViolation("bound profile " + p.name + " has no value " + label);
}

void fill_weak(std::int64_t remaining, std::int64_t parts, Composition& prefix, std::vector<Composition>& out) {
  if (parts == 1) {
    prefix.push_back(static_cast<std::uint32_t>(remaining));
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::int64_t first = 0; first <= remaining; ++first) {
    prefix.push_back(static_cast<std::uint32_t>(first));
    fill_weak(remaining - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

// Per-radius base counts, including the A_s layers of every B(r).
struct BaseCounts {
  std::vector<std::uint64_t> shell_base, shell_nonneg;
  std::vector<std::map<std::int64_t, std::uint64_t>> layer_shell;  // r -> g_min -> count (non-identity)

  explicit BaseCounts(const Ball& ball)
      : shell_base(ball.radius() + 1, 0), shell_nonneg(ball.radius() + 1, 0), layer_shell(ball.radius() + 1) {
    for (std::size_t r = 0; r <= ball.radius(); ++r) {
      for (std::size_t i = ball.shell_begin(r); i < ball.shell_end(r); ++i) {
        const WreathElement g = ball.element(i);
        if (!g.in_base()) continue;
        ++shell_base[r];
        const auto ext = support_extrema(g);
        if (!ext.min || *ext.min >= 0) ++shell_nonneg[r];
        if (ext.min) ++layer_shell[r][*ext.min];
      }
    }
  }

  std::uint64_t base_upto(std::size_t n) const { return sum_upto(shell_base, n); }
  std::uint64_t nonneg_upto(std::size_t n) const { return sum_upto(shell_nonneg, n); }
  std::map<std::int64_t, std::uint64_t> layers_upto(std::size_t n) const {
    std::map<std::int64_t, std::uint64_t> out;
    for (std::size_t r = 0; r <= n; ++r)
      for (const auto& [s, c] : layer_shell[r]) out[s] += c;
    return out;
  }

 private:
  static std::uint64_t sum_upto(const std::vector<std::uint64_t>& v, std::size_t n) {
    std::uint64_t s = 0;
    for (std::size_t r = 0; r <= n; ++r) s += v[r];
    return s;
  }
};

BoundCheckRow upper_row(std::string name, std::size_t n, const Integer& exact, const Integer& bound) {
  return {std::move(name), n, render(exact), render(bound), exact <= bound};
}

}  // namespace

Integer count_compositions(std::int64_t n) {
  if (n < 1) throw InputError("compositions need n >= 1, got " + std::to_string(n));
  return pow2(static_cast<std::size_t>(n - 1));
}

std::vector<Composition> enumerate_compositions(std::int64_t n) {
  if (n < 1) throw InputError("compositions need n >= 1, got " + std::to_string(n));
  if (n > kMaxEnumeratedComposition) {
    throw ResourceError("enumerating compositions of " + std::to_string(n) + " exceeds the limit n <= " +
                            std::to_string(kMaxEnumeratedComposition),
                        0);
  }
  const auto gaps = static_cast<unsigned>(n - 1);
  std::vector<Composition> out;
  out.reserve(std::size_t{1} << gaps);
  for (std::uint32_t mask = 0; mask < (1u << gaps); ++mask) {
    Composition c;
    std::uint32_t run = 1;
    for (unsigned j = 0; j < gaps; ++j) {
      if (mask >> j & 1u) {
        c.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    c.push_back(run);
    out.push_back(std::move(c));
  }
  return out;
}

Integer count_weak_compositions(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 1) {
    throw InputError("weak compositions need n >= 0 and k >= 1, got n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
  }
  return binomial(n + k - 1, k - 1);
}

std::vector<Composition> enumerate_weak_compositions(std::int64_t n, std::int64_t k) {
  count_weak_compositions(n, k);  // validates
  std::vector<Composition> out;
  Composition prefix;
  fill_weak(n, k, prefix, out);
  return out;
}

Composition composition_to_weak(const Composition& c) {
  Composition w(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) throw InputError("composition parts must be positive");
    w[i] = c[i] - 1;
  }
  return w;
}

Composition weak_to_composition(const Composition& w) {
  Composition c(w.size());
  std::transform(w.begin(), w.end(), c.begin(), [](std::uint32_t x) { return x + 1; });
  return c;
}

bool verify_weak_composition_bijection(std::int64_t n, std::int64_t k) {
  const auto targets = enumerate_weak_compositions(n, k);
  const std::set<Composition> target_set(targets.begin(), targets.end());
  std::set<Composition> image;
  std::size_t sources = 0;
  for (const auto& c : enumerate_compositions(n + k)) {
    if (static_cast<std::int64_t>(c.size()) != k) continue;
    ++sources;
    const Composition w = composition_to_weak(c);
    if (!target_set.count(w) || weak_to_composition(w) != c) return false;
    image.insert(w);
  }
  return sources == image.size() && image == target_set;
}

BoundProfile bound_base_C2(std::size_t n) {
  BoundProfile p;
  p.name = "C2_base_A0";
  p.n = n;
  p.parameter = 2;
  p.quantity = "|B(n) ∩ A_0|";
  for (std::size_t j = 0; j <= n / 2; ++j) p.value += pow2(j + 1);
  const Enclosure s2 = sqrt_enclosure(2, "sqrt2");
  Enclosure phi = sqrt_enclosure(5, "phi");
  phi.lo = (phi.lo + 1) / 2;
  phi.hi = (phi.hi + 1) / 2;
  p.comparisons.push_back(power_enclosure(s2, n, 4, "4*sqrt(2)^n"));
  p.comparisons.push_back(power_enclosure(phi, n, 4, "4*phi^n"));
  p.chain_holds = sum_le_4sqrt2_pow(p.value, n) && sqrt2_pow_le_phi_pow(n);
  return p;
}

BoundProfile bound_base_Cq_shell(std::size_t n) {
  BoundProfile p;
  p.name = "Cq_shell_A0";
  p.n = n;
  p.quantity = "|(B(n) \\ B(n-1)) ∩ A_0|";
  const auto m = static_cast<std::int64_t>(n);
  for (std::int64_t k = 0; k <= m / 2; ++k) p.value += binomial(m + 1, 2 * k + 1);
  Integer cumulative = 0;
  for (std::size_t j = 0; j <= n; ++j) cumulative += Integer(j + 1) * pow2(j);
  p.alternates = {{"full_binomial_sum", pow2(n + 1)},
                  {"stated_2^n", pow2(n)},
                  {"shell_A", Integer(n + 1) * pow2(n)},
                  {"ball_A", cumulative}};
  p.chain_holds = p.value == pow2(n) && p.value <= pow2(n + 1);
  return p;
}

std::pair<BoundProfile, BoundProfile> bound_FwrZ(std::size_t n, std::uint64_t m) {
  if (n < 1 || m < 2) {
    throw InputError("F wr Z bounds need n >= 1 and m >= 2, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
  BoundProfile lower;
  lower.name = "FwrZ_ball_lower";
  lower.n = n;
  lower.parameter = m;
  lower.direction = BoundDirection::lower;
  lower.quantity = "|B(n)|";
  lower.value = ipow(m, (n + 1) / 2);

  BoundProfile upper;
  upper.name = "FwrZ_shell_A0";
  upper.n = n;
  upper.parameter = m;
  upper.quantity = "|(B(n) \\ B(n-1)) ∩ A_0|";
  upper.value = ipow(m - 1, 2) * ipow(m, n / 3);
  Integer sum = 0;
  const auto nn = static_cast<std::int64_t>(n);
  for (std::int64_t k = (nn - 1) / 3; k <= nn - 1; ++k) {
    if (nn - 2 * k < 0) continue;  // binomial with negative lower index
    sum += binomial(k + 1, nn - 2 * k) * ipow(m - 1, static_cast<std::uint64_t>(nn - 2 * k));
  }
  upper.alternates = {{"binomial_sum", sum}, {"shell_A_inflated", Integer(n + 1) * upper.value}};
  upper.chain_holds = sum <= upper.value;
  return {lower, upper};
}

bool BoundCheckTable::all_pass() const { return first_failure() == nullptr; }

const BoundCheckRow* BoundCheckTable::first_failure() const {
  for (const auto& r : rows)
    if (!r.pass) return &r;
  return nullptr;
}

BoundCheckTable check_bounds_against_balls(const WreathGroup& group, const GeneratorSet& gens, std::size_t n_max,
                                           const BallOptions& options) {
  BoundCheckTable table;
  table.group = group.name();
  table.generators = gens.describe();
  std::shared_ptr<const Ball> ball;
  try {
    ball = std::make_shared<const Ball>(build_ball(group, gens, n_max, options));
  } catch (const BallBudgetExceeded& e) {
    ball = e.partial();
    table.truncated = true;
  }
  const BaseCounts counts(*ball);
  const LampGroup& lamps = group.lamps();
  const bool c2 = lamps.kind() == LampGroup::Kind::cyclic && lamps.order() == 2u;
  const bool cq = !c2 && lamps.kind() != LampGroup::Kind::table;

  for (std::size_t n = 0; n <= ball->radius(); ++n) {
    const Integer a0 = counts.nonneg_upto(n);
    const Integer a = counts.base_upto(n);
    const Integer shell_a0 = counts.shell_nonneg[n];
    const Integer shell_a = counts.shell_base[n];

    table.rows.push_back(upper_row("base_A_le_(n+1)A0", n, a, Integer(n + 1) * a0));
    const auto layers = counts.layers_upto(n);
    Integer worst = 0;
    Integer below = 0;
    for (const auto& [s, c] : layers) {
      if (s < 0) worst = std::max(worst, Integer(c));
      if (n > 0 && s <= -static_cast<std::int64_t>(n)) below += c;
    }
    table.rows.push_back(upper_row("negative_layer_le_A0", n, worst, a0));
    if (n > 0) table.rows.push_back(upper_row("layer_le_-n_empty", n, below, 0));

    if (c2) {
      const BoundProfile p = bound_base_C2(n);
      table.rows.push_back(upper_row(p.name, n, a0, p.value));
      table.rows.push_back(upper_row("C2_base_A", n, a, Integer(n + 1) * p.value));
    }
    if (cq) {
      const BoundProfile p = bound_base_Cq_shell(n);
      table.rows.push_back(upper_row(p.name, n, shell_a0, p.value));
      table.rows.push_back(upper_row("Cq_shell_A0_stated", n, shell_a0, alternate(p, "stated_2^n").value));
      table.rows.push_back(upper_row("Cq_shell_A0_full_sum", n, shell_a0, alternate(p, "full_binomial_sum").value));
      table.rows.push_back(upper_row("Cq_shell_A", n, shell_a, alternate(p, "shell_A").value));
      table.rows.push_back(upper_row("Cq_ball_A", n, a, alternate(p, "ball_A").value));
    }
    if (lamps.kind() == LampGroup::Kind::table && n >= 1) {
      const auto [lower, upper] = bound_FwrZ(n, *lamps.order());
      const Integer size = ball->size_upto(n);
      table.rows.push_back({lower.name, n, render(size), render(lower.value), size >= lower.value});
      table.rows.push_back(upper_row("FwrZ_shell_A0_sum", n, shell_a0, alternate(upper, "binomial_sum").value));
      table.rows.push_back(upper_row(upper.name, n, shell_a0, upper.value));
      table.rows.push_back(upper_row("FwrZ_shell_A_inflated", n, shell_a, alternate(upper, "shell_A_inflated").value));
    }
  }
  return table;
}

std::vector<BoundCheckRow> bound_chain_rows(const LampGroup& lamps, std::size_t n_max) {
  std::vector<BoundCheckRow> rows;
  const bool c2 = lamps.kind() == LampGroup::Kind::cyclic && lamps.order() == 2u;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (c2) {
      const BoundProfile p = bound_base_C2(n);
      rows.push_back({"C2_sum_le_4sqrt2^n", n, render(p.value), render(p.comparisons[0]), sum_le_4sqrt2_pow(p.value, n)});
      rows.push_back({"C2_4sqrt2^n_le_4phi^n", n, render(p.comparisons[0]), render(p.comparisons[1]),
                      sqrt2_pow_le_phi_pow(n)});
    } else if (lamps.kind() != LampGroup::Kind::table) {
      const BoundProfile p = bound_base_Cq_shell(n);
      rows.push_back({"Cq_odd_sum_eq_2^n", n, render(p.value), render(pow2(n)), p.value == pow2(n)});
      rows.push_back(upper_row("Cq_odd_sum_le_full_sum", n, p.value, alternate(p, "full_binomial_sum").value));
    } else if (n >= 1) {
      const auto [lower, upper] = bound_FwrZ(n, *lamps.order());
      rows.push_back(upper_row("FwrZ_sum_le_closed_form", n, alternate(upper, "binomial_sum").value, upper.value));
    }
  }
  return rows;
}

}  // namespace wreath

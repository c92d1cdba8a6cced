#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "wreath/ball.hpp"
#include "wreath/combinatorics.hpp"

using namespace wreath;

namespace {

// Compositions by choosing the first part and recursing on the rest.
void compositions_oracle(std::uint32_t n, Composition& prefix, std::set<Composition>& out) {
  if (n == 0) {
    out.insert(prefix);
    return;
  }
  for (std::uint32_t first = 1; first <= n; ++first) {
    prefix.push_back(first);
    compositions_oracle(n - first, prefix, out);
    prefix.pop_back();
  }
}

// Weak compositions by counting through all vectors in [0, n]^k.
std::set<Composition> weak_oracle(std::uint32_t n, std::size_t k) {
  std::set<Composition> out;
  Composition v(k, 0);
  while (true) {
    std::uint32_t sum = 0;
    for (auto x : v) sum += x;
    if (sum == n) out.insert(v);
    std::size_t i = 0;
    while (i < k && v[i] == n) v[i++] = 0;
    if (i == k) break;
    ++v[i];
  }
  return out;
}

Integer binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Integer ipow(Integer b, std::size_t e) {
  Integer r = 1;
  while (e--) r *= b;
  return r;
}

// First n at which the F wr Z binomial sum exceeds (m-1)^2 m^floor(n/3).
std::optional<std::size_t> fwrz_first_excess(std::uint64_t m, std::size_t n_max) {
  for (std::size_t n = 1; n <= n_max; ++n) {
    Integer sum = 0;
    const auto nn = static_cast<std::int64_t>(n);
    for (std::int64_t k = (nn - 1) / 3; k <= nn - 1; ++k) {
      if (nn - 2 * k < 0) continue;
      sum += binom(k + 1, nn - 2 * k) * ipow(Integer(m - 1), static_cast<std::size_t>(nn - 2 * k));
    }
    if (sum > ipow(Integer(m - 1), 2) * ipow(Integer(m), n / 3)) return n;
  }
  return std::nullopt;
}

std::size_t base_count(const Ball& b, std::size_t r, bool shell_only, bool zero_shift_lamps_only) {
  std::size_t c = 0;
  const std::size_t lo = shell_only ? b.shell_begin(r) : 0;
  for (std::size_t i = lo; i < b.shell_end(r); ++i) {
    const auto g = b.element(i);
    if (!g.in_base()) continue;
    if (zero_shift_lamps_only) {
      // A_0: base elements whose lamps all sit at positions >= 0.
      const auto lamps = g.lamps();
      if (!lamps.empty() && lamps.front().position < 0) continue;
    }
    ++c;
  }
  return c;
}

}  // namespace

TEST_SUITE("combinatorics") {

TEST_CASE("composition examples") {
  CHECK(count_compositions(1) == 1);
  CHECK(count_compositions(4) == 8);
  CHECK(count_compositions(64) == Integer(1) << 63);
  const auto four = enumerate_compositions(4);
  CHECK(four.size() == 8);
  CHECK(four.front() == Composition{4});
  CHECK(std::find(four.begin(), four.end(), Composition{1, 2, 1}) != four.end());
  CHECK(count_weak_compositions(0, 3) == 1);
  CHECK(count_weak_compositions(3, 2) == 4);
  CHECK(enumerate_weak_compositions(2, 2) ==
        std::vector<Composition>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("compositions match an independent enumeration") {
  for (std::int64_t n = 1; n <= 14; ++n) {
    CAPTURE(n);
    std::set<Composition> expected;
    Composition prefix;
    compositions_oracle(static_cast<std::uint32_t>(n), prefix, expected);
    const auto got = enumerate_compositions(n);
    CHECK(std::set<Composition>(got.begin(), got.end()) == expected);
    CHECK(got.size() == expected.size());
    CHECK(count_compositions(n) == expected.size());
  }
}

TEST_CASE("weak compositions match an independent enumeration") {
  for (std::uint32_t n = 0; n <= 7; ++n) {
    for (std::size_t k = 1; k <= 4; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const auto expected = weak_oracle(n, k);
      const auto got = enumerate_weak_compositions(n, static_cast<std::int64_t>(k));
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(std::set<Composition>(got.begin(), got.end()) == expected);
      CHECK(got.size() == expected.size());
      CHECK(count_weak_compositions(n, static_cast<std::int64_t>(k)) == expected.size());
    }
  }
}

TEST_CASE("the shift-by-one bijection") {
  CHECK(composition_to_weak({1, 3, 1}) == Composition{0, 2, 0});
  CHECK(weak_to_composition({0, 2, 0}) == Composition{1, 3, 1});
  CHECK_THROWS_AS(composition_to_weak({2, 0}), InputError);
  for (std::int64_t n = 0; n <= 8; ++n) {
    for (std::int64_t k = 1; k <= 5; ++k) CHECK(verify_weak_composition_bijection(n, k));
  }
  for (const auto& w : enumerate_weak_compositions(5, 3)) CHECK(composition_to_weak(weak_to_composition(w)) == w);
}

TEST_CASE("composition input errors") {
  CHECK_THROWS_AS(count_compositions(0), InputError);
  CHECK_THROWS_AS(enumerate_compositions(0), InputError);
  CHECK_THROWS_AS(enumerate_compositions(kMaxEnumeratedComposition + 1), ResourceError);
  CHECK_THROWS_AS(count_weak_compositions(-1, 2), InputError);
  CHECK_THROWS_AS(count_weak_compositions(2, 0), InputError);
  CHECK_THROWS_AS(bound_FwrZ(0, 2), InputError);
  CHECK_THROWS_AS(bound_FwrZ(3, 1), InputError);
}

TEST_CASE("bound profile examples") {
  const auto c0 = bound_base_C2(0);
  CHECK(c0.value == 2);
  CHECK(c0.direction == BoundDirection::upper);
  CHECK(bound_base_C2(2).value == 6);
  CHECK(bound_base_C2(5).value == 2 + 4 + 8);
  CHECK(bound_base_Cq_shell(0).value == 1);
  CHECK(bound_base_Cq_shell(3).value == 8);
  for (std::size_t n = 0; n <= 20; ++n) {
    // Odd binomial coefficients of n + 1 sum to 2^n.
    CHECK(bound_base_Cq_shell(n).value == Integer(1) << n);
  }
  const auto [lo2, hi2] = bound_FwrZ(2, 2);
  CHECK(lo2.direction == BoundDirection::lower);
  CHECK(lo2.value == 2);
  CHECK(hi2.value == 1);
  const auto [lo6, hi6] = bound_FwrZ(1, 6);
  CHECK(lo6.value == 6);
  CHECK(hi6.value == 25);
}

TEST_CASE("enclosures are tight and ordered") {
  for (std::size_t n = 0; n <= 40; n += 5) {
    const auto p = bound_base_C2(n);
    REQUIRE(p.comparisons.size() == 2);
    for (const auto& e : p.comparisons) {
      CHECK(e.lo <= e.hi);
      CHECK(e.hi - e.lo < Rational(1, 1000000));
    }
    CHECK(Rational(p.value) <= p.comparisons[0].hi);
    CHECK(p.comparisons[0].lo <= p.comparisons[1].hi);
  }
}

TEST_CASE("C2 and Cq chains hold through n = 40") {
  for (std::size_t n = 0; n <= 40; ++n) {
    CAPTURE(n);
    CHECK(bound_base_C2(n).chain_holds);
    CHECK(bound_base_Cq_shell(n).chain_holds);
  }
  for (const auto& lamps : {LampGroup::cyclic(2), LampGroup::cyclic(5), LampGroup::integers()}) {
    for (const auto& row : bound_chain_rows(lamps, 40)) {
      CAPTURE(row.bound_name);
      CAPTURE(row.n);
      CHECK(row.pass);
    }
  }
}

TEST_CASE("F wr Z chain agrees with direct evaluation") {
  for (std::uint64_t m : {2u, 3u, 4u, 6u, 8u}) {
    CAPTURE(m);
    const auto first = fwrz_first_excess(m, 40);
    std::optional<std::size_t> got;
    for (std::size_t n = 1; n <= 40 && !got; ++n) {
      if (!bound_FwrZ(n, m).second.chain_holds) got = n;
    }
    CHECK(got == first);
  }
  // Frozen from the direct evaluation above.
  CHECK(fwrz_first_excess(2, 40) == std::optional<std::size_t>(5));
  CHECK(fwrz_first_excess(3, 40) == std::optional<std::size_t>(14));
  CHECK(fwrz_first_excess(4, 40) == std::optional<std::size_t>(26));
  CHECK(fwrz_first_excess(6, 40) == std::optional<std::size_t>(38));
}

TEST_CASE("profiles are monotone") {
  for (std::size_t n = 1; n <= 30; ++n) {
    CHECK(bound_base_C2(n).value >= bound_base_C2(n - 1).value);
    CHECK(bound_base_Cq_shell(n).value > bound_base_Cq_shell(n - 1).value);
    if (n >= 2) CHECK(bound_FwrZ(n, 6).first.value >= bound_FwrZ(n - 1, 6).first.value);
  }
}

TEST_CASE("C2 base bound against ball counts") {
  const WreathGroup g2(LampGroup::cyclic(2));
  const Ball b = build_ball(g2, standard_genset(g2), 10);
  CHECK(base_count(b, 2, false, true) == 2);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(bound_base_C2(n).value >= base_count(b, n, false, true));
}

TEST_CASE("ball checks pass where the bounds apply") {
  struct Case {
    LampGroup lamps;
    std::size_t n;
  };
  for (const auto& c : {Case{LampGroup::cyclic(2), 10}, Case{LampGroup::cyclic(3), 8},
                        Case{LampGroup::integers(), 7}, Case{LampGroup::table(tables::symmetric3()), 5}}) {
    CAPTURE(c.lamps.name());
    const WreathGroup G(c.lamps);
    const auto table = check_bounds_against_balls(G, standard_genset(G), c.n);
    CHECK_FALSE(table.truncated);
    CHECK_FALSE(table.rows.empty());
    const auto* bad = table.first_failure();
    CHECK_MESSAGE(table.all_pass(), (bad ? bad->bound_name + " n=" + std::to_string(bad->n) : std::string()));
  }
}

TEST_CASE("row sets depend on the lamp group") {
  auto names = [](const BoundCheckTable& t) {
    std::set<std::string> out;
    for (const auto& r : t.rows) out.insert(r.bound_name);
    return out;
  };
  const WreathGroup g2(LampGroup::cyclic(2));
  const auto n2 = names(check_bounds_against_balls(g2, standard_genset(g2), 3));
  CHECK(n2.count("C2_base_A0"));
  CHECK_FALSE(n2.count("Cq_shell_A0"));
  const WreathGroup gs(LampGroup::table(tables::symmetric3()));
  const auto ns = names(check_bounds_against_balls(gs, standard_genset(gs), 2));
  CHECK(ns.count("FwrZ_ball_lower"));
  CHECK(ns.count("base_A_le_(n+1)A0"));
  CHECK_FALSE(ns.count("C2_base_A0"));
}

}  // TEST_SUITE

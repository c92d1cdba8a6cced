#pragma once
// Reference implementations used only by the tests. They share no code with
// the library beyond the public element accessors.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "wreath/finite_group_table.hpp"
#include "wreath/wreath_group.hpp"

namespace oracle {

/// Lamp arithmetic as plain functions: values are ints, 0 is the identity.
struct Lamps {
  std::function<std::int64_t(std::int64_t, std::int64_t)> mul;
  std::function<std::int64_t(std::int64_t)> inv;

  static Lamps cyclic(std::int64_t q) {
    return {[q](std::int64_t a, std::int64_t b) { return ((a + b) % q + q) % q; },
            [q](std::int64_t a) { return (q - a) % q; }};
  }
  static Lamps integers() {
    return {[](std::int64_t a, std::int64_t b) { return a + b; }, [](std::int64_t a) { return -a; }};
  }
  static Lamps table(const wreath::FiniteGroupTable& t) {
    return {[t](std::int64_t a, std::int64_t b) {
              return static_cast<std::int64_t>(t.product(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)));
            },
            [t](std::int64_t a) { return static_cast<std::int64_t>(t.inverse(static_cast<std::uint32_t>(a))); }};
  }
};

/// (f, k) with f stored as a map; zero entries are erased on every write.
struct Elem {
  std::map<std::int64_t, std::int64_t> f;
  std::int64_t k = 0;
  bool operator==(const Elem&) const = default;
  bool operator<(const Elem& o) const { return std::tie(k, f) < std::tie(o.k, o.f); }
};

inline void set(Elem& e, std::int64_t pos, std::int64_t v) {
  if (v == 0) {
    e.f.erase(pos);
  } else {
    e.f[pos] = v;
  }
}

// (f, k)(f', k') = (i -> f(i) f'(i - k), k + k').
inline Elem mul(const Lamps& L, const Elem& a, const Elem& b) {
  Elem out = a;
  out.k = a.k + b.k;
  for (const auto& [pos, v] : b.f) {
    const std::int64_t p = pos + a.k;
    const auto it = a.f.find(p);
    set(out, p, L.mul(it == a.f.end() ? 0 : it->second, v));
  }
  return out;
}

// Solves (f, k)(g, -k) = e directly: g(i - k) = f(i)^-1.
inline Elem inv(const Lamps& L, const Elem& a) {
  Elem out;
  out.k = -a.k;
  for (const auto& [pos, v] : a.f) set(out, pos - a.k, L.inv(v));
  return out;
}

inline Elem from(const wreath::WreathElement& g) {
  Elem e;
  e.k = g.shift();
  for (const auto& l : g.lamps()) e.f[l.position] = l.value;
  return e;
}

inline wreath::WreathElement to(const wreath::WreathGroup& G, const Elem& e) {
  std::vector<wreath::Lamp> lamps;
  for (const auto& [p, v] : e.f) lamps.push_back({p, v});
  return G.element(lamps, e.k);
}

/// Distances of every element reachable by a word of length <= n over
/// `alphabet`, found by extending all words one letter at a time.
inline std::map<Elem, int> word_ball(const Lamps& L, const std::vector<Elem>& alphabet, int n) {
  std::map<Elem, int> dist{{Elem{}, 0}};
  std::vector<Elem> frontier{Elem{}};
  for (int len = 1; len <= n; ++len) {
    std::vector<Elem> next;
    for (const auto& w : frontier) {
      for (const auto& s : alphabet) {
        Elem x = mul(L, w, s);
        if (dist.emplace(x, len).second) next.push_back(x);
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

/// Random element with support in [-span, span], shift in [-max_shift, max_shift].
/// `value` draws a lamp value (possibly the identity).
template <class Rng>
Elem random_elem(Rng& rng, const std::function<std::int64_t(Rng&)>& value, int span = 5, int max_shift = 4) {
  Elem e;
  std::uniform_int_distribution<int> count(0, 4), pos(-span, span), shift(-max_shift, max_shift);
  const int c = count(rng);
  for (int i = 0; i < c; ++i) set(e, pos(rng), value(rng));
  e.k = shift(rng);
  return e;
}

}  // namespace oracle

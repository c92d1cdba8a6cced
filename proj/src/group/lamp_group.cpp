#include "wreath/lamp_group.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "wreath/errors.hpp"
#include "wreath/numeric.hpp"

namespace wreath {

namespace {

std::uint32_t fnv1a(const std::string& s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

// Ids are handed out in first-seen order, starting at 1.
std::uint32_t intern_id(const std::string& key) {
  static std::mutex mutex;
  static std::map<std::string, std::uint32_t> ids;
  std::lock_guard lock(mutex);
  auto [it, inserted] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size() + 1));
  return it->second;
}

}  // namespace

LampGroup LampGroup::cyclic(std::int64_t q) {
  if (q < 2) throw InputError("cyclic lamp group needs q >= 2, got " + std::to_string(q));
  LampGroup g;
  g.kind_ = Kind::cyclic;
  g.q_ = q;
  g.name_ = "C" + std::to_string(q);
  g.identity_key_ = g.name_;
  g.intern();
  return g;
}

LampGroup LampGroup::integers() {
  LampGroup g;
  g.kind_ = Kind::integers;
  g.name_ = "Z";
  g.identity_key_ = "Z";
  g.intern();
  return g;
}

LampGroup LampGroup::table(FiniteGroupTable table) {
  LampGroup g;
  g.kind_ = Kind::table;
  g.table_ = std::make_shared<const FiniteGroupTable>(std::move(table));
  g.identity_key_ = "T:" + g.table_->serialize();
  char hash[9];
  std::snprintf(hash, sizeof hash, "%08x", fnv1a(g.identity_key_));
  g.name_ = "T" + std::to_string(g.table_->order()) + "#" + hash;
  g.intern();
  return g;
}

void LampGroup::intern() { id_ = intern_id(identity_key_); }

std::optional<std::uint64_t> LampGroup::order() const {
  switch (kind_) {
    case Kind::cyclic:
      return static_cast<std::uint64_t>(q_);
    case Kind::integers:
      return std::nullopt;
    case Kind::table:
      break;
  }
  return table_->order();
}

bool LampGroup::is_abelian() const { return kind_ != Kind::table || table_->is_abelian(); }

bool LampGroup::is_valid(LampValue x) const {
  switch (kind_) {
    case Kind::cyclic:
      return x >= 0 && x < q_;
    case Kind::integers:
      return true;
    case Kind::table:
      break;
  }
  return x >= 0 && static_cast<std::uint64_t>(x) < table_->order();
}

LampValue LampGroup::normalize(LampValue x) const {
  switch (kind_) {
    case Kind::cyclic: {
      const LampValue r = x % q_;
      return r < 0 ? r + q_ : r;
    }
    case Kind::integers:
      return x;
    case Kind::table:
      break;
  }
  if (!is_valid(x)) {
    throw InputError("lamp value " + std::to_string(x) + " is not an element of table group of order " +
                     std::to_string(table_->order()));
  }
  return x;
}

std::optional<std::uint64_t> LampGroup::element_order(LampValue x) const {
  switch (kind_) {
    case Kind::cyclic: {
      std::int64_t a = x, b = q_;
      while (b != 0) a = std::exchange(b, a % b);
      return static_cast<std::uint64_t>(q_ / a);
    }
    case Kind::integers:
      if (x == 0) return 1;
      return std::nullopt;
    case Kind::table:
      break;
  }
  return table_->element_order(static_cast<FiniteGroupTable::Index>(x));
}

std::uint64_t LampGroup::cost(LampValue x) const {
  switch (kind_) {
    case Kind::cyclic:
      return static_cast<std::uint64_t>(std::min(x, q_ - x));
    case Kind::integers:
      if (x == std::numeric_limits<LampValue>::min()) throw std::overflow_error("integer lamp value overflow");
      return static_cast<std::uint64_t>(x < 0 ? -x : x);
    case Kind::table:
      break;
  }
  return x == 0 ? 0 : 1;
}

LampValue LampGroup::add_integers(LampValue x, LampValue y) { return checked_add(x, y); }
LampValue LampGroup::negate_integer(LampValue x) { return checked_neg(x); }

}  // namespace wreath

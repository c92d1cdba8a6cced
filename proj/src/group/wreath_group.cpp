#include "wreath/wreath_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wreath/errors.hpp"

namespace wreath {

namespace {

void put_varint(std::string& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

std::uint64_t zigzag(std::int64_t v) {
  return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
}

std::int64_t unzigzag(std::uint64_t v) {
  return static_cast<std::int64_t>(v >> 1) ^ -static_cast<std::int64_t>(v & 1);
}

struct KeyReader {
  std::string_view in;
  std::size_t pos = 0;

  std::uint64_t varint() {
    std::uint64_t v = 0;
    for (int shift = 0; shift < 64; shift += 7) {
      if (pos >= in.size()) throw InputError("canonical key: truncated");
      const auto byte = static_cast<unsigned char>(in[pos++]);
      v |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
      if ((byte & 0x80) == 0) return v;
    }
    throw InputError("canonical key: malformed varint");
  }
};

}  // namespace

LampValue WreathElement::at(std::int64_t position) const {
  auto it = std::lower_bound(lamps_.begin(), lamps_.end(), position,
                             [](const Lamp& l, std::int64_t p) { return l.position < p; });
  return it != lamps_.end() && it->position == position ? it->value : 0;
}

SupportExtrema support_extrema(const WreathElement& g) {
  const auto lamps = g.lamps();
  if (lamps.empty()) return {};
  return {lamps.front().position, lamps.back().position};
}

void WreathGroup::check(const WreathElement& g) const {
  if (g.group_id() != id()) {
    throw SpecMismatchError("element belongs to a different lamp group than " + name());
  }
}

void WreathGroup::check(const WreathElement& a, const WreathElement& b) const {
  check(a);
  check(b);
}

WreathElement WreathGroup::lamp(std::int64_t position, LampValue value) const {
  return element({{position, value}}, 0);
}

WreathElement WreathGroup::element(std::vector<Lamp> lamps, std::int64_t shift) const {
  std::sort(lamps.begin(), lamps.end(), [](const Lamp& x, const Lamp& y) { return x.position < y.position; });
  for (std::size_t i = 1; i < lamps.size(); ++i) {
    if (lamps[i].position == lamps[i - 1].position) {
      throw InputError("lamp position " + std::to_string(lamps[i].position) + " given twice");
    }
  }
  std::vector<Lamp> out;
  out.reserve(lamps.size());
  for (const auto& l : lamps) {
    const LampValue v = lamps_.normalize(l.value);
    if (!LampGroup::is_identity(v)) out.push_back({l.position, v});
  }
  return WreathElement(id(), std::move(out), shift);
}

void WreathGroup::multiply_lamps(const WreathElement& a, const WreathElement& b, std::vector<Lamp>& out) const {
  out.clear();
  const auto fa = a.lamps();
  const auto fb = b.lamps();
  const std::int64_t k = a.shift();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    const bool take_a = j == fb.size() || (i < fa.size() && fa[i].position < fb[j].position + k);
    const bool take_b = i == fa.size() || (j < fb.size() && fb[j].position + k < fa[i].position);
    if (take_a) {
      out.push_back(fa[i++]);
    } else if (take_b) {
      out.push_back({fb[j].position + k, fb[j].value});
      ++j;
    } else {
      const LampValue v = lamps_.multiply(fa[i].value, fb[j].value);
      if (!LampGroup::is_identity(v)) out.push_back({fa[i].position, v});
      ++i;
      ++j;
    }
  }
}

WreathElement WreathGroup::multiply(const WreathElement& a, const WreathElement& b) const {
  check(a, b);
  std::vector<Lamp> out;
  out.reserve(a.lamps().size() + b.lamps().size());
  multiply_lamps(a, b, out);
  return WreathElement(id(), std::move(out), a.shift() + b.shift());
}

WreathElement WreathGroup::inverse(const WreathElement& a) const {
  check(a);
  std::vector<Lamp> out;
  out.reserve(a.lamps().size());
  for (const auto& l : a.lamps()) out.push_back({l.position - a.shift(), lamps_.inverse(l.value)});
  return WreathElement(id(), std::move(out), -a.shift());
}

WreathElement WreathGroup::conjugate(const WreathElement& g, const WreathElement& h) const {
  return multiply(multiply(inverse(h), g), h);
}

bool WreathGroup::commutes(const WreathElement& a, const WreathElement& b) const {
  check(a, b);
  thread_local std::vector<Lamp> ab, ba;
  multiply_lamps(a, b, ab);
  multiply_lamps(b, a, ba);
  return ab == ba;
}

WreathElement WreathGroup::power(const WreathElement& g, std::int64_t n) const {
  check(g);
  WreathElement base = n < 0 ? inverse(g) : g;
  std::uint64_t e = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  WreathElement result = identity();
  while (e != 0) {
    if (e & 1u) result = multiply(result, base);
    e >>= 1u;
    if (e != 0) base = multiply(base, base);
  }
  return result;
}

std::optional<std::uint64_t> WreathGroup::order(const WreathElement& g) const {
  check(g);
  if (!g.in_base()) return std::nullopt;
  // Base elements act lampwise: the order is the lcm of the lamp orders.
  std::uint64_t result = 1;
  for (const auto& l : g.lamps()) {
    const auto o = lamps_.element_order(l.value);
    if (!o) return std::nullopt;
    result = std::lcm(result, *o);
  }
  return result;
}

void WreathGroup::append_key(const WreathElement& g, std::string& out) const {
  put_varint(out, g.group_id());
  put_varint(out, zigzag(g.shift()));
  const auto lamps = g.lamps();
  put_varint(out, lamps.size());
  std::int64_t previous = 0;
  for (std::size_t i = 0; i < lamps.size(); ++i) {
    // First position absolute, later ones as positive gaps.
    if (i == 0) {
      put_varint(out, zigzag(lamps[i].position));
    } else {
      put_varint(out, static_cast<std::uint64_t>(lamps[i].position - previous));
    }
    previous = lamps[i].position;
    put_varint(out, zigzag(lamps[i].value));
  }
}

std::string WreathGroup::canonical_key(const WreathElement& g) const {
  check(g);
  std::string out;
  append_key(g, out);
  return out;
}

WreathElement WreathGroup::decode_key(std::string_view key) const {
  KeyReader r{key};
  if (r.varint() != id()) throw SpecMismatchError("canonical key belongs to a different lamp group than " + name());
  const std::int64_t shift = unzigzag(r.varint());
  const std::uint64_t count = r.varint();
  if (count > key.size()) throw InputError("canonical key: bad entry count");
  std::vector<Lamp> lamps;
  lamps.reserve(count);
  std::int64_t position = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t p = r.varint();
    position = i == 0 ? unzigzag(p) : position + static_cast<std::int64_t>(p);
    lamps.push_back({position, unzigzag(r.varint())});
  }
  if (r.pos != key.size()) throw InputError("canonical key: trailing bytes");
  return WreathElement(id(), std::move(lamps), shift);
}

std::string WreathGroup::to_string(const WreathElement& g) const {
  if (g.is_identity()) return "e";
  std::ostringstream os;
  if (!g.lamps().empty()) {
    os << '{';
    bool first = true;
    for (const auto& l : g.lamps()) {
      if (!first) os << ", ";
      os << l.position << ':' << l.value;
      first = false;
    }
    os << '}';
  }
  if (g.shift() != 0) {
    if (!g.lamps().empty()) os << ' ';
    os << "t";
    if (g.shift() != 1) os << '^' << g.shift();
  }
  return os.str();
}

}  // namespace wreath
